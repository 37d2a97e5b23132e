/**************************************************************************
 * extfield.cpp
 *
 * Copyright 2026 The ffma Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "ffma/extfield.hpp"

#include <cmath>

namespace ffmac {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(const PrimeField& f, Poly a, const Poly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        std::uint32_t factor = f.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
        trim(a);
    }
    return a;
}

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of idx.
Poly monic_from_index(std::uint32_t p, unsigned d, std::uint64_t idx)
{
    Poly q(d + 1, 0);
    q[d] = 1;
    for (unsigned i = 0; i < d; ++i) {
        q[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    return q;
}

} // namespace

bool is_irreducible(const PrimeField& f, const Poly& poly_in)
{
    Poly poly = poly_in;
    trim(poly);
    if (poly.size() < 2)
        return false;
    const unsigned deg = static_cast<unsigned>(poly.size() - 1);
    if (deg == 1)
        return true;
    const std::uint32_t p = f.p();
    // Roots first: cheap and catches most reducible inputs.
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint32_t acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;)
            acc = f.add(f.mul(acc, x), poly[i]);
        if (acc == 0)
            return false;
    }
    for (unsigned d = 2; d <= deg / 2; ++d) {
        std::uint64_t count = ipow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (poly_mod(f, poly, monic_from_index(p, d, idx)).empty())
                return false;
    }
    return true;
}

Poly default_modulus(const PrimeField& f, unsigned m)
{
    if (m == 0)
        throw FieldError("extension degree must be >= 1");
    const std::uint64_t count = ipow(f.p(), m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly cand = monic_from_index(f.p(), m, idx);
        if (cand[0] == 0 || !is_irreducible(f, cand))
            continue;
        if (ExtField(f, m, cand).is_primitive())
            return cand;
    }
    throw FieldError("no primitive polynomial found"); // unreachable for prime p
}

ExtField::ExtField(PrimeField base, unsigned m, Poly modulus)
    : base_(base), m_(m), modulus_(std::move(modulus)), order_(ipow(base.p(), m))
{
    if (m == 0)
        throw FieldError("extension degree must be >= 1");
    if (modulus_.empty())
        modulus_ = default_modulus(base_, m);
    for (auto& c : modulus_)
        c %= base_.p();
    trim(modulus_);
    if (modulus_.size() != m + 1 || modulus_.back() != 1)
        throw FieldError("modulus must be monic of degree " + std::to_string(m));
    if (!is_irreducible(base_, modulus_))
        throw FieldError("modulus is reducible over GF(" + std::to_string(base_.p()) + ")");
    if (order_ <= kTableLimit)
        build_tables();
}

FieldVector ExtField::one() const
{
    FieldVector v = zero();
    v.set(0, 1);
    return v;
}

void ExtField::check(const FieldVector& a) const
{
    if (!(a.field() == base_))
        throw FieldError("element over wrong base field");
    if (a.size() != m_)
        throw DimensionError("element length differs from extension degree");
}

FieldVector ExtField::add(const FieldVector& a, const FieldVector& b) const
{
    check(a);
    check(b);
    return a + b;
}

FieldVector ExtField::mul(const FieldVector& a, const FieldVector& b) const
{
    check(a);
    check(b);
    Poly prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!a[i])
            continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
    Poly r = poly_mod(base_, std::move(prod), modulus_);
    r.resize(m_, 0);
    return {base_, std::move(r)};
}

FieldVector ExtField::pow_alpha(std::uint64_t j) const
{
    if (!powers_.empty())
        return powers_[j % powers_.size()];
    FieldVector result = one();
    Poly x(m_ + 1, 0);
    x[1] = 1;
    Poly xr = poly_mod(base_, x, modulus_);
    xr.resize(m_, 0);
    FieldVector base(base_, xr);
    while (j) {
        if (j & 1)
            result = mul(result, base);
        base = mul(base, base);
        j >>= 1;
    }
    return result;
}

std::uint64_t ExtField::index(const FieldVector& a) const
{
    std::uint64_t idx = 0;
    for (std::size_t i = m_; i-- > 0;)
        idx = idx * base_.p() + a[i];
    return idx;
}

void ExtField::build_tables()
{
    logs_.assign(order_, -1);
    FieldVector cur = one();
    FieldVector alpha = pow_alpha(1);
    for (std::uint64_t j = 0; j + 1 < order_; ++j) {
        std::uint64_t idx = index(cur);
        if (logs_[idx] >= 0)
            break; // cycle closed early: x is not primitive
        logs_[idx] = static_cast<std::int64_t>(j);
        powers_.push_back(cur);
        cur = mul(cur, alpha);
    }
}

std::uint64_t ExtField::alpha_order() const
{
    if (!powers_.empty())
        return powers_.size();
    FieldVector alpha = pow_alpha(1);
    FieldVector cur = alpha;
    std::uint64_t k = 1;
    while (!(cur == one())) {
        cur = mul(cur, alpha);
        if (++k >= order_)
            return 0;
    }
    return k;
}

std::optional<std::uint64_t> ExtField::log_alpha(const FieldVector& a) const
{
    check(a);
    if (a.is_zero())
        return std::nullopt;
    if (logs_.empty())
        throw FieldError("log table unavailable for fields larger than 2^20");
    std::int64_t l = logs_[index(a)];
    if (l < 0)
        throw FieldError("modulus is not primitive; element has no discrete log");
    return static_cast<std::uint64_t>(l);
}

} // namespace ffmac
