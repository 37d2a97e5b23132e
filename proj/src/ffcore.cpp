/**************************************************************************
 * ffcore.cpp
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

#include "ffma/ffcore.hpp"

#include <algorithm>
#include <sstream>

namespace ffmac {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (!is_prime(p))
        throw FieldError("field modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept
{
    std::uint32_t result = 1 % p_;
    std::uint32_t base = a % p_;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const
{
    if (a % p_ == 0)
        throw FieldError("inverse of zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
}

void FieldScalar::same_field(const FieldScalar& o) const
{
    if (!(field_ == o.field_))
        throw FieldError("mixed-field scalar operation");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const
{
    same_field(o);
    return {field_, field_.add(value_, o.value_)};
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const
{
    same_field(o);
    return {field_, field_.sub(value_, o.value_)};
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const
{
    same_field(o);
    return {field_, field_.mul(value_, o.value_)};
}

FieldScalar FieldScalar::inv() const { return {field_, field_.inv(value_)}; }

std::int64_t symmetric_lift(std::uint32_t value, std::uint32_t p)
{
    std::int64_t v = value % p;
    // (-p/2, p/2]: values strictly above p/2 wrap negative.
    if (2 * v > static_cast<std::int64_t>(p))
        v -= p;
    return v;
}

// ---------------------------------------------------------------------------

FieldVector::FieldVector(PrimeField field, std::vector<std::uint32_t> coords)
    : field_(field), coords_(std::move(coords))
{
    for (auto& c : coords_)
        c %= field_.p();
}

FieldVector::FieldVector(PrimeField field, std::initializer_list<std::int64_t> coords)
    : field_(field)
{
    coords_.reserve(coords.size());
    for (auto c : coords)
        coords_.push_back(field_.reduce(c));
}

FieldVector FieldVector::from_string(PrimeField field, const std::string& digits)
{
    std::vector<std::uint32_t> out;
    out.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '9')
            throw FieldError(std::string("bad digit '") + ch + "'");
        auto d = static_cast<std::uint32_t>(ch - '0');
        if (d >= field.p())
            throw FieldError("digit " + std::to_string(d) + " out of range for GF(" +
                             std::to_string(field.p()) + ")");
        out.push_back(d);
    }
    return {field, std::move(out)};
}

bool FieldVector::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

static void check_same(const FieldVector& a, const FieldVector& b)
{
    if (!(a.field() == b.field()))
        throw FieldError("mixed-field vector operation");
    if (a.size() != b.size())
        throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}

FieldVector FieldVector::operator+(const FieldVector& o) const
{
    FieldVector r = *this;
    r += o;
    return r;
}

FieldVector& FieldVector::operator+=(const FieldVector& o)
{
    check_same(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] = field_.add(coords_[i], o.coords_[i]);
    return *this;
}

FieldVector FieldVector::operator-(const FieldVector& o) const
{
    check_same(*this, o);
    FieldVector r = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        r.coords_[i] = field_.sub(coords_[i], o.coords_[i]);
    return r;
}

FieldVector FieldVector::scaled(std::uint32_t s) const
{
    FieldVector r = *this;
    s %= field_.p();
    for (auto& c : r.coords_)
        c = field_.mul(c, s);
    return r;
}

FieldVector FieldVector::over(PrimeField other) const
{
    return {other, coords_};
}

std::string FieldVector::to_string() const
{
    std::ostringstream os;
    bool wide = field_.p() > 10;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (wide && i)
            os << ',';
        os << coords_[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(PrimeField field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged matrix literal");
        for (auto v : r)
            data_.push_back(field_.reduce(v));
    }
}

FieldMatrix FieldMatrix::from_rows(PrimeField field, const std::vector<FieldVector>& rows,
                                   std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    FieldMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionError("ragged rows in from_rows");
        if (!(rows[r].field() == field))
            throw FieldError("row field differs from matrix field");
        std::copy(rows[r].coords().begin(), rows[r].coords().end(),
                  m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n)
{
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1 % field.p();
    return m;
}

FieldMatrix FieldMatrix::vstack(const std::vector<FieldMatrix>& blocks)
{
    if (blocks.empty())
        throw DimensionError("vstack of no blocks");
    const auto& f = blocks.front().field_;
    std::size_t cols = blocks.front().cols_, rows = 0;
    for (const auto& b : blocks) {
        if (!(b.field_ == f))
            throw FieldError("vstack over mixed fields");
        if (b.cols_ != cols)
            throw DimensionError("vstack column mismatch");
        rows += b.rows_;
    }
    FieldMatrix out(f, rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(off));
        off += b.data_.size();
    }
    return out;
}

FieldVector FieldMatrix::row(std::size_t r) const
{
    auto s = row_span(r);
    return {field_, std::vector<std::uint32_t>(s.begin(), s.end())};
}

FieldMatrix FieldMatrix::scaled(std::uint32_t s) const
{
    FieldMatrix out = *this;
    s %= field_.p();
    for (auto& v : out.data_)
        v = field_.mul(v, s);
    return out;
}

FieldMatrix FieldMatrix::transpose() const
{
    FieldMatrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.data_[c * rows_ + r] = data_[r * cols_ + c];
    return out;
}

FieldMatrix FieldMatrix::over(PrimeField other) const
{
    FieldMatrix out(other, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] % other.p();
    return out;
}

bool FieldMatrix::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

std::vector<std::vector<std::uint32_t>> FieldMatrix::to_nested() const
{
    std::vector<std::vector<std::uint32_t>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto s = row_span(r);
        out[r].assign(s.begin(), s.end());
    }
    return out;
}

FieldVector operator*(const FieldVector& v, const FieldMatrix& m)
{
    if (!(v.field() == m.field()))
        throw FieldError("vector-matrix product over mixed fields");
    if (v.size() != m.rows())
        throw DimensionError("vector length " + std::to_string(v.size()) + " vs matrix rows " +
                             std::to_string(m.rows()));
    const auto& f = m.field();
    std::vector<std::uint64_t> acc(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t s = v[r];
        if (!s)
            continue;
        auto row = m.row_span(r);
        for (std::size_t c = 0; c < m.cols(); ++c)
            acc[c] = (acc[c] + s * row[c]) % f.p();
    }
    std::vector<std::uint32_t> out(acc.begin(), acc.end());
    return {f, std::move(out)};
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b)
{
    if (!(a.field() == b.field()))
        throw FieldError("matrix product over mixed fields");
    if (a.cols() != b.rows())
        throw DimensionError("matrix inner dimensions disagree");
    FieldMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        FieldVector prod = a.row(r) * b;
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.set(r, c, prod[c]);
    }
    return out;
}

RowEchelon row_reduce(const FieldMatrix& m)
{
    const auto& f = m.field();
    std::vector<std::vector<std::uint32_t>> a = m.to_nested();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < m.rows() && a[piv][c] == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        std::swap(a[piv], a[lead]);
        std::uint32_t inv = f.inv(a[lead][c]);
        for (auto& x : a[lead])
            x = f.mul(x, inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || a[r][c] == 0)
                continue;
            std::uint32_t factor = a[r][c];
            for (std::size_t k = 0; k < m.cols(); ++k)
                a[r][k] = f.sub(a[r][k], f.mul(factor, a[lead][k]));
        }
        pivots.push_back(c);
        ++lead;
    }
    FieldMatrix reduced(f, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            reduced.set(r, c, a[r][c]);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return row_reduce(m).pivots.size(); }

} // namespace ffmac
