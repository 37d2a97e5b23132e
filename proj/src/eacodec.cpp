/**************************************************************************
 * eacodec.cpp
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

#include "ffma/eacodec.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace ffmac {

FieldVector switch_element(const EACode& code, std::size_t user, std::uint32_t d)
{
    if (d >= code.p)
        throw DimensionError("digit " + std::to_string(d) + " out of range for p = " +
                             std::to_string(code.p));
    return code.gen[d].row(user);
}

namespace {

void check_block(const EACode& code, const UserBlock& d)
{
    if (d.size() != code.users)
        throw DimensionError("user block has " + std::to_string(d.size()) + " digits, code has " +
                             std::to_string(code.users) + " users");
    for (auto v : d)
        if (v >= code.p)
            throw DimensionError("digit " + std::to_string(v) + " out of range for p = " +
                                 std::to_string(code.p));
}

template <class T>
std::string raw_key(const T* data, std::size_t n)
{
    std::string k(n * sizeof(T), '\0');
    std::memcpy(k.data(), data, k.size());
    return k;
}

std::string ff_key(const FieldVector& w) { return raw_key(w.coords().data(), w.size()); }

std::string cf_key(const ComplexBlock& r)
{
    std::vector<std::int64_t> flat;
    flat.reserve(2 * r.size());
    for (const auto& z : r) {
        flat.push_back(z.re2);
        flat.push_back(z.im2);
    }
    return raw_key(flat.data(), flat.size());
}

} // namespace

FieldVector encode_ffsp(const EACode& code, const UserBlock& d)
{
    check_block(code, d);
    const auto& f = code.field;
    std::vector<std::uint32_t> acc(code.m, 0);
    for (std::size_t j = 0; j < d.size(); ++j) {
        auto row = code.gen[d[j]].row_span(j);
        for (std::size_t c = 0; c < code.m; ++c)
            acc[c] = f.add(acc[c], row[c]);
    }
    return {f, std::move(acc)};
}

FieldVector encode_ai(const EACode& code, const UserBlock& d)
{
    check_block(code, d);
    FieldVector dv(code.field, std::vector<std::uint32_t>(d.begin(), d.end()));
    return dv * code.gen.at(1);
}

ComplexBlock encode_cfsp(const EACode& code, const UserBlock& d)
{
    check_block(code, d);
    if (code.complex_gen.empty())
        throw ConstructionError("code has no complex-field generator set");
    ComplexBlock r(code.m);
    for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t c = 0; c < code.m; ++c)
            r[c] += code.complex_gen[d[j]][j][c];
    return r;
}

std::vector<std::uint32_t> t2b(const UserBlock& d)
{
    const std::size_t M = d.size();
    std::vector<std::uint32_t> a(2 * M, 0);
    for (std::size_t j = 0; j < M; ++j) {
        if (d[j] > 2)
            throw DimensionError("t2b expects ternary digits");
        a[j] = d[j] == 2 ? 1 : 0;
        a[M + j] = d[j] == 1 ? 1 : 0;
    }
    return a;
}

UserBlock b2t(const std::vector<std::uint32_t>& bits, Rng* rng, std::size_t* illegal)
{
    if (bits.size() % 2)
        throw DimensionError("b2t expects an even number of bits");
    const std::size_t M = bits.size() / 2;
    UserBlock d(M, 0);
    for (std::size_t j = 0; j < M; ++j) {
        std::uint32_t hi = bits[j], lo = bits[M + j];
        if (hi > 1 || lo > 1)
            throw DimensionError("b2t expects binary digits");
        if (hi && lo) {
            if (!rng)
                throw DecodeError("illegal bit pair (1,1) for user " + std::to_string(j + 1));
            d[j] = 1 + static_cast<std::uint32_t>((*rng)() & 1);
            if (illegal)
                ++*illegal;
        } else {
            d[j] = hi ? 2 : lo;
        }
    }
    return d;
}

std::vector<std::uint32_t> p2t(std::uint32_t digit, std::size_t n_d, std::uint32_t p)
{
    if (digit >= p)
        throw DimensionError("digit " + std::to_string(digit) + " >= p = " + std::to_string(p));
    std::vector<std::uint32_t> t(n_d, 0);
    for (std::size_t i = n_d; i-- > 0;) {
        t[i] = digit % 3;
        digit /= 3;
    }
    if (digit)
        throw DimensionError("n_d too small for p");
    return t;
}

std::uint32_t t2p(const std::vector<std::uint32_t>& trits, std::uint32_t p)
{
    std::uint64_t v = 0;
    for (auto t : trits) {
        if (t > 2)
            throw DimensionError("t2p expects ternary digits");
        v = 3 * v + t;
    }
    if (v >= p)
        throw DecodeError("ternary digits encode " + std::to_string(v) + " >= p = " +
                          std::to_string(p));
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> expand_block(const EACode& code, const UserBlock& d)
{
    check_block(code, d);
    switch (code.expansion) {
    case Expansion::T2B:
        return t2b(d);
    case Expansion::Base3: {
        const std::size_t M = d.size(), n = code.n_d;
        std::vector<std::uint32_t> a(n * M, 0);
        for (std::size_t j = 0; j < M; ++j) {
            auto t = p2t(d[j], n, code.p);
            for (std::size_t i = 0; i < n; ++i)
                a[i * M + j] = t[i];
        }
        return a;
    }
    case Expansion::None:
        break;
    }
    throw ConstructionError(to_string(code.family) + " code has no parallel encoder");
}

UserBlock collapse_block(const EACode& code, const std::vector<std::uint32_t>& a, Rng* rng)
{
    const std::size_t M = code.users, n = code.n_d;
    if (a.size() != n * M)
        throw DimensionError("parallel block length mismatch");
    if (code.expansion == Expansion::T2B)
        return b2t(a, rng);
    if (code.expansion != Expansion::Base3)
        throw ConstructionError(to_string(code.family) + " code has no parallel encoder");
    UserBlock d(M);
    std::vector<std::uint32_t> t(n);
    for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            t[i] = a[i * M + j];
        d[j] = t2p(t, code.p);
    }
    return d;
}

FieldVector encode_parallel(const EACode& code, const std::vector<std::uint32_t>& a)
{
    if (!code.parallel)
        throw ConstructionError(to_string(code.family) + " code has no parallel generator");
    if (a.size() != code.parallel->rows())
        throw DimensionError("parallel block has " + std::to_string(a.size()) +
                             " digits, generator has " + std::to_string(code.parallel->rows()) +
                             " rows");
    return FieldVector(code.field, a) * *code.parallel;
}

std::optional<UserBlock> parallel_decode(const EACode& code, const FieldVector& w, Rng* rng)
{
    if (!code.parallel)
        throw ConstructionError(to_string(code.family) + " code has no parallel generator");
    const FieldMatrix& g = *code.parallel;
    if (w.size() != g.cols() || !(w.field() == g.field()))
        throw DimensionError("sum-pattern does not match the parallel generator");
    // [G^T | w^T] in row echelon form.
    const std::size_t r = g.rows();
    FieldMatrix aug(g.field(), g.cols(), r + 1);
    for (std::size_t c = 0; c < g.cols(); ++c) {
        for (std::size_t i = 0; i < r; ++i)
            aug.set(c, i, g.at(i, c));
        aug.set(c, r, w[c]);
    }
    auto re = row_reduce(aug);
    if (!re.pivots.empty() && re.pivots.back() == r)
        return std::nullopt; // inconsistent: w outside the row space
    if (re.pivots.size() != r)
        throw DecodeError("parallel generator is rank deficient; solution not unique");
    std::vector<std::uint32_t> a(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        a[re.pivots[i]] = re.reduced.at(i, r);
    if (code.expansion == Expansion::T2B &&
        std::any_of(a.begin(), a.end(), [](auto v) { return v > 1; }))
        return std::nullopt;
    try {
        return collapse_block(code, a, rng);
    } catch (const DecodeError&) {
        if (code.expansion == Expansion::T2B && !rng)
            throw;
        return std::nullopt;
    }
}

UserBlock block_from_index(std::uint64_t index, std::size_t users, std::uint32_t p)
{
    UserBlock d(users, 0);
    for (std::size_t j = users; j-- > 0;) {
        d[j] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return d;
}

std::uint64_t block_count(std::size_t users, std::uint32_t p)
{
    std::uint64_t n = 1;
    for (std::size_t j = 0; j < users; ++j) {
        if (n > std::numeric_limits<std::uint64_t>::max() / p)
            return std::numeric_limits<std::uint64_t>::max();
        n *= p;
    }
    return n;
}

std::optional<RankCertificate> rank_certificate(const EACode& code)
{
    const std::size_t M = code.users;
    bool additive = true; // G^ς = ς·G^1 for every ς
    for (std::uint32_t s = 0; s < code.p && additive; ++s)
        additive = code.gen[s] == code.gen[1 % code.p].scaled(s);
    if (additive && code.p > 1 && code.field.p() == code.p)
        return RankCertificate{"G^1", rank(code.gen[1]), M, true};
    if (code.parallel && code.family != Family::NOCWEA)
        return RankCertificate{"G_pll", rank(*code.parallel), code.n_d * M, false};
    return std::nullopt;
}

namespace {

template <class KeyFn>
UspmReport enumerate(const EACode& code, const VerifyOptions& opt, KeyFn key_of)
{
    UspmReport rep;
    const std::uint64_t n = block_count(code.users, code.p);
    rep.blocks = n;
    std::vector<std::string> keys(n);
    parallel_for(n, opt.threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            keys[i] = key_of(block_from_index(i, code.users, code.p));
    });
    std::unordered_map<std::string, std::uint64_t> first;
    first.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        auto [it, fresh] = first.emplace(keys[i], i);
        if (!fresh && !rep.witness) {
            rep.witness = std::make_pair(block_from_index(it->second, code.users, code.p),
                                         block_from_index(i, code.users, code.p));
        }
    }
    rep.distinct = first.size();
    rep.enumerated = true;
    rep.ok = rep.distinct == n;
    return rep;
}

void check_budget(const EACode& code, const VerifyOptions& opt)
{
    if (block_count(code.users, code.p) > opt.budget)
        throw BudgetError("p^M = " + std::to_string(code.p) + "^" + std::to_string(code.users) +
                          " exceeds the enumeration budget of " + std::to_string(opt.budget) +
                          " blocks; for additive-inverse codes use the rank certificate "
                          "(certificate_only)");
}

std::string block_str(const UserBlock& d)
{
    std::string s;
    for (auto v : d)
        s += (s.empty() ? "" : ",") + std::to_string(v);
    return "(" + s + ")";
}

} // namespace

UspmReport verify_uspm_ff(const EACode& code, const VerifyOptions& opt)
{
    auto cert = rank_certificate(code);
    if (block_count(code.users, code.p) > opt.budget) {
        if (opt.certificate_only && cert && cert->exact) {
            UspmReport rep;
            rep.blocks = block_count(code.users, code.p);
            rep.certificate = cert;
            rep.ok = cert->passed();
            return rep;
        }
        check_budget(code, opt);
    }
    UspmReport rep = enumerate(code, opt, [&](const UserBlock& d) { return ff_key(encode_ffsp(code, d)); });
    rep.certificate = cert;
    if (cert) {
        // A passing certificate forces injectivity; an exact one is also necessary.
        if (cert->passed() && !rep.ok)
            rep.agree = false;
        if (cert->exact && !cert->passed() && rep.ok)
            rep.agree = false;
    }
    if (rep.witness)
        rep.witness_pattern = encode_ffsp(code, rep.witness->first).to_string() + " = w" +
                              block_str(rep.witness->first) + " = w" +
                              block_str(rep.witness->second);
    return rep;
}

UspmReport verify_uspm_cf(const EACode& code, const VerifyOptions& opt)
{
    if (code.complex_gen.empty())
        throw ConstructionError("code has no complex-field generator set");
    check_budget(code, opt);
    UspmReport rep = enumerate(code, opt, [&](const UserBlock& d) { return cf_key(encode_cfsp(code, d)); });
    if (rep.witness) {
        std::string r;
        for (const auto& z : encode_cfsp(code, rep.witness->first))
            r += (r.empty() ? "" : ",") + z.to_string();
        rep.witness_pattern = "(" + r + ") = r" + block_str(rep.witness->first) + " = r" +
                              block_str(rep.witness->second);
    }
    return rep;
}

// ---------------------------------------------------------------------------

DecodeTable::DecodeTable(const EACode& code, std::uint64_t budget)
    : users_(code.users), m_(code.m), p_(code.p)
{
    VerifyOptions opt;
    opt.budget = budget;
    check_budget(code, opt);
    const std::uint64_t n = block_count(code.users, code.p);
    table_.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        auto [it, fresh] = table_.emplace(ff_key(encode_ffsp(code, block_from_index(i, users_, p_))), i);
        if (!fresh)
            throw DecodeError("code is not uniquely decodable: collision at block index " +
                              std::to_string(i));
    }
}

std::optional<UserBlock> DecodeTable::find(const FieldVector& w) const
{
    auto it = table_.find(ff_key(w));
    if (it == table_.end())
        return std::nullopt;
    return block_from_index(it->second, users_, p_);
}

UserBlock DecodeTable::decode(const FieldVector& w) const
{
    if (w.size() != m_)
        throw DimensionError("sum-pattern has length " + std::to_string(w.size()) + ", expected " +
                             std::to_string(m_));
    auto d = find(w);
    if (!d)
        throw DecodeError("uncorrectable: " + w.to_string() + " is not a sum-pattern of the code");
    return *d;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> free_columns(const FieldMatrix& h)
{
    auto re = row_reduce(h);
    std::vector<bool> pivot(h.cols(), false);
    for (auto c : re.pivots)
        pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < h.cols(); ++c)
        if (!pivot[c])
            out.push_back(c);
    return out;
}

FieldMatrix derive_parity_check(const FieldMatrix& g)
{
    auto re = row_reduce(g);
    const auto& f = g.field();
    const std::size_t k = re.pivots.size();
    if (k != g.rows())
        throw ConstructionError("matrix is rank deficient (rank " + std::to_string(k) + " < " +
                                    std::to_string(g.rows()) + ")",
                                k);
    std::vector<bool> is_pivot(g.cols(), false);
    for (auto c : re.pivots)
        is_pivot[c] = true;
    FieldMatrix h(f, g.cols() - k, g.cols());
    std::size_t t = 0;
    for (std::size_t c = 0; c < g.cols(); ++c) {
        if (is_pivot[c])
            continue;
        h.set(t, c, 1);
        for (std::size_t i = 0; i < k; ++i)
            h.set(t, re.pivots[i], f.neg(re.reduced.at(i, c)));
        ++t;
    }
    return h;
}

} // namespace ffmac
