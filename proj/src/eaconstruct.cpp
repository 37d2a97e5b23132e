/**************************************************************************
 * eaconstruct.cpp
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

#include "ffma/eaconstruct.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace ffmac {

std::string to_string(Family f)
{
    switch (f) {
    case Family::Orthogonal: return "orthogonal";
    case Family::DCWEA: return "dcwea";
    case Family::AIDCWEA: return "ai-dcwea";
    case Family::BDDCWEA: return "bd-dcwea";
    case Family::NOCWEA: return "nocwea";
    case Family::ParyBD: return "pary-bd";
    }
    return "unknown";
}

Family family_from_string(const std::string& s)
{
    for (Family f : {Family::Orthogonal, Family::DCWEA, Family::AIDCWEA, Family::BDDCWEA,
                     Family::NOCWEA, Family::ParyBD})
        if (to_string(f) == s)
            return f;
    throw ConstructionError("unknown code family '" + s + "'");
}

// ---------------------------------------------------------------------------
// HalfGauss

namespace {

// Parses a signed decimal that must be a multiple of 0.5; returns twice its value.
std::int64_t parse_half(const std::string& tok)
{
    if (tok.empty() || tok == "+")
        return 2;
    if (tok == "-")
        return -2;
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size())
        throw ConstructionError("bad complex literal component '" + tok + "'");
    double twice = 2.0 * v;
    auto r = static_cast<std::int64_t>(twice >= 0 ? twice + 0.5 : twice - 0.5);
    if (static_cast<double>(r) != twice)
        throw ConstructionError("complex components must be multiples of 1/2: '" + tok + "'");
    return r;
}

std::string half_str(std::int64_t v2)
{
    std::ostringstream os;
    if (v2 % 2 == 0)
        os << v2 / 2;
    else
        os << (v2 < 0 ? "-" : "") << std::llabs(v2) / 2 << ".5";
    return os.str();
}

} // namespace

HalfGauss HalfGauss::parse(const std::string& raw)
{
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ConstructionError("empty complex literal");
    HalfGauss z;
    if (s.back() != 'i') {
        z.re2 = parse_half(s);
        return z;
    }
    s.pop_back();
    // Split at the last sign that is not the leading one (and not an exponent).
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    if (split == std::string::npos) {
        z.im2 = parse_half(s);
    } else {
        z.re2 = parse_half(s.substr(0, split));
        z.im2 = parse_half(s.substr(split));
    }
    return z;
}

std::string HalfGauss::to_string() const
{
    if (im2 == 0)
        return half_str(re2);
    std::string im = (im2 > 0 ? "+" : "") + half_str(im2) + "i";
    if (re2 == 0)
        return im;
    return half_str(re2) + im;
}

// ---------------------------------------------------------------------------

namespace {

void check_gen(const std::vector<FieldMatrix>& gen, std::uint32_t p)
{
    if (gen.size() != p)
        throw ConstructionError("expected " + std::to_string(p) + " generator matrices, got " +
                                std::to_string(gen.size()));
    const auto& g0 = gen.front();
    if (g0.rows() == 0 || g0.cols() == 0)
        throw ConstructionError("empty generator matrix");
    for (const auto& g : gen) {
        if (!(g.field() == g0.field()))
            throw ConstructionError("generator matrices over different fields");
        if (g.rows() != g0.rows() || g.cols() != g0.cols())
            throw ConstructionError("generator matrices differ in shape");
    }
    // Every assemblage must consist of p distinct elements.
    for (std::size_t j = 0; j < g0.rows(); ++j) {
        std::set<std::vector<std::uint32_t>> seen;
        for (std::uint32_t s = 0; s < p; ++s) {
            auto row = gen[s].row_span(j);
            if (!seen.emplace(row.begin(), row.end()).second)
                throw ConstructionError("assemblage of user " + std::to_string(j + 1) +
                                        " repeats an element (digit " + std::to_string(s) + ")");
        }
    }
}

std::vector<std::uint32_t> base3(std::uint32_t d, std::size_t n_d)
{
    std::vector<std::uint32_t> t(n_d, 0); // t[0] is position (1)
    for (std::size_t i = 0; i < n_d; ++i) {
        t[i] = d % 3;
        d /= 3;
    }
    return t;
}

} // namespace

EACode make_code(Family family, std::uint32_t p, std::vector<FieldMatrix> gen)
{
    if (!is_prime(p))
        throw ConstructionError("alphabet size " + std::to_string(p) + " is not prime");
    check_gen(gen, p);
    EACode c;
    c.family = family;
    c.p = p;
    c.field = gen.front().field();
    c.m = gen.front().cols();
    c.users = gen.front().rows();
    c.gen = std::move(gen);
    // Any ternary code with a silent zero digit has a linear T2B encoder.
    if (p == 3 && c.zero_digit_silent()) {
        c.expansion = Expansion::T2B;
        c.n_d = 2;
        c.parallel = FieldMatrix::vstack({c.gen[2], c.gen[1]});
    }
    return c;
}

EACode build_orthogonal_ea(std::size_t m, std::uint32_t p)
{
    if (m == 0)
        throw ConstructionError("orthogonal EA code needs m >= 1");
    PrimeField f(p);
    FieldMatrix id = FieldMatrix::identity(f, m);
    std::vector<FieldMatrix> gen;
    for (std::uint32_t s = 0; s < p; ++s)
        gen.push_back(id.scaled(s));
    return make_code(Family::Orthogonal, p, std::move(gen));
}

FieldMatrix build_ternary_orthogonal(unsigned kappa)
{
    if (kappa == 0)
        throw ConstructionError("ternary orthogonal matrix needs kappa >= 1");
    PrimeField f(3);
    FieldMatrix t(f, {{1}});
    for (unsigned k = 0; k < kappa; ++k) {
        const std::size_t n = t.rows();
        FieldMatrix next(f, 2 * n, 2 * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::uint32_t v = t.at(r, c);
                next.set(r, c, v);
                next.set(r, c + n, v);
                next.set(r + n, c, 2 * v);
                next.set(r + n, c + n, v);
            }
        t = std::move(next);
    }
    return t;
}

EACode build_ai_dcwea(const FieldMatrix& g1)
{
    std::size_t r = rank(g1);
    if (r != g1.rows())
        throw ConstructionError("G^1 is rank deficient (rank " + std::to_string(r) + " < " +
                                    std::to_string(g1.rows()) + ")",
                                r);
    const std::uint32_t p = g1.field().p();
    std::vector<FieldMatrix> gen;
    for (std::uint32_t s = 0; s < p; ++s)
        gen.push_back(g1.scaled(s));
    return make_code(Family::AIDCWEA, p, std::move(gen));
}

namespace {

FieldMatrix basis_matrix(const std::vector<FieldVector>& basis, PrimeField f, std::size_t from,
                         std::size_t count)
{
    std::vector<FieldVector> rows;
    for (std::size_t i = from; i < from + count; ++i)
        rows.push_back(basis[i].over(f));
    return FieldMatrix::from_rows(f, rows);
}

void check_basis(const std::vector<FieldVector>& basis, std::size_t n_d)
{
    if (basis.empty())
        throw ConstructionError("empty basis");
    if (n_d == 0 || basis.size() % n_d != 0)
        throw ConstructionError("basis size " + std::to_string(basis.size()) +
                                " is not divisible by n_d = " + std::to_string(n_d));
    FieldMatrix b = FieldMatrix::from_rows(basis.front().field(), basis);
    std::size_t r = rank(b);
    if (r != basis.size())
        throw ConstructionError("basis vectors are linearly dependent (rank " +
                                    std::to_string(r) + ")",
                                r);
}

} // namespace

EACode build_bd_dcwea(const std::vector<FieldVector>& basis, std::size_t n_d,
                      std::uint32_t field_char, std::uint32_t g1_scale)
{
    check_basis(basis, n_d);
    PrimeField f(field_char);
    const std::size_t M = basis.size() / n_d;
    if (n_d == 1) {
        // No decomposition: a plain linear code carried by the AI structure.
        EACode c = build_ai_dcwea(basis_matrix(basis, f, 0, M));
        c.family = Family::BDDCWEA;
        return c;
    }
    if (n_d != 2)
        throw ConstructionError("ternary BD decomposition uses n_d = 2; use the p-ary builder");
    FieldMatrix g2 = basis_matrix(basis, f, 0, M);
    FieldMatrix g1 = basis_matrix(basis, f, M, M).scaled(g1_scale);
    FieldMatrix g0(f, M, g1.cols());
    return make_code(Family::BDDCWEA, 3, {g0, g1, g2});
}

ComplexMatrix complex_image(const FieldMatrix& g, const F2CMap& f2c)
{
    ComplexMatrix out(g.rows(), std::vector<HalfGauss>(g.cols()));
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) {
            auto it = f2c.find(g.at(r, c));
            if (it == f2c.end())
                throw ConstructionError("finite-to-complex map has no image for element " +
                                        std::to_string(g.at(r, c)));
            out[r][c] = it->second;
        }
    return out;
}

EACode build_nocwea(std::vector<FieldMatrix> gen, const F2CMap& f2c)
{
    const std::uint32_t p = static_cast<std::uint32_t>(gen.size());
    EACode c = make_code(Family::NOCWEA, p, std::move(gen));
    if (c.users <= c.m)
        throw ConstructionError("NO-CWEA requires more users than tuple length (M > m)");
    c.f2c = f2c;
    for (const auto& g : c.gen)
        c.complex_gen.push_back(complex_image(g, f2c));
    return c;
}

std::size_t ternary_digits(std::uint32_t p)
{
    std::size_t n = 0;
    for (std::uint64_t pw = 1; pw < p; pw *= 3)
        ++n;
    return n;
}

EACode build_pary_bd(std::uint32_t p, const std::vector<FieldVector>& basis)
{
    if (!is_prime(p) || p <= 3)
        throw ConstructionError("p-ary BD construction needs a prime p > 3");
    const std::size_t n_d = ternary_digits(p);
    check_basis(basis, n_d);
    PrimeField f(3);
    const std::size_t M = basis.size() / n_d;
    // Subset i (0-based, contiguous) is the block of significance n_d - i.
    std::vector<FieldMatrix> blocks;
    for (std::size_t i = 0; i < n_d; ++i)
        blocks.push_back(basis_matrix(basis, f, i * M, M));
    std::vector<FieldMatrix> gen;
    for (std::uint32_t s = 0; s < p; ++s) {
        auto t = base3(s, n_d);
        FieldMatrix g(f, M, blocks.front().cols());
        for (std::size_t i = 0; i < n_d; ++i) {
            std::uint32_t coef = t[n_d - 1 - i];
            if (!coef)
                continue;
            for (std::size_t r = 0; r < M; ++r)
                for (std::size_t c = 0; c < g.cols(); ++c)
                    g.set(r, c, g.at(r, c) + coef * blocks[i].at(r, c));
        }
        gen.push_back(std::move(g));
    }
    EACode c = make_code(Family::ParyBD, p, std::move(gen));
    c.expansion = Expansion::Base3;
    c.n_d = n_d;
    c.parallel = FieldMatrix::vstack(blocks);
    return c;
}

FieldMatrix generator_for_block(const EACode& code, const std::vector<std::uint32_t>& d)
{
    if (d.size() != code.users)
        throw DimensionError("user block has " + std::to_string(d.size()) + " digits, code has " +
                             std::to_string(code.users) + " users");
    FieldMatrix out(code.field, code.users, code.m);
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] >= code.p)
            throw DimensionError("digit " + std::to_string(d[j]) + " out of range for p = " +
                                 std::to_string(code.p));
        auto row = code.gen[d[j]].row_span(j);
        for (std::size_t c = 0; c < code.m; ++c)
            out.set(j, c, row[c]);
    }
    return out;
}

} // namespace ffmac
