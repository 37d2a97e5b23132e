/**************************************************************************
 * test_eacodec.cpp
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

#include <doctest.h>

#include <random>

#include "ffma/eacodec.hpp"
#include "ffma/errors.hpp"
#include "oracles.hpp"

using namespace ffmac;

namespace {

std::vector<FieldVector> cyclic_basis(PrimeField f)
{
    return {FieldVector::from_string(f, "1011000"), FieldVector::from_string(f, "0101100"),
            FieldVector::from_string(f, "0010110"), FieldVector::from_string(f, "0001011")};
}

EACode example7()
{
    PrimeField f5(5);
    FieldMatrix g0(f5, 3, 2), g1(f5, {{1, 1}, {4, 1}, {0, 1}}), g2(f5, {{4, 4}, {1, 4}, {2, 4}});
    F2CMap map{{0, HalfGauss::parse("0")}, {1, HalfGauss::parse("+1")},
               {4, HalfGauss::parse("-1")}, {2, HalfGauss::parse("+1i")}};
    return build_nocwea({g0, g1, g2}, map);
}

std::vector<EACode> families()
{
    PrimeField f3(3);
    return {build_orthogonal_ea(3),
            build_orthogonal_ea(2, 5),
            build_ai_dcwea(build_ternary_orthogonal(2)),
            build_bd_dcwea(cyclic_basis(f3)),
            build_bd_dcwea(cyclic_basis(PrimeField(2)), 2, 2),
            build_bd_dcwea(cyclic_basis(f3), 2, 3, 2),
            build_pary_bd(5, cyclic_basis(f3)),
            build_pary_bd(7, cyclic_basis(f3))};
}

} // namespace

TEST_CASE("finite-field sum-patterns match the direct sum")
{
    for (const auto& c : families()) {
        std::vector<oracle::Rows> gen;
        for (const auto& g : c.gen)
            gen.push_back(g.to_nested());
        for (const auto& d : oracle::all_blocks(c.users, c.p))
            CHECK(encode_ffsp(c, d).to_string() == oracle::ffsp(gen, d, c.field.p()));
    }
}

TEST_CASE("additive-inverse shortcut equals the switched sum")
{
    auto c = build_ai_dcwea(build_ternary_orthogonal(2));
    for (const auto& d : oracle::all_blocks(c.users, c.p))
        CHECK(encode_ai(c, d) == encode_ffsp(c, d));
}

TEST_CASE("ternary-to-binary transform")
{
    CHECK(t2b({0, 1, 2}) == std::vector<std::uint32_t>{0, 0, 1, 0, 1, 0});
    CHECK(b2t({0, 0, 1, 0, 1, 0}) == UserBlock{0, 1, 2});
    CHECK_THROWS_AS(b2t({1, 1}), DecodeError);
    Rng rng(5);
    std::size_t illegal = 0;
    auto d = b2t({1, 1}, &rng, &illegal);
    CHECK((d[0] == 1 || d[0] == 2));
    CHECK(illegal == 1);
    CHECK_THROWS_AS(t2b({3}), DimensionError);
}

TEST_CASE("base-3 digit expansion")
{
    CHECK(p2t(3, 2, 5) == std::vector<std::uint32_t>{1, 0});
    CHECK(p2t(4, 2, 5) == std::vector<std::uint32_t>{1, 1});
    CHECK(p2t(10, 3, 11) == std::vector<std::uint32_t>{1, 0, 1});
    for (std::uint32_t v = 0; v < 11; ++v)
        CHECK(t2p(p2t(v, 3, 11), 11) == v);
    CHECK_THROWS_AS(t2p({1, 2}, 5), DecodeError);
    CHECK_THROWS_AS(p2t(5, 2, 5), DimensionError);
}

TEST_CASE("parallel encoding agrees with serial encoding")
{
    for (const auto& c : families()) {
        if (!c.parallel)
            continue;
        for (const auto& d : oracle::all_blocks(c.users, c.p)) {
            auto a = expand_block(c, d);
            CHECK(encode_parallel(c, a) == encode_ffsp(c, d));
            CHECK(collapse_block(c, a) == d);
        }
    }
}

TEST_CASE("parallel decoding inverts encoding")
{
    for (const auto& c : families()) {
        if (!c.parallel)
            continue;
        auto blocks = oracle::all_blocks(c.users, c.p);
        if (oracle::span_rank(oracle::rows_of(*c.parallel), c.field.p()) < c.parallel->rows()) {
            // G^1 = -G^2 leaves the stacked generator singular.
            CHECK_THROWS_AS(parallel_decode(c, encode_ffsp(c, blocks.back())), DecodeError);
            continue;
        }
        for (const auto& d : blocks)
            CHECK(parallel_decode(c, encode_ffsp(c, d)) == d);
    }
    auto c = build_pary_bd(5, cyclic_basis(PrimeField(3)));
    CHECK_FALSE(parallel_decode(c, FieldVector::from_string(c.field, "0000001")).has_value());
    // (2,2)_3 = 8 is not a 5-ary digit.
    CHECK_FALSE(parallel_decode(c, FieldVector::from_string(c.field, "2022000")).has_value());
}

TEST_CASE("block enumeration order")
{
    CHECK(block_from_index(0, 2, 3) == UserBlock{0, 0});
    CHECK(block_from_index(1, 2, 3) == UserBlock{0, 1});
    CHECK(block_from_index(3, 2, 3) == UserBlock{1, 0});
    CHECK(block_count(4, 3) == 81);
    CHECK(block_count(200, 3) == UINT64_MAX);
    auto all = oracle::all_blocks(3, 5);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(block_from_index(i, 3, 5) == all[i]);
}

TEST_CASE("USPM verification matches the enumeration oracle")
{
    for (const auto& c : families()) {
        auto r = verify_uspm_ff(c);
        CHECK(r.enumerated);
        CHECK(r.distinct == oracle::distinct_ffsp(c));
        CHECK(r.ok == (r.distinct == r.blocks));
        CHECK(r.agree);
    }
}

TEST_CASE("USPM threads do not change the result")
{
    auto c = build_pary_bd(7, cyclic_basis(PrimeField(3)));
    VerifyOptions one, four;
    four.threads = 4;
    auto a = verify_uspm_ff(c, one), b = verify_uspm_ff(c, four);
    CHECK(a.distinct == b.distinct);
    CHECK(a.ok == b.ok);
}

TEST_CASE("collisions produce a witness")
{
    PrimeField f3(3);
    FieldMatrix z(f3, 2, 3), g1(f3, {{1, 0, 1}, {1, 0, 1}});
    auto c = make_code(Family::DCWEA, 3, {z, g1, g1.scaled(2)});
    auto r = verify_uspm_ff(c);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness);
    CHECK(r.witness->first != r.witness->second);
    CHECK(encode_ffsp(c, r.witness->first) == encode_ffsp(c, r.witness->second));
    CHECK(r.witness_pattern.rfind(encode_ffsp(c, r.witness->first).to_string(), 0) == 0);
    REQUIRE(r.certificate);
    CHECK_FALSE(r.certificate->passed());
    CHECK(r.agree);
}

TEST_CASE("rank certificates by family")
{
    auto ai = rank_certificate(build_ai_dcwea(build_ternary_orthogonal(2)));
    REQUIRE(ai);
    CHECK(ai->exact);
    CHECK(ai->rank == 4);
    auto bd = rank_certificate(build_bd_dcwea(cyclic_basis(PrimeField(3))));
    REQUIRE(bd);
    CHECK_FALSE(bd->exact);
    CHECK(bd->required == 4);
    CHECK(bd->passed());
    CHECK_FALSE(rank_certificate(example7()).has_value());
}

TEST_CASE("enumeration budget")
{
    auto c = build_ai_dcwea(build_ternary_orthogonal(3)); // 3^8 blocks
    VerifyOptions small;
    small.budget = 100;
    CHECK_THROWS_AS(verify_uspm_ff(c, small), BudgetError);
    small.certificate_only = true;
    auto r = verify_uspm_ff(c, small);
    CHECK(r.ok);
    CHECK_FALSE(r.enumerated);
    auto bd = build_bd_dcwea(cyclic_basis(PrimeField(3)));
    VerifyOptions tiny;
    tiny.budget = 4;
    tiny.certificate_only = true;
    CHECK_THROWS_AS(verify_uspm_ff(bd, tiny), BudgetError); // certificate is only sufficient
}

TEST_CASE("complex-field USPM of the non-orthogonal code")
{
    auto c = example7();
    auto cf = verify_uspm_cf(c);
    CHECK(cf.ok);
    CHECK(cf.distinct == 27);
    auto ff = verify_uspm_ff(c);
    CHECK_FALSE(ff.ok); // M > m: the finite-field map cannot be injective
    CHECK(encode_cfsp(c, {2, 0, 2})[0] == HalfGauss{-2, 2});
    CHECK_THROWS_AS(verify_uspm_cf(build_orthogonal_ea(2)), ConstructionError);
}

TEST_CASE("table decoding")
{
    for (const auto& c : families()) {
        if (!verify_uspm_ff(c).ok)
            continue;
        DecodeTable t(c);
        CHECK(t.size() == block_count(c.users, c.p));
        for (const auto& d : oracle::all_blocks(c.users, c.p))
            CHECK(t.decode(encode_ffsp(c, d)) == d);
    }
    auto c = build_orthogonal_ea(2);
    DecodeTable t(c);
    CHECK_THROWS_AS(t.decode(FieldVector(PrimeField(3), {1, 1, 1})), DimensionError);
    CHECK_THROWS_AS(DecodeTable(build_ai_dcwea(build_ternary_orthogonal(3)), 10), BudgetError);
}

TEST_CASE("parity-check derivation")
{
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int t = 0; t < 20; ++t) {
            FieldMatrix g(f, 3, 7);
            do {
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 7; ++j)
                        g.set(i, j, static_cast<std::int64_t>(rng() % p));
            } while (rank(g) < 3);
            FieldMatrix h = derive_parity_check(g);
            CHECK(h.rows() == 4);
            CHECK((g * h.transpose()).is_zero());
            CHECK(rank(h) == 4);
            // Null space of the null space is the original row space.
            FieldMatrix g2 = derive_parity_check(h);
            CHECK(rank(FieldMatrix::vstack({g, g2})) == 3);
            auto info = free_columns(h);
            CHECK(info.size() == 3);
            FieldVector u(f, {1, 2 % p, 0});
            auto c = u * g2;
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(c[info[i]] == u[i]);
        }
    }
}
