/**************************************************************************
 * test_eaconstruct.cpp
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

#include "ffma/eaconstruct.hpp"
#include "ffma/errors.hpp"
#include "oracles.hpp"

using namespace ffmac;
using Nested = std::vector<std::vector<std::uint32_t>>;

namespace {
std::vector<FieldVector> cyclic_basis(PrimeField f)
{
    return {FieldVector::from_string(f, "1011000"), FieldVector::from_string(f, "0101100"),
            FieldVector::from_string(f, "0010110"), FieldVector::from_string(f, "0001011")};
}
} // namespace

TEST_CASE("orthogonal EA code")
{
    auto c = build_orthogonal_ea(2);
    CHECK(c.gen[1].to_nested() == Nested{{1, 0}, {0, 1}});
    CHECK(c.gen[2].to_nested() == Nested{{2, 0}, {0, 2}});
    CHECK(c.loading_factor() == 1.0);
    auto one = build_orthogonal_ea(1);
    CHECK(one.gen[0].at(0, 0) == 0);
    CHECK(one.gen[2].at(0, 0) == 2);
    CHECK_THROWS_AS(build_orthogonal_ea(0), ConstructionError);
}

TEST_CASE("ternary orthogonal matrices")
{
    CHECK(build_ternary_orthogonal(1).to_nested() == Nested{{1, 1}, {2, 1}});
    CHECK(build_ternary_orthogonal(2).to_nested() ==
          Nested{{1, 1, 1, 1}, {2, 1, 2, 1}, {2, 2, 1, 1}, {1, 2, 2, 1}});
    for (unsigned k = 1; k <= 3; ++k) {
        auto t = build_ternary_orthogonal(k);
        CHECK(oracle::span_rank(t.to_nested(), 3) == (1u << k));
    }
    CHECK_THROWS_AS(build_ternary_orthogonal(0), ConstructionError);
}

TEST_CASE("additive-inverse codes")
{
    auto c = build_ai_dcwea(build_ternary_orthogonal(1));
    CHECK(c.gen[2].to_nested() == Nested{{2, 2}, {1, 2}});
    CHECK(c.gen[2] == c.gen[1].scaled(2));
    CHECK(c.gen[0].is_zero());
    CHECK(c.expansion == Expansion::T2B);

    PrimeField f3(3);
    FieldMatrix dep(f3, {{1, 2}, {2, 1}});
    try {
        build_ai_dcwea(dep);
        FAIL("rank-deficient generator accepted");
    } catch (const ConstructionError& e) {
        CHECK(e.rank() == 1);
    }
    auto id = build_ai_dcwea(FieldMatrix::identity(f3, 3));
    CHECK(id.gen == build_orthogonal_ea(3).gen);
}

TEST_CASE("basis decomposition codes")
{
    PrimeField f3(3);
    auto c = build_bd_dcwea(cyclic_basis(f3));
    CHECK(c.gen[2].to_nested() == Nested{{1, 0, 1, 1, 0, 0, 0}, {0, 1, 0, 1, 1, 0, 0}});
    CHECK(c.gen[1].to_nested() == Nested{{0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 0, 1, 1}});
    REQUIRE(c.parallel);
    CHECK(oracle::span_rank(c.parallel->to_nested(), 3) == 4);
    CHECK(c.loading_factor() == doctest::Approx(2.0 / 7));

    auto c6 = build_bd_dcwea(cyclic_basis(f3), 2, 3, 2);
    CHECK(c6.gen[1].to_nested() == Nested{{0, 0, 2, 0, 2, 2, 0}, {0, 0, 0, 2, 0, 2, 2}});

    auto plain = build_bd_dcwea(cyclic_basis(f3), 1);
    CHECK(plain.users == 4);
    CHECK(plain.gen[2] == plain.gen[1].scaled(2));

    auto b = cyclic_basis(f3);
    b[3] = b[0];
    CHECK_THROWS_AS(build_bd_dcwea(b), ConstructionError);
    CHECK_THROWS_AS(build_bd_dcwea({b[0], b[1], b[2]}), ConstructionError);
}

TEST_CASE("p-ary basis decomposition")
{
    CHECK(ternary_digits(5) == 2);
    CHECK(ternary_digits(7) == 2);
    CHECK(ternary_digits(11) == 3);
    CHECK(ternary_digits(3) == 1);
    auto c = build_pary_bd(5, cyclic_basis(PrimeField(3)));
    CHECK(c.n_d == 2);
    CHECK(c.gen.size() == 5);
    // G^3 = B_1, G^4 = B_1 + B_2.
    CHECK(c.gen[3].to_nested() == Nested{{1, 0, 1, 1, 0, 0, 0}, {0, 1, 0, 1, 1, 0, 0}});
    CHECK(c.gen[4].to_nested() == Nested{{1, 0, 2, 1, 1, 1, 0}, {0, 1, 0, 2, 1, 1, 1}});
    CHECK_THROWS_AS(build_pary_bd(3, cyclic_basis(PrimeField(3))), ConstructionError);
}

TEST_CASE("non-orthogonal codes and the complex map")
{
    PrimeField f5(5);
    FieldMatrix g0(f5, 3, 2), g1(f5, {{1, 1}, {4, 1}, {0, 1}}), g2(f5, {{4, 4}, {1, 4}, {2, 4}});
    F2CMap map{{0, HalfGauss::parse("0")}, {1, HalfGauss::parse("+1")},
               {4, HalfGauss::parse("-1")}, {2, HalfGauss::parse("+1i")}};
    auto c = build_nocwea({g0, g1, g2}, map);
    CHECK(c.loading_factor() == doctest::Approx(1.5));
    CHECK(c.complex_gen[2][2][0] == HalfGauss{0, 2});
    CHECK(c.complex_gen[1][1][0] == HalfGauss{-2, 0});
    CHECK(c.complex_gen[2][0][1].to_string() == "-1");

    CHECK_THROWS_AS(build_nocwea({FieldMatrix(f5, 2, 2), FieldMatrix::identity(f5, 2),
                                  FieldMatrix::identity(f5, 2).scaled(4)},
                                 map),
                    ConstructionError);
    F2CMap partial{{0, {}}, {1, {2, 0}}};
    CHECK_THROWS_AS(build_nocwea({g0, g1, g2}, partial), ConstructionError);
    auto zero = complex_image(FieldMatrix(f5, 2, 2), map);
    CHECK(zero[1][1] == HalfGauss{});
}

TEST_CASE("half-integer Gaussian literals")
{
    CHECK(HalfGauss::parse("0.5-1.5i") == HalfGauss{1, -3});
    CHECK(HalfGauss::parse("-1i") == HalfGauss{0, -2});
    CHECK(HalfGauss::parse("1+1i").to_string() == "1+1i");
    CHECK_THROWS(HalfGauss::parse("0.3"));
    CHECK_THROWS(HalfGauss::parse(""));
}

TEST_CASE("raw generator validation")
{
    PrimeField f3(3);
    FieldMatrix z(f3, 2, 2), a(f3, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(make_code(Family::DCWEA, 3, {z, a, a}), ConstructionError);
    CHECK_THROWS_AS(make_code(Family::DCWEA, 3, {z, a}), ConstructionError);
    CHECK_THROWS_AS(make_code(Family::DCWEA, 4, {z, a, a.scaled(2), a}), ConstructionError);
    auto c = make_code(Family::DCWEA, 3, {z, a, a.scaled(2)});
    CHECK(generator_for_block(c, {1, 1}) == c.gen[1]);
    CHECK(generator_for_block(c, {2, 2}) == c.gen[2]);
    CHECK(generator_for_block(c, {2, 0}).to_nested() == Nested{{2, 0}, {0, 0}});
    CHECK_THROWS_AS(generator_for_block(c, {3, 0}), DimensionError);
}

TEST_CASE("generator for block reproduces the full matrices of the 4-user code")
{
    auto c = build_ai_dcwea(build_ternary_orthogonal(2));
    CHECK(generator_for_block(c, {1, 1, 1, 1}).to_nested() ==
          Nested{{1, 1, 1, 1}, {2, 1, 2, 1}, {2, 2, 1, 1}, {1, 2, 2, 1}});
    CHECK(generator_for_block(c, {2, 2, 2, 2}).to_nested() ==
          Nested{{2, 2, 2, 2}, {1, 2, 1, 2}, {1, 1, 2, 2}, {2, 1, 1, 2}});
}
