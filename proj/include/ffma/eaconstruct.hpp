/**************************************************************************
 * eaconstruct.hpp
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

#pragma once

// Element-assemblage (EA) code families and their generator matrices.
//
// An M-user p-ary EA code over GF(p̆) is stored as the p "full-ς" generator
// matrices G^0..G^{p-1} (each M×m): row j of G^ς is the element user j sends
// for digit ς. Families that admit a parallel (linear) encoder additionally
// carry the stacked matrix [G^(N_d); ...; G^(1)].

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffma/ffcore.hpp"

namespace ffmac {

enum class Family { Orthogonal, DCWEA, AIDCWEA, BDDCWEA, NOCWEA, ParyBD };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// Exact complex number with half-integer parts, stored doubled.
struct HalfGauss {
    std::int64_t re2 = 0;
    std::int64_t im2 = 0;

    HalfGauss& operator+=(const HalfGauss& o)
    {
        re2 += o.re2;
        im2 += o.im2;
        return *this;
    }
    auto operator<=>(const HalfGauss&) const = default;

    /// "0", "+1", "-1", "+1i", "-0.5i", "1+1i", "0.5-1.5i".
    static HalfGauss parse(const std::string& s);
    std::string to_string() const;
};

using F2CMap = std::map<std::uint32_t, HalfGauss>;
using ComplexMatrix = std::vector<std::vector<HalfGauss>>; // M×m

/// How user digits expand into the parallel user block.
enum class Expansion {
    None,    // no linear parallel encoder
    T2B,     // ternary digit -> two bits (0->00, 1->01, 2->10)
    Base3,   // p-ary digit -> N_d base-3 digits
};

struct EACode {
    Family family = Family::DCWEA;
    std::uint32_t p = 3;          // source alphabet
    PrimeField field{3};          // p̆, characteristic of codeword entries
    std::size_t m = 0;            // tuple length
    std::size_t users = 0;        // M
    std::vector<FieldMatrix> gen; // gen[ς], ς in [0, p)

    Expansion expansion = Expansion::None;
    std::size_t n_d = 1;
    std::optional<FieldMatrix> parallel; // (n_d·M)×m, highest significance on top

    std::optional<F2CMap> f2c;
    std::vector<ComplexMatrix> complex_gen; // S^ς, present iff f2c

    const FieldMatrix& full(std::uint32_t digit) const { return gen.at(digit); }
    double loading_factor() const { return static_cast<double>(users) / static_cast<double>(m); }
    bool zero_digit_silent() const { return gen.front().is_zero(); }
};

/// Assembles an EACode from raw full-ς matrices (ς = 0..p-1) and validates the
/// structural invariants: equal shapes, one field, distinct entries per user.
EACode make_code(Family family, std::uint32_t p, std::vector<FieldMatrix> gen);

/// G^ς = ς·I_m over GF(p).
EACode build_orthogonal_ea(std::size_t m, std::uint32_t p = 3);

/// 2^κ × 2^κ ternary matrix: T(1) = [1], T(2n) = [[T, T], [2T, T]].
FieldMatrix build_ternary_orthogonal(unsigned kappa);

/// Additive-inverse D-CWEA: G^ς = ς·G^1. Requires full row rank.
EACode build_ai_dcwea(const FieldMatrix& g1);

/// Ternary basis-decomposition D-CWEA: basis rows split contiguously into two
/// equal subsets; B_1 → G^2, B_2 → g1_scale·B_2 → G^1. `field_char` selects the
/// accumulation field of the sum-patterns.
EACode build_bd_dcwea(const std::vector<FieldVector>& basis, std::size_t n_d = 2,
                      std::uint32_t field_char = 3, std::uint32_t g1_scale = 1);

/// NO-CWEA over GF(p̆) with a finite-to-complex map. Requires M > m.
EACode build_nocwea(std::vector<FieldMatrix> gen, const F2CMap& f2c);

/// ⌈log_3 p⌉.
std::size_t ternary_digits(std::uint32_t p);

/// p-ary BD code over GF(3): N_d = ⌈log_3 p⌉ subsets, G^ς = Σ_i t_i(ς)·B_i.
EACode build_pary_bd(std::uint32_t p, const std::vector<FieldVector>& basis);

/// M×m matrix whose row j is user j's element for digit d_j.
FieldMatrix generator_for_block(const EACode& code, const std::vector<std::uint32_t>& d);

/// Entrywise image of a generator under the complex map.
ComplexMatrix complex_image(const FieldMatrix& g, const F2CMap& f2c);

} // namespace ffmac
