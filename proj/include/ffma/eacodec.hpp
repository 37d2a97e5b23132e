/**************************************************************************
 * eacodec.hpp
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

// Encoding of user blocks to finite/complex sum-patterns, uniqueness (USPM)
// verification, and table decoding.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ffma/eaconstruct.hpp"
#include "ffma/parallel.hpp"

namespace ffmac {

using UserBlock = std::vector<std::uint32_t>;
using ComplexBlock = std::vector<HalfGauss>;

/// Entry d of user j's assemblage.
FieldVector switch_element(const EACode& code, std::size_t user, std::uint32_t d);

/// w = Σ_j switch(d_j, C_j) over GF(p̆) (all-ones multiplexer).
FieldVector encode_ffsp(const EACode& code, const UserBlock& d);

/// d·G^1 — the shortcut valid for additive-inverse codes.
FieldVector encode_ai(const EACode& code, const UserBlock& d);

/// r = Σ_j s_j^{(d_j)} in exact arithmetic.
ComplexBlock encode_cfsp(const EACode& code, const UserBlock& d);

// Ternary-to-binary transform: 0→(0,0), 1→(0,1), 2→(1,0).
// Block layout: all users' high bits, then all users' low bits.
std::vector<std::uint32_t> t2b(const UserBlock& d);
/// Inverse of t2b. The illegal pair (1,1) is resolved to 1 or 2 by `rng`;
/// without an rng it raises DecodeError. `illegal` counts resolved pairs.
UserBlock b2t(const std::vector<std::uint32_t>& bits, Rng* rng = nullptr,
              std::size_t* illegal = nullptr);

/// Base-3 expansion, most significant first: p2t(3, 2) = (1, 0).
std::vector<std::uint32_t> p2t(std::uint32_t digit, std::size_t n_d, std::uint32_t p);
std::uint32_t t2p(const std::vector<std::uint32_t>& trits, std::uint32_t p);

/// Parallel user block for the code's expansion (significance-major layout).
std::vector<std::uint32_t> expand_block(const EACode& code, const UserBlock& d);
/// Inverse of expand_block. For T2B the (1,1) rule of b2t applies; for base-3
/// digit values ≥ p raise DecodeError.
UserBlock collapse_block(const EACode& code, const std::vector<std::uint32_t>& a,
                         Rng* rng = nullptr);

/// w = a·G_pll over GF(p̆).
FieldVector encode_parallel(const EACode& code, const std::vector<std::uint32_t>& a);

/// Linear-algebra decoding: solves a·G_pll = w and collapses a. Returns nullopt
/// when w is not a valid sum-pattern; DecodeError when G_pll is rank deficient.
std::optional<UserBlock> parallel_decode(const EACode& code, const FieldVector& w,
                                         Rng* rng = nullptr);

/// Lexicographic enumeration of GF(p)^M with user 1 most significant.
UserBlock block_from_index(std::uint64_t index, std::size_t users, std::uint32_t p);
std::uint64_t block_count(std::size_t users, std::uint32_t p); // saturates at UINT64_MAX

struct VerifyOptions {
    std::uint64_t budget = 1'000'000;
    /// Past the budget, accept the rank certificate alone when it is exact.
    bool certificate_only = false;
    unsigned threads = 1;
};

struct RankCertificate {
    std::string name;      // which matrix was ranked
    std::size_t rank = 0;
    std::size_t required = 0;
    bool exact = false;    // necessary and sufficient (vs. sufficient only)
    bool passed() const { return rank == required; }
};

struct UspmReport {
    bool ok = false;
    bool enumerated = false;
    std::uint64_t blocks = 0;
    std::uint64_t distinct = 0;
    std::optional<RankCertificate> certificate;
    /// Colliding user blocks (first collision in enumeration order).
    std::optional<std::pair<UserBlock, UserBlock>> witness;
    std::string witness_pattern;
    /// True when enumeration and certificate are consistent.
    bool agree = true;
};

/// Rank certificate appropriate to the code family, if any.
std::optional<RankCertificate> rank_certificate(const EACode& code);

UspmReport verify_uspm_ff(const EACode& code, const VerifyOptions& opt = {});
UspmReport verify_uspm_cf(const EACode& code, const VerifyOptions& opt = {});

/// Inverse of encode_ffsp, built by enumeration.
class DecodeTable {
public:
    explicit DecodeTable(const EACode& code, std::uint64_t budget = 1'000'000);
    /// Throws DecodeError when w has no preimage.
    UserBlock decode(const FieldVector& w) const;
    std::optional<UserBlock> find(const FieldVector& w) const;
    std::size_t size() const { return table_.size(); }

private:
    std::size_t users_;
    std::size_t m_;
    std::uint32_t p_;
    std::unordered_map<std::string, std::uint64_t> table_;
};

/// Rows spanning the null space of m's row space: m·H^T = 0. For systematic
/// [I | P] this is [−P^T | I]. Throws ConstructionError when m is not full rank.
FieldMatrix derive_parity_check(const FieldMatrix& g);

/// Columns carrying the information digits of u·derive_parity_check(h).
std::vector<std::size_t> free_columns(const FieldMatrix& h);

} // namespace ffmac
