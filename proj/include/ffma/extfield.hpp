/**************************************************************************
 * extfield.hpp
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

// GF(p^m) in polynomial basis. Elements are length-m coefficient vectors
// (constant term first); the power-of-alpha view is a lookup table.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffma/ffcore.hpp"

namespace ffmac {

using Poly = std::vector<std::uint32_t>; // coefficients, constant term first

/// Brute-force irreducibility test over GF(p)[x] (trial division by all monic
/// polynomials of degree <= deg/2).
bool is_irreducible(const PrimeField& f, const Poly& poly);

/// Lexicographically smallest monic primitive polynomial of degree m.
Poly default_modulus(const PrimeField& f, unsigned m);

class ExtField {
public:
    /// Uses default_modulus(p, m) when `modulus` is empty.
    ExtField(PrimeField base, unsigned m, Poly modulus = {});

    const PrimeField& base() const noexcept { return base_; }
    unsigned degree() const noexcept { return m_; }
    const Poly& modulus() const noexcept { return modulus_; }
    std::uint64_t order() const noexcept { return order_; }

    FieldVector zero() const { return {base_, std::size_t{m_}}; }
    FieldVector one() const;

    FieldVector add(const FieldVector& a, const FieldVector& b) const;
    FieldVector mul(const FieldVector& a, const FieldVector& b) const;
    /// alpha^j for j in [0, p^m - 2]; alpha is the class of x.
    FieldVector pow_alpha(std::uint64_t j) const;
    /// Discrete log base alpha; nullopt for zero. Requires a primitive modulus.
    std::optional<std::uint64_t> log_alpha(const FieldVector& a) const;
    /// Multiplicative order of x modulo the modulus.
    std::uint64_t alpha_order() const;
    bool is_primitive() const { return alpha_order() == order_ - 1; }

private:
    void check(const FieldVector& a) const;
    std::uint64_t index(const FieldVector& a) const;
    void build_tables();

    PrimeField base_;
    unsigned m_;
    Poly modulus_;
    std::uint64_t order_;
    // Filled at construction when p^m is small enough; immutable afterwards.
    std::vector<FieldVector> powers_;
    std::vector<std::int64_t> logs_;
};

} // namespace ffmac
