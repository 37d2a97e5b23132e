/**************************************************************************
 * modulation.hpp
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

// Finite-field to real-amplitude mapping, superposition detection and
// analytic symbol-error rates.

#include <cstdint>
#include <vector>

#include "ffma/ffcore.hpp"
#include "ffma/qspa.hpp"

namespace ffmac {

/// a(u) = scale·(ℓ(u) − c): ℓ is the symmetric residue for odd q (c = 0) and
/// the identity for q = 2 (c = ½, i.e. BPSK). Scaled to unit average energy.
/// Σ_j ℓ(u_j) ≡ Σ_j u_j (mod q), so a superposition demaps to the sum-pattern.
class ModulationMap {
public:
    explicit ModulationMap(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    double amplitude(std::uint32_t u) const { return amp_[u]; }
    std::int64_t level(std::uint32_t u) const { return level_[u]; }
    double scale() const { return scale_; }
    double offset() const { return offset_; }
    /// Smallest distance between amplitudes.
    double min_distance() const { return scale_; }

private:
    std::uint32_t q_;
    double scale_;
    double offset_;
    std::vector<std::int64_t> level_;
    std::vector<double> amp_;
};

/// x_i = √μ·a(w_i).
std::vector<double> modulate(const FieldVector& w, double mu, const ModulationMap& map);

/// Per-DoF posteriors of the sum-pattern Σ_j u_j (mod q) given y = √μ·Σ_j a(u_j) + n,
/// with users' symbols i.i.d. uniform.
class SumsetDetector {
public:
    /// Throws BudgetError when q^J exceeds `budget`.
    SumsetDetector(const ModulationMap& map, unsigned users, double mu, double sigma2,
                   double budget = 1e5);

    Distribution posterior(double y) const;
    /// Nearest lattice sum, reduced mod q.
    std::uint32_t hard(double y) const;

private:
    std::uint32_t q_;
    double sigma2_;
    std::vector<double> points_;        // noiseless received values
    std::vector<double> log_weight_;    // log multiplicity
    std::vector<std::uint32_t> ffsp_;   // sum-pattern of each point
};

/// Rounding detector for superpositions too large to enumerate.
std::uint32_t round_detect(double y, const ModulationMap& map, unsigned users, double mu);

/// Exact ML symbol-error probability of equiprobable q-ASK with this map, at
/// power scale μ and noise variance σ² per real dimension:
/// 2(q−1)/q·Q(d/(2σ)), d = √μ·min_distance.
double analytic_ser(const ModulationMap& map, double mu, double sigma2);

/// Gaussian tail Q(x).
double qfunc(double x);

} // namespace ffmac
