/**************************************************************************
 * fbl.hpp
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

// Normal-approximation finite-blocklength bounds and minimum-Eb/N0 solvers.

#include <cstddef>
#include <string>
#include <vector>

#include "ffma/ratecap.hpp"

namespace ffmac {

/// V(P) = P(P+2) / (2(1+P)^2). Used as displayed, without a nats→bits factor.
double dispersion(double P);
/// V_cr(J, P) = J(J−1)P² / (2(1+JP)²).
double cross_dispersion(unsigned J, double P);

/// Q^{-1}(eps): inverse Gaussian tail probability.
double qinv(double eps);

struct FBLReport {
    double bound = 0;         // achievable rate, bits per DoF
    double capacity_term = 0; // C / m
    double penalty = 0;       // sqrt(...)·Q^{-1}(eps), bits per DoF
    double log_term = 0;      // log2(m) / (2m)
    double eps = 0;
    bool out_of_regime = false; // eps ≥ 0.5 (penalty ≤ 0)
};

/// SU FF-TDMA bound at EPA.
FBLReport fbl_rate_su(const SystemDims& d, double P, double eps);
/// MU FF-TDMA sum-rate bound (J·R_q) at MU-EPA; needs Q = m − J·K > 0.
FBLReport fbl_rate_mu(const SystemDims& d, double P, double eps);

enum class FBLScenario { Shannon, P2P, GMAC, PAFFMA };
std::string to_string(FBLScenario s);
FBLScenario fbl_scenario_from_string(const std::string& s);

/// Rate (bits per DoF) achievable by scenario s at per-user power P with
/// J users, blocklength m and K info DoFs per user.
double scenario_rate(FBLScenario s, double P, std::size_t m, std::size_t K, unsigned J, double eps);

/// Smallest Eb/N0 (dB) reaching `rate`. The received power per DoF is J·P and
/// Eb/N0 = J·P / (2·rate). Throws ConvergenceError when no bracket is found.
double min_ebn0_db(FBLScenario s, double rate, std::size_t m, std::size_t K, unsigned J,
                   double eps);

struct FBLRow {
    FBLScenario scenario;
    unsigned J;
    double spectral_efficiency;
    double min_ebn0_db;
    std::size_t m;
    std::size_t K;
    double eps;
};

/// All four scenarios at spectral efficiency J·K/m for each J.
std::vector<FBLRow> fbl_sweep(std::size_t m, std::size_t K, double eps,
                              const std::vector<unsigned>& users, unsigned threads = 1);

} // namespace ffmac
