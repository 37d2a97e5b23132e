/**************************************************************************
 * ratecap.hpp
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

// Degrees-of-freedom accounting, coding rates and closed-form capacities of
// FF-TDMA / FF-CCMA with their optimal power-allocation vectors.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ffma/errors.hpp"

namespace ffmac {

/// C(x) = ½·log2(1 + x).
double awgn_capacity(double snr);

struct SystemDims {
    std::size_t K = 0;  // information DoFs per user
    std::size_t Q = 0;  // multiuser-code parity DoFs
    std::size_t R = 0;  // channel-code parity DoFs
    std::size_t m = 0;  // multiuser-code length
    std::size_t N = 0;  // channel-code length (m when absent)
    unsigned J = 1;     // total users
    unsigned J_mc = 1;  // users per multiuser block
    unsigned T = 1;     // blocks
    std::uint32_t p = 2;

    /// TDMA layout: m = J_mc·K + Q, J = J_mc, N = m.
    static SystemDims tdma(std::size_t K, std::size_t Q, unsigned J_mc = 1, std::uint32_t p = 2);
    void validate() const;
};

struct PAV {
    double mu1 = 0;
    double mu2 = 0;
    double muc = 0;
    double pas() const { return mu1 / mu2; }
};

enum class SequenceClass { SingleRate, Multirate };
std::string to_string(SequenceClass c);

double loading_factor(std::size_t M, std::size_t m);
double coding_rate(std::size_t M, std::size_t m, std::uint32_t p);
/// min{K,Q}/Q·log2 p; 0 when K = 0.
double parity_rate(std::size_t K, std::size_t Q, std::uint32_t p);
double gc_parity_rate(std::size_t K, std::size_t R, std::uint32_t p);
SequenceClass classify_sequence(std::size_t K, std::size_t Q);

struct SectionCapacity {
    std::string name;
    double count = 0;    // number of DoFs (times users, where superposed sections repeat)
    double snr = 0;      // effective SNR of the section
    double capacity = 0; // C(snr) per DoF
};

struct CapacityReport {
    double total_bits = 0; // per block
    double per_dof = 0;    // total_bits / m (or N)
    std::vector<SectionCapacity> sections;
    PAV pav;
    double mu_pas = 0;
};

/// Optional explicit PAVs must satisfy the power constraint to 1e-9 relative.
CapacityReport capacity_su_tdma(const SystemDims& d, double gamma, std::optional<PAV> pav = {});
CapacityReport capacity_su_ccma(const SystemDims& d, double gamma, std::optional<PAV> pav = {});
CapacityReport capacity_mu_tdma(const SystemDims& d, double gamma, std::optional<PAV> pav = {});
CapacityReport capacity_mu_ccma(const SystemDims& d, double gamma, std::optional<PAV> pav = {});

/// Exhaustive scan of {μ ≥ 0 : Σ costs_i·μ_i = budget} in power-fraction
/// coordinates with the given step. Sections with zero cost get μ = 0.
struct GridResult {
    std::vector<double> mu;
    double value = 0;
    std::size_t evaluated = 0;
};
GridResult grid_oracle(const std::vector<double>& costs, double budget,
                       const std::function<double(const std::vector<double>&)>& objective,
                       double step, unsigned threads = 1);

} // namespace ffmac
