/**************************************************************************
 * crrca.hpp
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

// Capacity-to-rate ratio (CRR) analysis and capacity-alignment (CA) power
// allocation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ffma/ratecap.hpp"

namespace ffmac {

/// λ = C / R.
double crr(double C, double R);

/// max(0, 1 − λ − 1/(M·log2 p)).
double fano_bound(double lambda, std::size_t M, std::uint32_t p);

struct CAResult {
    PAV pav;
    double mu_pas = 0;
    double lambda1 = 0; // info-section CRR
    double lambda2 = 0; // parity-section CRR
    double aligned = 0; // min{λ1, λ2}
    std::string method; // "epa", "mu-epa" or "bisection"
    std::size_t iterations = 0;
};

/// SU FF-TDMA max-min CRR allocation on K·μ1 + Q·μ2 = m.
CAResult ca_allocate_su(std::size_t K, std::size_t Q, std::size_t m, double gamma, std::uint32_t p);
/// MU variant: parity capacity C(J·μ2·γ), parity rate min{KJ,Q}/Q·log2 p.
CAResult ca_allocate_mu(std::size_t K, std::size_t Q, std::size_t m, double gamma, std::uint32_t p,
                        unsigned J);

/// Section CRRs of an arbitrary PAV (J = 1 gives the SU case).
struct CRRReport {
    double lambda1 = 0;
    double lambda2 = 0;
    double lambda2_breve = 0; // C2 / ((K/Q)·log2 p): capacity-equivalent parity term
    double sum_form = 0;      // λ1 + λ̆2 ∝ capacity
    double min_form = 0;      // min{λ1, λ2}
    bool shares_argmax = false; // both objectives are maximized by EPA (K ≥ Q)
    double fano = 0;            // Fano bound at min_form
};
CRRReport capacity_vs_crr(std::size_t K, std::size_t Q, std::size_t m, double gamma,
                          std::uint32_t p, const PAV& pav, unsigned J = 1);

/// Max-min CRR over n sections: maximize min_i C(gain_i·μ_i·γ)/rate_i subject
/// to Σ cost_i·μ_i = budget, by bisection on the common CRR. Not tied to a
/// published result; offered for three-section (FF-CCMA) exploration.
std::vector<double> maxmin_crr(const std::vector<double>& costs, const std::vector<double>& gains,
                               const std::vector<double>& rates, double budget, double gamma);

// --- p-ary vs binary power alignment ---------------------------------------

enum class Verdict { ParyBetter, Equal, ParyWorse };
std::string to_string(Verdict v);
/// Three-way sign of μ_pas − log2 p.
Verdict pas_verdict(double mu_pas, std::uint32_t p);

struct PASConvention {
    /// γ_b = snr_factor·μ_b·R_b·Eb/N0 with μ_b = 1 and R_b = η.
    double snr_factor = 2.0;
};

struct PASPoint {
    std::uint32_t p = 3;
    double eta = 0;
    double ebn0_db = 0;
    unsigned J = 1;
    double gamma_b = 0;
    double gamma_p = 0;
    double mu_pas = 0;
    double log2p = 0;
    Verdict verdict = Verdict::Equal;
};

/// Closed form for a given binary reference SNR γ_b:
/// γ_p = ((1 + J·γ_b)^{log2 p} − 1)/J and μ_pas = γ_p / (γ_b·log2 p).
PASPoint pas_from_gamma(std::uint32_t p, double gamma_b, unsigned J = 1);
PASPoint pas_pary_su(std::uint32_t p, double eta, double ebn0_db, PASConvention conv = {});
PASPoint pas_pary_mu(std::uint32_t p, double eta, double ebn0_db, unsigned J,
                     PASConvention conv = {});

/// γ_a = 2·η·log2(p)·Eb/N0: per-DoF SNR when m·P_avg carries K·log2 p bits.
double snr_from_ebn0(double ebn0_db, double eta, std::uint32_t p);

} // namespace ffmac
