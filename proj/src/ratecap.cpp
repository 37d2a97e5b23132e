/**************************************************************************
 * ratecap.cpp
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

#include "ffma/ratecap.hpp"

#include <algorithm>
#include <cmath>

#include "ffma/parallel.hpp"

namespace ffmac {

double awgn_capacity(double snr) { return 0.5 * std::log2(1.0 + snr); }

SystemDims SystemDims::tdma(std::size_t K, std::size_t Q, unsigned J_mc, std::uint32_t p)
{
    SystemDims d;
    d.K = K;
    d.Q = Q;
    d.J = J_mc;
    d.J_mc = J_mc;
    d.T = 1;
    d.m = J_mc * K + Q;
    d.N = d.m;
    d.p = p;
    return d;
}

void SystemDims::validate() const
{
    if (J_mc == 0 || T == 0)
        throw ValidationError("J_mc and T must be positive");
    if (J != J_mc * T)
        throw ValidationError("J = " + std::to_string(J) + " differs from J_mc·T = " +
                              std::to_string(J_mc * T));
    if (m == 0)
        throw ValidationError("m must be positive");
}

std::string to_string(SequenceClass c)
{
    return c == SequenceClass::SingleRate ? "single-rate" : "multirate";
}

double loading_factor(std::size_t M, std::size_t m)
{
    if (m == 0)
        throw ValidationError("loading factor needs m > 0");
    return static_cast<double>(M) / static_cast<double>(m);
}

double coding_rate(std::size_t M, std::size_t m, std::uint32_t p)
{
    return loading_factor(M, m) * std::log2(static_cast<double>(p));
}

double parity_rate(std::size_t K, std::size_t Q, std::uint32_t p)
{
    if (Q == 0)
        throw ValidationError("parity rate needs Q > 0");
    return static_cast<double>(std::min(K, Q)) / static_cast<double>(Q) *
           std::log2(static_cast<double>(p));
}

double gc_parity_rate(std::size_t K, std::size_t R, std::uint32_t p) { return parity_rate(K, R, p); }

SequenceClass classify_sequence(std::size_t K, std::size_t Q)
{
    return K >= Q ? SequenceClass::SingleRate : SequenceClass::Multirate;
}

namespace {

struct Section {
    const char* name;
    double users;  // multiplicity of the section in the capacity sum
    double len;    // DoFs (power-constraint weight)
    double gain;   // SNR multiplier from superposition
    double mu;
};

void check_constraint(const std::vector<Section>& s, double budget)
{
    double used = 0;
    for (const auto& x : s) {
        if (x.mu < 0)
            throw ValidationError("negative power scale factor");
        used += x.len * x.mu;
    }
    if (std::abs(used - budget) > 1e-9 * std::max(1.0, budget))
        throw ValidationError("PAV violates the power constraint: Σ len·μ = " +
                              std::to_string(used) + " ≠ " + std::to_string(budget));
}

CapacityReport evaluate(const std::vector<Section>& secs, double gamma, double dofs, PAV pav)
{
    CapacityReport r;
    r.pav = pav;
    for (const auto& s : secs) {
        if (s.len == 0)
            continue;
        SectionCapacity sc{s.name, s.users * s.len, s.gain * s.mu * gamma,
                           awgn_capacity(s.gain * s.mu * gamma)};
        r.total_bits += sc.count * sc.capacity;
        r.sections.push_back(sc);
    }
    r.per_dof = r.total_bits / dofs;
    r.mu_pas = pav.mu2 > 0 ? pav.mu1 / pav.mu2 : 0.0;
    return r;
}

void check_gamma(double gamma)
{
    if (!(gamma > 0))
        throw ValidationError("SNR must be positive");
}

} // namespace

CapacityReport capacity_su_tdma(const SystemDims& d, double gamma, std::optional<PAV> pav)
{
    check_gamma(gamma);
    const double K = static_cast<double>(d.K), Q = static_cast<double>(d.Q);
    const double m = static_cast<double>(d.m);
    if (K + Q <= 0 || m <= 0)
        throw ValidationError("SU FF-TDMA needs K + Q > 0 and m > 0");
    PAV v;
    if (pav) {
        v = *pav;
    } else {
        v.mu1 = K > 0 ? m / (K + Q) : 0;
        v.mu2 = Q > 0 ? m / (K + Q) : 0;
    }
    std::vector<Section> s{{"info", 1, K, 1, v.mu1}, {"mc-parity", 1, Q, 1, v.mu2}};
    check_constraint(s, m);
    return evaluate(s, gamma, m, v);
}

CapacityReport capacity_su_ccma(const SystemDims& d, double gamma, std::optional<PAV> pav)
{
    check_gamma(gamma);
    const double K = static_cast<double>(d.K), Q = static_cast<double>(d.Q);
    const double R = static_cast<double>(d.R), N = static_cast<double>(d.N ? d.N : d.m);
    if (K + Q + R <= 0)
        throw ValidationError("SU FF-CCMA needs K + Q + R > 0");
    PAV v;
    if (pav) {
        v = *pav;
    } else {
        double mu = N / (K + Q + R);
        v = {K > 0 ? mu : 0, Q > 0 ? mu : 0, R > 0 ? mu : 0};
    }
    std::vector<Section> s{{"info", 1, K, 1, v.mu1}, {"mc-parity", 1, Q, 1, v.mu2},
                           {"gc-parity", 1, R, 1, v.muc}};
    check_constraint(s, N);
    return evaluate(s, gamma, N, v);
}

CapacityReport capacity_mu_tdma(const SystemDims& d, double gamma, std::optional<PAV> pav)
{
    check_gamma(gamma);
    if (d.J_mc == 0)
        throw ValidationError("J_mc must be positive");
    const double K = static_cast<double>(d.K), Q = static_cast<double>(d.Q);
    const double m = static_cast<double>(d.m), J = d.J_mc;
    if (K * J + Q <= 0 || m <= 0)
        throw ValidationError("MU FF-TDMA needs KJ + Q > 0 and m > 0");
    PAV v;
    if (pav) {
        v = *pav;
    } else {
        double mu2 = m / (K * J + Q);
        v.mu1 = K > 0 ? J * mu2 : 0;
        v.mu2 = Q > 0 ? mu2 : 0;
    }
    std::vector<Section> s{{"info", J, K, 1, v.mu1}, {"mc-parity", 1, Q, J, v.mu2}};
    check_constraint(s, m);
    CapacityReport r = evaluate(s, gamma, m, v);
    if (!pav && K > 0 && Q > 0)
        r.mu_pas = J; // exact: μ1 = J·μ2 by construction
    return r;
}

CapacityReport capacity_mu_ccma(const SystemDims& d, double gamma, std::optional<PAV> pav)
{
    check_gamma(gamma);
    d.validate();
    const double K = static_cast<double>(d.K), Q = static_cast<double>(d.Q);
    const double R = static_cast<double>(d.R), N = static_cast<double>(d.N ? d.N : d.m);
    const double J = d.J, Jmc = d.J_mc, T = d.T;
    if (K * J + Q * T + R <= 0)
        throw ValidationError("MU FF-CCMA needs KJ + QT + R > 0");
    PAV v;
    if (pav) {
        v = *pav;
    } else {
        double muc = N / (K * J + Q * T + R);
        v = {K > 0 ? J * muc : 0, Q > 0 ? T * muc : 0, R > 0 ? muc : 0};
    }
    std::vector<Section> s{{"info", J, K, 1, v.mu1}, {"mc-parity", T, Q, Jmc, v.mu2},
                           {"gc-parity", 1, R, J, v.muc}};
    check_constraint(s, N);
    return evaluate(s, gamma, N, v);
}

GridResult grid_oracle(const std::vector<double>& costs, double budget,
                       const std::function<double(const std::vector<double>&)>& objective,
                       double step, unsigned threads)
{
    if (!(step > 0) || step > 1)
        throw ValidationError("grid step must lie in (0, 1]");
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < costs.size(); ++i)
        if (costs[i] > 0)
            active.push_back(i);
    if (active.empty())
        throw ValidationError("grid oracle needs at least one section with positive cost");
    if (active.size() > 3)
        throw ValidationError("grid oracle supports at most three sections");

    const auto n = static_cast<std::size_t>(std::llround(1.0 / step));
    auto mu_from = [&](const std::vector<double>& frac) {
        std::vector<double> mu(costs.size(), 0.0);
        for (std::size_t a = 0; a < active.size(); ++a)
            mu[active[a]] = frac[a] * budget / costs[active[a]];
        return mu;
    };

    // Outer index i is the first fraction; remaining fractions are scanned inside.
    const std::size_t outer = active.size() == 1 ? 1 : n + 1;
    std::vector<GridResult> best(outer);
    parallel_for(outer, threads, [&](std::size_t b, std::size_t e) {
        std::vector<double> frac(active.size());
        for (std::size_t i = b; i < e; ++i) {
            GridResult& g = best[i];
            g.value = -HUGE_VAL;
            auto consider = [&] {
                auto mu = mu_from(frac);
                double v = objective(mu);
                ++g.evaluated;
                if (v > g.value) {
                    g.value = v;
                    g.mu = mu;
                }
            };
            if (active.size() == 1) {
                frac[0] = 1.0;
                consider();
            } else if (active.size() == 2) {
                frac[0] = static_cast<double>(i) / static_cast<double>(n);
                frac[1] = 1.0 - frac[0];
                consider();
            } else {
                frac[0] = static_cast<double>(i) / static_cast<double>(n);
                for (std::size_t j = 0; i + j <= n; ++j) {
                    frac[1] = static_cast<double>(j) / static_cast<double>(n);
                    frac[2] = std::max(0.0, 1.0 - frac[0] - frac[1]);
                    consider();
                }
            }
        }
    });
    GridResult out;
    out.value = -HUGE_VAL;
    for (const auto& g : best) {
        out.evaluated += g.evaluated;
        if (g.value > out.value) {
            out.value = g.value;
            out.mu = g.mu;
        }
    }
    return out;
}

} // namespace ffmac
