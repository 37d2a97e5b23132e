/**************************************************************************
 * crrca.cpp
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

#include "ffma/crrca.hpp"
#include "ffma/ffcore.hpp"

#include <algorithm>
#include <cmath>

namespace ffmac {

double crr(double C, double R)
{
    if (!(R > 0))
        throw ValidationError("CRR needs a positive rate");
    return C / R;
}

double fano_bound(double lambda, std::size_t M, std::uint32_t p)
{
    if (M == 0 || p < 2)
        throw ValidationError("Fano bound needs M >= 1 and p >= 2");
    return std::max(0.0, 1.0 - lambda - 1.0 / (static_cast<double>(M) * std::log2(p)));
}

namespace {

constexpr double kEdge = 1e-12;
constexpr int kMaxIter = 200;

// Common body of the SU/MU solvers; J is the parity superposition gain.
CAResult ca_allocate(std::size_t K_, std::size_t Q_, std::size_t m_, double gamma, std::uint32_t p,
                     unsigned J)
{
    if (!(gamma > 0))
        throw ValidationError("SNR must be positive");
    if (K_ == 0 || Q_ == 0 || m_ == 0)
        throw ValidationError("CA allocation needs K, Q, m > 0");
    if (!is_prime(p))
        throw ValidationError("p must be prime");
    const double K = static_cast<double>(K_), Q = static_cast<double>(Q_);
    const double m = static_cast<double>(m_), Jd = J;
    const double lp = std::log2(static_cast<double>(p));
    const double R1 = lp;
    const double R2 = std::min(K * Jd, Q) / Q * lp;

    CAResult r;
    auto fill = [&](double mu1, double mu2) {
        r.pav = {mu1, mu2, 0};
        r.lambda1 = awgn_capacity(mu1 * gamma) / R1;
        r.lambda2 = awgn_capacity(Jd * mu2 * gamma) / R2;
        r.aligned = std::min(r.lambda1, r.lambda2);
    };

    if (K * Jd >= Q) {
        const double mu2 = m / (K * Jd + Q);
        fill(Jd * mu2, mu2);
        r.mu_pas = Jd; // exact by construction
        r.method = J == 1 ? "epa" : "mu-epa";
        return r;
    }

    // λ1 rises and λ2 falls as μ1 moves along K·μ1 + Q·μ2 = m.
    auto gap = [&](double mu1) {
        double mu2 = (m - K * mu1) / Q;
        return awgn_capacity(mu1 * gamma) / R1 - awgn_capacity(Jd * mu2 * gamma) / R2;
    };
    double lo = kEdge, hi = m / K - kEdge;
    if (!(gap(lo) < 0 && gap(hi) > 0))
        throw ConvergenceError("CRR difference does not change sign on the constraint line");
    int it = 0;
    for (; it < kMaxIter; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (gap(mid) < 0 ? lo : hi) = mid;
    }
    // Take the endpoint with the smaller CRR mismatch.
    double mu1 = std::abs(gap(lo)) <= std::abs(gap(hi)) ? lo : hi;
    fill(mu1, (m - K * mu1) / Q);
    r.mu_pas = r.pav.mu1 / r.pav.mu2;
    r.method = "bisection";
    r.iterations = static_cast<std::size_t>(it);
    if (std::abs(r.lambda1 - r.lambda2) > 1e-9 * r.lambda1)
        throw ConvergenceError("CA bisection did not equalize the section CRRs");
    return r;
}

} // namespace

CAResult ca_allocate_su(std::size_t K, std::size_t Q, std::size_t m, double gamma, std::uint32_t p)
{
    return ca_allocate(K, Q, m, gamma, p, 1);
}

CAResult ca_allocate_mu(std::size_t K, std::size_t Q, std::size_t m, double gamma, std::uint32_t p,
                        unsigned J)
{
    if (J == 0)
        throw ValidationError("J must be positive");
    return ca_allocate(K, Q, m, gamma, p, J);
}

CRRReport capacity_vs_crr(std::size_t K_, std::size_t Q_, std::size_t m_, double gamma,
                          std::uint32_t p, const PAV& pav, unsigned J)
{
    if (K_ == 0 || Q_ == 0)
        throw ValidationError("CRR decomposition needs K, Q > 0");
    const double K = static_cast<double>(K_), Q = static_cast<double>(Q_);
    const double m = static_cast<double>(m_);
    if (std::abs(K * pav.mu1 + Q * pav.mu2 - m) > 1e-9 * m)
        throw ValidationError("PAV violates K·μ1 + Q·μ2 = m");
    const double lp = std::log2(static_cast<double>(p));
    const double Jd = J;
    const double C1 = awgn_capacity(pav.mu1 * gamma);
    const double C2 = awgn_capacity(Jd * pav.mu2 * gamma);
    CRRReport r;
    r.lambda1 = C1 / lp;
    r.lambda2 = C2 / (std::min(K * Jd, Q) / Q * lp);
    r.lambda2_breve = C2 / (K * Jd / Q * lp);
    r.sum_form = r.lambda1 + r.lambda2_breve;
    r.min_form = std::min(r.lambda1, r.lambda2);
    r.shares_argmax = K * Jd >= Q;
    r.fano = fano_bound(r.min_form, K_ * J, p);
    return r;
}

std::vector<double> maxmin_crr(const std::vector<double>& costs, const std::vector<double>& gains,
                               const std::vector<double>& rates, double budget, double gamma)
{
    const std::size_t n = costs.size();
    if (gains.size() != n || rates.size() != n || n == 0)
        throw ValidationError("max-min CRR inputs differ in length");
    if (!(budget > 0) || !(gamma > 0))
        throw ValidationError("max-min CRR needs positive budget and SNR");
    // μ_i(λ) = (2^{2λR_i} − 1)/(g_i·γ) makes every active section's CRR equal λ.
    auto mu_at = [&](double lam) {
        std::vector<double> mu(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            if (costs[i] > 0)
                mu[i] = (std::exp2(2 * lam * rates[i]) - 1) / (gains[i] * gamma);
        return mu;
    };
    auto spend = [&](double lam) {
        auto mu = mu_at(lam);
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            s += costs[i] * mu[i];
        return s;
    };
    double lo = 0, hi = 1;
    while (spend(hi) < budget) {
        hi *= 2;
        if (hi > 1e6)
            throw ConvergenceError("max-min CRR bracket failed");
    }
    for (int it = 0; it < kMaxIter; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (spend(mid) < budget ? lo : hi) = mid;
    }
    return mu_at(0.5 * (lo + hi));
}

// ---------------------------------------------------------------------------

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::ParyBetter: return "p-ary better";
    case Verdict::Equal: return "equal";
    case Verdict::ParyWorse: return "p-ary worse";
    }
    return "unknown";
}

Verdict pas_verdict(double mu_pas, std::uint32_t p)
{
    const double lp = std::log2(static_cast<double>(p));
    if (mu_pas < lp)
        return Verdict::ParyBetter;
    if (mu_pas > lp)
        return Verdict::ParyWorse;
    return Verdict::Equal;
}

PASPoint pas_from_gamma(std::uint32_t p, double gamma_b, unsigned J)
{
    if (!is_prime(p))
        throw ValidationError("p must be prime");
    if (!(gamma_b > 0) || J == 0)
        throw ValidationError("PAS needs γ_b > 0 and J >= 1");
    PASPoint pt;
    pt.p = p;
    pt.J = J;
    pt.log2p = std::log2(static_cast<double>(p));
    pt.gamma_b = gamma_b;
    const double Jd = J;
    // expm1/log1p keep the γ_b → 0 limit accurate.
    pt.gamma_p = std::expm1(pt.log2p * std::log1p(Jd * gamma_b)) / Jd;
    pt.mu_pas = p == 2 ? 1.0 : pt.gamma_p / (gamma_b * pt.log2p);
    pt.verdict = pas_verdict(pt.mu_pas, p);
    return pt;
}

double snr_from_ebn0(double ebn0_db, double eta, std::uint32_t p)
{
    return 2 * eta * std::log2(static_cast<double>(p)) * std::pow(10.0, ebn0_db / 10);
}

PASPoint pas_pary_mu(std::uint32_t p, double eta, double ebn0_db, unsigned J, PASConvention conv)
{
    if (!(eta > 0 && eta <= 1))
        throw ValidationError("loading factor must lie in (0, 1]");
    const double gamma_b = conv.snr_factor * eta * std::pow(10.0, ebn0_db / 10);
    PASPoint pt = pas_from_gamma(p, gamma_b, J);
    pt.eta = eta;
    pt.ebn0_db = ebn0_db;
    return pt;
}

PASPoint pas_pary_su(std::uint32_t p, double eta, double ebn0_db, PASConvention conv)
{
    return pas_pary_mu(p, eta, ebn0_db, 1, conv);
}

} // namespace ffmac
