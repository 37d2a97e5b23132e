/**************************************************************************
 * fbl.cpp
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

#include "ffma/fbl.hpp"

#include <cmath>

#include "ffma/parallel.hpp"

namespace ffmac {

double dispersion(double P)
{
    if (P < 0)
        throw ValidationError("dispersion needs P >= 0");
    return P * (P + 2) / (2 * (1 + P) * (1 + P));
}

double cross_dispersion(unsigned J, double P)
{
    if (J == 0 || P < 0)
        throw ValidationError("cross dispersion needs J >= 1 and P >= 0");
    const double j = J;
    return j * (j - 1) * P * P / (2 * (1 + j * P) * (1 + j * P));
}

double qinv(double eps)
{
    if (!(eps > 0 && eps < 1))
        throw ValidationError("Q^{-1} needs eps in (0, 1)");
    // Acklam's rational approximation of the normal quantile, then Halley steps
    // on Q(x) = erfc(x/√2)/2.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00, 2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double pl = 1 - eps; // lower-tail probability of the quantile we want
    double x;
    if (pl < 0.02425) {
        double q = std::sqrt(-2 * std::log(pl));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    } else if (pl <= 1 - 0.02425) {
        double q = pl - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
        double q = std::sqrt(-2 * std::log(eps));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    for (int it = 0; it < 2; ++it) {
        double e = 0.5 * std::erfc(x / std::sqrt(2.0)) - eps;
        double u = -e * std::sqrt(2 * M_PI) * std::exp(x * x / 2); // e / Q'(x)
        x = x - u / (1 + x * u / 2);
    }
    return x;
}

namespace {

void check_eps(double eps)
{
    if (!(eps > 0 && eps < 1))
        throw ValidationError("eps must lie in (0, 1)");
}

} // namespace

FBLReport fbl_rate_su(const SystemDims& dims, double P, double eps)
{
    check_eps(eps);
    auto cap = capacity_su_tdma(dims, P);
    const double m = static_cast<double>(dims.m);
    const double snr = cap.pav.mu1 > 0 ? cap.pav.mu1 * P : cap.pav.mu2 * P;
    FBLReport r;
    r.eps = eps;
    r.capacity_term = cap.per_dof;
    r.penalty = std::sqrt(dispersion(snr) / m) * qinv(eps);
    r.log_term = std::log2(m) / (2 * m);
    r.bound = r.capacity_term - r.penalty + r.log_term;
    r.out_of_regime = eps >= 0.5;
    return r;
}

FBLReport fbl_rate_mu(const SystemDims& dims, double P, double eps)
{
    check_eps(eps);
    const std::size_t JK = static_cast<std::size_t>(dims.J_mc) * dims.K;
    if (dims.m <= JK)
        throw ValidationError("MU bound needs Q = m − J·K > 0");
    if (dims.K == 0)
        throw ValidationError("MU bound needs K > 0");
    SystemDims d = dims;
    d.Q = dims.m - JK;
    auto cap = capacity_mu_tdma(d, P);
    const double m = static_cast<double>(d.m);
    FBLReport r;
    r.eps = eps;
    r.capacity_term = cap.per_dof;
    const double var = dispersion(cap.pav.mu1 * P) / static_cast<double>(JK) +
                       cross_dispersion(d.J_mc, cap.pav.mu2 * P) / static_cast<double>(d.Q);
    r.penalty = std::sqrt(var) * qinv(eps);
    r.log_term = std::log2(m) / (2 * m);
    r.bound = r.capacity_term - r.penalty + r.log_term;
    r.out_of_regime = eps >= 0.5;
    return r;
}

std::string to_string(FBLScenario s)
{
    switch (s) {
    case FBLScenario::Shannon: return "shannon";
    case FBLScenario::P2P: return "p2p-fbl";
    case FBLScenario::GMAC: return "gmac-fbl";
    case FBLScenario::PAFFMA: return "pa-ffma";
    }
    return "unknown";
}

FBLScenario fbl_scenario_from_string(const std::string& s)
{
    for (auto x : {FBLScenario::Shannon, FBLScenario::P2P, FBLScenario::GMAC, FBLScenario::PAFFMA})
        if (to_string(x) == s)
            return x;
    throw ValidationError("unknown FBL scenario '" + s + "'");
}

double scenario_rate(FBLScenario s, double P, std::size_t m, std::size_t K, unsigned J, double eps)
{
    const double md = static_cast<double>(m);
    const double Ptot = J * P;
    switch (s) {
    case FBLScenario::Shannon:
        return awgn_capacity(Ptot);
    case FBLScenario::P2P: {
        SystemDims d = SystemDims::tdma(m, 0);
        return fbl_rate_su(d, Ptot, eps).bound;
    }
    case FBLScenario::GMAC: {
        const double var = (dispersion(Ptot) + cross_dispersion(J, P)) / md;
        return awgn_capacity(Ptot) - std::sqrt(var) * qinv(eps) + std::log2(md) / (2 * md);
    }
    case FBLScenario::PAFFMA: {
        SystemDims d;
        d.K = K;
        d.J = d.J_mc = J;
        d.m = d.N = m;
        d.Q = m - J * K;
        return fbl_rate_mu(d, P, eps).bound;
    }
    }
    return 0;
}

double min_ebn0_db(FBLScenario s, double rate, std::size_t m, std::size_t K, unsigned J, double eps)
{
    if (!(rate > 0))
        throw ValidationError("target rate must be positive");
    auto f = [&](double P) { return scenario_rate(s, P, m, K, J, eps) - rate; };
    double P;
    if (s == FBLScenario::Shannon) {
        P = (std::exp2(2 * rate) - 1) / J;
    } else {
        // First crossing on a geometric scan, then bisection.
        double lo = 0, hi = 0;
        bool found = false;
        for (double x = 1e-9; x < 1e9; x *= 1.05) {
            if (f(x) >= 0) {
                hi = x;
                found = true;
                break;
            }
            lo = x;
        }
        if (!found)
            throw ConvergenceError("no power reaches rate " + std::to_string(rate) + " for " +
                                   to_string(s));
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
            double mid = 0.5 * (lo + hi);
            (f(mid) >= 0 ? hi : lo) = mid;
        }
        P = hi;
    }
    return 10 * std::log10(J * P / (2 * rate));
}

std::vector<FBLRow> fbl_sweep(std::size_t m, std::size_t K, double eps,
                              const std::vector<unsigned>& users, unsigned threads)
{
    if (users.empty())
        throw ValidationError("empty user grid");
    const FBLScenario all[] = {FBLScenario::Shannon, FBLScenario::P2P, FBLScenario::GMAC,
                               FBLScenario::PAFFMA};
    std::vector<FBLRow> rows(users.size() * 4);
    parallel_for(rows.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            unsigned J = users[i / 4];
            FBLScenario s = all[i % 4];
            double S = static_cast<double>(J) * static_cast<double>(K) / static_cast<double>(m);
            rows[i] = {s, J, S, min_ebn0_db(s, S, m, K, J, eps), m, K, eps};
        }
    });
    return rows;
}

} // namespace ffmac
