/**************************************************************************
 * modulation.cpp
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

#include "ffma/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ffmac {

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

ModulationMap::ModulationMap(std::uint32_t q) : q_(q), level_(q), amp_(q)
{
    if (!is_prime(q))
        throw FieldError("modulation alphabet " + std::to_string(q) + " is not prime");
    offset_ = q == 2 ? 0.5 : 0.0;
    double energy = 0;
    for (std::uint32_t u = 0; u < q; ++u) {
        level_[u] = q == 2 ? static_cast<std::int64_t>(u) : symmetric_lift(u, q);
        double c = static_cast<double>(level_[u]) - offset_;
        energy += c * c;
    }
    scale_ = 1.0 / std::sqrt(energy / q);
    for (std::uint32_t u = 0; u < q; ++u)
        amp_[u] = scale_ * (static_cast<double>(level_[u]) - offset_);
}

std::vector<double> modulate(const FieldVector& w, double mu, const ModulationMap& map)
{
    if (mu < 0)
        throw ValidationError("power scale must be nonnegative");
    if (w.field().p() != map.q())
        throw FieldError("modulation alphabet differs from vector field");
    std::vector<double> x(w.size(), 0.0);
    if (mu == 0)
        return x;
    const double s = std::sqrt(mu);
    for (std::size_t i = 0; i < w.size(); ++i)
        x[i] = s * map.amplitude(w[i]);
    return x;
}

SumsetDetector::SumsetDetector(const ModulationMap& map, unsigned users, double mu, double sigma2,
                               double budget)
    : q_(map.q()), sigma2_(sigma2)
{
    if (users == 0)
        throw ValidationError("detector needs at least one user");
    if (!(sigma2 > 0))
        throw ValidationError("noise variance must be positive");
    if (std::pow(static_cast<double>(q_), users) > budget)
        throw BudgetError("q^J exceeds the sumset enumeration budget");
    // Multiplicities of integer level sums, by repeated convolution.
    std::map<std::int64_t, double> mult{{0, 1.0}};
    for (unsigned j = 0; j < users; ++j) {
        std::map<std::int64_t, double> next;
        for (auto [s, c] : mult)
            for (std::uint32_t u = 0; u < q_; ++u)
                next[s + map.level(u)] += c;
        mult = std::move(next);
    }
    const double step = std::sqrt(mu) * map.scale();
    for (auto [s, c] : mult) {
        points_.push_back(step * (static_cast<double>(s) - users * map.offset()));
        log_weight_.push_back(std::log(c));
        std::int64_t r = s % static_cast<std::int64_t>(q_);
        ffsp_.push_back(static_cast<std::uint32_t>(r < 0 ? r + q_ : r));
    }
}

Distribution SumsetDetector::posterior(double y) const
{
    std::vector<double> ll(points_.size());
    double best = -HUGE_VAL;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        double d = y - points_[i];
        ll[i] = log_weight_[i] - d * d / (2 * sigma2_);
        best = std::max(best, ll[i]);
    }
    Distribution post(q_, 0.0);
    for (std::size_t i = 0; i < points_.size(); ++i)
        post[ffsp_[i]] += std::exp(ll[i] - best);
    double s = 0;
    for (double v : post)
        s += v;
    for (double& v : post)
        v /= s;
    return post;
}

std::uint32_t SumsetDetector::hard(double y) const
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (std::abs(y - points_[i]) < std::abs(y - points_[best]))
            best = i;
    return ffsp_[best];
}

std::uint32_t round_detect(double y, const ModulationMap& map, unsigned users, double mu)
{
    const std::uint32_t q = map.q();
    std::int64_t lo = 0, hi = 0;
    for (std::uint32_t u = 0; u < q; ++u) {
        lo = std::min(lo, map.level(u));
        hi = std::max(hi, map.level(u));
    }
    const double step = std::sqrt(mu) * map.scale();
    auto s = static_cast<std::int64_t>(std::llround(y / step + users * map.offset()));
    s = std::clamp<std::int64_t>(s, lo * users, hi * users);
    std::int64_t r = s % static_cast<std::int64_t>(q);
    return static_cast<std::uint32_t>(r < 0 ? r + q : r);
}

double analytic_ser(const ModulationMap& map, double mu, double sigma2)
{
    if (!(sigma2 > 0))
        throw ValidationError("noise variance must be positive");
    const double q = map.q();
    const double d = std::sqrt(mu) * map.min_distance();
    return 2 * (q - 1) / q * qfunc(d / (2 * std::sqrt(sigma2)));
}

} // namespace ffmac
