/**************************************************************************
 * pipeline.cpp
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

#include "ffma/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ffma/crrca.hpp"
#include "ffma/eacodec.hpp"
#include "ffma/modulation.hpp"
#include "ffma/parallel.hpp"

namespace ffmac {

std::string to_string(Scheme s)
{
    switch (s) {
    case Scheme::Uncoded: return "uncoded";
    case Scheme::Ldpc: return "ldpc";
    case Scheme::EATable: return "ea-table";
    }
    return "unknown";
}

Scheme scheme_from_string(const std::string& s)
{
    for (auto x : {Scheme::Uncoded, Scheme::Ldpc, Scheme::EATable})
        if (to_string(x) == s)
            return x;
    throw ValidationError("unknown scheme '" + s + "'");
}

std::string to_string(Allocation a)
{
    switch (a) {
    case Allocation::EPA: return "epa";
    case Allocation::CA: return "ca";
    case Allocation::Manual: return "manual";
    }
    return "unknown";
}

Allocation allocation_from_string(const std::string& s)
{
    for (auto x : {Allocation::EPA, Allocation::CA, Allocation::Manual})
        if (to_string(x) == s)
            return x;
    throw ValidationError("unknown allocation '" + s + "'");
}

std::size_t bits_per_digit(std::uint32_t p)
{
    std::size_t b = 0;
    while ((std::uint64_t{1} << b) < p)
        ++b;
    return b;
}

double BERRow::ser_sigma() const
{
    if (symbols == 0)
        return 0;
    return std::sqrt(ser * (1 - ser) / static_cast<double>(symbols));
}

struct Pipeline::PointContext {
    double mu1 = 1, mu2 = 1, sigma2 = 1;
    double noise_sd = 0;
    ModulationMap map;
    std::optional<SumsetDetector> info_det;   // single user
    std::optional<SumsetDetector> shared_det; // J users superimposed
};

Pipeline::Pipeline(PipelineConfig cfg) : cfg_(std::move(cfg))
{
    if (!is_prime(cfg_.p))
        throw ValidationError("p must be prime");
    if (cfg_.J == 0)
        throw ValidationError("J must be positive");
    if (cfg_.max_frames == 0)
        throw ValidationError("max_frames must be positive");
    switch (cfg_.scheme) {
    case Scheme::Uncoded:
        if (cfg_.J != 1)
            throw ValidationError("uncoded scheme is single-user");
        if (cfg_.K == 0)
            throw ValidationError("K must be positive");
        m_ = cfg_.K;
        info_digits_ = cfg_.K;
        break;
    case Scheme::Ldpc: {
        const std::size_t JK = cfg_.J * cfg_.K;
        if (cfg_.K == 0 || cfg_.n <= JK)
            throw ValidationError("ldpc scheme needs K > 0 and n > J·K");
        ldpc_ = ldpc_ensemble(cfg_.n, JK, cfg_.p, cfg_.column_weight, cfg_.code_seed);
        qspa_.emplace(ldpc_->H);
        m_ = cfg_.n;
        info_digits_ = JK;
        break;
    }
    case Scheme::EATable: {
        if (!cfg_.code)
            throw ValidationError("ea-table scheme needs a code");
        const EACode& c = *cfg_.code;
        cfg_.J = static_cast<unsigned>(c.users);
        cfg_.K = 1;
        if (block_count(c.users, c.p) > 10'000)
            throw BudgetError("ea-table simulation enumerates at most 10^4 blocks");
        for (std::uint64_t i = 0; i < block_count(c.users, c.p); ++i)
            ea_patterns_.push_back(encode_ffsp(c, block_from_index(i, c.users, c.p)));
        m_ = c.m;
        info_digits_ = c.users;
        break;
    }
    }
}

double Pipeline::loading_factor() const
{
    return static_cast<double>(info_digits_) / static_cast<double>(m_);
}

double Pipeline::frame_energy(double mu1, double mu2) const
{
    switch (cfg_.scheme) {
    case Scheme::Uncoded:
        return static_cast<double>(m_) * mu1;
    case Scheme::Ldpc: {
        const double Q = static_cast<double>(m_ - info_digits_);
        return cfg_.J * (static_cast<double>(cfg_.K) * mu1 + Q * mu2);
    }
    case Scheme::EATable: {
        const EACode& c = *cfg_.code;
        ModulationMap map(c.field.p());
        double e = 0;
        for (std::uint32_t s = 0; s < c.p; ++s)
            for (std::size_t j = 0; j < c.users; ++j)
                for (auto v : c.gen[s].row_span(j))
                    e += map.amplitude(v) * map.amplitude(v);
        return mu1 * e / c.p;
    }
    }
    return 0;
}

std::pair<double, double> Pipeline::pav(double ebn0_db) const
{
    if (cfg_.allocation == Allocation::Manual)
        return {cfg_.mu1, cfg_.mu2};
    if (cfg_.scheme != Scheme::Ldpc)
        return {1.0, 1.0};
    const std::size_t K = cfg_.K, Q = m_ - info_digits_;
    const double J = cfg_.J;
    if (cfg_.allocation == Allocation::EPA) {
        const double mu2 = static_cast<double>(m_) / (static_cast<double>(K) * J + Q);
        return {J * mu2, mu2};
    }
    // CA: the allocation depends on γ_a = 1/σ² (unit average symbol energy),
    // and σ² depends only on the budget J·m, not on how it is split.
    const double eb = J * static_cast<double>(m_) /
                      (static_cast<double>(info_digits_) * std::log2(static_cast<double>(cfg_.p)));
    const double sigma2 = eb / (2 * std::pow(10.0, ebn0_db / 10));
    auto ca = ca_allocate_mu(K, Q, m_, 1.0 / sigma2, cfg_.p, cfg_.J);
    return {ca.pav.mu1, ca.pav.mu2};
}

Pipeline::FrameResult Pipeline::frame(std::uint64_t seed, const PointContext& ctx) const
{
    Rng rng(seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, cfg_.p - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto noise = [&] { return ctx.noise_sd * gauss(rng); };
    const auto& map = ctx.map;

    FrameResult fr;
    auto count = [&](std::uint32_t sent, std::uint32_t got) {
        ++fr.symbols;
        if (sent != got) {
            ++fr.errors;
            fr.bit_errors += static_cast<std::size_t>(std::popcount(sent ^ got));
        }
    };

    switch (cfg_.scheme) {
    case Scheme::Uncoded: {
        const double s = std::sqrt(ctx.mu1);
        for (std::size_t i = 0; i < cfg_.K; ++i) {
            std::uint32_t u = digit(rng);
            double y = s * map.amplitude(u) + noise();
            count(u, ctx.info_det->hard(y));
        }
        break;
    }
    case Scheme::Ldpc: {
        const LdpcCode& code = *ldpc_;
        const std::size_t JK = info_digits_, K = cfg_.K;
        std::vector<std::uint32_t> u(JK);
        for (auto& x : u)
            x = digit(rng);
        std::vector<Distribution> priors(code.n());
        // Information positions: user j owns info[j·K .. (j+1)·K).
        const double s1 = std::sqrt(ctx.mu1), s2 = std::sqrt(ctx.mu2);
        for (std::size_t i = 0; i < JK; ++i) {
            double y = s1 * map.amplitude(u[i]) + noise();
            priors[code.info[i]] = ctx.info_det->posterior(y);
        }
        // Parity positions: per-user contributions superimpose on the channel.
        std::vector<double> rx(code.n(), 0.0);
        for (unsigned j = 0; j < cfg_.J; ++j) {
            std::vector<std::uint64_t> acc(code.parity.size(), 0);
            for (std::size_t i = 0; i < K; ++i) {
                const std::uint32_t d = u[j * K + i];
                if (!d)
                    continue;
                auto row = code.G.row_span(j * K + i);
                for (std::size_t t = 0; t < code.parity.size(); ++t)
                    acc[t] += static_cast<std::uint64_t>(d) * row[code.parity[t]];
            }
            for (std::size_t t = 0; t < code.parity.size(); ++t)
                rx[code.parity[t]] += s2 * map.amplitude(static_cast<std::uint32_t>(acc[t] % cfg_.p));
        }
        for (auto pos : code.parity) {
            double y = rx[pos] + noise();
            if (ctx.shared_det) {
                priors[pos] = ctx.shared_det->posterior(y);
            } else {
                Distribution d(cfg_.p, 1e-2 / (cfg_.p - 1));
                d[round_detect(y, map, cfg_.J, ctx.mu2)] = 1 - 1e-2;
                priors[pos] = std::move(d);
            }
        }
        QspaOptions opt;
        opt.max_iters = cfg_.max_iters;
        auto res = qspa_->decode(priors, opt);
        for (std::size_t i = 0; i < JK; ++i)
            count(u[i], res.codeword[code.info[i]]);
        break;
    }
    case Scheme::EATable: {
        const EACode& c = *cfg_.code;
        const std::uint64_t blocks = ea_patterns_.size();
        std::uniform_int_distribution<std::uint64_t> pick(0, blocks - 1);
        const std::uint64_t idx = pick(rng);
        UserBlock d = block_from_index(idx, c.users, c.p);
        const double s = std::sqrt(ctx.mu1);
        std::vector<Distribution> post(c.m);
        for (std::size_t col = 0; col < c.m; ++col) {
            double y = 0;
            for (std::size_t j = 0; j < c.users; ++j)
                y += s * map.amplitude(c.gen[d[j]].at(j, col));
            y += noise();
            post[col] = ctx.shared_det ? ctx.shared_det->posterior(y) : Distribution{};
            if (!ctx.shared_det) {
                post[col].assign(c.field.p(), 1e-2 / (c.field.p() - 1));
                post[col][round_detect(y, map, cfg_.J, ctx.mu1)] = 1 - 1e-2;
            }
        }
        // Soft table decoding: maximize Σ log P(w_col) over all sum-patterns.
        std::uint64_t best = 0;
        double best_score = -HUGE_VAL;
        for (std::uint64_t b = 0; b < blocks; ++b) {
            double score = 0;
            const auto& w = ea_patterns_[b];
            for (std::size_t col = 0; col < c.m; ++col)
                score += std::log(std::max(post[col][w[col]], 1e-300));
            if (score > best_score) {
                best_score = score;
                best = b;
            }
        }
        UserBlock dh = block_from_index(best, c.users, c.p);
        for (std::size_t j = 0; j < c.users; ++j)
            count(d[j], dh[j]);
        break;
    }
    }
    return fr;
}

BERRow Pipeline::run_point(std::size_t point_index, double ebn0_db) const
{
    auto [mu1, mu2] = pav(ebn0_db);
    const double E = frame_energy(mu1, mu2);
    const double eb = E / (static_cast<double>(info_digits_) * std::log2(static_cast<double>(cfg_.p)));
    const double ebn0 = std::pow(10.0, ebn0_db / 10);
    const double sigma2 = cfg_.noiseless ? 1e-12 : eb / (2 * ebn0);

    const std::uint32_t q = cfg_.scheme == Scheme::EATable ? cfg_.code->field.p() : cfg_.p;
    PointContext ctx{mu1, mu2, sigma2, cfg_.noiseless ? 0.0 : std::sqrt(sigma2), ModulationMap(q),
                     std::nullopt, std::nullopt};
    ctx.info_det.emplace(ctx.map, 1, mu1, sigma2, cfg_.detect_budget);
    if (cfg_.scheme != Scheme::Uncoded) {
        const double shared_mu = cfg_.scheme == Scheme::Ldpc ? mu2 : mu1;
        if (std::pow(static_cast<double>(q), cfg_.J) <= cfg_.detect_budget)
            ctx.shared_det.emplace(ctx.map, cfg_.J, shared_mu, sigma2, cfg_.detect_budget);
    }

    BERRow row;
    row.scheme = to_string(cfg_.scheme);
    row.p = cfg_.p;
    row.eta = loading_factor();
    row.J = cfg_.J;
    row.ebn0_db = ebn0_db;
    row.seed = cfg_.seed;
    row.mu1 = mu1;
    row.mu2 = mu2;

    // Frames run in fixed-size batches; accumulation walks frames in index
    // order and stops at the exact frame that reaches the error target, so the
    // result does not depend on the thread count.
    const unsigned threads = cfg_.threads ? cfg_.threads : default_threads();
    const std::size_t batch = 32 * static_cast<std::size_t>(threads);
    std::vector<FrameResult> results;
    bool done = false;
    for (std::size_t start = 0; start < cfg_.max_frames && !done; start += batch) {
        const std::size_t count = std::min(batch, cfg_.max_frames - start);
        results.assign(count, {});
        parallel_for(count, threads, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i)
                results[i] = frame(substream_seed(cfg_.seed, point_index, start + i), ctx);
        });
        for (const auto& fr : results) {
            ++row.frames;
            row.symbols += fr.symbols;
            row.errors += fr.errors;
            row.bit_errors += fr.bit_errors;
            row.frame_errors += fr.errors > 0;
            if (row.frame_errors >= cfg_.max_frame_errors) {
                done = true;
                break;
            }
        }
    }
    row.ser = static_cast<double>(row.errors) / static_cast<double>(row.symbols);
    row.ber = static_cast<double>(row.bit_errors) /
              static_cast<double>(row.symbols * bits_per_digit(cfg_.p));
    return row;
}

std::vector<BERRow> Pipeline::run() const
{
    if (cfg_.ebn0_db.empty())
        throw ValidationError("empty Eb/N0 grid");
    std::vector<BERRow> rows;
    for (std::size_t i = 0; i < cfg_.ebn0_db.size(); ++i)
        rows.push_back(run_point(i, cfg_.ebn0_db[i]));
    return rows;
}

std::vector<BERRow> Pipeline::scan_to_target(double start_db, double step_db, double target,
                                             std::size_t max_points) const
{
    std::vector<BERRow> rows;
    for (std::size_t i = 0; i < max_points; ++i) {
        rows.push_back(run_point(i, start_db + static_cast<double>(i) * step_db));
        if (rows.back().ser < target)
            break;
    }
    return rows;
}

std::optional<double> ebn0_at(const std::vector<BERRow>& rows, double target)
{
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& a = rows[i - 1];
        const auto& b = rows[i];
        if (a.ser >= target && b.ser < target) {
            if (b.ser <= 0)
                return b.ebn0_db; // no errors observed: conservative end of the bracket
            double la = std::log10(a.ser), lb = std::log10(b.ser), lt = std::log10(target);
            return a.ebn0_db + (lt - la) / (lb - la) * (b.ebn0_db - a.ebn0_db);
        }
    }
    return std::nullopt;
}

} // namespace ffmac
