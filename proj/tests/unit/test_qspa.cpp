/**************************************************************************
 * test_qspa.cpp
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

#include <doctest.h>

#include <cmath>
#include <random>

#include "ffma/eacodec.hpp"
#include "ffma/ldpc.hpp"
#include "ffma/qspa.hpp"
#include "oracles.hpp"

using namespace ffmac;

namespace {

// Priors from BPSK/q-ASK-like likelihoods around the true symbol.
std::vector<Distribution> noisy_priors(const std::vector<std::uint32_t>& x, std::uint32_t q,
                                       double sharp, std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Distribution> pri(x.size(), Distribution(q));
    for (std::size_t v = 0; v < x.size(); ++v) {
        double y = static_cast<double>(x[v]) + n(rng) / sharp;
        for (std::uint32_t a = 0; a < q; ++a)
            pri[v][a] = std::exp(-0.5 * sharp * sharp * (y - a) * (y - a));
    }
    return pri;
}

} // namespace

TEST_CASE("hard decision ties go to the smallest element")
{
    bool tied = false;
    CHECK(hard_decision({0.2, 0.5, 0.3}, &tied) == 1);
    CHECK_FALSE(tied);
    CHECK(hard_decision({0.4, 0.2, 0.4}, &tied) == 0);
    CHECK(tied);
}

TEST_CASE("noiseless priors decode to the codeword")
{
    auto code = ldpc_ensemble(30, 12, 3, 3, 1);
    QspaDecoder dec(code.H);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        FieldVector u(PrimeField(3), 12);
        for (std::size_t i = 0; i < 12; ++i)
            u.set(i, static_cast<std::int64_t>(rng() % 3));
        auto c = code.encode(u);
        std::vector<Distribution> pri(30, Distribution(3, 0.0));
        for (std::size_t v = 0; v < 30; ++v)
            pri[v][c[v]] = 1.0;
        auto r = dec.decode(pri);
        CHECK(r.converged);
        CHECK(r.iterations <= 1);
        CHECK(std::vector<std::uint32_t>(c.coords().begin(), c.coords().end()) == r.codeword);
    }
}

TEST_CASE("uniform priors do not count as converged")
{
    auto code = ldpc_ensemble(20, 8, 3, 3, 2);
    QspaDecoder dec(code.H);
    auto r = dec.decode(std::vector<Distribution>(20, Distribution(3, 1.0)));
    CHECK_FALSE(r.converged);
    CHECK(dec.syndrome_zero(r.codeword)); // all-zero word satisfies every check
}

TEST_CASE("QSPA agrees with exhaustive ML on a short code")
{
    PrimeField f3(3);
    std::mt19937_64 rng(17);
    FieldMatrix h(f3, {{1, 1, 0, 2, 0, 0, 1, 0, 0},
                       {0, 1, 1, 0, 1, 0, 0, 2, 0},
                       {1, 0, 1, 0, 0, 1, 0, 0, 1},
                       {0, 0, 0, 1, 1, 1, 0, 0, 0},
                       {2, 0, 0, 0, 0, 0, 1, 1, 1},
                       {0, 2, 0, 0, 0, 1, 0, 0, 1}});
    FieldMatrix g = derive_parity_check(h);
    QspaDecoder dec(h);
    // All codewords for the ML oracle.
    std::vector<std::vector<std::uint32_t>> words;
    for (const auto& u : oracle::all_blocks(g.rows(), 3)) {
        auto c = FieldVector(f3, u) * g;
        words.emplace_back(c.coords().begin(), c.coords().end());
    }
    int agree = 0, trials = 200;
    for (int t = 0; t < trials; ++t) {
        const auto& x = words[rng() % words.size()];
        auto pri = noisy_priors(x, 3, 2.5, rng);
        double best = -1;
        std::vector<std::uint32_t> ml;
        for (const auto& w : words) {
            double l = 1;
            for (std::size_t v = 0; v < w.size(); ++v)
                l *= pri[v][w[v]];
            if (l > best) {
                best = l;
                ml = w;
            }
        }
        agree += dec.decode(pri).codeword == ml;
    }
    CHECK(agree >= trials * 95 / 100);
}

TEST_CASE("damping keeps decoding correct on clean inputs")
{
    auto code = ldpc_ensemble(24, 8, 2, 3, 4);
    QspaDecoder dec(code.H);
    std::vector<Distribution> pri(24, Distribution{0.9, 0.1});
    QspaOptions opt;
    opt.damping = 0.3;
    auto r = dec.decode(pri, opt);
    CHECK(r.converged);
    CHECK(r.codeword == std::vector<std::uint32_t>(24, 0));
}
