/**************************************************************************
 * ldpc.cpp
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

#include "ffma/ldpc.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ffma/eacodec.hpp"
#include "ffma/parallel.hpp"

namespace ffmac {

std::size_t count_four_cycles(const FieldMatrix& h)
{
    std::vector<std::vector<std::size_t>> rows_of(h.cols());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h.at(r, c))
                rows_of[c].push_back(r);
    std::size_t cycles = 0;
    for (std::size_t a = 0; a < h.cols(); ++a)
        for (std::size_t b = a + 1; b < h.cols(); ++b) {
            std::size_t shared = 0;
            for (auto r : rows_of[a])
                shared += std::binary_search(rows_of[b].begin(), rows_of[b].end(), r);
            if (shared > 1)
                cycles += shared * (shared - 1) / 2;
        }
    return cycles;
}

namespace {

FieldMatrix draw(std::size_t n, std::size_t r, std::uint32_t q, unsigned wc, Rng& rng)
{
    PrimeField f(q);
    FieldMatrix h(f, r, n);
    std::vector<std::size_t> degree(r, 0);
    // neighbours[row] = rows already sharing a column with it
    std::vector<std::set<std::size_t>> neighbours(r);
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::uniform_int_distribution<std::uint32_t> coef(1, q - 1);

    for (std::size_t c = 0; c < n; ++c) {
        std::shuffle(order.begin(), order.end(), rng);
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return degree[a] < degree[b]; });
        std::vector<std::size_t> chosen;
        // Two passes: first refuse rows that would close a 4-cycle, then relax.
        for (int pass = 0; pass < 2 && chosen.size() < wc; ++pass)
            for (auto row : order) {
                if (chosen.size() == wc)
                    break;
                if (std::find(chosen.begin(), chosen.end(), row) != chosen.end())
                    continue;
                bool clash = false;
                if (pass == 0)
                    for (auto other : chosen)
                        clash |= neighbours[row].count(other) > 0;
                if (!clash)
                    chosen.push_back(row);
            }
        for (auto a : chosen) {
            h.set(a, c, q == 2 ? 1 : coef(rng));
            ++degree[a];
            for (auto b : chosen)
                if (a != b)
                    neighbours[a].insert(b);
        }
    }
    return h;
}

} // namespace

LdpcCode ldpc_ensemble(std::size_t n, std::size_t k, std::uint32_t q, unsigned wc,
                       std::uint64_t seed, std::size_t max_attempts)
{
    if (k >= n)
        throw ValidationError("LDPC ensemble needs n > k");
    if (wc < 2 || wc > n - k)
        throw ValidationError("column weight must lie in [2, n−k]");
    const std::size_t r = n - k;
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        Rng rng(substream_seed(seed, attempt));
        FieldMatrix h = draw(n, r, q, wc, rng);
        if (rank(h) != r)
            continue;
        LdpcCode code{h, derive_parity_check(h), free_columns(h), {}, attempt, 0};
        std::vector<bool> is_info(n, false);
        for (auto c : code.info)
            is_info[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_info[c])
                code.parity.push_back(c);
        code.four_cycles = count_four_cycles(h);
        return code;
    }
    throw ConstructionError("no full-rank parity-check matrix after " +
                            std::to_string(max_attempts) + " draws");
}

} // namespace ffmac
