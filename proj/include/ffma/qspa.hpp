/**************************************************************************
 * qspa.hpp
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

// q-ary sum-product decoding over GF(q) (probability domain, flooding schedule).

#include <cstdint>
#include <vector>

#include "ffma/ffcore.hpp"

namespace ffmac {

using Distribution = std::vector<double>;

struct QspaOptions {
    std::size_t max_iters = 50;
    double damping = 0.0; // weight of the previous message, in [0, 1)
};

struct QspaResult {
    std::vector<std::uint32_t> codeword;
    bool converged = false;
    std::size_t iterations = 0;
    std::vector<Distribution> posteriors;
};

class QspaDecoder {
public:
    explicit QspaDecoder(const FieldMatrix& h);

    std::size_t length() const { return n_; }
    std::uint32_t q() const { return q_; }

    /// priors[v][a] = P(x_v = a); rows need not be normalized.
    /// Converged means every check is satisfied and no hard decision is a tie.
    QspaResult decode(const std::vector<Distribution>& priors, const QspaOptions& opt = {}) const;

    bool syndrome_zero(const std::vector<std::uint32_t>& x) const;

private:
    struct Edge {
        std::size_t check;
        std::size_t var;
        std::uint32_t coef;
    };

    PrimeField field_;
    std::uint32_t q_;
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> check_edges_;
    std::vector<std::vector<std::size_t>> var_edges_;
};

/// Hard decision with ties broken toward the smallest element; `tied` reports
/// whether the maximum was shared (relative tolerance 1e-9).
std::uint32_t hard_decision(const Distribution& d, bool* tied = nullptr);

} // namespace ffmac
