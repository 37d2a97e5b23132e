/**************************************************************************
 * ldpc.hpp
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

// Random regular-column-weight LDPC ensembles over GF(q).

#include <cstdint>
#include <vector>

#include "ffma/ffcore.hpp"

namespace ffmac {

struct LdpcCode {
    FieldMatrix H;                    // (n−k)×n, full row rank
    FieldMatrix G;                    // k×n, G·H^T = 0
    std::vector<std::size_t> info;    // columns where u appears verbatim in u·G
    std::vector<std::size_t> parity;  // remaining columns
    std::size_t attempts = 1;         // draws until H had full rank
    std::size_t four_cycles = 0;      // 4-cycles left after the reduction pass

    std::size_t n() const { return H.cols(); }
    std::size_t k() const { return G.rows(); }
    FieldVector encode(const FieldVector& u) const { return u * G; }
};

/// Column weight `wc`, rows filled as evenly as possible; placement avoids
/// 4-cycles greedily. Redraws (up to `max_attempts`) until H has rank n−k.
LdpcCode ldpc_ensemble(std::size_t n, std::size_t k, std::uint32_t q, unsigned wc,
                       std::uint64_t seed, std::size_t max_attempts = 200);

/// Number of 4-cycles (pairs of rows sharing two or more columns, counted per column pair).
std::size_t count_four_cycles(const FieldMatrix& h);

} // namespace ffmac
