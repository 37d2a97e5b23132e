/**************************************************************************
 * pipeline.hpp
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

// Monte Carlo transmission over the AWGN / Gaussian multiple-access channel.
//
// Schemes
//   uncoded  : J = 1, K independent q-ASK symbols per frame.
//   ldpc     : PA-FF-TDMA. J users, K digits each. A systematic LDPC code of
//              length n = J·K + Q carries every user's digits on its own
//              information positions (orthogonal) while the parity positions
//              are shared: each user sends its own parity contribution and the
//              channel superimposes them into the finite-field sum. The
//              receiver detects sum-pattern posteriors and runs QSPA on H.
//   ea-table : one EA block per frame, all DoFs superimposed, soft table decoding.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffma/eaconstruct.hpp"
#include "ffma/ldpc.hpp"
#include "ffma/qspa.hpp"

namespace ffmac {

enum class Scheme { Uncoded, Ldpc, EATable };
std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

enum class Allocation { EPA, CA, Manual };
std::string to_string(Allocation a);
Allocation allocation_from_string(const std::string& s);

struct PipelineConfig {
    Scheme scheme = Scheme::Uncoded;
    std::uint32_t p = 2;
    unsigned J = 1;
    std::size_t K = 100;
    std::size_t n = 0;           // ldpc: code length (J·K + Q)
    unsigned column_weight = 3;  // ldpc
    std::uint64_t code_seed = 1; // ldpc ensemble draw
    Allocation allocation = Allocation::EPA;
    double mu1 = 1, mu2 = 1;     // Manual allocation
    std::vector<double> ebn0_db;
    std::uint64_t seed = 1;
    std::size_t max_frames = 1'000'000;
    std::size_t max_frame_errors = 200;
    std::size_t max_iters = 50;
    unsigned threads = 1;
    bool noiseless = false;
    double detect_budget = 1e5;
    std::optional<EACode> code; // ea-table
};

struct BERRow {
    std::string scheme;
    std::uint32_t p = 2;
    double eta = 0;
    unsigned J = 1;
    double ebn0_db = 0;
    double ser = 0;
    double ber = 0;
    std::size_t frames = 0;
    std::size_t errors = 0; // symbol (digit) errors
    std::size_t bit_errors = 0;
    std::size_t frame_errors = 0;
    std::size_t symbols = 0;
    std::uint64_t seed = 0;
    double mu1 = 0, mu2 = 0;
    /// One-sigma Monte Carlo uncertainty of ser.
    double ser_sigma() const;
};

class Pipeline {
public:
    explicit Pipeline(PipelineConfig cfg);

    const PipelineConfig& config() const { return cfg_; }
    const std::optional<LdpcCode>& ldpc() const { return ldpc_; }
    /// Information DoFs over total DoFs.
    double loading_factor() const;
    /// Section power factors used at this Eb/N0.
    std::pair<double, double> pav(double ebn0_db) const;
    /// Expected transmit energy per frame summed over users.
    double frame_energy(double mu1, double mu2) const;

    BERRow run_point(std::size_t point_index, double ebn0_db) const;
    std::vector<BERRow> run() const;
    /// Steps Eb/N0 from `start_db` by `step_db` until ser < target (or max_points).
    std::vector<BERRow> scan_to_target(double start_db, double step_db, double target,
                                       std::size_t max_points) const;

private:
    struct FrameResult {
        std::size_t symbols = 0, errors = 0, bit_errors = 0;
    };
    struct PointContext;
    FrameResult frame(std::uint64_t seed, const PointContext& ctx) const;

    PipelineConfig cfg_;
    std::optional<LdpcCode> ldpc_;
    std::optional<QspaDecoder> qspa_;
    std::size_t m_ = 0;
    std::size_t info_digits_ = 0; // per frame, all users
    std::vector<FieldVector> ea_patterns_; // ea-table: FFSP of every block index
};

/// Eb/N0 where the curve crosses `target` (log-linear interpolation of ser);
/// nullopt when the curve never brackets the target.
std::optional<double> ebn0_at(const std::vector<BERRow>& rows, double target);

std::size_t bits_per_digit(std::uint32_t p);

} // namespace ffmac
