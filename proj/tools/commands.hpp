/**************************************************************************
 * commands.hpp
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffmac::cli {

struct Common {
    std::string spec;  // input JSON (code spec, run config)
    std::string out;   // empty: stdout
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::optional<double> tolerance;
};

struct VerifyArgs {
    std::uint64_t budget = 1'000'000;
    bool certificate_only = false;
};

struct BlockArgs {
    std::string input;               // JSON file with an array of blocks
    std::vector<std::string> blocks; // inline blocks
    bool all = false;                // encode: every block of GF(p)^M
};

struct SweepArgs {
    std::string kind; // overrides the grid's "kind"
    std::string grid;
};

int cmd_construct(const Common& c);
int cmd_verify(const Common& c, const VerifyArgs& v);
int cmd_encode(const Common& c, const BlockArgs& b);
int cmd_decode(const Common& c, const BlockArgs& b);
int cmd_sweep(const Common& c, const SweepArgs& s);
int cmd_simulate(const Common& c);

} // namespace ffmac::cli
