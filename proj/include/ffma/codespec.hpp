/**************************************************************************
 * codespec.hpp
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

// JSON code specifications and reports.
//
// Code spec:
//   { "family": "orthogonal" | "dcwea" | "ai-dcwea" | "bd-dcwea" | "nocwea" | "pary-bd",
//     "p": 3, "field_char": 3, "m": 4,
//     "matrices": { "1": [[...]], "2": [[...]] }    -- raw full-ς matrices (ς = 0 defaults to zero)
//     | "basis": [[...]], "n_d": 2, "g1_scale": 1     -- basis decomposition
//     | "kappa": 2                                    -- ai-dcwea from the ternary orthogonal matrix
//     "f2c": { "0": "0", "1": "+1", "4": "-1", "2": "+1i" } }
//
// Errors are reported as SpecError carrying a JSON pointer.

#include <json.hpp>

#include "ffma/crrca.hpp"
#include "ffma/eacodec.hpp"
#include "ffma/fbl.hpp"
#include "ffma/pipeline.hpp"

namespace ffmac {

using json = nlohmann::json;

EACode code_from_json(const json& spec);
/// Canonical serialization; code_from_json(code_to_json(c)) rebuilds c.
json code_to_json(const EACode& code);

json uspm_to_json(const UspmReport& r);

/// Digits from "0121" or [0, 1, 2, 1].
std::vector<std::uint32_t> digits_from_json(const json& j, const std::string& pointer);

PipelineConfig pipeline_from_json(const json& spec);

/// Reads and parses a JSON file; SpecError on I/O or syntax problems.
json load_json(const std::string& path);

} // namespace ffmac
