/**************************************************************************
 * csv.hpp
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

// CSV tables for sweep and simulation output. Numbers are written with
// %.12g so reruns are byte-identical.

#include <ostream>
#include <string>
#include <vector>

#include "ffma/crrca.hpp"
#include "ffma/fbl.hpp"
#include "ffma/pipeline.hpp"

namespace ffmac {

std::string csv_cell(double v);
std::string csv_cell(const std::string& s);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
    /// Throws DimensionError when the row width differs from the header.
    void add(std::vector<std::string> row);
    std::size_t size() const { return rows_.size(); }
    void write(std::ostream& os) const;
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

CsvTable fbl_table(const std::vector<FBLRow>& rows);
CsvTable pas_table(const std::vector<PASPoint>& points);
CsvTable ber_table(const std::vector<BERRow>& rows);

} // namespace ffmac
