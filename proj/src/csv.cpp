/**************************************************************************
 * csv.cpp
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

#include "ffma/csv.hpp"

#include <cstdio>
#include <sstream>

#include "ffma/errors.hpp"

namespace ffmac {

std::string csv_cell(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

void CsvTable::add(std::vector<std::string> row)
{
    if (row.size() != header_.size())
        throw DimensionError("CSV row has " + std::to_string(row.size()) + " cells, header has " +
                             std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << csv_cell(cells[i]);
        os << '\n';
    };
    line(header_);
    for (const auto& r : rows_)
        line(r);
}

std::string CsvTable::str() const
{
    std::ostringstream os;
    write(os);
    return os.str();
}

CsvTable fbl_table(const std::vector<FBLRow>& rows)
{
    CsvTable t({"scenario", "J", "spectral_efficiency", "min_ebn0_db", "m", "K", "eps"});
    for (const auto& r : rows)
        t.add({to_string(r.scenario), std::to_string(r.J), csv_cell(r.spectral_efficiency),
               csv_cell(r.min_ebn0_db), std::to_string(r.m), std::to_string(r.K),
               csv_cell(r.eps)});
    return t;
}

CsvTable pas_table(const std::vector<PASPoint>& points)
{
    CsvTable t({"p", "eta", "ebn0_db", "J", "mu_pas", "log2p", "verdict"});
    for (const auto& x : points)
        t.add({std::to_string(x.p), csv_cell(x.eta), csv_cell(x.ebn0_db), std::to_string(x.J),
               csv_cell(x.mu_pas), csv_cell(x.log2p), to_string(x.verdict)});
    return t;
}

CsvTable ber_table(const std::vector<BERRow>& rows)
{
    CsvTable t({"scheme", "p", "eta", "J", "ebn0_db", "ser", "ber", "frames", "errors", "seed"});
    for (const auto& r : rows)
        t.add({r.scheme, std::to_string(r.p), csv_cell(r.eta), std::to_string(r.J),
               csv_cell(r.ebn0_db), csv_cell(r.ser), csv_cell(r.ber), std::to_string(r.frames),
               std::to_string(r.errors), std::to_string(r.seed)});
    return t;
}

} // namespace ffmac
