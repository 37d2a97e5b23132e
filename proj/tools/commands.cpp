/**************************************************************************
 * commands.cpp
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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ffma/codespec.hpp"
#include "ffma/csv.hpp"
#include "ffma/errors.hpp"
#include "ffma/ratecap.hpp"

namespace ffmac::cli {

namespace {

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
    if (!f)
        throw ValidationError("cannot write '" + c.out + "'");
    f << text;
}

void emit_json(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

json require_spec(const Common& c)
{
    if (c.spec.empty())
        throw ValidationError("--spec is required");
    return load_json(c.spec);
}

double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

// [a, b, ...] or {"start", "stop", "step"}.
std::vector<double> range(const json& g, const std::string& key)
{
    const std::string ptr = "/" + key;
    if (!g.contains(key))
        throw SpecError("missing grid axis '" + key + "'", ptr);
    const json& j = g[key];
    std::vector<double> v;
    if (j.is_number()) {
        v.push_back(j.get<double>());
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number())
                throw SpecError("expected a number", ptr + "/" + std::to_string(i));
            v.push_back(j[i].get<double>());
        }
    } else if (j.is_object() && j.contains("start") && j.contains("stop") && j.contains("step")) {
        double a = j["start"].get<double>(), b = j["stop"].get<double>(),
               s = j["step"].get<double>();
        if (!(s > 0))
            throw SpecError("step must be positive", ptr + "/step");
        for (std::size_t i = 0; a + static_cast<double>(i) * s <= b + 1e-9 * s; ++i)
            v.push_back(a + static_cast<double>(i) * s);
    } else {
        throw SpecError("expected a number, an array or {start, stop, step}", ptr);
    }
    if (v.empty())
        throw SpecError("empty grid axis '" + key + "'", ptr);
    return v;
}

std::uint64_t uint_of(const json& g, const std::string& key, std::optional<std::uint64_t> def = {})
{
    if (!g.contains(key)) {
        if (def)
            return *def;
        throw SpecError("missing key '" + key + "'", "/" + key);
    }
    if (!g[key].is_number_integer() || g[key].get<std::int64_t>() < 0)
        throw SpecError("expected a non-negative integer", "/" + key);
    return g[key].get<std::uint64_t>();
}

template <class T>
std::vector<T> uints(const json& g, const std::string& key, std::optional<T> def = {})
{
    if (!g.contains(key) && def)
        return {*def};
    std::vector<T> out;
    for (double x : range(g, key)) {
        if (x < 0 || x != std::floor(x))
            throw SpecError("expected non-negative integers", "/" + key);
        out.push_back(static_cast<T>(x));
    }
    return out;
}

FieldVector pattern_from(const json& j, const EACode& code, const std::string& ptr)
{
    auto d = digits_from_json(j, ptr);
    if (d.size() != code.m)
        throw SpecError("sum-pattern has " + std::to_string(d.size()) + " entries, code has m = " +
                            std::to_string(code.m),
                        ptr);
    for (auto v : d)
        if (v >= code.field.p())
            throw SpecError("entry " + std::to_string(v) + " is not in GF(" +
                                std::to_string(code.field.p()) + ")",
                            ptr);
    return {code.field, std::move(d)};
}

std::string block_string(const UserBlock& d, std::uint32_t p)
{
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (p > 10 && i)
            s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

// Items from --input (array, or {"blocks": [...]}) followed by inline ones.
std::vector<std::pair<json, std::string>> gather(const BlockArgs& b, const char* list_key)
{
    std::vector<std::pair<json, std::string>> items;
    if (!b.input.empty()) {
        json in = load_json(b.input);
        std::string base;
        if (in.is_object() && in.contains(list_key)) {
            in = in[list_key];
            base = std::string("/") + list_key;
        }
        if (!in.is_array())
            throw SpecError("expected an array of blocks", base.empty() ? "/" : base);
        for (std::size_t i = 0; i < in.size(); ++i)
            items.emplace_back(in[i], base + "/" + std::to_string(i));
    }
    for (std::size_t i = 0; i < b.blocks.size(); ++i)
        items.emplace_back(json(b.blocks[i]), "/argv/" + std::to_string(i));
    return items;
}

} // namespace

int cmd_construct(const Common& c)
{
    EACode code = code_from_json(require_spec(c));
    emit_json(c, code_to_json(code));
    return 0;
}

int cmd_verify(const Common& c, const VerifyArgs& v)
{
    EACode code = code_from_json(require_spec(c));
    VerifyOptions opt;
    opt.budget = v.budget;
    opt.certificate_only = v.certificate_only;
    opt.threads = c.threads;
    json report;
    report["family"] = to_string(code.family);
    UspmReport ff = verify_uspm_ff(code, opt);
    report["finite_field"] = uspm_to_json(ff);
    bool ok = ff.ok;
    if (code.f2c) {
        UspmReport cf = verify_uspm_cf(code, opt);
        report["complex_field"] = uspm_to_json(cf);
        // NO-CWEA codes are defined by their complex-field uniqueness.
        ok = code.family == Family::NOCWEA ? cf.ok : ok && cf.ok;
    }
    report["ok"] = ok;
    emit_json(c, report);
    return ok ? 0 : 3;
}

int cmd_encode(const Common& c, const BlockArgs& b)
{
    EACode code = code_from_json(require_spec(c));
    std::vector<UserBlock> blocks;
    if (b.all) {
        const std::uint64_t n = block_count(code.users, code.p);
        if (n > 1'000'000)
            throw BudgetError("--all would enumerate " + std::to_string(n) + " blocks");
        for (std::uint64_t i = 0; i < n; ++i)
            blocks.push_back(block_from_index(i, code.users, code.p));
    }
    for (const auto& [j, ptr] : gather(b, "blocks")) {
        auto d = digits_from_json(j, ptr);
        if (d.size() != code.users)
            throw SpecError("block has " + std::to_string(d.size()) + " digits, code has " +
                                std::to_string(code.users) + " users",
                            ptr);
        for (auto x : d)
            if (x >= code.p)
                throw SpecError("digit " + std::to_string(x) + " out of range", ptr);
        blocks.push_back(std::move(d));
    }
    if (blocks.empty())
        throw ValidationError("no blocks given (use --input, --block or --all)");
    json out = json::array();
    for (const auto& d : blocks) {
        json row;
        row["input"] = block_string(d, code.p);
        row["sum_pattern"] = encode_ffsp(code, d).to_string();
        if (code.parallel)
            row["parallel_block"] = block_string(expand_block(code, d), 3);
        if (code.f2c) {
            json z = json::array();
            for (const auto& x : encode_cfsp(code, d))
                z.push_back(x.to_string());
            row["complex"] = std::move(z);
        }
        out.push_back(std::move(row));
    }
    emit_json(c, out);
    return 0;
}

int cmd_decode(const Common& c, const BlockArgs& b)
{
    EACode code = code_from_json(require_spec(c));
    auto items = gather(b, "patterns");
    if (items.empty())
        throw ValidationError("no sum-patterns given (use --input or --block)");
    Rng rng(c.seed.value_or(1));
    const bool linear = code.parallel && rank(*code.parallel) == code.parallel->rows();
    std::optional<DecodeTable> table;
    if (!linear)
        table.emplace(code);
    json out = json::array();
    bool all_ok = true;
    for (const auto& [j, ptr] : items) {
        FieldVector w = pattern_from(j, code, ptr);
        json row;
        row["input"] = w.to_string();
        row["method"] = linear ? "parallel" : "table";
        row["iterations"] = 1;
        json flags = json::array();
        std::optional<UserBlock> d;
        if (linear) {
            try {
                d = parallel_decode(code, w, nullptr);
            } catch (const DecodeError&) {
                // (1,1) pair: resolve at random as the inverse transform prescribes.
                d = parallel_decode(code, w, &rng);
                flags.push_back("illegal-pair-resolved");
            }
        } else {
            d = table->find(w);
        }
        if (d) {
            row["decoded"] = block_string(*d, code.p);
        } else {
            row["decoded"] = nullptr;
            flags.push_back("no-preimage");
            all_ok = false;
        }
        row["flags"] = std::move(flags);
        out.push_back(std::move(row));
    }
    emit_json(c, out);
    return all_ok ? 0 : 3;
}

int cmd_sweep(const Common& c, const SweepArgs& s)
{
    if (s.grid.empty())
        throw ValidationError("--grid is required");
    json g = load_json(s.grid);
    if (!g.is_object())
        throw SpecError("expected an object", "/");
    std::string kind = s.kind;
    if (kind.empty()) {
        if (!g.contains("kind") || !g["kind"].is_string())
            throw SpecError("sweep kind missing (use --kind or a \"kind\" key)", "/kind");
        kind = g["kind"].get<std::string>();
    }

    if (kind == "fbl") {
        auto users = uints<unsigned>(g, "J");
        double eps = g.value("eps", 0.05);
        auto rows = fbl_sweep(uint_of(g, "m"), uint_of(g, "K"), eps, users, c.threads);
        emit(c, fbl_table(rows).str());
        return 0;
    }
    if (kind == "pas") {
        PASConvention conv;
        conv.snr_factor = g.value("snr_factor", conv.snr_factor);
        std::vector<PASPoint> pts;
        for (auto p : uints<std::uint32_t>(g, "p"))
            for (double eta : range(g, "eta"))
                for (auto J : uints<unsigned>(g, "J", 1u))
                    for (double e : range(g, "ebn0_db"))
                        pts.push_back(J == 1 ? pas_pary_su(p, eta, e, conv)
                                             : pas_pary_mu(p, eta, e, J, conv));
        emit(c, pas_table(pts).str());
        return 0;
    }
    if (kind == "ca") {
        CsvTable t({"K", "Q", "m", "J", "p", "ebn0_db", "gamma_db", "mu1", "mu2", "mu_pas",
                    "lambda1", "lambda2", "aligned", "method"});
        const auto K = uint_of(g, "K"), Q = uint_of(g, "Q");
        // Points come as per-DoF SNR (gamma_db) or as Eb/N0 at loading factor J·K/m.
        const bool by_ebn0 = g.contains("ebn0_db");
        for (auto p : uints<std::uint32_t>(g, "p"))
            for (auto J : uints<unsigned>(g, "J", 1u)) {
                const auto m = uint_of(g, "m", K * J + Q);
                for (double x : range(g, by_ebn0 ? "ebn0_db" : "gamma_db")) {
                    const double eta = static_cast<double>(K * J) / static_cast<double>(m);
                    const double gamma = by_ebn0 ? snr_from_ebn0(x, eta, p) : db_to_lin(x);
                    CAResult r = J == 1 ? ca_allocate_su(K, Q, m, gamma, p)
                                        : ca_allocate_mu(K, Q, m, gamma, p, J);
                    t.add({std::to_string(K), std::to_string(Q), std::to_string(m),
                           std::to_string(J), std::to_string(p), by_ebn0 ? csv_cell(x) : "",
                           csv_cell(10 * std::log10(gamma)), csv_cell(r.pav.mu1),
                           csv_cell(r.pav.mu2), csv_cell(r.mu_pas), csv_cell(r.lambda1),
                           csv_cell(r.lambda2), csv_cell(r.aligned), r.method});
                }
            }
        emit(c, t.str());
        return 0;
    }
    if (kind == "capacity") {
        const std::string model = g.value("model", std::string("su-tdma"));
        SystemDims d;
        d.K = uint_of(g, "K");
        d.Q = uint_of(g, "Q", 0);
        d.R = uint_of(g, "R", 0);
        d.J_mc = static_cast<unsigned>(uint_of(g, "J_mc", uint_of(g, "J", 1)));
        d.T = static_cast<unsigned>(uint_of(g, "T", 1));
        d.J = static_cast<unsigned>(uint_of(g, "J", d.J_mc * d.T));
        d.m = uint_of(g, "m", d.J_mc * d.K + d.Q);
        d.N = uint_of(g, "N", 0);
        d.p = static_cast<std::uint32_t>(uint_of(g, "p", 2));
        using Fn = CapacityReport (*)(const SystemDims&, double, std::optional<PAV>);
        Fn fn = model == "su-tdma"   ? capacity_su_tdma
                : model == "su-ccma" ? capacity_su_ccma
                : model == "mu-tdma" ? capacity_mu_tdma
                : model == "mu-ccma" ? capacity_mu_ccma
                                     : nullptr;
        if (!fn)
            throw SpecError("unknown capacity model '" + model + "'", "/model");
        std::vector<std::optional<PAV>> pavs;
        if (g.contains("pav")) {
            if (!g["pav"].is_array() || g["pav"].empty())
                throw SpecError("expected a non-empty array of {mu1, mu2, muc}", "/pav");
            for (const auto& x : g["pav"])
                pavs.push_back(PAV{x.value("mu1", 0.0), x.value("mu2", 0.0), x.value("muc", 0.0)});
        } else {
            pavs.push_back(std::nullopt); // the optimal (EPA-type) allocation
        }
        CsvTable t({"model", "gamma_db", "mu1", "mu2", "muc", "mu_pas", "total_bits", "per_dof"});
        for (double gdb : range(g, "gamma_db"))
            for (const auto& pav : pavs) {
                CapacityReport r = fn(d, db_to_lin(gdb), pav);
                t.add({model, csv_cell(gdb), csv_cell(r.pav.mu1), csv_cell(r.pav.mu2),
                       csv_cell(r.pav.muc), csv_cell(r.mu_pas), csv_cell(r.total_bits),
                       csv_cell(r.per_dof)});
            }
        emit(c, t.str());
        return 0;
    }
    throw ValidationError("unknown sweep kind '" + kind + "' (capacity, fbl, pas, ca)");
}

int cmd_simulate(const Common& c)
{
    PipelineConfig cfg = pipeline_from_json(require_spec(c));
    if (c.seed)
        cfg.seed = *c.seed;
    cfg.threads = c.threads;
    Pipeline pipe(cfg);
    std::vector<BERRow> rows;
    for (std::size_t i = 0; i < cfg.ebn0_db.size(); ++i) {
        rows.push_back(pipe.run_point(i, cfg.ebn0_db[i]));
        // --tolerance: stop once the SER has dropped below it.
        if (c.tolerance && rows.back().ser < *c.tolerance)
            break;
    }
    emit(c, ber_table(rows).str());
    return 0;
}

} // namespace ffmac::cli
