/**************************************************************************
 * codespec.cpp
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

#include "ffma/codespec.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "ffma/errors.hpp"

namespace ffmac {

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void check_keys(const json& j, const std::string& ptr, const std::set<std::string>& allowed)
{
    if (!j.is_object())
        throw SpecError("expected an object", ptr.empty() ? "/" : ptr);
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw SpecError("unknown key '" + it.key() + "'", child(ptr, it.key()));
}

template <class T>
T get_uint(const json& j, const std::string& ptr, std::uint64_t lo = 0)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw SpecError("expected a non-negative integer", ptr);
    auto v = j.get<std::uint64_t>();
    if (v < lo)
        throw SpecError("value must be at least " + std::to_string(lo), ptr);
    if (v > static_cast<std::uint64_t>(std::numeric_limits<T>::max()))
        throw SpecError("value out of range", ptr);
    return static_cast<T>(v);
}

double get_number(const json& j, const std::string& ptr)
{
    if (!j.is_number())
        throw SpecError("expected a number", ptr);
    return j.get<double>();
}

std::string get_string(const json& j, const std::string& ptr)
{
    if (!j.is_string())
        throw SpecError("expected a string", ptr);
    return j.get<std::string>();
}

template <class T>
T opt_uint(const json& spec, const char* key, T fallback, std::uint64_t lo = 0)
{
    return spec.contains(key) ? get_uint<T>(spec[key], std::string("/") + key, lo) : fallback;
}

// Row given as [1, 0, 2] or "102".
FieldVector parse_row(const json& j, PrimeField f, const std::string& ptr)
{
    std::vector<std::uint32_t> coords;
    if (j.is_string()) {
        for (std::size_t i = 0; i < j.get_ref<const std::string&>().size(); ++i) {
            char ch = j.get_ref<const std::string&>()[i];
            if (ch < '0' || ch > '9')
                throw SpecError("row strings hold one decimal digit per entry", ptr);
            coords.push_back(static_cast<std::uint32_t>(ch - '0'));
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            coords.push_back(get_uint<std::uint32_t>(j[i], child(ptr, i)));
    } else {
        throw SpecError("expected a row (array or digit string)", ptr);
    }
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] >= f.p())
            throw SpecError("entry " + std::to_string(coords[i]) + " is not in GF(" +
                                std::to_string(f.p()) + ")",
                            child(ptr, i));
    if (coords.empty())
        throw SpecError("empty row", ptr);
    return {f, std::move(coords)};
}

std::vector<FieldVector> parse_rows(const json& j, PrimeField f, const std::string& ptr)
{
    if (!j.is_array() || j.empty())
        throw SpecError("expected a non-empty array of rows", ptr);
    std::vector<FieldVector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(parse_row(j[i], f, child(ptr, i)));
        if (rows.back().size() != rows.front().size())
            throw SpecError("ragged matrix: row length differs from row 0", child(ptr, i));
    }
    return rows;
}

FieldMatrix parse_matrix(const json& j, PrimeField f, const std::string& ptr)
{
    return FieldMatrix::from_rows(f, parse_rows(j, f, ptr));
}

F2CMap parse_f2c(const json& j, std::uint32_t field_char)
{
    if (!j.is_object())
        throw SpecError("expected an object mapping field elements to complex literals", "/f2c");
    F2CMap map;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string ptr = child("/f2c", it.key());
        std::uint32_t key = 0;
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(it.key(), &used);
            if (used != it.key().size())
                throw std::invalid_argument("trailing");
            key = static_cast<std::uint32_t>(v);
        } catch (const std::logic_error&) {
            throw SpecError("keys must be field elements", ptr);
        }
        if (key >= field_char)
            throw SpecError("key is not an element of GF(" + std::to_string(field_char) + ")", ptr);
        try {
            map[key] = HalfGauss::parse(get_string(it.value(), ptr));
        } catch (const ConstructionError& e) {
            throw SpecError(e.what(), ptr);
        }
    }
    return map;
}

json matrix_json(const FieldMatrix& m) { return m.to_nested(); }

// Checks that gen[ς] = Σ_i t_i(ς)·B_i for the supplied parallel stack.
void restore_base3(EACode& code, const FieldMatrix& pll, std::size_t n_d)
{
    if (pll.rows() != n_d * code.users || pll.cols() != code.m || !(pll.field() == code.field))
        throw SpecError("parallel generator shape does not match n_d × users", "/parallel");
    EACode probe = code;
    probe.expansion = Expansion::Base3;
    probe.n_d = n_d;
    probe.parallel = pll;
    for (std::uint32_t s = 1; s < code.p; ++s) {
        std::vector<std::uint32_t> t;
        try {
            t = p2t(s, n_d, code.p);
        } catch (const DimensionError& e) {
            throw SpecError(e.what(), "/n_d");
        }
        // Row j of G^s must equal Σ_i t_i(s)·(row j of block i).
        for (std::size_t j = 0; j < code.users; ++j) {
            std::vector<std::uint32_t> a(n_d * code.users, 0);
            for (std::size_t i = 0; i < n_d; ++i)
                a[i * code.users + j] = t[i];
            if (!(encode_parallel(probe, a) == code.gen[s].row(j)))
                throw SpecError("parallel generator is inconsistent with matrix " +
                                    std::to_string(s) + " (user " + std::to_string(j + 1) + ")",
                                "/parallel");
        }
    }
    code = std::move(probe);
}

} // namespace

EACode code_from_json(const json& spec)
{
    check_keys(spec, "",
               {"family", "p", "field_char", "m", "users", "matrices", "basis", "n_d", "g1_scale",
                "kappa", "f2c", "expansion", "parallel"});
    if (!spec.contains("family"))
        throw SpecError("missing required key 'family'", "/family");
    Family family;
    try {
        family = family_from_string(get_string(spec["family"], "/family"));
    } catch (const ConstructionError& e) {
        throw SpecError(e.what(), "/family");
    }
    const auto p = opt_uint<std::uint32_t>(spec, "p", 3, 2);
    if (!is_prime(p))
        throw SpecError("p must be prime", "/p");
    const bool ternary_built = family == Family::BDDCWEA || family == Family::ParyBD ||
                               (family == Family::AIDCWEA && spec.contains("kappa"));
    const auto fc = opt_uint<std::uint32_t>(spec, "field_char", ternary_built ? 3 : p, 2);
    if (!is_prime(fc))
        throw SpecError("field_char must be prime", "/field_char");
    const PrimeField f(fc);

    const int sources = spec.contains("matrices") + spec.contains("basis") + spec.contains("kappa");
    if (sources > 1)
        throw SpecError("give exactly one of 'matrices', 'basis', 'kappa'", "");

    EACode code;
    if (spec.contains("matrices")) {
        const json& mats = spec["matrices"];
        if (!mats.is_object() || mats.empty())
            throw SpecError("expected an object of generator matrices keyed by digit", "/matrices");
        std::map<std::uint32_t, FieldMatrix> given;
        for (auto it = mats.begin(); it != mats.end(); ++it) {
            const std::string ptr = child("/matrices", it.key());
            std::uint32_t s = 0;
            try {
                std::size_t used = 0;
                s = static_cast<std::uint32_t>(std::stoul(it.key(), &used));
                if (used != it.key().size())
                    throw std::invalid_argument("trailing");
            } catch (const std::logic_error&) {
                throw SpecError("matrix keys must be digits 0..p-1", ptr);
            }
            if (s >= p)
                throw SpecError("digit " + it.key() + " out of range for p = " + std::to_string(p),
                                ptr);
            given.emplace(s, parse_matrix(it.value(), f, ptr));
        }
        const FieldMatrix& any = given.begin()->second;
        for (const auto& [s, g] : given)
            if (g.rows() != any.rows() || g.cols() != any.cols())
                throw SpecError("matrix shape differs from the others",
                                child("/matrices", std::to_string(s)));
        if (family == Family::AIDCWEA && given.size() == 1 && given.count(1)) {
            code = build_ai_dcwea(given.at(1));
        } else {
            std::vector<FieldMatrix> gen;
            for (std::uint32_t s = 0; s < p; ++s) {
                auto it = given.find(s);
                if (it != given.end())
                    gen.push_back(it->second);
                else if (s == 0)
                    gen.emplace_back(f, any.rows(), any.cols());
                else
                    throw SpecError("missing generator matrix for digit " + std::to_string(s),
                                    child("/matrices", std::to_string(s)));
            }
            if (family == Family::NOCWEA) {
                if (!spec.contains("f2c"))
                    throw SpecError("nocwea codes need a finite-to-complex map", "/f2c");
                code = build_nocwea(std::move(gen), parse_f2c(spec["f2c"], fc));
            } else {
                code = make_code(family, p, std::move(gen));
            }
        }
    } else if (spec.contains("basis")) {
        auto basis = parse_rows(spec["basis"], f, "/basis");
        if (family == Family::ParyBD) {
            if (spec.contains("n_d") &&
                get_uint<std::size_t>(spec["n_d"], "/n_d") != ternary_digits(p))
                throw SpecError("pary-bd uses n_d = ceil(log3 p) = " +
                                    std::to_string(ternary_digits(p)),
                                "/n_d");
            code = build_pary_bd(p, basis);
        } else if (family == Family::BDDCWEA) {
            if (p != 3)
                throw SpecError("bd-dcwea is ternary; use pary-bd for p > 3", "/p");
            code = build_bd_dcwea(basis, opt_uint<std::size_t>(spec, "n_d", 2, 1), fc,
                                  opt_uint<std::uint32_t>(spec, "g1_scale", 1, 1));
        } else {
            throw SpecError("'basis' applies to bd-dcwea and pary-bd only", "/basis");
        }
    } else if (spec.contains("kappa")) {
        if (family != Family::AIDCWEA)
            throw SpecError("'kappa' applies to ai-dcwea only", "/kappa");
        code = build_ai_dcwea(build_ternary_orthogonal(opt_uint<unsigned>(spec, "kappa", 1, 1)));
    } else if (family == Family::Orthogonal) {
        if (!spec.contains("m"))
            throw SpecError("orthogonal codes need 'm'", "/m");
        code = build_orthogonal_ea(get_uint<std::size_t>(spec["m"], "/m", 1), p);
    } else {
        throw SpecError("give one of 'matrices', 'basis', 'kappa'", "");
    }

    if (code.p != p && spec.contains("p"))
        throw SpecError("p = " + std::to_string(p) + " conflicts with the construction (p = " +
                            std::to_string(code.p) + ")",
                        "/p");
    if (spec.contains("m") && get_uint<std::size_t>(spec["m"], "/m") != code.m)
        throw SpecError("m = " + spec["m"].dump() + " but the generators have " +
                            std::to_string(code.m) + " columns",
                        "/m");
    if (spec.contains("users") && get_uint<std::size_t>(spec["users"], "/users") != code.users)
        throw SpecError("users = " + spec["users"].dump() + " but the generators have " +
                            std::to_string(code.users) + " rows",
                        "/users");
    if (spec.contains("f2c") && !code.f2c) {
        code.f2c = parse_f2c(spec["f2c"], code.field.p());
        for (const auto& g : code.gen)
            code.complex_gen.push_back(complex_image(g, *code.f2c));
    }
    if (spec.contains("expansion")) {
        const std::string e = get_string(spec["expansion"], "/expansion");
        if (e == "base3" && code.expansion != Expansion::Base3) {
            if (!spec.contains("parallel"))
                throw SpecError("base3 expansion needs 'parallel'", "/parallel");
            restore_base3(code, parse_matrix(spec["parallel"], code.field, "/parallel"),
                          ternary_digits(code.p));
        } else if (e != "none" && e != "t2b" && e != "base3") {
            throw SpecError("unknown expansion '" + e + "'", "/expansion");
        }
    }
    return code;
}

json code_to_json(const EACode& code)
{
    json j;
    j["family"] = to_string(code.family);
    j["p"] = code.p;
    j["field_char"] = code.field.p();
    j["m"] = code.m;
    j["users"] = code.users;
    json mats = json::object();
    for (std::uint32_t s = 0; s < code.p; ++s)
        mats[std::to_string(s)] = matrix_json(code.gen[s]);
    j["matrices"] = std::move(mats);
    switch (code.expansion) {
    case Expansion::None:
        j["expansion"] = "none";
        break;
    case Expansion::T2B:
        j["expansion"] = "t2b";
        break;
    case Expansion::Base3:
        j["expansion"] = "base3";
        break;
    }
    if (code.parallel) {
        j["n_d"] = code.n_d;
        j["parallel"] = matrix_json(*code.parallel);
    }
    if (code.f2c) {
        json m = json::object();
        for (const auto& [k, v] : *code.f2c)
            m[std::to_string(k)] = v.to_string();
        j["f2c"] = std::move(m);
    }
    return j;
}

json uspm_to_json(const UspmReport& r)
{
    json j;
    j["ok"] = r.ok;
    j["enumerated"] = r.enumerated;
    j["blocks"] = r.blocks;
    j["distinct"] = r.distinct;
    j["agree"] = r.agree;
    if (r.certificate) {
        const auto& c = *r.certificate;
        j["certificate"] = {{"matrix", c.name},
                            {"rank", c.rank},
                            {"required", c.required},
                            {"exact", c.exact},
                            {"passed", c.passed()}};
    } else {
        j["certificate"] = nullptr;
    }
    if (r.witness) {
        j["witness"] = {r.witness->first, r.witness->second};
        j["witness_pattern"] = r.witness_pattern;
    }
    return j;
}

std::vector<std::uint32_t> digits_from_json(const json& j, const std::string& pointer)
{
    std::vector<std::uint32_t> d;
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        // Comma-separated when digits may exceed 9.
        if (s.find(',') != std::string::npos) {
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    d.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
                } catch (const std::logic_error&) {
                    throw SpecError("bad digit '" + tok + "'", pointer);
                }
            }
        } else {
            for (char ch : s) {
                if (ch < '0' || ch > '9')
                    throw SpecError("digit strings hold one decimal digit per user", pointer);
                d.push_back(static_cast<std::uint32_t>(ch - '0'));
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            d.push_back(get_uint<std::uint32_t>(j[i], child(pointer, i)));
    } else {
        throw SpecError("expected a digit string or array", pointer);
    }
    if (d.empty())
        throw SpecError("empty digit block", pointer);
    return d;
}

PipelineConfig pipeline_from_json(const json& spec)
{
    check_keys(spec, "",
               {"scheme", "p", "J", "K", "n", "column_weight", "code_seed", "allocation", "mu1",
                "mu2", "ebn0_db", "seed", "max_frames", "max_frame_errors", "max_iters", "threads",
                "noiseless", "detect_budget", "code"});
    PipelineConfig c;
    try {
        if (spec.contains("scheme"))
            c.scheme = scheme_from_string(get_string(spec["scheme"], "/scheme"));
    } catch (const SpecError&) {
        throw;
    } catch (const Error& e) {
        throw SpecError(e.what(), "/scheme");
    }
    try {
        if (spec.contains("allocation"))
            c.allocation = allocation_from_string(get_string(spec["allocation"], "/allocation"));
    } catch (const SpecError&) {
        throw;
    } catch (const Error& e) {
        throw SpecError(e.what(), "/allocation");
    }
    c.p = opt_uint<std::uint32_t>(spec, "p", c.p, 2);
    c.J = opt_uint<unsigned>(spec, "J", c.J, 1);
    c.K = opt_uint<std::size_t>(spec, "K", c.K, 1);
    c.n = opt_uint<std::size_t>(spec, "n", c.n);
    c.column_weight = opt_uint<unsigned>(spec, "column_weight", c.column_weight, 2);
    c.code_seed = opt_uint<std::uint64_t>(spec, "code_seed", c.code_seed);
    c.seed = opt_uint<std::uint64_t>(spec, "seed", c.seed);
    c.max_frames = opt_uint<std::size_t>(spec, "max_frames", c.max_frames, 1);
    c.max_frame_errors = opt_uint<std::size_t>(spec, "max_frame_errors", c.max_frame_errors, 1);
    c.max_iters = opt_uint<std::size_t>(spec, "max_iters", c.max_iters, 1);
    c.threads = opt_uint<unsigned>(spec, "threads", c.threads, 1);
    if (spec.contains("mu1"))
        c.mu1 = get_number(spec["mu1"], "/mu1");
    if (spec.contains("mu2"))
        c.mu2 = get_number(spec["mu2"], "/mu2");
    if (spec.contains("detect_budget"))
        c.detect_budget = get_number(spec["detect_budget"], "/detect_budget");
    if (spec.contains("noiseless")) {
        if (!spec["noiseless"].is_boolean())
            throw SpecError("expected a boolean", "/noiseless");
        c.noiseless = spec["noiseless"].get<bool>();
    }
    if (spec.contains("ebn0_db")) {
        const json& e = spec["ebn0_db"];
        if (e.is_array()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                c.ebn0_db.push_back(get_number(e[i], child("/ebn0_db", i)));
        } else if (e.is_object()) {
            check_keys(e, "/ebn0_db", {"start", "stop", "step"});
            for (const char* k : {"start", "stop", "step"})
                if (!e.contains(k))
                    throw SpecError(std::string("missing '") + k + "'", child("/ebn0_db", k));
            double a = get_number(e["start"], "/ebn0_db/start");
            double b = get_number(e["stop"], "/ebn0_db/stop");
            double s = get_number(e["step"], "/ebn0_db/step");
            if (!(s > 0) || b < a)
                throw SpecError("need step > 0 and stop >= start", "/ebn0_db");
            for (std::size_t i = 0; a + i * s <= b + 1e-9 * s; ++i)
                c.ebn0_db.push_back(a + i * s);
        } else {
            throw SpecError("expected an array or {start, stop, step}", "/ebn0_db");
        }
    }
    if (c.ebn0_db.empty() && c.noiseless)
        c.ebn0_db.push_back(0.0); // the noise level is irrelevant
    if (c.ebn0_db.empty())
        throw SpecError("no Eb/N0 points", "/ebn0_db");
    if (spec.contains("code")) {
        try {
            c.code = code_from_json(spec["code"]);
        } catch (const SpecError& e) {
            throw SpecError(e.what(), "/code" + e.pointer());
        }
    }
    if (c.scheme == Scheme::EATable && !c.code)
        throw SpecError("ea-table scheme needs a 'code'", "/code");
    return c;
}

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SpecError("cannot open '" + path + "'", "");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecError("'" + path + "': " + e.what(), "");
    }
}

} // namespace ffmac
