/**************************************************************************
 * ffma_cli.cpp
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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ffma/codespec.hpp"
#include "ffma/errors.hpp"
#include "ffma/parallel.hpp"

using namespace ffmac;

namespace {

int report(const std::string& kind, const std::string& message, int code,
           const std::string& pointer = {})
{
    json e = {{"error", kind}, {"message", message}, {"exit_code", code}};
    if (!pointer.empty())
        e["pointer"] = pointer;
    std::cerr << e.dump() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite-field multiple access with p-ary element-assemblage codes"};
    app.require_subcommand(1);

    cli::Common common;
    common.threads = default_threads();
    std::uint64_t seed = 0;
    double tolerance = 0;
    auto add_common = [&](CLI::App* sub, bool spec) {
        if (spec)
            sub->add_option("--spec", common.spec, "Input JSON")->required();
        sub->add_option("--out", common.out, "Output path (default: stdout)");
        sub->add_option("--seed", seed, "Master seed");
        sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--tolerance", tolerance, "Stop threshold (simulate: target SER)");
    };

    auto* construct = app.add_subcommand("construct", "Build a code from a code spec");
    add_common(construct, true);

    cli::VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "Check unique sum-pattern mapping");
    add_common(verify, true);
    verify->add_option("--budget", vargs.budget, "Enumeration budget (blocks)");
    verify->add_flag("--certificate-only", vargs.certificate_only,
                     "Past the budget, accept an exact rank certificate");

    cli::BlockArgs eargs, dargs;
    auto* encode = app.add_subcommand("encode", "User blocks to sum-patterns");
    add_common(encode, true);
    encode->add_option("--input", eargs.input, "JSON array of blocks");
    encode->add_option("--block", eargs.blocks, "Inline block, e.g. 0121");
    encode->add_flag("--all", eargs.all, "Every block of GF(p)^M");

    auto* decode = app.add_subcommand("decode", "Sum-patterns to user blocks");
    add_common(decode, true);
    decode->add_option("--input", dargs.input, "JSON array of sum-patterns");
    decode->add_option("--block", dargs.blocks, "Inline sum-pattern, e.g. 1012011");

    cli::SweepArgs sargs;
    auto* sweep = app.add_subcommand("sweep", "Capacity, FBL, PAS or CA sweep to CSV");
    add_common(sweep, false);
    sweep->add_option("--grid", sargs.grid, "Grid JSON")->required();
    sweep->add_option("--kind", sargs.kind, "capacity | fbl | pas | ca");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER/SER curve to CSV");
    add_common(simulate, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        return report("usage", e.what(), 2);
    }
    for (auto* sub : app.get_subcommands()) {
        if (sub->count("--seed"))
            common.seed = seed;
        if (sub->count("--tolerance"))
            common.tolerance = tolerance;
    }

    try {
        if (*construct)
            return cli::cmd_construct(common);
        if (*verify)
            return cli::cmd_verify(common, vargs);
        if (*encode)
            return cli::cmd_encode(common, eargs);
        if (*decode)
            return cli::cmd_decode(common, dargs);
        if (*sweep)
            return cli::cmd_sweep(common, sargs);
        if (*simulate)
            return cli::cmd_simulate(common);
    } catch (const SpecError& e) {
        return report("spec", e.what(), 2, e.pointer().empty() ? "/" : e.pointer());
    } catch (const ConstructionError& e) {
        return report("construction", e.what(), 2);
    } catch (const BudgetError& e) {
        return report("budget", e.what(), 2);
    } catch (const ValidationError& e) {
        return report("validation", e.what(), 2);
    } catch (const DimensionError& e) {
        return report("validation", e.what(), 2);
    } catch (const FieldError& e) {
        return report("validation", e.what(), 2);
    } catch (const DecodeError& e) {
        return report("decode", e.what(), 3);
    } catch (const ConvergenceError& e) {
        return report("convergence", e.what(), 4);
    } catch (const json::exception& e) {
        return report("spec", e.what(), 2);
    } catch (const std::exception& e) {
        return report("internal", e.what(), 1);
    }
    return 1;
}
