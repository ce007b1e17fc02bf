// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dscot/crypto.hpp"
#include "dscot/report.hpp"
#include "dscot/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DSCoT registry and private-ledger simulator"};
    app.require_subcommand(1);

    // run
    std::string run_script;
    std::string run_schedule;
    std::string run_out = "out";
    std::uint64_t run_seed = 0;
    bool run_seed_set = false;
    std::uint32_t run_validators = 0;
    auto* run_cmd = app.add_subcommand("run", "execute a scenario script and write its trace");
    run_cmd->add_option("script", run_script, "scenario script path")->required();
    run_cmd->add_option("--schedule", run_schedule, "gas schedule file (key=value)");
    run_cmd->add_option("--out", run_out, "output directory");
    run_cmd->add_option("--seed", run_seed, "override the script seed")
        ->each([&](const std::string&) { run_seed_set = true; });
    run_cmd->add_option("--validators", run_validators, "override the validator count");

    // report
    std::string report_trace;
    std::string report_format = "text";
    auto* report_cmd = app.add_subcommand("report", "gas comparison report from a trace CSV");
    report_cmd->add_option("trace", report_trace, "trace CSV path")->required();
    report_cmd->add_option("--format", report_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // verify
    std::string verify_trace_path;
    auto* verify_cmd = app.add_subcommand("verify", "run acceptance checks over a trace CSV");
    verify_cmd->add_option("trace", verify_trace_path, "trace CSV path")->required();

    // keygen
    std::string keygen_name;
    std::uint64_t keygen_seed = 1;
    auto* keygen_cmd = app.add_subcommand("keygen", "derive a principal key pair");
    keygen_cmd->add_option("name", keygen_name, "principal name")->required();
    keygen_cmd->add_option("--seed", keygen_seed, "derivation seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) {
            dscot::GasSchedule schedule;
            if (!run_schedule.empty()) schedule = dscot::GasSchedule::from_file(run_schedule);
            dscot::ScenarioScript script = dscot::parse_scenario(read_file(run_script));
            if (run_seed_set) script.seed = run_seed;
            if (run_validators != 0) script.validators = run_validators;

            dscot::RunTrace trace = dscot::run_scenario(script, schedule);
            std::filesystem::create_directories(run_out);
            write_file(std::filesystem::path(run_out) / "trace.txt", trace.to_text());
            write_file(std::filesystem::path(run_out) / "trace.csv", trace.to_csv());
            write_file(std::filesystem::path(run_out) / "chain.txt", trace.chain_export);
            for (const auto& [step, pass] : trace.passes)
                write_file(std::filesystem::path(run_out) /
                               ("pass_step" + std::to_string(step) + ".txt"),
                           pass);
            std::cout << "wrote " << run_out << "/trace.txt, trace.csv, chain.txt ("
                      << trace.steps.size() << " steps, " << trace.passes.size()
                      << " passes)\n";
            return kExitOk;
        }

        if (*report_cmd) {
            auto rows = dscot::parse_trace_csv(read_file(report_trace));
            dscot::GasReport report = dscot::build_report(rows);
            if (report_format == "csv") std::cout << dscot::render_report_csv(report);
            else if (report_format == "json") std::cout << dscot::render_report_json(report);
            else std::cout << dscot::render_report_text(report);
            return kExitOk;
        }

        if (*verify_cmd) {
            std::string csv = read_file(verify_trace_path);
            auto rows = dscot::parse_trace_csv(csv);
            dscot::VerifyReport report = dscot::verify_trace(rows, csv);
            std::cout << report.to_text();
            return report.all_ok() ? kExitOk : kExitCheckFailed;
        }

        if (*keygen_cmd) {
            dscot::KeyPair kp = dscot::keypair_from_seed(keygen_seed, keygen_name);
            std::cout << "name       " << keygen_name << "\n";
            std::cout << "address    " << dscot::derive_address(kp.public_key).hex() << "\n";
            std::cout << "public_key " << dscot::to_hex(kp.public_key) << "\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
