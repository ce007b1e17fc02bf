// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dscot/gas.hpp"

namespace dscot {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

enum class StepKind {
    CreatePrincipal,
    OwnerInit,
    Approve,
    DelAdmin,
    MapDevice,
    DelDev,
    AddUser,
    DelUser,
    Mint,
    Call,
    AdvanceClock,
    InjectFault,
};

struct ScenarioStep {
    StepKind kind;
    int line = 0;
    std::string directive;           // the raw (trimmed) script line
    std::vector<std::string> args;   // tokens after the directive keyword
};

/// One directive per line, whitespace-separated tokens, '#' comments.
/// Header keys (seed, validators, clock-step, start-time) precede the steps.
struct ScenarioScript {
    std::uint64_t seed = 1;
    std::uint32_t validators = 4;
    std::uint64_t clock_step = 1;
    std::uint64_t start_time = 1650000000;
    std::vector<ScenarioStep> steps;
};

ScenarioScript parse_scenario(std::string_view text);

struct StepRecord {
    int index = 0;
    std::string directive;
    std::string operation;  // Table-3 function name, or "-" for off-chain steps
    std::string status;     // ok / refused:* / rejected:* / reverted:* / no-commit / error:*
    std::uint64_t gas_used = 0;
    std::uint64_t fee = 0;
    std::uint64_t execution_cost = 0;
    std::vector<std::string> events;
    std::string result;  // decoded output of read-only calls
    std::string extra;   // auxiliary key=value pairs (fog_len, rounds, ...)
};

struct RunTrace {
    std::uint64_t seed = 0;
    std::uint32_t validators = 0;
    std::vector<StepRecord> steps;
    std::vector<std::pair<int, std::string>> passes;  // (step index, serialized NftPass)
    std::string chain_export;
    std::string final_state;

    std::string to_text() const;
    std::string to_csv() const;
};

RunTrace run_scenario(const ScenarioScript& script, const GasSchedule& schedule);
RunTrace run_scenario(const ScenarioScript& script);

}  // namespace dscot
