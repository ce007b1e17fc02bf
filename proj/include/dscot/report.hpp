// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dscot/scenario.hpp"

namespace dscot {

/// Published gas totals used as report fixtures. These are platform-compiled
/// measurements; the simulator meters its own schedule and never treats them
/// as targets.
struct PublishedFixtures {
    static constexpr std::uint64_t dscot_mint = 122865;
    static constexpr std::uint64_t dscot_approve = 61613;
    static constexpr std::uint64_t dscot_user_device_mapping = 116821;
    static constexpr std::uint64_t puf_create_token = 167263;
    static constexpr std::uint64_t puf_start_owner_engagement = 69216;
    static constexpr std::uint64_t puf_start_user_engagement = 69990;

    static constexpr std::uint64_t call_admin_add = 27856;
    static constexpr std::uint64_t call_no_of_admins = 26116;
    static constexpr std::uint64_t call_users_devices = 29157;
    static constexpr std::uint64_t call_tokens_issued = 28760;
};

/// 100 * (1 - dscot/baseline), rounded to one decimal.
double efficiency_percent(std::uint64_t dscot_gas, std::uint64_t baseline_gas);
/// Display rounding of a one-decimal percentage to the nearest integer banner.
long long banner_percent(double one_decimal_percent);

struct FunctionComparison {
    std::string function;
    std::string baseline_function;
    std::optional<std::uint64_t> metered;  // from the trace, when present
    std::uint64_t fixture = 0;
    std::uint64_t baseline_fixture = 0;
    double efficiency = 0.0;  // from fixtures, one decimal
    std::string note;
};

struct CallCostRow {
    std::string method;
    std::optional<std::uint64_t> metered;
    std::uint64_t fixture = 0;
};

struct GasReport {
    std::vector<FunctionComparison> functions;
    std::vector<CallCostRow> calls;
    bool ordering_ok = false;  // metered mint > UserDeviceMapping > approve
};

/// Rows of a machine-readable trace table (the CSV written by `run`).
std::vector<StepRecord> parse_trace_csv(const std::string& csv);

GasReport build_report(const std::vector<StepRecord>& rows);
std::string render_report_text(const GasReport& report);
std::string render_report_csv(const GasReport& report);
std::string render_report_json(const GasReport& report);

struct CheckResult {
    std::string name;
    enum class Status { Pass, Fail, Skip } status = Status::Skip;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_ok() const;
    std::string to_text() const;
};

/// Acceptance-style checks over a trace: gas ordering, zero-fee calls,
/// mint-gas linearity and the determinism hash.
VerifyReport verify_trace(const std::vector<StepRecord>& rows, const std::string& raw_csv);

/// Least-squares affine fit helper; returns the largest |residual|/value.
double affine_fit_relative_residual(const std::vector<std::pair<double, double>>& points);

}  // namespace dscot
