// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dscot/keccak.hpp"

namespace dscot {

double efficiency_percent(std::uint64_t dscot_gas, std::uint64_t baseline_gas) {
    double eff = 100.0 * (1.0 - static_cast<double>(dscot_gas) / static_cast<double>(baseline_gas));
    return std::round(eff * 10.0) / 10.0;
}

long long banner_percent(double one_decimal_percent) {
    return std::llround(one_decimal_percent);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::optional<std::uint64_t> first_gas(const std::vector<StepRecord>& rows,
                                       const std::string& operation) {
    for (const StepRecord& row : rows)
        if (row.operation == operation && row.status == "ok") return row.gas_used;
    return std::nullopt;
}

std::optional<std::uint64_t> first_exec_cost(const std::vector<StepRecord>& rows,
                                             const std::string& method) {
    for (const StepRecord& row : rows)
        if (row.operation == method && row.status == "ok") return row.execution_cost;
    return std::nullopt;
}

std::string format_metered(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : "-";
}

std::string format_percent(double pct) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << pct << "% (~" << banner_percent(pct) << "%)";
    return os.str();
}

std::optional<std::uint64_t> extra_value(const std::string& extra, const std::string& key) {
    std::istringstream in(extra);
    std::string item;
    while (std::getline(in, item, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        if (item.substr(0, eq) == key) return std::stoull(item.substr(eq + 1));
    }
    return std::nullopt;
}

}  // namespace

std::vector<StepRecord> parse_trace_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty trace");
    if (!line.starts_with("step,directive,operation,status"))
        throw std::invalid_argument("unrecognized trace header");

    std::vector<StepRecord> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 9) throw std::invalid_argument("malformed trace row: " + line);
        StepRecord row;
        row.index = std::stoi(fields[0]);
        row.directive = fields[1];
        row.operation = fields[2];
        row.status = fields[3];
        row.gas_used = std::stoull(fields[4]);
        row.fee = std::stoull(fields[5]);
        row.execution_cost = std::stoull(fields[6]);
        {
            std::istringstream evs(fields[7]);
            std::string ev;
            while (std::getline(evs, ev, ';'))
                if (!ev.empty()) row.events.push_back(ev);
        }
        row.extra = fields[8];
        rows.push_back(std::move(row));
    }
    return rows;
}

GasReport build_report(const std::vector<StepRecord>& rows) {
    GasReport report;

    FunctionComparison mint;
    mint.function = "mintNFT";
    mint.baseline_function = "createToken";
    mint.metered = first_gas(rows, "mintNFT");
    mint.fixture = PublishedFixtures::dscot_mint;
    mint.baseline_fixture = PublishedFixtures::puf_create_token;
    mint.efficiency = efficiency_percent(mint.fixture, mint.baseline_fixture);

    FunctionComparison approve;
    approve.function = "approve";
    approve.baseline_function = "startOwnerEngagement";
    approve.metered = first_gas(rows, "approve");
    approve.fixture = PublishedFixtures::dscot_approve;
    approve.baseline_fixture = PublishedFixtures::puf_start_owner_engagement;
    approve.efficiency = efficiency_percent(approve.fixture, approve.baseline_fixture);

    FunctionComparison udm;
    udm.function = "UserDeviceMapping";
    udm.baseline_function = "startUserEngagement";
    udm.metered = first_gas(rows, "UserDeviceMapping");
    udm.fixture = PublishedFixtures::dscot_user_device_mapping;
    udm.baseline_fixture = PublishedFixtures::puf_start_user_engagement;
    udm.efficiency = efficiency_percent(udm.fixture, udm.baseline_fixture);
    udm.note = "higher than baseline: user and device mapping happen simultaneously";

    report.functions = {mint, approve, udm};

    report.calls = {
        {"adminAdd", first_exec_cost(rows, "adminAdd"), PublishedFixtures::call_admin_add},
        {"No_ofAdmins", first_exec_cost(rows, "No_ofAdmins"), PublishedFixtures::call_no_of_admins},
        {"users_devices", first_exec_cost(rows, "users_devices"),
         PublishedFixtures::call_users_devices},
        {"tokens_Issued", first_exec_cost(rows, "tokens_Issued"),
         PublishedFixtures::call_tokens_issued},
    };

    auto mint_gas = first_gas(rows, "mintNFT");
    auto udm_gas = first_gas(rows, "UserDeviceMapping");
    auto approve_gas = first_gas(rows, "approve");
    report.ordering_ok =
        mint_gas && udm_gas && approve_gas && *mint_gas > *udm_gas && *udm_gas > *approve_gas;
    return report;
}

std::string render_report_text(const GasReport& report) {
    std::ostringstream os;
    os << "gas report\n";
    os << "  function             metered    fixture    baseline(fixture)             efficiency\n";
    for (const FunctionComparison& f : report.functions) {
        os << "  " << std::left << std::setw(20) << f.function << " " << std::setw(10)
           << format_metered(f.metered) << " " << std::setw(10) << f.fixture << " "
           << std::setw(29)
           << (std::to_string(f.baseline_fixture) + " (" + f.baseline_function + ")")
           << format_percent(f.efficiency) << "\n";
        if (!f.note.empty()) os << "      note: " << f.note << "\n";
    }
    os << "  read-only calls      metered    fixture\n";
    for (const CallCostRow& c : report.calls)
        os << "  " << std::left << std::setw(20) << c.method << " " << std::setw(10)
           << format_metered(c.metered) << " " << c.fixture << "\n";
    os << "  metered ordering mintNFT > UserDeviceMapping > approve: "
       << (report.ordering_ok ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_report_csv(const GasReport& report) {
    std::ostringstream os;
    os << "kind,function,metered,fixture,baseline_function,baseline_fixture,efficiency_percent\n";
    for (const FunctionComparison& f : report.functions) {
        os << "function," << f.function << "," << format_metered(f.metered) << "," << f.fixture
           << "," << f.baseline_function << "," << f.baseline_fixture << "," << std::fixed
           << std::setprecision(1) << f.efficiency << "\n";
    }
    for (const CallCostRow& c : report.calls)
        os << "call," << c.method << "," << format_metered(c.metered) << "," << c.fixture
           << ",,,\n";
    return os.str();
}

std::string render_report_json(const GasReport& report) {
    nlohmann::json j;
    j["functions"] = nlohmann::json::array();
    for (const FunctionComparison& f : report.functions) {
        nlohmann::json item;
        item["function"] = f.function;
        item["baseline_function"] = f.baseline_function;
        if (f.metered) item["metered"] = *f.metered;
        else item["metered"] = nullptr;
        item["fixture"] = f.fixture;
        item["baseline_fixture"] = f.baseline_fixture;
        item["efficiency_percent"] = f.efficiency;
        item["efficiency_banner"] = banner_percent(f.efficiency);
        if (!f.note.empty()) item["note"] = f.note;
        j["functions"].push_back(item);
    }
    j["calls"] = nlohmann::json::array();
    for (const CallCostRow& c : report.calls) {
        nlohmann::json item;
        item["method"] = c.method;
        if (c.metered) item["metered"] = *c.metered;
        else item["metered"] = nullptr;
        item["fixture"] = c.fixture;
        j["calls"].push_back(item);
    }
    j["metered_ordering_ok"] = report.ordering_ok;
    return j.dump(2) + "\n";
}

double affine_fit_relative_residual(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) return std::numeric_limits<double>::infinity();
    double n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) return std::numeric_limits<double>::infinity();
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;

    double worst = 0;
    for (auto [x, y] : points) {
        double predicted = intercept + slope * x;
        worst = std::max(worst, std::abs(predicted - y) / y);
    }
    return worst;
}

bool VerifyReport::all_ok() const {
    for (const CheckResult& check : checks)
        if (check.status == CheckResult::Status::Fail) return false;
    return true;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    for (const CheckResult& check : checks) {
        const char* tag = check.status == CheckResult::Status::Pass   ? "PASS"
                          : check.status == CheckResult::Status::Fail ? "FAIL"
                                                                      : "SKIP";
        os << "[" << tag << "] " << check.name << ": " << check.detail << "\n";
    }
    return os.str();
}

VerifyReport verify_trace(const std::vector<StepRecord>& rows, const std::string& raw_csv) {
    VerifyReport report;

    {
        CheckResult check;
        check.name = "gas-ordering";
        auto mint = first_gas(rows, "mintNFT");
        auto udm = first_gas(rows, "UserDeviceMapping");
        auto approve = first_gas(rows, "approve");
        if (!mint || !udm || !approve) {
            check.status = CheckResult::Status::Skip;
            check.detail = "trace lacks a mintNFT/UserDeviceMapping/approve transaction";
        } else {
            bool ok = *mint * 100 > *udm * 105 && *udm * 100 > *approve * 105;
            check.status = ok ? CheckResult::Status::Pass : CheckResult::Status::Fail;
            std::ostringstream d;
            d << "mintNFT=" << *mint << " UserDeviceMapping=" << *udm << " approve=" << *approve
              << " (each must exceed the next by >5%)";
            check.detail = d.str();
        }
        report.checks.push_back(check);
    }

    {
        CheckResult check;
        check.name = "zero-fee-calls";
        std::uint64_t total_fee = 0;
        std::size_t calls = 0, costless = 0;
        for (const StepRecord& row : rows) {
            if (row.directive.rfind("call ", 0) != 0) continue;
            ++calls;
            total_fee += row.fee;
            if (row.execution_cost == 0) ++costless;
        }
        bool ok = total_fee == 0 && costless == 0;
        check.status = ok ? CheckResult::Status::Pass : CheckResult::Status::Fail;
        std::ostringstream d;
        d << calls << " calls, total fee " << total_fee << ", " << costless
          << " with zero execution cost";
        check.detail = d.str();
        report.checks.push_back(check);
    }

    {
        CheckResult check;
        check.name = "mint-linearity";
        std::vector<std::pair<double, double>> points;
        std::set<std::uint64_t> sizes;
        for (const StepRecord& row : rows) {
            if (row.operation != "mintNFT" || row.status != "ok") continue;
            auto fog_len = extra_value(row.extra, "fog_len");
            if (!fog_len) continue;
            points.emplace_back(static_cast<double>(*fog_len), static_cast<double>(row.gas_used));
            sizes.insert(*fog_len);
        }
        if (sizes.size() < 3) {
            check.status = CheckResult::Status::Skip;
            check.detail = "needs mints over >=3 distinct fog list sizes";
        } else {
            double residual = affine_fit_relative_residual(points);
            check.status =
                residual < 0.01 ? CheckResult::Status::Pass : CheckResult::Status::Fail;
            std::ostringstream d;
            d << points.size() << " mints, max relative residual " << std::scientific
              << std::setprecision(3) << residual << " (tolerance 1e-2)";
            check.detail = d.str();
        }
        report.checks.push_back(check);
    }

    {
        CheckResult check;
        check.name = "determinism-hash";
        check.status = CheckResult::Status::Pass;
        check.detail = keccak256(raw_csv).hex();
        report.checks.push_back(check);
    }

    return report;
}

}  // namespace dscot
