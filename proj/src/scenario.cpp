// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/scenario.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "dscot/ledger.hpp"
#include "dscot/sessions.hpp"

namespace dscot {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool looks_like_hex(const std::string& tok) {
    return tok.starts_with("0x") || tok.starts_with("0X");
}

std::uint64_t parse_u64(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("invalid ") + what + ": '" + tok + "'");
    }
}

void check_address_token(const std::string& tok, const std::set<std::string>& principals,
                         int line) {
    if (looks_like_hex(tok)) {
        try {
            Address::parse(tok);
        } catch (const std::exception&) {
            throw ParseError(line, "malformed address hex: '" + tok + "'");
        }
        return;
    }
    if (!principals.contains(tok))
        throw ParseError(line, "unknown principal '" + tok + "'");
}

const std::set<std::string> kCallMethods = {"adminAdd",      "No_ofAdmins", "users_devices",
                                            "tokens_Issued", "balanceOf",   "ownerOf"};

}  // namespace

ScenarioScript parse_scenario(std::string_view text) {
    ScenarioScript script;
    std::set<std::string> principals;
    bool steps_started = false;
    bool faults_injected = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0];
        std::vector<std::string> args(tokens.begin() + 1, tokens.end());

        auto expect_args = [&](std::size_t n) {
            if (args.size() != n)
                throw ParseError(line_no, keyword + " expects " + std::to_string(n) +
                                              " argument(s), got " + std::to_string(args.size()));
        };

        // header directives
        if (keyword == "seed" || keyword == "validators" || keyword == "clock-step" ||
            keyword == "start-time") {
            if (steps_started)
                throw ParseError(line_no, keyword + " must precede the first step");
            expect_args(1);
            std::uint64_t v = parse_u64(args[0], line_no, keyword.c_str());
            if (keyword == "seed") script.seed = v;
            else if (keyword == "validators") script.validators = static_cast<std::uint32_t>(v);
            else if (keyword == "clock-step") script.clock_step = v;
            else script.start_time = v;
            continue;
        }

        ScenarioStep step;
        step.line = line_no;
        step.args = args;
        {
            std::string trimmed;
            for (const std::string& t : tokens) {
                if (!trimmed.empty()) trimmed += ' ';
                trimmed += t;
            }
            step.directive = trimmed;
        }

        if (keyword == "create-principal") {
            expect_args(2);
            if (!role_from_name(args[1]))
                throw ParseError(line_no, "unknown role '" + args[1] + "'");
            if (principals.contains(args[0]))
                throw ParseError(line_no, "principal '" + args[0] + "' already declared");
            principals.insert(args[0]);
            step.kind = StepKind::CreatePrincipal;
        } else if (keyword == "owner-init") {
            expect_args(1);
            principals.insert(args[0]);  // implicit owner declaration
            step.kind = StepKind::OwnerInit;
        } else if (keyword == "approve" || keyword == "del-admin") {
            expect_args(2);
            if (!principals.contains(args[0]))
                throw ParseError(line_no, "unknown principal '" + args[0] + "'");
            check_address_token(args[1], principals, line_no);
            step.kind = keyword == "approve" ? StepKind::Approve : StepKind::DelAdmin;
        } else if (keyword == "map-device") {
            expect_args(3);
            for (int i = 0; i < 3; ++i)
                if (!principals.contains(args[i]))
                    throw ParseError(line_no, "unknown principal '" + args[i] + "'");
            step.kind = StepKind::MapDevice;
        } else if (keyword == "del-dev") {
            expect_args(2);
            if (!principals.contains(args[0]))
                throw ParseError(line_no, "unknown principal '" + args[0] + "'");
            check_address_token(args[1], principals, line_no);
            step.kind = StepKind::DelDev;
        } else if (keyword == "add-user") {
            expect_args(4);
            for (int i = 0; i < 4; ++i)
                if (!principals.contains(args[i]))
                    throw ParseError(line_no, "unknown principal '" + args[i] + "'");
            step.kind = StepKind::AddUser;
        } else if (keyword == "del-user") {
            expect_args(2);
            if (!principals.contains(args[0]))
                throw ParseError(line_no, "unknown principal '" + args[0] + "'");
            check_address_token(args[1], principals, line_no);
            step.kind = StepKind::DelUser;
        } else if (keyword == "mint") {
            expect_args(3);
            for (int i = 0; i < 3; ++i)
                if (!principals.contains(args[i]))
                    throw ParseError(line_no, "unknown principal '" + args[i] + "'");
            step.kind = StepKind::Mint;
        } else if (keyword == "call") {
            if (args.size() < 2) throw ParseError(line_no, "call expects <caller> <method> ...");
            if (!principals.contains(args[0]))
                throw ParseError(line_no, "unknown principal '" + args[0] + "'");
            const std::string& method = args[1];
            if (!kCallMethods.contains(method))
                throw ParseError(line_no, "unknown call method '" + method + "'");
            if (method == "users_devices") {
                if (args.size() != 4)
                    throw ParseError(line_no, "users_devices expects <user> <index>");
                check_address_token(args[2], principals, line_no);
                parse_u64(args[3], line_no, "index");
            } else if (method == "balanceOf") {
                if (args.size() != 3) throw ParseError(line_no, "balanceOf expects <address>");
                check_address_token(args[2], principals, line_no);
            } else if (method == "ownerOf") {
                if (args.size() != 3) throw ParseError(line_no, "ownerOf expects <token-id>");
                try {
                    Digest32::parse(args[2]);
                } catch (const std::exception&) {
                    throw ParseError(line_no, "malformed token id: '" + args[2] + "'");
                }
            } else if (args.size() != 2) {
                throw ParseError(line_no, method + " expects no arguments");
            }
            step.kind = StepKind::Call;
        } else if (keyword == "advance-clock") {
            expect_args(1);
            parse_u64(args[0], line_no, "seconds");
            step.kind = StepKind::AdvanceClock;
        } else if (keyword == "inject-fault") {
            if (args.size() != 1 && args.size() != 2)
                throw ParseError(line_no, "inject-fault expects <validator> [on|off]");
            std::uint64_t idx = parse_u64(args[0], line_no, "validator index");
            if (idx >= script.validators)
                throw ParseError(line_no, "validator index out of range");
            if (args.size() == 2 && args[1] != "on" && args[1] != "off")
                throw ParseError(line_no, "inject-fault flag must be on or off");
            if (args.size() == 1 || args[1] == "on") faults_injected = true;
            step.kind = StepKind::InjectFault;
        } else {
            throw ParseError(line_no, "unknown directive '" + keyword + "'");
        }

        steps_started = true;
        script.steps.push_back(std::move(step));
    }

    if (faults_injected && script.validators < 4)
        throw ParseError(0, "fault injection requires at least 4 validators");
    return script;
}

namespace {

class ScenarioRunner {
public:
    ScenarioRunner(const ScenarioScript& script, const GasSchedule& schedule)
        : script_(script),
          ledger_(schedule, script.validators, script.start_time),
          sessions_(ledger_),
          clock_(script.start_time) {}

    RunTrace run() {
        RunTrace trace;
        trace.seed = script_.seed;
        trace.validators = script_.validators;
        int index = 0;
        for (const ScenarioStep& step : script_.steps) {
            StepRecord record;
            record.index = ++index;
            record.directive = step.directive;
            record.operation = "-";
            execute(step, record);
            if (!pending_pass_.empty()) {
                trace.passes.emplace_back(record.index, std::move(pending_pass_));
                pending_pass_.clear();
            }
            trace.steps.push_back(std::move(record));
        }
        trace.chain_export = ledger_.export_chain();
        trace.final_state = ledger_.registry() ? ledger_.registry()->snapshot() : "";
        return trace;
    }

private:
    Principal& principal(const std::string& name, Role fallback_role) {
        auto it = principals_.find(name);
        if (it != principals_.end()) return it->second;
        auto [inserted, _] = principals_.emplace(
            name, Principal::create(fallback_role, keypair_from_seed(script_.seed, name)));
        return inserted->second;
    }

    Address resolve_address(const std::string& tok) {
        if (looks_like_hex(tok)) return Address::parse(tok);
        return principal(tok, Role::User).address;
    }

    std::uint64_t next_block_time() {
        clock_ += script_.clock_step;
        return clock_;
    }

    void record_session(StepRecord& record, const SessionOutcome& outcome) {
        record.gas_used = outcome.gas_used;
        record.fee = outcome.gas_used;
        for (const Event& ev : outcome.events) record.events.push_back(event_to_text(ev));
        if (outcome.ok) {
            record.status = "ok";
        } else if (outcome.failure.starts_with("no quorum")) {
            record.status = "no-commit";
            if (!record.extra.empty()) record.extra += ';';
            record.extra += "rounds=" + std::to_string(outcome.rounds_attempted);
        } else {
            record.status = "failed: " + outcome.failure;
        }
    }

    void run_direct_tx(StepRecord& record, Principal& sender, Operation op) {
        Transaction tx = make_transaction(sender.keypair, std::move(op), ledger_.pending_nonce(sender.address));
        try {
            ledger_.submit(tx);
        } catch (const SubmitError& err) {
            record.status = std::string("rejected: ") + err.what();
            return;
        }
        Ledger::ProduceResult produced = ledger_.produce_block(next_block_time());
        if (!produced.committed) {
            record.status = "no-commit";
            record.extra = "rounds=" + std::to_string(produced.rounds.size());
            return;
        }
        const Receipt& receipt = ledger_.get_receipt(tx.hash());
        record.gas_used = receipt.gas_used;
        record.fee = receipt.gas_used;
        for (const Event& ev : receipt.events) record.events.push_back(event_to_text(ev));
        record.status = receipt.status == TxStatus::Accepted
                            ? "ok"
                            : "reverted: " + receipt.revert_reason;
    }

    void execute(const ScenarioStep& step, StepRecord& record) {
        switch (step.kind) {
            case StepKind::CreatePrincipal: {
                Role role = *role_from_name(step.args[1]);
                principal(step.args[0], role);
                record.status = "ok";
                break;
            }
            case StepKind::OwnerInit: {
                Principal& owner = principal(step.args[0], Role::Owner);
                record.operation = "deploy";
                record_session(record, sessions_.owner_init(owner, next_block_time()));
                break;
            }
            case StepKind::Approve: {
                record.operation = "approve";
                run_direct_tx(record, principal(step.args[0], Role::Admin),
                              Operation{OpType::Approve, {resolve_address(step.args[1])}});
                break;
            }
            case StepKind::DelAdmin: {
                record.operation = "delAdmin";
                run_direct_tx(record, principal(step.args[0], Role::Admin),
                              Operation{OpType::DelAdmin, {resolve_address(step.args[1])}});
                break;
            }
            case StepKind::MapDevice: {
                record.operation = "DeviceFogMapping";
                Principal& owner = principal(step.args[0], Role::Owner);
                Principal& fog = principal(step.args[1], Role::Fog);
                Principal& device = principal(step.args[2], Role::Device);
                record_session(record,
                               sessions_.map_device_session(owner, fog, device, next_block_time()));
                break;
            }
            case StepKind::DelDev: {
                record.operation = "delDev";
                run_direct_tx(record, principal(step.args[0], Role::Admin),
                              Operation{OpType::DelDev, {resolve_address(step.args[1])}});
                break;
            }
            case StepKind::AddUser: {
                record.operation = "UserDeviceMapping";
                Principal& owner = principal(step.args[0], Role::Owner);
                Principal& user = principal(step.args[1], Role::User);
                Principal& device = principal(step.args[2], Role::Device);
                Principal& fog = principal(step.args[3], Role::Fog);
                record_session(
                    record, sessions_.add_user_session(owner, user, device, fog, next_block_time()));
                break;
            }
            case StepKind::DelUser: {
                record.operation = "delUser";
                run_direct_tx(record, principal(step.args[0], Role::Admin),
                              Operation{OpType::DelUser, {resolve_address(step.args[1])}});
                break;
            }
            case StepKind::Mint: {
                record.operation = "mintNFT";
                Principal& user = principal(step.args[0], Role::User);
                Principal& device = principal(step.args[1], Role::Device);
                Principal& fog = principal(step.args[2], Role::Fog);
                if (const Registry* reg = ledger_.registry()) {
                    const auto& state = reg->state();
                    std::size_t fog_len = 0, user_len = 0;
                    if (auto it = state.fog_devices.find(fog.address);
                        it != state.fog_devices.end())
                        fog_len = it->second.size();
                    if (auto it = state.users_devices.find(user.address);
                        it != state.users_devices.end())
                        user_len = it->second.size();
                    record.extra = "fog_len=" + std::to_string(fog_len) +
                                   ";user_len=" + std::to_string(user_len);
                }
                MintAuthResult result =
                    sessions_.mint_auth_session(user, device, fog, next_block_time());
                record_session(record, result.outcome);
                if (result.pass) {
                    record.result = "pass token_id=" + result.pass->token_id.hex();
                    pending_pass_ = result.pass->to_text();
                }
                break;
            }
            case StepKind::Call: {
                const std::string& method = step.args[1];
                record.operation = method;
                Address caller = principal(step.args[0], Role::User).address;
                CallOutcome outcome;
                if (method == "adminAdd") {
                    outcome = ledger_.call_admin_add(caller);
                } else if (method == "No_ofAdmins") {
                    outcome = ledger_.call_no_of_admins(caller);
                } else if (method == "users_devices") {
                    outcome = ledger_.call_users_devices(caller, resolve_address(step.args[2]),
                                                         std::stoull(step.args[3]));
                } else if (method == "tokens_Issued") {
                    outcome = ledger_.call_tokens_issued(caller);
                } else if (method == "balanceOf") {
                    outcome = ledger_.call_balance_of(resolve_address(step.args[2]));
                } else {  // ownerOf
                    outcome = ledger_.call_owner_of(Digest32::parse(step.args[2]));
                }
                record.execution_cost = outcome.execution_cost;
                record.fee = outcome.fee;
                if (outcome.ok) {
                    record.status = "ok";
                    record.result = outcome.value;
                } else {
                    record.status = "error: " + outcome.error;
                }
                break;
            }
            case StepKind::AdvanceClock: {
                clock_ += std::stoull(step.args[0]);
                record.status = "ok";
                break;
            }
            case StepKind::InjectFault: {
                bool on = step.args.size() == 1 || step.args[1] == "on";
                ledger_.set_fault(static_cast<std::uint32_t>(std::stoull(step.args[0])), on);
                record.status = "ok";
                break;
            }
        }
    }

    const ScenarioScript& script_;
    Ledger ledger_;
    SessionManager sessions_;
    std::uint64_t clock_;
    std::map<std::string, Principal> principals_;
    std::string pending_pass_;
};

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string RunTrace::to_text() const {
    std::ostringstream os;
    os << "dscot-run-trace v1\n";
    os << "seed " << seed << "\n";
    os << "validators " << validators << "\n";
    os << "steps " << steps.size() << "\n";
    for (const StepRecord& s : steps) {
        os << "step " << s.index << " | " << s.directive << " | op=" << s.operation
           << " | status=" << s.status << " | gas=" << s.gas_used << " fee=" << s.fee
           << " exec_cost=" << s.execution_cost;
        if (!s.extra.empty()) os << " " << s.extra;
        os << "\n";
        for (const std::string& ev : s.events) os << "  event " << ev << "\n";
        if (!s.result.empty()) os << "  result " << s.result << "\n";
    }
    for (const auto& [step, pass] : passes) {
        os << "pass step " << step << "\n" << pass;
    }
    os << "chain\n" << chain_export;
    os << "state\n" << final_state;
    os << "end\n";
    return os.str();
}

std::string RunTrace::to_csv() const {
    std::ostringstream os;
    os << "step,directive,operation,status,gas_used,fee,execution_cost,events,extra\n";
    for (const StepRecord& s : steps) {
        std::string events;
        for (const std::string& ev : s.events) {
            if (!events.empty()) events += ';';
            events += ev;
        }
        os << s.index << ',' << csv_escape(s.directive) << ',' << s.operation << ','
           << csv_escape(s.status) << ',' << s.gas_used << ',' << s.fee << ','
           << s.execution_cost << ',' << csv_escape(events) << ',' << csv_escape(s.extra) << "\n";
    }
    return os.str();
}

RunTrace run_scenario(const ScenarioScript& script, const GasSchedule& schedule) {
    return ScenarioRunner(script, schedule).run();
}

RunTrace run_scenario(const ScenarioScript& script) {
    return run_scenario(script, GasSchedule{});
}

}  // namespace dscot
