// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dscot/scenario.hpp"

using namespace dscot;

namespace {

std::string read_fixture(const std::string& name) {
    for (const char* prefix : {"scenarios/", "../scenarios/", "../../scenarios/"}) {
        std::ifstream in(prefix + name);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        }
    }
    FAIL("fixture not found: ", name);
    return "";
}

}  // namespace

TEST_CASE("canonical fixture parses to nine steps") {
    ScenarioScript script = parse_scenario(read_fixture("canonical.dscot"));
    CHECK(script.steps.size() == 9);
    CHECK(script.seed == 42);
    CHECK(script.validators == 4);
    CHECK(script.clock_step == 1);
    CHECK(script.start_time == 1657188735);
}

TEST_CASE("empty script is valid") {
    ScenarioScript script = parse_scenario("");
    CHECK(script.steps.empty());
    CHECK(parse_scenario("# only comments\n\n").steps.empty());
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("unknown directive") {
        try {
            parse_scenario("owner-init owner\nfrobnicate x\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(std::string(e.what()).find("unknown directive") != std::string::npos);
        }
    }
    SUBCASE("unresolved principal") {
        try {
            parse_scenario("owner-init owner\nmint ghost ghost ghost\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(std::string(e.what()).find("unknown principal") != std::string::npos);
        }
    }
    SUBCASE("malformed hex address") {
        CHECK_THROWS_AS(parse_scenario("owner-init owner\napprove owner 0x1234\n"), ParseError);
    }
    SUBCASE("duplicate principal") {
        CHECK_THROWS_AS(parse_scenario("create-principal a user\ncreate-principal a user\n"),
                        ParseError);
    }
    SUBCASE("bad role") {
        CHECK_THROWS_AS(parse_scenario("create-principal a wizard\n"), ParseError);
    }
    SUBCASE("header after first step") {
        CHECK_THROWS_AS(parse_scenario("owner-init owner\nseed 3\n"), ParseError);
    }
    SUBCASE("fault injection requires four validators") {
        CHECK_THROWS_AS(parse_scenario("validators 2\nowner-init o\ninject-fault 1\n"),
                        ParseError);
    }
}

TEST_CASE("canonical run emits the flow's events in order") {
    ScenarioScript script = parse_scenario(read_fixture("canonical.dscot"));
    RunTrace trace = run_scenario(script);

    std::vector<std::string> event_names;
    for (const StepRecord& step : trace.steps)
        for (const std::string& ev : step.events)
            event_names.push_back(ev.substr(0, ev.find('(')));
    CHECK(event_names == std::vector<std::string>{"AdminAdded", "FogDeviceMappingAdded",
                                                  "UserDeviceMappingAdded", "Authenticated",
                                                  "TokenCreated"});

    // the mint block carries the canonical timestamp
    CHECK(trace.steps.back().events.back().find("timestamp=1657188740") != std::string::npos);
    CHECK(trace.final_state.find(" 1657188740 ") != std::string::npos);
}

TEST_CASE("identical scripts replay to identical traces") {
    ScenarioScript script = parse_scenario(read_fixture("canonical.dscot"));
    RunTrace a = run_scenario(script);
    RunTrace b = run_scenario(script);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_csv() == b.to_csv());
    CHECK(a.chain_export == b.chain_export);
}

TEST_CASE("two faulty validators of four stall the mint") {
    ScenarioScript script = parse_scenario(read_fixture("faulty_quorum.dscot"));
    RunTrace trace = run_scenario(script);
    const StepRecord& mint = trace.steps.back();
    CHECK(mint.operation == "mintNFT");
    CHECK(mint.status == "no-commit");
    CHECK(mint.events.empty());
    CHECK(trace.final_state.find("tokens 0") != std::string::npos);
}

TEST_CASE("stalled transactions commit once quorum returns") {
    std::string text =
        "create-principal admin2 admin\n"
        "create-principal fog1 fog\n"
        "create-principal dev1 device\n"
        "create-principal user1 user\n"
        "owner-init owner\n"
        "map-device owner fog1 dev1\n"
        "add-user owner user1 dev1 fog1\n"
        "inject-fault 1\n"
        "inject-fault 2\n"
        "mint user1 dev1 fog1\n"
        "mint user1 dev1 fog1\n"   // queued behind the stalled one
        "inject-fault 1 off\n"
        "inject-fault 2 off\n"
        "approve owner admin2\n";  // first committed block drains the backlog
    RunTrace trace = run_scenario(parse_scenario(text));

    CHECK(trace.steps[9].status == "no-commit");
    CHECK(trace.steps[10].status == "no-commit");
    const StepRecord& approve = trace.steps[13];
    CHECK(approve.status == "ok");
    // both stalled mints landed in the same block as the approve
    CHECK(trace.final_state.find("tokens 2") != std::string::npos);
    std::size_t last_block = trace.chain_export.find("txs 3");
    CHECK(last_block != std::string::npos);
}

TEST_CASE("seed changes principal addresses deterministically") {
    std::string text = "owner-init owner\n";
    ScenarioScript s1 = parse_scenario(text);
    ScenarioScript s2 = parse_scenario(text);
    s2.seed = s1.seed + 1;
    RunTrace t1 = run_scenario(s1);
    RunTrace t2 = run_scenario(s2);
    CHECK(t1.final_state != t2.final_state);
    CHECK(run_scenario(s1).final_state == t1.final_state);
}

TEST_CASE("call steps are recorded with execution cost and zero fee") {
    std::string text =
        "owner-init owner\n"
        "call owner No_ofAdmins\n";
    RunTrace trace = run_scenario(parse_scenario(text));
    const StepRecord& call = trace.steps.back();
    CHECK(call.operation == "No_ofAdmins");
    CHECK(call.status == "ok");
    CHECK(call.fee == 0);
    CHECK(call.execution_cost > 0);
    CHECK(call.result == "uint256: 1");
}

TEST_CASE("removal directives drive the registry end to end") {
    std::string text =
        "create-principal admin2 admin\n"
        "create-principal fog1 fog\n"
        "create-principal dev1 device\n"
        "create-principal user1 user\n"
        "owner-init owner\n"
        "approve owner admin2\n"
        "map-device owner fog1 dev1\n"
        "add-user owner user1 dev1 fog1\n"
        "del-user admin2 user1\n"
        "del-dev admin2 fog1\n"
        "del-admin owner admin2\n"
        "add-user owner user1 dev1 fog1\n"  // fog list now empty
        "approve owner 0x00000000000000000000000000000000000000aa\n";
    RunTrace trace = run_scenario(parse_scenario(text));

    auto status_of = [&](int index) { return trace.steps[size_t(index - 1)].status; };
    CHECK(status_of(9) == "ok");
    CHECK(trace.steps[8].events[0].starts_with("UserDeviceAllMappingDeleted("));
    CHECK(status_of(10) == "ok");
    CHECK(trace.steps[9].events[0].starts_with("FogDeviceAllMappingDeleted("));
    CHECK(status_of(11) == "ok");
    CHECK(trace.steps[10].events[0].starts_with("AdminDeleted("));
    CHECK(status_of(12) == "failed: DeviceDoesNotExist");
    CHECK(status_of(13) == "ok");  // raw-hex approve target
    CHECK(trace.final_state.find("users_devices 0") != std::string::npos);
    CHECK(trace.final_state.find("fog_devices 0") != std::string::npos);
    CHECK(trace.final_state.find("admins 2") != std::string::npos);
}

TEST_CASE("advance-clock shifts subsequent block timestamps") {
    std::string text =
        "start-time 1000\n"
        "clock-step 1\n"
        "create-principal fog1 fog\n"
        "create-principal dev1 device\n"
        "owner-init owner\n"
        "advance-clock 100\n"
        "map-device owner fog1 dev1\n";
    RunTrace trace = run_scenario(parse_scenario(text));
    CHECK(trace.chain_export.find("block 2 time 1102 ") != std::string::npos);
}
