// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dscot/crypto.hpp"
#include "dscot/keccak.hpp"
#include "dscot/registry.hpp"
#include "dscot/report.hpp"
#include "dscot/scenario.hpp"

namespace py = pybind11;
using namespace dscot;

namespace {

Bytes to_bytes(const py::bytes& b) {
    std::string s = b;
    return Bytes(s.begin(), s.end());
}

py::bytes from_bytes(std::span<const std::uint8_t> data) {
    return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

std::vector<std::string> event_texts(const std::vector<Event>& events) {
    std::vector<std::string> out;
    out.reserve(events.size());
    for (const Event& ev : events) out.push_back(event_to_text(ev));
    return out;
}

}  // namespace

PYBIND11_MODULE(dscot, m) {
    m.doc() = "DSCoT NFT-registry and private-ledger simulator";

    m.def("keccak256", [](const py::bytes& data) { return keccak256(to_bytes(data)).hex(); },
          py::arg("data"), "keccak-256 hex digest of raw bytes");

    m.def(
        "encode_packed",
        [](const std::vector<std::string>& address_hex, std::uint64_t timestamp) {
            std::vector<Address> addresses;
            addresses.reserve(address_hex.size());
            for (const std::string& a : address_hex) addresses.push_back(Address::parse(a));
            return from_bytes(encode_packed(addresses, timestamp));
        },
        py::arg("addresses"), py::arg("timestamp"),
        "packed 20-byte addresses followed by a 32-byte big-endian timestamp");

    m.def(
        "mint_token_id",
        [](const std::string& device, const std::string& fog, const std::string& sender,
           std::uint64_t timestamp) {
            return mint_token_id(Address::parse(device), Address::parse(fog),
                                 Address::parse(sender), timestamp)
                .hex();
        },
        py::arg("device"), py::arg("fog"), py::arg("sender"), py::arg("timestamp"));

    m.def(
        "keygen",
        [](std::uint64_t seed, const std::string& name) {
            KeyPair kp = keypair_from_seed(seed, name);
            py::dict out;
            out["address"] = derive_address(kp.public_key).hex();
            out["public_key"] = to_hex(kp.public_key);
            out["private_key"] = to_hex(kp.private_key);
            return out;
        },
        py::arg("seed"), py::arg("name"));

    m.def(
        "sign",
        [](const std::string& private_key_hex, const py::bytes& message) {
            Bytes priv = from_hex(private_key_hex);
            if (priv.size() != 32) throw std::invalid_argument("private key must be 32 bytes");
            std::array<std::uint8_t, 32> key{};
            std::copy(priv.begin(), priv.end(), key.begin());
            return to_hex(dscot::sign(keypair_from_private(key), to_bytes(message)));
        },
        py::arg("private_key"), py::arg("message"));

    m.def(
        "verify",
        [](const std::string& public_key_hex, const py::bytes& message,
           const std::string& signature_hex) {
            return dscot::verify(from_hex(public_key_hex), to_bytes(message),
                                 from_hex(signature_hex));
        },
        py::arg("public_key"), py::arg("message"), py::arg("signature"));

    py::class_<Registry>(m, "Registry")
        .def(py::init([](const std::string& creator) {
                 return Registry(Address::parse(creator));
             }),
             py::arg("creator"))
        .def("approve",
             [](Registry& reg, const std::string& sender, const std::string& new_admin) {
                 OpTrace t;
                 return event_texts(reg.approve(Address::parse(sender), Address::parse(new_admin), t));
             })
        .def("del_admin",
             [](Registry& reg, const std::string& sender, const std::string& admin) {
                 OpTrace t;
                 return event_texts(reg.del_admin(Address::parse(sender), Address::parse(admin), t));
             })
        .def("device_fog_mapping",
             [](Registry& reg, const std::string& sender, const std::string& fog,
                const std::string& device) {
                 OpTrace t;
                 return event_texts(reg.device_fog_mapping(Address::parse(sender),
                                                           Address::parse(fog),
                                                           Address::parse(device), t));
             })
        .def("del_dev",
             [](Registry& reg, const std::string& sender, const std::string& fog) {
                 OpTrace t;
                 return event_texts(reg.del_dev(Address::parse(sender), Address::parse(fog), t));
             })
        .def("user_device_mapping",
             [](Registry& reg, const std::string& sender, const std::string& user,
                const std::string& device, const std::string& fog) {
                 OpTrace t;
                 return event_texts(reg.user_device_mapping(Address::parse(sender),
                                                            Address::parse(user),
                                                            Address::parse(device),
                                                            Address::parse(fog), t));
             })
        .def("del_user",
             [](Registry& reg, const std::string& sender, const std::string& user) {
                 OpTrace t;
                 return event_texts(reg.del_user(Address::parse(sender), Address::parse(user), t));
             })
        .def("mint_nft",
             [](Registry& reg, const std::string& sender, const std::string& device,
                const std::string& fog, std::uint64_t timestamp) {
                 OpTrace t;
                 return event_texts(reg.mint_nft(Address::parse(sender), Address::parse(device),
                                                 Address::parse(fog), timestamp, t));
             })
        .def("no_of_admins",
             [](const Registry& reg, const std::string& caller) {
                 OpTrace t;
                 return reg.no_of_admins(Address::parse(caller), t);
             })
        .def("admin_add",
             [](const Registry& reg, const std::string& caller) {
                 OpTrace t;
                 std::vector<std::string> out;
                 for (const Address& a : reg.admin_add(Address::parse(caller), t))
                     out.push_back(a.hex());
                 return out;
             })
        .def("tokens_issued",
             [](const Registry& reg, const std::string& caller) {
                 OpTrace t;
                 std::vector<std::pair<std::string, std::uint64_t>> out;
                 for (const Token& token : reg.tokens_issued(Address::parse(caller), t))
                     out.emplace_back(token.token_id.hex(), token.timestamp);
                 return out;
             })
        .def("balance_of",
             [](const Registry& reg, const std::string& owner) {
                 OpTrace t;
                 return reg.balance_of(Address::parse(owner), t);
             })
        .def("snapshot", &Registry::snapshot);

    m.def(
        "run_scenario",
        [](const std::string& script_text, const std::string& schedule_text) {
            ScenarioScript script = parse_scenario(script_text);
            GasSchedule schedule = schedule_text.empty() ? GasSchedule{}
                                                         : GasSchedule::from_text(schedule_text);
            RunTrace trace = run_scenario(script, schedule);
            py::dict out;
            out["text"] = trace.to_text();
            out["csv"] = trace.to_csv();
            out["chain"] = trace.chain_export;
            out["state"] = trace.final_state;
            py::list passes;
            for (const auto& [step, pass] : trace.passes)
                passes.append(py::make_tuple(step, pass));
            out["passes"] = passes;
            return out;
        },
        py::arg("script"), py::arg("schedule") = std::string(),
        "parse and run a scenario script; returns its trace exports");

    m.def(
        "report",
        [](const std::string& trace_csv, const std::string& format) {
            auto rows = parse_trace_csv(trace_csv);
            GasReport report = build_report(rows);
            if (format == "csv") return render_report_csv(report);
            if (format == "json") return render_report_json(report);
            return render_report_text(report);
        },
        py::arg("trace_csv"), py::arg("format") = std::string("text"));

    m.def(
        "verify_trace",
        [](const std::string& trace_csv) {
            auto rows = parse_trace_csv(trace_csv);
            VerifyReport report = dscot::verify_trace(rows, trace_csv);
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const CheckResult& check : report.checks) {
                const char* status = check.status == CheckResult::Status::Pass   ? "pass"
                                     : check.status == CheckResult::Status::Fail ? "fail"
                                                                                 : "skip";
                out.emplace_back(check.name, status, check.detail);
            }
            return out;
        },
        py::arg("trace_csv"), "acceptance checks over a trace CSV");

    py::dict fixtures;
    fixtures["dscot_mint"] = PublishedFixtures::dscot_mint;
    fixtures["dscot_approve"] = PublishedFixtures::dscot_approve;
    fixtures["dscot_user_device_mapping"] = PublishedFixtures::dscot_user_device_mapping;
    fixtures["puf_create_token"] = PublishedFixtures::puf_create_token;
    fixtures["puf_start_owner_engagement"] = PublishedFixtures::puf_start_owner_engagement;
    fixtures["puf_start_user_engagement"] = PublishedFixtures::puf_start_user_engagement;
    fixtures["call_admin_add"] = PublishedFixtures::call_admin_add;
    fixtures["call_no_of_admins"] = PublishedFixtures::call_no_of_admins;
    fixtures["call_users_devices"] = PublishedFixtures::call_users_devices;
    fixtures["call_tokens_issued"] = PublishedFixtures::call_tokens_issued;
    m.attr("FIXTURES") = fixtures;

    m.def("efficiency_percent", &efficiency_percent, py::arg("dscot_gas"), py::arg("baseline_gas"));
}
