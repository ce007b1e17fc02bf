// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/gas.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dscot {

namespace {

std::map<std::string, std::uint64_t GasSchedule::*> schedule_fields() {
    return {
        {"tx_base", &GasSchedule::tx_base},
        {"storage_write_new", &GasSchedule::storage_write_new},
        {"storage_write_update", &GasSchedule::storage_write_update},
        {"storage_read", &GasSchedule::storage_read},
        {"log_base", &GasSchedule::log_base},
        {"log_topic", &GasSchedule::log_topic},
        {"log_data_byte", &GasSchedule::log_data_byte},
        {"hash_base", &GasSchedule::hash_base},
        {"hash_word", &GasSchedule::hash_word},
        {"loop_iteration", &GasSchedule::loop_iteration},
        {"call_overhead", &GasSchedule::call_overhead},
    };
}

}  // namespace

GasSchedule GasSchedule::from_text(std::string_view text) {
    GasSchedule schedule;
    auto fields = schedule_fields();
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("gas schedule line " + std::to_string(line_no) +
                                        ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto it = fields.find(key);
        if (it == fields.end())
            throw std::invalid_argument("gas schedule line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        schedule.*(it->second) = std::stoull(value);
    }
    return schedule;
}

GasSchedule GasSchedule::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gas schedule: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

std::string GasSchedule::to_text() const {
    std::ostringstream os;
    for (const auto& [key, member] : schedule_fields()) os << key << "=" << this->*member << "\n";
    return os.str();
}

std::uint64_t meter_primitives(const OpTrace& t, const GasSchedule& s) {
    return t.storage_reads * s.storage_read + t.storage_writes_new * s.storage_write_new +
           t.storage_writes_update * s.storage_write_update + t.log_count * s.log_base +
           t.log_topics * s.log_topic + t.log_data_bytes * s.log_data_byte +
           t.hash_count * s.hash_base + t.hash_words * s.hash_word +
           t.loop_iterations * s.loop_iteration;
}

std::uint64_t meter_transaction(const OpTrace& t, const GasSchedule& s) {
    return s.tx_base + s.call_overhead + meter_primitives(t, s);
}

std::uint64_t meter_call(const OpTrace& t, const GasSchedule& s) {
    return s.call_overhead + meter_primitives(t, s);
}

}  // namespace dscot
