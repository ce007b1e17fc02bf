// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dscot {

/// Counts of metering primitives accumulated while executing one operation.
struct OpTrace {
    std::uint64_t storage_reads = 0;
    std::uint64_t storage_writes_new = 0;
    std::uint64_t storage_writes_update = 0;
    std::uint64_t log_count = 0;
    std::uint64_t log_topics = 0;
    std::uint64_t log_data_bytes = 0;
    std::uint64_t hash_count = 0;
    std::uint64_t hash_words = 0;
    std::uint64_t loop_iterations = 0;

    void record_hash(std::size_t input_bytes) {
        hash_count += 1;
        hash_words += (input_bytes + 31) / 32;
    }
    void record_log(unsigned topics, std::size_t data_bytes) {
        log_count += 1;
        log_topics += topics;
        log_data_bytes += data_bytes;
    }
};

/// Per-primitive cost table. Base costs follow the public Ethereum fee
/// schedule; loop_iteration and call_overhead are calibration constants
/// committed in config/gas_schedule.cfg.
struct GasSchedule {
    std::uint64_t tx_base = 21000;
    std::uint64_t storage_write_new = 20000;
    std::uint64_t storage_write_update = 5000;
    std::uint64_t storage_read = 2100;
    std::uint64_t log_base = 375;
    std::uint64_t log_topic = 375;
    std::uint64_t log_data_byte = 8;
    std::uint64_t hash_base = 30;
    std::uint64_t hash_word = 6;
    std::uint64_t loop_iteration = 144;
    std::uint64_t call_overhead = 10000;

    static GasSchedule from_text(std::string_view text);
    static GasSchedule from_file(const std::string& path);
    std::string to_text() const;
};

std::uint64_t meter_primitives(const OpTrace& trace, const GasSchedule& schedule);
/// Gas of a state-modifying transaction.
std::uint64_t meter_transaction(const OpTrace& trace, const GasSchedule& schedule);
/// Execution cost of a read-only call (carries no transaction fee).
std::uint64_t meter_call(const OpTrace& trace, const GasSchedule& schedule);

}  // namespace dscot
