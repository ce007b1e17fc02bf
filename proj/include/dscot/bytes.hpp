// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dscot {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(std::string_view hex);

/// 32-byte digest (token ids, tx hashes, state roots).
struct Digest32 {
    std::array<std::uint8_t, 32> bytes{};

    auto operator<=>(const Digest32&) const = default;

    std::string hex() const { return to_hex(bytes); }
    bool is_zero() const;
    static Digest32 parse(std::string_view hex);
};

/// 20-byte externally owned account identifier.
struct Address {
    std::array<std::uint8_t, 20> bytes{};

    auto operator<=>(const Address&) const = default;

    std::string hex() const { return to_hex(bytes); }
    bool is_zero() const;
    static Address parse(std::string_view hex);
};

void append_bytes(Bytes& out, std::span<const std::uint8_t> data);
void append_u64_be(Bytes& out, std::uint64_t value);
// value occupies the low 8 bytes of a 32-byte big-endian word
void append_u256_be(Bytes& out, std::uint64_t value);

}  // namespace dscot
