// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/bytes.hpp"

#include <algorithm>
#include <stdexcept>

namespace dscot {

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> data) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "0x";
    out.reserve(2 + data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

bool Digest32::is_zero() const {
    return std::ranges::all_of(bytes, [](std::uint8_t b) { return b == 0; });
}

Digest32 Digest32::parse(std::string_view hex) {
    Bytes raw = from_hex(hex);
    if (raw.size() != 32) throw std::invalid_argument("digest must be 32 bytes");
    Digest32 d;
    std::copy(raw.begin(), raw.end(), d.bytes.begin());
    return d;
}

bool Address::is_zero() const {
    return std::ranges::all_of(bytes, [](std::uint8_t b) { return b == 0; });
}

Address Address::parse(std::string_view hex) {
    Bytes raw = from_hex(hex);
    if (raw.size() != 20) throw std::invalid_argument("address must be 20 bytes");
    Address a;
    std::copy(raw.begin(), raw.end(), a.bytes.begin());
    return a;
}

void append_bytes(Bytes& out, std::span<const std::uint8_t> data) {
    out.insert(out.end(), data.begin(), data.end());
}

void append_u64_be(Bytes& out, std::uint64_t value) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(value >> shift));
}

void append_u256_be(Bytes& out, std::uint64_t value) {
    out.insert(out.end(), 24, 0);
    append_u64_be(out, value);
}

}  // namespace dscot
