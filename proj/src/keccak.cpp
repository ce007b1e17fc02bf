// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/keccak.hpp"

#include <cstring>

namespace dscot {

namespace {

constexpr int kRounds = 24;
constexpr std::size_t kRateBytes = 136;  // 1088-bit rate for 256-bit output

constexpr std::uint64_t kRoundConstants[kRounds] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// rotation offsets, indexed [x][y]
constexpr int kRotation[5][5] = {
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
};

constexpr std::uint64_t rotl(std::uint64_t v, int n) {
    return n == 0 ? v : (v << n) | (v >> (64 - n));
}

void keccak_f1600(std::uint64_t a[5][5]) {
    for (int round = 0; round < kRounds; ++round) {
        // theta
        std::uint64_t c[5];
        for (int x = 0; x < 5; ++x)
            c[x] = a[x][0] ^ a[x][1] ^ a[x][2] ^ a[x][3] ^ a[x][4];
        for (int x = 0; x < 5; ++x) {
            std::uint64_t d = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 5; ++y) a[x][y] ^= d;
        }
        // rho + pi
        std::uint64_t b[5][5];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y][(2 * x + 3 * y) % 5] = rotl(a[x][y], kRotation[x][y]);
        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                a[x][y] = b[x][y] ^ (~b[(x + 1) % 5][y] & b[(x + 2) % 5][y]);
        // iota
        a[0][0] ^= kRoundConstants[round];
    }
}

void absorb_block(std::uint64_t a[5][5], const std::uint8_t* block) {
    for (std::size_t i = 0; i < kRateBytes / 8; ++i) {
        std::uint64_t lane;
        std::memcpy(&lane, block + 8 * i, 8);  // little-endian hosts only
        a[i % 5][i / 5] ^= lane;
    }
    keccak_f1600(a);
}

}  // namespace

Digest32 keccak256(std::span<const std::uint8_t> data) {
    std::uint64_t state[5][5] = {};

    std::size_t offset = 0;
    while (data.size() - offset >= kRateBytes) {
        absorb_block(state, data.data() + offset);
        offset += kRateBytes;
    }

    // final block: pad10*1 with 0x01 domain byte
    std::uint8_t last[kRateBytes] = {};
    std::size_t tail = data.size() - offset;
    if (tail > 0) std::memcpy(last, data.data() + offset, tail);
    last[tail] = 0x01;
    last[kRateBytes - 1] |= 0x80;
    absorb_block(state, last);

    Digest32 out;
    for (int i = 0; i < 4; ++i) {
        std::uint64_t lane = state[i % 5][i / 5];
        std::memcpy(out.bytes.data() + 8 * i, &lane, 8);
    }
    return out;
}

Digest32 keccak256(const Bytes& data) {
    return keccak256(std::span<const std::uint8_t>(data));
}

Digest32 keccak256(std::string_view ascii) {
    return keccak256(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(ascii.data()), ascii.size()));
}

}  // namespace dscot
