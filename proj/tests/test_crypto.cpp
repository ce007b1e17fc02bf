// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "dscot/crypto.hpp"
#include "dscot/keccak.hpp"

using namespace dscot;

namespace {

Address addr(std::uint8_t fill) {
    Address a;
    a.bytes.fill(fill);
    return a;
}

}  // namespace

TEST_CASE("keccak256 matches published vectors") {
    CHECK(keccak256("").hex() ==
          "0xc5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
    CHECK(keccak256("abc").hex() ==
          "0x4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
    CHECK(keccak256("The quick brown fox jumps over the lazy dog").hex() ==
          "0x4d741b6f1eb29cb2a9b9911c82f56fa8d73b04959d3d9d222895df6c0b28aa15");
}

TEST_CASE("keccak256 multi-block input") {
    // 200 bytes (0x00..0xc7) spans two 136-byte rate blocks
    Bytes data(200);
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<std::uint8_t>(i);
    CHECK(keccak256(data).hex() ==
          "0xbfb0aa97863e797943cf7c33bb7e880bb4543f3d2703c0923c6901c2af57b890");
}

TEST_CASE("keccak256 digest is always 32 bytes") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 50; ++i) {
        Bytes data(rng() % 500);
        for (auto& b : data) b = static_cast<std::uint8_t>(rng());
        CHECK(keccak256(data).bytes.size() == 32);
    }
}

TEST_CASE("encode_packed layout") {
    Address device = addr(0x11), fog = addr(0x22), admin = addr(0x33);
    const Address three[] = {device, fog, admin};
    Bytes packed = encode_packed(three, 1657188740);
    CHECK(packed.size() == 92);  // 3*20 + 32

    const Address one[] = {device};
    CHECK(encode_packed(one, 0).size() == 52);

    // starts with the first address's raw bytes
    for (int i = 0; i < 20; ++i) CHECK(packed[i] == 0x11);

    // ends with the timestamp as a 32-byte big-endian integer
    std::uint64_t ts = 1657188740;
    for (int i = 0; i < 24; ++i) CHECK(packed[60 + i] == 0);
    for (int i = 0; i < 8; ++i)
        CHECK(packed[84 + i] == static_cast<std::uint8_t>(ts >> (8 * (7 - i))));
}

TEST_CASE("encode_packed rejects an empty address list") {
    std::vector<Address> none;
    CHECK_THROWS_AS(encode_packed(none, 1), std::invalid_argument);
}

TEST_CASE("encode_packed is injective for fixed arity") {
    std::mt19937 rng(99);
    std::set<Bytes> seen;
    for (int i = 0; i < 1000; ++i) {
        Address a, b;
        for (auto& byte : a.bytes) byte = static_cast<std::uint8_t>(rng());
        for (auto& byte : b.bytes) byte = static_cast<std::uint8_t>(rng());
        const Address pair[] = {a, b};
        CHECK(seen.insert(encode_packed(pair, rng())).second);
    }
}

TEST_CASE("address derivation is deterministic and key-specific") {
    KeyPair kp = keypair_from_seed(1, "owner");
    CHECK(derive_address(kp.public_key) == derive_address(kp.public_key));
    CHECK(derive_address(kp.public_key).bytes.size() == 20);

    std::set<Address> addresses;
    for (int i = 0; i < 10000; ++i) {
        KeyPair key = keypair_from_seed(5, "principal-" + std::to_string(i));
        CHECK(addresses.insert(derive_address(key.public_key)).second);
    }
}

TEST_CASE("derive_address rejects malformed keys") {
    CHECK_THROWS_AS(derive_address(Bytes{}), std::invalid_argument);
    CHECK_THROWS_AS(derive_address(Bytes(16, 0xab)), std::invalid_argument);
    Bytes wrong_tag(kPublicKeySize, 0x00);
    wrong_tag[0] = 0x02;
    CHECK_THROWS_AS(derive_address(wrong_tag), std::invalid_argument);
}

TEST_CASE("sign/verify round trip and tamper detection") {
    KeyPair kp = keypair_from_seed(2, "user");
    Bytes message = {'t', 'o', 'k', 'e', 'n'};
    Bytes sig = sign(kp, message);
    CHECK(sig.size() == kSignatureSize);
    CHECK(verify(kp.public_key, message, sig));

    Bytes flipped = message;
    flipped[0] ^= 0x01;
    CHECK_FALSE(verify(kp.public_key, flipped, sig));

    KeyPair other = keypair_from_seed(2, "intruder");
    CHECK_FALSE(verify(other.public_key, message, sig));

    Bytes bad_sig = sig;
    bad_sig[20] ^= 0x80;
    CHECK_FALSE(verify(kp.public_key, message, bad_sig));
}

TEST_CASE("signing is deterministic") {
    KeyPair kp = keypair_from_seed(3, "fog");
    Bytes message(64, 0x5a);
    CHECK(sign(kp, message) == sign(kp, message));
}

TEST_CASE("key pairs are reproducible from (seed, name)") {
    CHECK(keypair_from_seed(7, "node").public_key == keypair_from_seed(7, "node").public_key);
    CHECK(keypair_from_seed(7, "node").public_key != keypair_from_seed(8, "node").public_key);
    CHECK(keypair_from_seed(7, "node").public_key != keypair_from_seed(7, "edon").public_key);
}

TEST_CASE("public key is recomputable from the private key") {
    KeyPair kp = keypair_from_seed(11, "device");
    KeyPair again = keypair_from_private(kp.private_key);
    CHECK(kp.public_key == again.public_key);
}
