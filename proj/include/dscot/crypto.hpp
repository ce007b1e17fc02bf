// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "dscot/bytes.hpp"

namespace dscot {

// Signature scheme used uniformly across the simulator: deterministic Schnorr
// over the multiplicative group of GF(2^127 - 1), with keccak-256 as the
// challenge hash. Public keys are 17 bytes: a constant 0x04 tag followed by
// the 16-byte big-endian group element. Signatures are 32 bytes (e || s).
inline constexpr std::size_t kPublicKeySize = 17;
inline constexpr std::uint8_t kPublicKeyTag = 0x04;
inline constexpr std::size_t kSignatureSize = 32;

struct KeyPair {
    std::array<std::uint8_t, 32> private_key{};
    Bytes public_key;  // kPublicKeySize bytes
};

KeyPair keypair_from_private(const std::array<std::uint8_t, 32>& private_key);
/// Deterministic key derivation for named principals.
KeyPair keypair_from_seed(std::uint64_t seed, std::string_view name);

/// Last 20 bytes of keccak256(public key with the constant tag byte removed).
/// Throws std::invalid_argument for malformed keys.
Address derive_address(std::span<const std::uint8_t> public_key);

Bytes sign(const KeyPair& key, std::span<const std::uint8_t> message);
bool verify(std::span<const std::uint8_t> public_key,
            std::span<const std::uint8_t> message,
            std::span<const std::uint8_t> signature);

struct Signature {
    Bytes bytes;     // kSignatureSize bytes
    Address signer;  // derive_address of the signing key
};

/// abi.encodePacked-style concatenation: each address contributes its 20 raw
/// bytes in order, then the timestamp as a 32-byte big-endian integer.
Bytes encode_packed(std::span<const Address> addresses, std::uint64_t timestamp);

}  // namespace dscot
