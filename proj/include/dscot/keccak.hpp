// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>

#include "dscot/bytes.hpp"

namespace dscot {

/// Keccak-256 with the original 0x01 domain padding (pre-NIST), as used for
/// token ids, transaction hashes and address derivation.
Digest32 keccak256(std::span<const std::uint8_t> data);
Digest32 keccak256(const Bytes& data);
Digest32 keccak256(std::string_view ascii);

}  // namespace dscot
