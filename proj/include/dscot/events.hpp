// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dscot/bytes.hpp"

namespace dscot {

// Registry event vocabulary. Field order follows the declared signatures;
// "indexed" parameters become log topics for gas accounting.

struct AdminAdded {
    Address new_admin;
    Address adding_admin;
    bool operator==(const AdminAdded&) const = default;
};

struct AdminAlreadyExists {
    Address new_admin;
    Address sender;
    bool operator==(const AdminAlreadyExists&) const = default;
};

struct AdminDeleted {
    Address admin;
    Address deleting_admin;
    bool operator==(const AdminDeleted&) const = default;
};

struct FogDeviceMappingAdded {
    Address fog;
    Address device;
    Address adding_admin;
    bool operator==(const FogDeviceMappingAdded&) const = default;
};

struct FogDeviceAllMappingDeleted {
    Address fog;
    Address deleting_admin;
    bool operator==(const FogDeviceAllMappingDeleted&) const = default;
};

struct DeviceDoesNotExist {
    Address fog;
    Address device;
    Address sender;
    bool operator==(const DeviceDoesNotExist&) const = default;
};

struct UserDeviceMappingAdded {
    Address user;
    Address device;
    Address adding_admin;
    Address fog;
    bool operator==(const UserDeviceMappingAdded&) const = default;
};

struct UserDeviceAllMappingDeleted {
    Address user;
    Address deleting_admin;
    bool operator==(const UserDeviceAllMappingDeleted&) const = default;
};

struct Authenticated {
    Address user;
    Address device;
    Address fog;
    bool operator==(const Authenticated&) const = default;
};

struct NotAuthenticated {
    Address user;
    bool operator==(const NotAuthenticated&) const = default;
};

// declared in the interface vocabulary; no operation emits it
struct InvalidUser {
    Address device;
    Address fog;
    Address sender;
    bool operator==(const InvalidUser&) const = default;
};

struct TokenCreated {
    Digest32 token_id;
    Address user;
    Address device;
    Address fog;
    std::uint64_t timestamp = 0;
    bool operator==(const TokenCreated&) const = default;
};

using Event = std::variant<AdminAdded, AdminAlreadyExists, AdminDeleted, FogDeviceMappingAdded,
                           FogDeviceAllMappingDeleted, DeviceDoesNotExist, UserDeviceMappingAdded,
                           UserDeviceAllMappingDeleted, Authenticated, NotAuthenticated,
                           InvalidUser, TokenCreated>;

std::string event_name(const Event& ev);
std::string event_to_text(const Event& ev);

/// Number of indexed parameters (log topics) in the event's signature.
unsigned event_topic_count(const Event& ev);
/// Bytes of non-indexed payload, one 32-byte word per field.
std::size_t event_data_bytes(const Event& ev);

}  // namespace dscot
