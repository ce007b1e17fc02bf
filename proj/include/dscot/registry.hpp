// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dscot/bytes.hpp"
#include "dscot/events.hpp"
#include "dscot/gas.hpp"

namespace dscot {

struct DevicePair {
    Address fog;
    Address device;
    bool operator==(const DevicePair&) const = default;
};

/// An issued NFT: token id plus the block timestamp of its mint.
struct Token {
    Digest32 token_id;
    std::uint64_t timestamp = 0;
    bool operator==(const Token&) const = default;
};

/// The proposed metadata attributes for one authentication.
struct DscotMetadata {
    Address owner;
    Digest32 token_id;
    Address user_id;
    Address device_id;
    Address fog_id;
    std::uint64_t timestamp = 0;
    std::uint64_t delta_t = 0;
};

struct RegistryState {
    std::vector<Address> admins;
    std::map<Address, std::vector<Address>> fog_devices;
    std::map<Address, std::vector<DevicePair>> users_devices;
    std::vector<Token> tokens;
    std::vector<Address> token_owners;  // parallel to tokens: the minting sender

    bool operator==(const RegistryState&) const = default;
};

/// Canonical byte-diffable serialization (sorted keys, lowercase hex).
std::string snapshot_text(const RegistryState& state);
RegistryState state_from_snapshot(const std::string& text);

/// Event-sourcing reducer: applies one emitted event to a state. Folding a
/// chain's event log from the constructed state reproduces the live state.
void fold_event(RegistryState& state, const Event& ev);

struct RevertError : std::runtime_error {
    explicit RevertError(std::string r) : std::runtime_error(r), reason(std::move(r)) {}
    std::string reason;
};

struct NotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pure token-id derivation: keccak256 of the packed (device, fog, sender,
/// timestamp) tuple.
Digest32 mint_token_id(const Address& device, const Address& fog, const Address& sender,
                       std::uint64_t timestamp);

/// The NFT registry contract state machine. Mutating operations take the
/// transaction sender and revert with "Not an Admin" for non-admins; mint
/// instead authenticates the sender against its own mapping list.
class Registry {
public:
    explicit Registry(const Address& creator);
    Registry(const Address& creator, OpTrace& trace);

    std::vector<Event> approve(const Address& sender, const Address& new_admin, OpTrace& trace);
    std::vector<Event> del_admin(const Address& sender, const Address& admin, OpTrace& trace);
    std::vector<Event> device_fog_mapping(const Address& sender, const Address& fog,
                                          const Address& device, OpTrace& trace);
    std::vector<Event> del_dev(const Address& sender, const Address& fog, OpTrace& trace);
    std::vector<Event> user_device_mapping(const Address& sender, const Address& user,
                                           const Address& device, const Address& fog,
                                           OpTrace& trace);
    std::vector<Event> del_user(const Address& sender, const Address& user, OpTrace& trace);
    std::vector<Event> mint_nft(const Address& sender, const Address& device, const Address& fog,
                                std::uint64_t block_timestamp, OpTrace& trace);

    // read-only calls; the registry-status methods are admin-gated
    std::uint64_t no_of_admins(const Address& caller, OpTrace& trace) const;
    std::vector<Address> admin_add(const Address& caller, OpTrace& trace) const;
    DevicePair users_devices_at(const Address& caller, const Address& user, std::size_t index,
                                OpTrace& trace) const;
    std::vector<Token> tokens_issued(const Address& caller, OpTrace& trace) const;
    std::uint64_t balance_of(const Address& owner, OpTrace& trace) const;
    Address owner_of(const Digest32& token_id, OpTrace& trace) const;

    const RegistryState& state() const { return state_; }
    std::string snapshot() const { return snapshot_text(state_); }

private:
    void require_admin(const Address& sender, OpTrace& trace) const;
    bool is_admin_scan(const Address& addr, OpTrace& trace) const;

    RegistryState state_;
};

}  // namespace dscot
