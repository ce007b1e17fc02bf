// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dscot/crypto.hpp"
#include "dscot/ledger.hpp"

namespace dscot {

enum class Role { Owner, Admin, User, Fog, Device };

std::string role_name(Role role);
std::optional<Role> role_from_name(std::string_view name);

struct Principal {
    Role role = Role::User;
    KeyPair keypair;
    Address address;

    static Principal create(Role role, KeyPair keypair);
};

/// The signed credential a user presents to access mapped devices.
struct NftPass {
    Digest32 token_id;
    std::uint64_t timestamp = 0;
    std::uint64_t delta_t = 0;
    Address user;
    Address device;
    Address fog;
    Bytes user_public_key;
    Bytes signature;  // over signing_payload()

    Bytes signing_payload() const;
    std::string to_text() const;
    static NftPass from_text(const std::string& text);
};

enum class PassReject { Signature, UnknownToken, NotMapped, Stale };
std::string pass_reject_name(PassReject reason);

struct PassVerdict {
    bool accepted = false;
    std::optional<PassReject> reason;
};

struct SessionOutcome {
    bool ok = false;
    std::string failure;  // empty when ok
    std::vector<Event> events;
    std::optional<Digest32> tx_hash;
    std::uint64_t gas_used = 0;
    std::uint32_t rounds_attempted = 0;  // consensus rounds consumed by the submit
};

struct MintAuthResult {
    SessionOutcome outcome;
    std::optional<NftPass> pass;
    std::optional<DscotMetadata> metadata;
};

/// Client-side orchestration of the secure-session flows. Each session
/// verifies its participants by nonce challenge-response before any
/// transaction is submitted; refused sessions leave the chain untouched.
class SessionManager {
public:
    explicit SessionManager(Ledger& ledger);

    SessionOutcome owner_init(const Principal& owner, std::uint64_t time);
    SessionOutcome map_device_session(const Principal& owner, const Principal& fog,
                                      const Principal& device, std::uint64_t time);
    SessionOutcome add_user_session(const Principal& owner, const Principal& user,
                                    const Principal& device, const Principal& fog,
                                    std::uint64_t time);
    MintAuthResult mint_auth_session(const Principal& user, const Principal& device,
                                     const Principal& fog, std::uint64_t time);

    static PassVerdict verify_pass(const NftPass& pass, const Registry& registry,
                                   std::uint64_t now, std::uint64_t freshness_window);

    static constexpr std::uint64_t kDefaultFreshnessWindow = 300;

private:
    bool challenge(const Principal& principal);
    bool is_admin(const Address& addr) const;
    SessionOutcome submit_and_commit(const Principal& sender, Operation op, std::uint64_t time);

    Ledger& ledger_;
    std::uint64_t challenge_counter_ = 0;
    std::map<Address, std::uint64_t> last_auth_time_;  // ΔT bookkeeping per user
};

}  // namespace dscot
