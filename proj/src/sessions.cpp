// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/sessions.hpp"

#include <algorithm>
#include <sstream>

#include "dscot/keccak.hpp"

namespace dscot {

std::string role_name(Role role) {
    switch (role) {
        case Role::Owner: return "owner";
        case Role::Admin: return "admin";
        case Role::User: return "user";
        case Role::Fog: return "fog";
        case Role::Device: return "device";
    }
    return "unknown";
}

std::optional<Role> role_from_name(std::string_view name) {
    if (name == "owner") return Role::Owner;
    if (name == "admin") return Role::Admin;
    if (name == "user") return Role::User;
    if (name == "fog") return Role::Fog;
    if (name == "device") return Role::Device;
    return std::nullopt;
}

Principal Principal::create(Role role, KeyPair keypair) {
    Principal p;
    p.role = role;
    p.address = derive_address(keypair.public_key);
    p.keypair = std::move(keypair);
    return p;
}

Bytes NftPass::signing_payload() const {
    Bytes out;
    append_bytes(out, token_id.bytes);
    append_u64_be(out, timestamp);
    append_u64_be(out, delta_t);
    append_bytes(out, user.bytes);
    append_bytes(out, device.bytes);
    append_bytes(out, fog.bytes);
    append_bytes(out, user_public_key);
    return out;
}

std::string NftPass::to_text() const {
    std::ostringstream os;
    os << "dscot-nft-pass v1\n";
    os << "token_id=" << token_id.hex() << "\n";
    os << "timestamp=" << timestamp << "\n";
    os << "delta_t=" << delta_t << "\n";
    os << "user=" << user.hex() << "\n";
    os << "device=" << device.hex() << "\n";
    os << "fog=" << fog.hex() << "\n";
    os << "user_public_key=" << to_hex(user_public_key) << "\n";
    os << "signature=" << to_hex(signature) << "\n";
    return os.str();
}

NftPass NftPass::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "dscot-nft-pass v1")
        throw std::invalid_argument("unrecognized pass header");

    std::map<std::string, std::string> fields;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed pass line: " + line);
        fields[line.substr(0, eq)] = line.substr(eq + 1);
    }
    for (const char* key : {"token_id", "timestamp", "delta_t", "user", "device", "fog",
                            "user_public_key", "signature"})
        if (!fields.contains(key))
            throw std::invalid_argument(std::string("pass missing field: ") + key);

    NftPass pass;
    pass.token_id = Digest32::parse(fields["token_id"]);
    pass.timestamp = std::stoull(fields["timestamp"]);
    pass.delta_t = std::stoull(fields["delta_t"]);
    pass.user = Address::parse(fields["user"]);
    pass.device = Address::parse(fields["device"]);
    pass.fog = Address::parse(fields["fog"]);
    pass.user_public_key = from_hex(fields["user_public_key"]);
    pass.signature = from_hex(fields["signature"]);
    return pass;
}

std::string pass_reject_name(PassReject reason) {
    switch (reason) {
        case PassReject::Signature: return "signature";
        case PassReject::UnknownToken: return "unknown-token";
        case PassReject::NotMapped: return "not-mapped";
        case PassReject::Stale: return "stale";
    }
    return "unknown";
}

SessionManager::SessionManager(Ledger& ledger) : ledger_(ledger) {}

bool SessionManager::challenge(const Principal& principal) {
    // 32-byte nonce, signed by the principal and checked against its address
    Bytes nonce_seed;
    append_u64_be(nonce_seed, ++challenge_counter_);
    Digest32 nonce = keccak256(nonce_seed);

    if (principal.address.is_zero()) return false;
    Bytes response = sign(principal.keypair, nonce.bytes);
    if (!verify(principal.keypair.public_key, nonce.bytes, response)) return false;
    try {
        return derive_address(principal.keypair.public_key) == principal.address;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

bool SessionManager::is_admin(const Address& addr) const {
    const Registry* reg = ledger_.registry();
    if (!reg) return false;
    const auto& admins = reg->state().admins;
    return std::find(admins.begin(), admins.end(), addr) != admins.end();
}

SessionOutcome SessionManager::submit_and_commit(const Principal& sender, Operation op,
                                                 std::uint64_t time) {
    SessionOutcome outcome;
    Transaction tx = make_transaction(sender.keypair, std::move(op), ledger_.pending_nonce(sender.address));
    try {
        outcome.tx_hash = ledger_.submit(tx);
    } catch (const SubmitError& err) {
        outcome.failure = err.what();
        return outcome;
    }
    Ledger::ProduceResult produced = ledger_.produce_block(time);
    outcome.rounds_attempted = static_cast<std::uint32_t>(produced.rounds.size());
    if (!produced.committed) {
        outcome.failure = "no quorum: block not committed";
        return outcome;
    }
    const Receipt& receipt = ledger_.get_receipt(*outcome.tx_hash);
    outcome.gas_used = receipt.gas_used;
    outcome.events = receipt.events;
    if (receipt.status == TxStatus::Reverted) {
        outcome.failure = "reverted: " + receipt.revert_reason;
        return outcome;
    }
    outcome.ok = true;
    return outcome;
}

SessionOutcome SessionManager::owner_init(const Principal& owner, std::uint64_t time) {
    SessionOutcome outcome;
    if (ledger_.deployed()) {
        outcome.failure = "registry already initialized";
        return outcome;
    }
    if (!challenge(owner)) {
        outcome.failure = "owner key verification failed";
        return outcome;
    }
    return submit_and_commit(owner, Operation{OpType::Deploy, {}}, time);
}

SessionOutcome SessionManager::map_device_session(const Principal& owner, const Principal& fog,
                                                  const Principal& device, std::uint64_t time) {
    SessionOutcome outcome;
    if (!is_admin(owner.address)) {
        outcome.failure = "session refused: initiator is not an admin";
        return outcome;
    }
    if (!challenge(owner)) {
        outcome.failure = "owner key verification failed";
        return outcome;
    }
    if (fog.address.is_zero() || device.address.is_zero()) {
        outcome.failure = "zero address refused";
        return outcome;
    }
    if (!challenge(fog)) {  // step 1: verify the fog node
        outcome.failure = "fog key verification failed";
        return outcome;
    }
    if (!challenge(device)) {  // step 2: verify the IoT asset
        outcome.failure = "device key verification failed";
        return outcome;
    }
    return submit_and_commit(
        owner, Operation{OpType::DeviceFogMapping, {fog.address, device.address}}, time);
}

SessionOutcome SessionManager::add_user_session(const Principal& owner, const Principal& user,
                                                const Principal& device, const Principal& fog,
                                                std::uint64_t time) {
    SessionOutcome outcome;
    if (!is_admin(owner.address)) {
        outcome.failure = "session refused: initiator is not an admin";
        return outcome;
    }
    if (!challenge(owner)) {
        outcome.failure = "owner key verification failed";
        return outcome;
    }
    if (user.address.is_zero() || device.address.is_zero() || fog.address.is_zero()) {
        outcome.failure = "zero address refused";
        return outcome;
    }
    if (!challenge(user)) {
        outcome.failure = "user key verification failed";
        return outcome;
    }
    SessionOutcome committed = submit_and_commit(
        owner, Operation{OpType::UserDeviceMapping, {user.address, device.address, fog.address}},
        time);
    if (!committed.ok) return committed;
    // the mapping may still have been refused by the contract
    for (const Event& ev : committed.events)
        if (std::holds_alternative<DeviceDoesNotExist>(ev)) {
            committed.ok = false;
            committed.failure = "DeviceDoesNotExist";
        }
    return committed;
}

MintAuthResult SessionManager::mint_auth_session(const Principal& user, const Principal& device,
                                                 const Principal& fog, std::uint64_t time) {
    MintAuthResult result;
    if (!challenge(user)) {
        result.outcome.failure = "user key verification failed";
        return result;
    }
    if (device.address.is_zero() || fog.address.is_zero()) {
        result.outcome.failure = "zero address refused";
        return result;
    }
    result.outcome = submit_and_commit(
        user, Operation{OpType::MintNft, {device.address, fog.address}}, time);
    if (!result.outcome.ok) return result;

    const TokenCreated* created = nullptr;
    for (const Event& ev : result.outcome.events) {
        if (std::holds_alternative<NotAuthenticated>(ev)) {
            result.outcome.ok = false;
            result.outcome.failure = "NotAuthenticated";
            return result;
        }
        if (std::holds_alternative<DeviceDoesNotExist>(ev)) {
            result.outcome.ok = false;
            result.outcome.failure = "DeviceDoesNotExist";
            return result;
        }
        if (const auto* token = std::get_if<TokenCreated>(&ev)) created = token;
    }
    if (!created) {
        result.outcome.ok = false;
        result.outcome.failure = "mint produced no token";
        return result;
    }

    std::uint64_t t = created->timestamp;
    std::uint64_t delta_t = 0;
    if (auto it = last_auth_time_.find(user.address); it != last_auth_time_.end())
        delta_t = t - it->second;
    last_auth_time_[user.address] = t;

    NftPass pass;
    pass.token_id = created->token_id;
    pass.timestamp = t;
    pass.delta_t = delta_t;
    pass.user = user.address;
    pass.device = device.address;
    pass.fog = fog.address;
    pass.user_public_key = user.keypair.public_key;
    pass.signature = sign(user.keypair, pass.signing_payload());
    result.pass = pass;

    result.metadata = DscotMetadata{user.address, created->token_id, user.address, device.address,
                                    fog.address,  t,                 delta_t};
    return result;
}

PassVerdict SessionManager::verify_pass(const NftPass& pass, const Registry& registry,
                                        std::uint64_t now, std::uint64_t freshness_window) {
    PassVerdict verdict;

    bool signature_ok = false;
    try {
        signature_ok = derive_address(pass.user_public_key) == pass.user &&
                       verify(pass.user_public_key, pass.signing_payload(), pass.signature);
    } catch (const std::invalid_argument&) {
        signature_ok = false;
    }
    if (!signature_ok) {
        verdict.reason = PassReject::Signature;
        return verdict;
    }

    const RegistryState& state = registry.state();
    bool token_known = false;
    for (const Token& token : state.tokens)
        if (token.token_id == pass.token_id) {
            token_known = true;
            break;
        }
    if (!token_known) {
        verdict.reason = PassReject::UnknownToken;
        return verdict;
    }

    bool mapped = false;
    if (auto it = state.users_devices.find(pass.user); it != state.users_devices.end())
        for (const DevicePair& pair : it->second)
            if (pair.fog == pass.fog && pair.device == pass.device) {
                mapped = true;
                break;
            }
    if (!mapped) {
        verdict.reason = PassReject::NotMapped;
        return verdict;
    }

    if (now > pass.timestamp && now - pass.timestamp > freshness_window) {
        verdict.reason = PassReject::Stale;
        return verdict;
    }

    verdict.accepted = true;
    return verdict;
}

}  // namespace dscot
