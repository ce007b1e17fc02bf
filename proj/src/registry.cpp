// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/registry.hpp"

#include <algorithm>
#include <sstream>

#include "dscot/crypto.hpp"
#include "dscot/keccak.hpp"

namespace dscot {

namespace {

constexpr const char* kNotAnAdmin = "Not an Admin";
constexpr const char* kLastAdmin = "Last Admin";

void push_event(std::vector<Event>& out, OpTrace& trace, Event ev) {
    trace.record_log(event_topic_count(ev), event_data_bytes(ev));
    out.push_back(std::move(ev));
}

// list append: one fresh slot per stored field plus the length update
void charge_push(OpTrace& trace, std::uint64_t field_slots) {
    trace.storage_writes_new += field_slots;
    trace.storage_writes_update += 1;
}

}  // namespace

Digest32 mint_token_id(const Address& device, const Address& fog, const Address& sender,
                       std::uint64_t timestamp) {
    const Address packed[] = {device, fog, sender};
    return keccak256(encode_packed(packed, timestamp));
}

Registry::Registry(const Address& creator) {
    state_.admins.push_back(creator);
}

Registry::Registry(const Address& creator, OpTrace& trace) : Registry(creator) {
    charge_push(trace, 1);
}

bool Registry::is_admin_scan(const Address& addr, OpTrace& trace) const {
    for (const Address& admin : state_.admins) {
        trace.storage_reads += 1;
        trace.loop_iterations += 1;
        if (admin == addr) return true;
    }
    return false;
}

void Registry::require_admin(const Address& sender, OpTrace& trace) const {
    if (!is_admin_scan(sender, trace)) throw RevertError(kNotAnAdmin);
}

std::vector<Event> Registry::approve(const Address& sender, const Address& new_admin,
                                     OpTrace& trace) {
    require_admin(sender, trace);
    std::vector<Event> events;
    if (is_admin_scan(new_admin, trace)) {
        push_event(events, trace, AdminAlreadyExists{new_admin, sender});
        return events;
    }
    state_.admins.push_back(new_admin);
    charge_push(trace, 1);
    push_event(events, trace, AdminAdded{new_admin, sender});
    return events;
}

std::vector<Event> Registry::del_admin(const Address& sender, const Address& admin,
                                       OpTrace& trace) {
    require_admin(sender, trace);
    std::vector<Event> events;
    auto it = state_.admins.begin();
    for (; it != state_.admins.end(); ++it) {
        trace.storage_reads += 1;
        trace.loop_iterations += 1;
        if (*it == admin) break;
    }
    if (it == state_.admins.end()) return events;  // absent target: silent no-op
    if (state_.admins.size() == 1) throw RevertError(kLastAdmin);
    state_.admins.erase(it);
    trace.storage_writes_update += 2;  // compaction + length
    push_event(events, trace, AdminDeleted{admin, sender});
    return events;
}

std::vector<Event> Registry::device_fog_mapping(const Address& sender, const Address& fog,
                                                const Address& device, OpTrace& trace) {
    require_admin(sender, trace);
    std::vector<Event> events;
    state_.fog_devices[fog].push_back(device);
    charge_push(trace, 1);
    push_event(events, trace, FogDeviceMappingAdded{fog, device, sender});
    return events;
}

std::vector<Event> Registry::del_dev(const Address& sender, const Address& fog, OpTrace& trace) {
    require_admin(sender, trace);
    std::vector<Event> events;
    state_.fog_devices.erase(fog);
    trace.storage_writes_update += 1;  // length zeroed
    push_event(events, trace, FogDeviceAllMappingDeleted{fog, sender});
    return events;
}

std::vector<Event> Registry::user_device_mapping(const Address& sender, const Address& user,
                                                 const Address& device, const Address& fog,
                                                 OpTrace& trace) {
    require_admin(sender, trace);
    std::vector<Event> events;

    bool device_exists = false;
    if (auto it = state_.fog_devices.find(fog); it != state_.fog_devices.end()) {
        for (const Address& d : it->second) {
            trace.storage_reads += 1;
            trace.loop_iterations += 1;
            if (d == device) {
                device_exists = true;
                break;
            }
        }
    }

    if (!device_exists) {
        push_event(events, trace, DeviceDoesNotExist{fog, device, sender});
        return events;
    }
    state_.users_devices[user].push_back(DevicePair{fog, device});
    charge_push(trace, 2);
    push_event(events, trace, UserDeviceMappingAdded{user, device, sender, fog});
    return events;
}

std::vector<Event> Registry::del_user(const Address& sender, const Address& user, OpTrace& trace) {
    require_admin(sender, trace);
    std::vector<Event> events;
    state_.users_devices.erase(user);
    trace.storage_writes_update += 1;
    push_event(events, trace, UserDeviceAllMappingDeleted{user, sender});
    return events;
}

std::vector<Event> Registry::mint_nft(const Address& sender, const Address& device,
                                      const Address& fog, std::uint64_t block_timestamp,
                                      OpTrace& trace) {
    std::vector<Event> events;

    bool device_exists = false;
    if (auto it = state_.fog_devices.find(fog); it != state_.fog_devices.end()) {
        for (const Address& d : it->second) {
            trace.storage_reads += 1;
            trace.loop_iterations += 1;
            if (d == device) {
                device_exists = true;
                break;
            }
        }
    }
    if (!device_exists) {
        push_event(events, trace, DeviceDoesNotExist{fog, device, sender});
        return events;
    }

    bool auth = false;
    if (auto it = state_.users_devices.find(sender); it != state_.users_devices.end()) {
        for (const DevicePair& pair : it->second) {
            trace.storage_reads += 2;  // both struct fields
            trace.loop_iterations += 1;
            if (pair.fog == fog && pair.device == device) {
                auth = true;
                break;
            }
        }
    }
    if (!auth) {
        push_event(events, trace, NotAuthenticated{sender});
        return events;
    }

    const Address packed[] = {device, fog, sender};
    Bytes packed_bytes = encode_packed(packed, block_timestamp);
    trace.record_hash(packed_bytes.size());
    Digest32 token_id = keccak256(packed_bytes);

    push_event(events, trace, Authenticated{sender, device, fog});
    state_.tokens.push_back(Token{token_id, block_timestamp});
    charge_push(trace, 2);
    state_.token_owners.push_back(sender);
    trace.storage_writes_new += 1;
    push_event(events, trace, TokenCreated{token_id, sender, device, fog, block_timestamp});
    return events;
}

std::uint64_t Registry::no_of_admins(const Address& caller, OpTrace& trace) const {
    require_admin(caller, trace);
    trace.storage_reads += 1;
    return state_.admins.size();
}

std::vector<Address> Registry::admin_add(const Address& caller, OpTrace& trace) const {
    require_admin(caller, trace);
    trace.storage_reads += state_.admins.size();
    trace.loop_iterations += state_.admins.size();
    return state_.admins;
}

DevicePair Registry::users_devices_at(const Address& caller, const Address& user,
                                      std::size_t index, OpTrace& trace) const {
    require_admin(caller, trace);
    trace.storage_reads += 2;
    auto it = state_.users_devices.find(user);
    if (it == state_.users_devices.end() || index >= it->second.size())
        throw NotFoundError("no user-device mapping at index");
    return it->second[index];
}

std::vector<Token> Registry::tokens_issued(const Address& caller, OpTrace& trace) const {
    require_admin(caller, trace);
    trace.storage_reads += 2 * state_.tokens.size();
    trace.loop_iterations += state_.tokens.size();
    return state_.tokens;
}

std::uint64_t Registry::balance_of(const Address& owner, OpTrace& trace) const {
    std::uint64_t count = 0;
    for (const Address& token_owner : state_.token_owners) {
        trace.storage_reads += 1;
        trace.loop_iterations += 1;
        if (token_owner == owner) ++count;
    }
    return count;
}

Address Registry::owner_of(const Digest32& token_id, OpTrace& trace) const {
    for (std::size_t i = 0; i < state_.tokens.size(); ++i) {
        trace.storage_reads += 1;
        trace.loop_iterations += 1;
        if (state_.tokens[i].token_id == token_id) return state_.token_owners[i];
    }
    throw NotFoundError("unknown token");
}

std::string snapshot_text(const RegistryState& state) {
    std::ostringstream os;
    os << "dscot-registry-snapshot v1\n";
    os << "admins " << state.admins.size() << "\n";
    for (const Address& a : state.admins) os << "  " << a.hex() << "\n";

    std::size_t fog_count = 0;
    for (const auto& [fog, devices] : state.fog_devices)
        if (!devices.empty()) ++fog_count;
    os << "fog_devices " << fog_count << "\n";
    for (const auto& [fog, devices] : state.fog_devices) {
        if (devices.empty()) continue;
        os << "  " << fog.hex() << " " << devices.size() << "\n";
        for (const Address& d : devices) os << "    " << d.hex() << "\n";
    }

    std::size_t user_count = 0;
    for (const auto& [user, pairs] : state.users_devices)
        if (!pairs.empty()) ++user_count;
    os << "users_devices " << user_count << "\n";
    for (const auto& [user, pairs] : state.users_devices) {
        if (pairs.empty()) continue;
        os << "  " << user.hex() << " " << pairs.size() << "\n";
        for (const DevicePair& p : pairs) os << "    " << p.fog.hex() << " " << p.device.hex() << "\n";
    }

    os << "tokens " << state.tokens.size() << "\n";
    for (std::size_t i = 0; i < state.tokens.size(); ++i)
        os << "  " << state.tokens[i].token_id.hex() << " " << state.tokens[i].timestamp << " "
           << state.token_owners[i].hex() << "\n";
    return os.str();
}

RegistryState state_from_snapshot(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next = [&]() -> std::string {
        if (!std::getline(in, line)) throw std::invalid_argument("snapshot truncated");
        return line;
    };
    if (next() != "dscot-registry-snapshot v1")
        throw std::invalid_argument("unrecognized snapshot header");

    RegistryState state;
    std::string word;
    std::size_t count = 0;

    auto parse_count = [&](const std::string& expect) {
        std::istringstream ls(next());
        ls >> word >> count;
        if (word != expect) throw std::invalid_argument("snapshot: expected " + expect);
    };

    parse_count("admins");
    for (std::size_t i = 0; i < count; ++i) {
        std::istringstream ls(next());
        ls >> word;
        state.admins.push_back(Address::parse(word));
    }

    parse_count("fog_devices");
    for (std::size_t i = 0; i < count; ++i) {
        std::istringstream ls(next());
        std::size_t n = 0;
        ls >> word >> n;
        Address fog = Address::parse(word);
        auto& devices = state.fog_devices[fog];
        for (std::size_t j = 0; j < n; ++j) {
            std::istringstream ds(next());
            ds >> word;
            devices.push_back(Address::parse(word));
        }
    }

    parse_count("users_devices");
    for (std::size_t i = 0; i < count; ++i) {
        std::istringstream ls(next());
        std::size_t n = 0;
        ls >> word >> n;
        Address user = Address::parse(word);
        auto& pairs = state.users_devices[user];
        for (std::size_t j = 0; j < n; ++j) {
            std::istringstream ps(next());
            std::string fog_hex, dev_hex;
            ps >> fog_hex >> dev_hex;
            pairs.push_back(DevicePair{Address::parse(fog_hex), Address::parse(dev_hex)});
        }
    }

    parse_count("tokens");
    for (std::size_t i = 0; i < count; ++i) {
        std::istringstream ls(next());
        std::string id_hex, owner_hex;
        std::uint64_t ts = 0;
        ls >> id_hex >> ts >> owner_hex;
        state.tokens.push_back(Token{Digest32::parse(id_hex), ts});
        state.token_owners.push_back(Address::parse(owner_hex));
    }
    return state;
}

void fold_event(RegistryState& state, const Event& ev) {
    if (const auto* e = std::get_if<AdminAdded>(&ev)) {
        state.admins.push_back(e->new_admin);
    } else if (const auto* e = std::get_if<AdminDeleted>(&ev)) {
        auto it = std::find(state.admins.begin(), state.admins.end(), e->admin);
        if (it != state.admins.end()) state.admins.erase(it);
    } else if (const auto* e = std::get_if<FogDeviceMappingAdded>(&ev)) {
        state.fog_devices[e->fog].push_back(e->device);
    } else if (const auto* e = std::get_if<FogDeviceAllMappingDeleted>(&ev)) {
        state.fog_devices.erase(e->fog);
    } else if (const auto* e = std::get_if<UserDeviceMappingAdded>(&ev)) {
        state.users_devices[e->user].push_back(DevicePair{e->fog, e->device});
    } else if (const auto* e = std::get_if<UserDeviceAllMappingDeleted>(&ev)) {
        state.users_devices.erase(e->user);
    } else if (const auto* e = std::get_if<TokenCreated>(&ev)) {
        state.tokens.push_back(Token{e->token_id, e->timestamp});
        state.token_owners.push_back(e->user);
    }
    // remaining variants carry no state transition
}

}  // namespace dscot
