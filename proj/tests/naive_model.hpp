// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Straight-line list model of the registry used as a differential oracle.
// Independently written against the contract semantics; shares only the
// primitive types and event vocabulary with the implementation under test.

#include <map>
#include <string>
#include <vector>

#include "dscot/events.hpp"
#include "dscot/registry.hpp"

namespace naive {

using dscot::Address;
using dscot::Digest32;
using dscot::Event;

struct Result {
    bool reverted = false;
    std::string reason;
    std::vector<Event> events;
};

struct Model {
    std::vector<Address> admins;
    std::map<Address, std::vector<Address>> fog_devices;
    std::map<Address, std::vector<std::pair<Address, Address>>> users_devices;  // (fog, device)
    std::vector<std::pair<Digest32, std::uint64_t>> tokens;
    std::vector<Address> token_owners;

    explicit Model(const Address& creator) { admins.push_back(creator); }

    bool is_admin(const Address& a) const {
        for (const Address& admin : admins)
            if (admin == a) return true;
        return false;
    }

    Result approve(const Address& sender, const Address& target) {
        if (!is_admin(sender)) return {true, "Not an Admin", {}};
        Result r;
        if (is_admin(target)) {
            r.events.push_back(dscot::AdminAlreadyExists{target, sender});
        } else {
            admins.push_back(target);
            r.events.push_back(dscot::AdminAdded{target, sender});
        }
        return r;
    }

    Result del_admin(const Address& sender, const Address& target) {
        if (!is_admin(sender)) return {true, "Not an Admin", {}};
        Result r;
        for (std::size_t i = 0; i < admins.size(); ++i) {
            if (admins[i] == target) {
                if (admins.size() == 1) return {true, "Last Admin", {}};
                admins.erase(admins.begin() + static_cast<std::ptrdiff_t>(i));
                r.events.push_back(dscot::AdminDeleted{target, sender});
                return r;
            }
        }
        return r;  // absent: no event, no change
    }

    Result device_fog_mapping(const Address& sender, const Address& fog, const Address& device) {
        if (!is_admin(sender)) return {true, "Not an Admin", {}};
        fog_devices[fog].push_back(device);
        Result r;
        r.events.push_back(dscot::FogDeviceMappingAdded{fog, device, sender});
        return r;
    }

    Result del_dev(const Address& sender, const Address& fog) {
        if (!is_admin(sender)) return {true, "Not an Admin", {}};
        fog_devices.erase(fog);
        Result r;
        r.events.push_back(dscot::FogDeviceAllMappingDeleted{fog, sender});
        return r;
    }

    Result user_device_mapping(const Address& sender, const Address& user, const Address& device,
                               const Address& fog) {
        if (!is_admin(sender)) return {true, "Not an Admin", {}};
        Result r;
        bool exists = false;
        auto it = fog_devices.find(fog);
        if (it != fog_devices.end())
            for (const Address& d : it->second)
                if (d == device) {
                    exists = true;
                    break;
                }
        if (!exists) {
            r.events.push_back(dscot::DeviceDoesNotExist{fog, device, sender});
            return r;
        }
        users_devices[user].emplace_back(fog, device);
        r.events.push_back(dscot::UserDeviceMappingAdded{user, device, sender, fog});
        return r;
    }

    Result del_user(const Address& sender, const Address& user) {
        if (!is_admin(sender)) return {true, "Not an Admin", {}};
        users_devices.erase(user);
        Result r;
        r.events.push_back(dscot::UserDeviceAllMappingDeleted{user, sender});
        return r;
    }

    Result mint_nft(const Address& sender, const Address& device, const Address& fog,
                    std::uint64_t timestamp) {
        Result r;
        bool exists = false;
        auto it = fog_devices.find(fog);
        if (it != fog_devices.end())
            for (const Address& d : it->second)
                if (d == device) {
                    exists = true;
                    break;
                }
        if (!exists) {
            r.events.push_back(dscot::DeviceDoesNotExist{fog, device, sender});
            return r;
        }
        bool auth = false;
        auto uit = users_devices.find(sender);
        if (uit != users_devices.end())
            for (const auto& [f, d] : uit->second)
                if (f == fog && d == device) {
                    auth = true;
                    break;
                }
        if (!auth) {
            r.events.push_back(dscot::NotAuthenticated{sender});
            return r;
        }
        Digest32 id = dscot::mint_token_id(device, fog, sender, timestamp);
        r.events.push_back(dscot::Authenticated{sender, device, fog});
        tokens.emplace_back(id, timestamp);
        token_owners.push_back(sender);
        r.events.push_back(dscot::TokenCreated{id, sender, device, fog, timestamp});
        return r;
    }
};

inline bool matches(const Model& model, const dscot::RegistryState& state) {
    if (model.admins != state.admins) return false;
    if (model.fog_devices != state.fog_devices) return false;
    if (model.token_owners != state.token_owners) return false;
    if (model.tokens.size() != state.tokens.size()) return false;
    for (std::size_t i = 0; i < model.tokens.size(); ++i)
        if (model.tokens[i].first != state.tokens[i].token_id ||
            model.tokens[i].second != state.tokens[i].timestamp)
            return false;
    if (model.users_devices.size() != state.users_devices.size()) return false;
    for (const auto& [user, pairs] : model.users_devices) {
        auto it = state.users_devices.find(user);
        if (it == state.users_devices.end() || it->second.size() != pairs.size()) return false;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first != it->second[i].fog || pairs[i].second != it->second[i].device)
                return false;
    }
    return true;
}

}  // namespace naive
