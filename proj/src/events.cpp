// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/events.hpp"

#include <sstream>

namespace dscot {

namespace {

struct NameVisitor {
    std::string operator()(const AdminAdded&) const { return "AdminAdded"; }
    std::string operator()(const AdminAlreadyExists&) const { return "AdminAlreadyExists"; }
    std::string operator()(const AdminDeleted&) const { return "AdminDeleted"; }
    std::string operator()(const FogDeviceMappingAdded&) const { return "FogDeviceMappingAdded"; }
    std::string operator()(const FogDeviceAllMappingDeleted&) const {
        return "FogDeviceAllMappingDeleted";
    }
    std::string operator()(const DeviceDoesNotExist&) const { return "DeviceDoesNotExist"; }
    std::string operator()(const UserDeviceMappingAdded&) const { return "UserDeviceMappingAdded"; }
    std::string operator()(const UserDeviceAllMappingDeleted&) const {
        return "UserDeviceAllMappingDeleted";
    }
    std::string operator()(const Authenticated&) const { return "Authenticated"; }
    std::string operator()(const NotAuthenticated&) const { return "NotAuthenticated"; }
    std::string operator()(const InvalidUser&) const { return "InvalidUser"; }
    std::string operator()(const TokenCreated&) const { return "TokenCreated"; }
};

struct TextVisitor {
    std::string operator()(const AdminAdded& e) const {
        return "AdminAdded(newAdmin=" + e.new_admin.hex() +
               " addingAdmin=" + e.adding_admin.hex() + ")";
    }
    std::string operator()(const AdminAlreadyExists& e) const {
        return "AdminAlreadyExists(newAdmin=" + e.new_admin.hex() + " sender=" + e.sender.hex() +
               ")";
    }
    std::string operator()(const AdminDeleted& e) const {
        return "AdminDeleted(admin=" + e.admin.hex() + " deletingAdmin=" + e.deleting_admin.hex() +
               ")";
    }
    std::string operator()(const FogDeviceMappingAdded& e) const {
        return "FogDeviceMappingAdded(fog=" + e.fog.hex() + " device=" + e.device.hex() +
               " addingAdmin=" + e.adding_admin.hex() + ")";
    }
    std::string operator()(const FogDeviceAllMappingDeleted& e) const {
        return "FogDeviceAllMappingDeleted(fog=" + e.fog.hex() +
               " deletingAdmin=" + e.deleting_admin.hex() + ")";
    }
    std::string operator()(const DeviceDoesNotExist& e) const {
        return "DeviceDoesNotExist(fog=" + e.fog.hex() + " device=" + e.device.hex() +
               " sender=" + e.sender.hex() + ")";
    }
    std::string operator()(const UserDeviceMappingAdded& e) const {
        return "UserDeviceMappingAdded(user=" + e.user.hex() + " device=" + e.device.hex() +
               " addingAdmin=" + e.adding_admin.hex() + " fog=" + e.fog.hex() + ")";
    }
    std::string operator()(const UserDeviceAllMappingDeleted& e) const {
        return "UserDeviceAllMappingDeleted(user=" + e.user.hex() +
               " deletingAdmin=" + e.deleting_admin.hex() + ")";
    }
    std::string operator()(const Authenticated& e) const {
        return "Authenticated(user=" + e.user.hex() + " device=" + e.device.hex() +
               " fog=" + e.fog.hex() + ")";
    }
    std::string operator()(const NotAuthenticated& e) const {
        return "NotAuthenticated(user=" + e.user.hex() + ")";
    }
    std::string operator()(const InvalidUser& e) const {
        return "InvalidUser(device=" + e.device.hex() + " fog=" + e.fog.hex() +
               " sender=" + e.sender.hex() + ")";
    }
    std::string operator()(const TokenCreated& e) const {
        std::ostringstream os;
        os << "TokenCreated(tokenId=" << e.token_id.hex() << " user=" << e.user.hex()
           << " device=" << e.device.hex() << " fog=" << e.fog.hex()
           << " timestamp=" << e.timestamp << ")";
        return os.str();
    }
};

struct TopicVisitor {
    unsigned operator()(const AdminAdded&) const { return 2; }
    unsigned operator()(const AdminAlreadyExists&) const { return 2; }
    unsigned operator()(const AdminDeleted&) const { return 2; }
    unsigned operator()(const FogDeviceMappingAdded&) const { return 3; }
    unsigned operator()(const FogDeviceAllMappingDeleted&) const { return 2; }
    unsigned operator()(const DeviceDoesNotExist&) const { return 3; }
    unsigned operator()(const UserDeviceMappingAdded&) const { return 4; }
    unsigned operator()(const UserDeviceAllMappingDeleted&) const { return 2; }
    unsigned operator()(const Authenticated&) const { return 3; }
    unsigned operator()(const NotAuthenticated&) const { return 1; }
    unsigned operator()(const InvalidUser&) const { return 3; }
    unsigned operator()(const TokenCreated&) const { return 3; }  // tokenId, user, fog
};

struct DataVisitor {
    std::size_t operator()(const TokenCreated&) const { return 64; }  // device + timestamp
    template <typename T>
    std::size_t operator()(const T&) const {
        return 0;
    }
};

}  // namespace

std::string event_name(const Event& ev) { return std::visit(NameVisitor{}, ev); }
std::string event_to_text(const Event& ev) { return std::visit(TextVisitor{}, ev); }
unsigned event_topic_count(const Event& ev) { return std::visit(TopicVisitor{}, ev); }
std::size_t event_data_bytes(const Event& ev) { return std::visit(DataVisitor{}, ev); }

}  // namespace dscot
