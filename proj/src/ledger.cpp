// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/ledger.hpp"

#include <sstream>
#include <stdexcept>

#include "dscot/keccak.hpp"

namespace dscot {

std::string op_name(OpType type) {
    switch (type) {
        case OpType::Deploy: return "deploy";
        case OpType::Approve: return "approve";
        case OpType::DelAdmin: return "delAdmin";
        case OpType::DeviceFogMapping: return "DeviceFogMapping";
        case OpType::DelDev: return "delDev";
        case OpType::UserDeviceMapping: return "UserDeviceMapping";
        case OpType::DelUser: return "delUser";
        case OpType::MintNft: return "mintNFT";
    }
    return "unknown";
}

std::size_t op_arity(OpType type) {
    switch (type) {
        case OpType::Deploy: return 0;
        case OpType::Approve: return 1;
        case OpType::DelAdmin: return 1;
        case OpType::DeviceFogMapping: return 2;
        case OpType::DelDev: return 1;
        case OpType::UserDeviceMapping: return 3;
        case OpType::DelUser: return 1;
        case OpType::MintNft: return 2;
    }
    return 0;
}

Bytes Transaction::canonical_encoding() const {
    Bytes out;
    append_bytes(out, sender.bytes);
    append_u64_be(out, nonce);
    out.push_back(static_cast<std::uint8_t>(operation.type));
    out.push_back(static_cast<std::uint8_t>(operation.args.size()));
    for (const Address& a : operation.args) append_bytes(out, a.bytes);
    return out;
}

Digest32 Transaction::hash() const { return keccak256(canonical_encoding()); }

Transaction make_transaction(const KeyPair& key, Operation op, std::uint64_t nonce) {
    Transaction tx;
    tx.sender = derive_address(key.public_key);
    tx.operation = std::move(op);
    tx.nonce = nonce;
    tx.public_key = key.public_key;
    tx.signature = Signature{sign(key, tx.canonical_encoding()), tx.sender};
    return tx;
}

Digest32 Block::hash() const {
    Bytes out;
    append_u64_be(out, number);
    append_u64_be(out, timestamp);
    append_bytes(out, parent_hash.bytes);
    for (const Digest32& h : tx_hashes) append_bytes(out, h.bytes);
    append_bytes(out, state_root.bytes);
    append_u64_be(out, proposer);
    return keccak256(out);
}

Ledger::Ledger(GasSchedule schedule, std::uint32_t validator_count, std::uint64_t genesis_time)
    : schedule_(schedule), validators_(validator_count), fault_mask_(validator_count, false) {
    Block genesis;
    genesis.number = 0;
    genesis.timestamp = genesis_time;
    genesis.state_root = current_state_root();
    blocks_.push_back(genesis);
}

Digest32 Ledger::current_state_root() const {
    return keccak256(registry_ ? registry_->snapshot() : std::string());
}

Digest32 Ledger::submit(const Transaction& tx) {
    if (tx.operation.args.size() != op_arity(tx.operation.type))
        throw SubmitError("operation arity mismatch");

    Address derived;
    try {
        derived = derive_address(tx.public_key);
    } catch (const std::invalid_argument&) {
        throw SubmitError("malformed public key");
    }
    if (derived != tx.sender) throw SubmitError("public key does not match sender");
    if (tx.signature.signer != tx.sender) throw SubmitError("signature signer mismatch");
    if (!verify(tx.public_key, tx.canonical_encoding(), tx.signature.bytes))
        throw SubmitError("invalid signature");

    std::uint64_t expected = pending_nonce(tx.sender);
    if (tx.nonce != expected)
        throw SubmitError("bad nonce: expected " + std::to_string(expected) + ", got " +
                          std::to_string(tx.nonce));

    pending_.push_back(tx);
    return tx.hash();
}

std::uint64_t Ledger::next_nonce(const Address& sender) const {
    auto it = nonces_.find(sender);
    return it == nonces_.end() ? 0 : it->second;
}

std::uint64_t Ledger::pending_nonce(const Address& sender) const {
    std::uint64_t nonce = next_nonce(sender);
    for (const Transaction& queued : pending_)
        if (queued.sender == sender) ++nonce;
    return nonce;
}

Receipt Ledger::apply_transaction(const Transaction& tx, std::uint64_t timestamp,
                                  std::uint64_t block_number) {
    Receipt receipt;
    receipt.tx_hash = tx.hash();
    receipt.block_number = block_number;

    OpTrace trace;
    std::vector<Event> events;
    try {
        const auto& args = tx.operation.args;
        switch (tx.operation.type) {
            case OpType::Deploy:
                if (registry_) throw RevertError("Already Initialized");
                registry_ = std::make_unique<Registry>(tx.sender, trace);
                break;
            case OpType::Approve:
            case OpType::DelAdmin:
            case OpType::DeviceFogMapping:
            case OpType::DelDev:
            case OpType::UserDeviceMapping:
            case OpType::DelUser:
            case OpType::MintNft: {
                if (!registry_) throw RevertError("Not Initialized");
                Registry& reg = *registry_;
                switch (tx.operation.type) {
                    case OpType::Approve: events = reg.approve(tx.sender, args[0], trace); break;
                    case OpType::DelAdmin:
                        events = reg.del_admin(tx.sender, args[0], trace);
                        break;
                    case OpType::DeviceFogMapping:
                        events = reg.device_fog_mapping(tx.sender, args[0], args[1], trace);
                        break;
                    case OpType::DelDev: events = reg.del_dev(tx.sender, args[0], trace); break;
                    case OpType::UserDeviceMapping:
                        events = reg.user_device_mapping(tx.sender, args[0], args[1], args[2],
                                                         trace);
                        break;
                    case OpType::DelUser: events = reg.del_user(tx.sender, args[0], trace); break;
                    case OpType::MintNft:
                        events = reg.mint_nft(tx.sender, args[0], args[1], timestamp, trace);
                        break;
                    default: break;
                }
                break;
            }
        }
        receipt.status = TxStatus::Accepted;
        receipt.events = std::move(events);
    } catch (const RevertError& revert) {
        receipt.status = TxStatus::Reverted;
        receipt.revert_reason = revert.reason;
        receipt.events.clear();
    }
    receipt.gas_used = meter_transaction(trace, schedule_);
    return receipt;
}

Ledger::ProduceResult Ledger::produce_block(std::uint64_t timestamp) {
    ProduceResult result;
    std::uint64_t height = blocks_.size();
    ConsensusOutcome outcome =
        run_consensus(validators_, fault_mask_, height, validators_.count);
    result.rounds = outcome.rounds;
    if (!outcome.committed) return result;  // txs stay pending, proposer rotated

    Block block;
    block.number = height;
    block.timestamp = timestamp;
    block.parent_hash = blocks_.back().hash();
    block.proposer = outcome.proposer;

    for (const Transaction& tx : pending_) {
        Receipt receipt = apply_transaction(tx, timestamp, block.number);
        block.tx_hashes.push_back(receipt.tx_hash);
        nonces_[tx.sender] = tx.nonce + 1;  // reverted txs still consume the nonce
        receipt_index_[receipt.tx_hash] = receipts_.size();
        receipts_.push_back(std::move(receipt));
        result.receipts.push_back(receipts_.back());
    }
    pending_.clear();

    block.state_root = current_state_root();
    blocks_.push_back(block);
    result.committed = true;
    result.block = blocks_.back();
    return result;
}

void Ledger::set_fault(std::uint32_t validator, bool faulty) {
    if (validator >= fault_mask_.size()) throw std::out_of_range("validator index out of range");
    fault_mask_[validator] = faulty;
}

template <typename Fn>
CallOutcome Ledger::run_call(Fn&& fn) const {
    CallOutcome outcome;
    OpTrace trace;
    try {
        if (!registry_) throw RevertError("Not Initialized");
        outcome.value = fn(*registry_, trace);
        outcome.ok = true;
    } catch (const RevertError& revert) {
        outcome.error = revert.reason;
    } catch (const NotFoundError& missing) {
        outcome.error = missing.what();
    }
    outcome.execution_cost = meter_call(trace, schedule_);
    outcome.fee = 0;
    return outcome;
}

CallOutcome Ledger::call_no_of_admins(const Address& caller) const {
    return run_call([&](const Registry& reg, OpTrace& trace) {
        return "uint256: " + std::to_string(reg.no_of_admins(caller, trace));
    });
}

CallOutcome Ledger::call_admin_add(const Address& caller) const {
    return run_call([&](const Registry& reg, OpTrace& trace) {
        std::string out = "address[]:";
        for (const Address& a : reg.admin_add(caller, trace)) out += " " + a.hex();
        return out;
    });
}

CallOutcome Ledger::call_users_devices(const Address& caller, const Address& user,
                                       std::size_t index) const {
    return run_call([&](const Registry& reg, OpTrace& trace) {
        DevicePair pair = reg.users_devices_at(caller, user, index, trace);
        return "address: dev " + pair.device.hex() + ", address: fog " + pair.fog.hex();
    });
}

CallOutcome Ledger::call_tokens_issued(const Address& caller) const {
    return run_call([&](const Registry& reg, OpTrace& trace) {
        std::string out = "tuple(bytes32,uint256)[]:";
        for (const Token& token : reg.tokens_issued(caller, trace))
            out += " " + token.token_id.hex() + "," + std::to_string(token.timestamp);
        return out;
    });
}

CallOutcome Ledger::call_balance_of(const Address& owner) const {
    return run_call([&](const Registry& reg, OpTrace& trace) {
        return "uint256: " + std::to_string(reg.balance_of(owner, trace));
    });
}

CallOutcome Ledger::call_owner_of(const Digest32& token_id) const {
    return run_call([&](const Registry& reg, OpTrace& trace) {
        return "address: " + reg.owner_of(token_id, trace).hex();
    });
}

const Block& Ledger::get_block(std::uint64_t number) const {
    if (number >= blocks_.size()) throw NotFoundError("unknown block");
    return blocks_[number];
}

const Receipt& Ledger::get_receipt(const Digest32& tx_hash) const {
    auto it = receipt_index_.find(tx_hash);
    if (it == receipt_index_.end()) throw NotFoundError("unknown transaction");
    return receipts_[it->second];
}

std::vector<std::pair<std::uint64_t, Event>> Ledger::trace_token(const Digest32& token_id) const {
    std::vector<std::pair<std::uint64_t, Event>> out;
    for (const Receipt& receipt : receipts_) {
        bool mentions = false;
        for (const Event& ev : receipt.events)
            if (const auto* created = std::get_if<TokenCreated>(&ev);
                created && created->token_id == token_id) {
                mentions = true;
                break;
            }
        if (!mentions) continue;
        for (const Event& ev : receipt.events) out.emplace_back(receipt.block_number, ev);
    }
    return out;
}

std::string Ledger::export_chain() const {
    std::ostringstream os;
    os << "dscot-chain v1 blocks " << blocks_.size() << "\n";
    for (const Block& b : blocks_) {
        os << "block " << b.number << " time " << b.timestamp << " proposer " << b.proposer
           << " parent " << b.parent_hash.hex() << " state_root " << b.state_root.hex() << " txs "
           << b.tx_hashes.size() << "\n";
        for (const Digest32& h : b.tx_hashes) os << "  tx " << h.hex() << "\n";
    }
    return os.str();
}

}  // namespace dscot
