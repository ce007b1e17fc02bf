// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dscot/consensus.hpp"
#include "dscot/crypto.hpp"
#include "dscot/gas.hpp"
#include "dscot/registry.hpp"

namespace dscot {

enum class OpType : std::uint8_t {
    Deploy = 0,
    Approve,
    DelAdmin,
    DeviceFogMapping,
    DelDev,
    UserDeviceMapping,
    DelUser,
    MintNft,
};

/// Table-3 function name for trace and report rendering.
std::string op_name(OpType type);
std::size_t op_arity(OpType type);

struct Operation {
    OpType type = OpType::Deploy;
    std::vector<Address> args;
};

struct Transaction {
    Address sender;
    Operation operation;
    std::uint64_t nonce = 0;
    Bytes public_key;
    Signature signature;

    /// Deterministic byte encoding of (sender, operation, nonce); this is
    /// what gets signed and hashed.
    Bytes canonical_encoding() const;
    Digest32 hash() const;
};

/// Builds and signs a transaction for the given key pair.
Transaction make_transaction(const KeyPair& key, Operation op, std::uint64_t nonce);

enum class TxStatus { Accepted, Reverted };

struct Receipt {
    Digest32 tx_hash;
    TxStatus status = TxStatus::Accepted;
    std::string revert_reason;
    std::vector<Event> events;
    std::uint64_t gas_used = 0;
    std::uint64_t block_number = 0;
};

struct Block {
    std::uint64_t number = 0;
    std::uint64_t timestamp = 0;
    Digest32 parent_hash;
    std::vector<Digest32> tx_hashes;
    Digest32 state_root;
    std::uint32_t proposer = 0;

    Digest32 hash() const;
};

struct SubmitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CallOutcome {
    bool ok = false;
    std::string error;
    std::string value;  // decoded-output rendering
    std::uint64_t execution_cost = 0;
    std::uint64_t fee = 0;  // read-only calls never charge a fee
};

/// Single-writer simulated chain: transaction admission, consensus-gated
/// block production, gas metering and traceability queries.
class Ledger {
public:
    Ledger(GasSchedule schedule, std::uint32_t validator_count, std::uint64_t genesis_time);

    /// Validates signature and nonce, queues the transaction. Returns the tx
    /// hash as pending id; throws SubmitError on rejection.
    Digest32 submit(const Transaction& tx);

    /// Next nonce as committed on chain.
    std::uint64_t next_nonce(const Address& sender) const;
    /// Next usable nonce, counting the sender's queued transactions.
    std::uint64_t pending_nonce(const Address& sender) const;
    std::size_t pending_count() const { return pending_.size(); }

    struct ProduceResult {
        bool committed = false;
        std::optional<Block> block;
        std::vector<Receipt> receipts;
        std::vector<RoundResult> rounds;
    };
    /// Runs consensus over the pending queue; on commit, applies the
    /// transactions in order and appends the block.
    ProduceResult produce_block(std::uint64_t timestamp);

    void set_fault(std::uint32_t validator, bool faulty);
    const std::vector<bool>& fault_mask() const { return fault_mask_; }
    const ValidatorSet& validators() const { return validators_; }
    const GasSchedule& schedule() const { return schedule_; }

    // read-only registry calls (zero transaction fee)
    CallOutcome call_no_of_admins(const Address& caller) const;
    CallOutcome call_admin_add(const Address& caller) const;
    CallOutcome call_users_devices(const Address& caller, const Address& user,
                                   std::size_t index) const;
    CallOutcome call_tokens_issued(const Address& caller) const;
    CallOutcome call_balance_of(const Address& owner) const;
    CallOutcome call_owner_of(const Digest32& token_id) const;

    const Block& get_block(std::uint64_t number) const;
    const Receipt& get_receipt(const Digest32& tx_hash) const;
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<Receipt>& receipts() const { return receipts_; }

    /// All events mentioning the token id, in chain order.
    std::vector<std::pair<std::uint64_t, Event>> trace_token(const Digest32& token_id) const;

    /// One structured text record per block, byte-diffable across runs.
    std::string export_chain() const;

    bool deployed() const { return registry_ != nullptr; }
    const Registry* registry() const { return registry_.get(); }

private:
    Digest32 current_state_root() const;
    Receipt apply_transaction(const Transaction& tx, std::uint64_t timestamp,
                              std::uint64_t block_number);
    template <typename Fn>
    CallOutcome run_call(Fn&& fn) const;

    GasSchedule schedule_;
    ValidatorSet validators_;
    std::vector<bool> fault_mask_;
    std::unique_ptr<Registry> registry_;
    std::deque<Transaction> pending_;
    std::map<Address, std::uint64_t> nonces_;
    std::vector<Block> blocks_;
    std::vector<Receipt> receipts_;
    std::map<Digest32, std::size_t> receipt_index_;
};

}  // namespace dscot
