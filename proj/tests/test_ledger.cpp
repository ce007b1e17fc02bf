// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dscot/keccak.hpp"
#include "dscot/ledger.hpp"

using namespace dscot;

namespace {

struct Net {
    Net() : ledger(GasSchedule{}, 4, 1650000000) {}

    KeyPair owner = keypair_from_seed(1, "owner");
    KeyPair user = keypair_from_seed(1, "user");
    KeyPair fog = keypair_from_seed(1, "fog");
    KeyPair device = keypair_from_seed(1, "device");
    Ledger ledger;

    Address address(const KeyPair& kp) const { return derive_address(kp.public_key); }

    Receipt send(const KeyPair& kp, Operation op) {
        Transaction tx =
            make_transaction(kp, std::move(op), ledger.next_nonce(derive_address(kp.public_key)));
        ledger.submit(tx);
        auto produced = ledger.produce_block(ledger.blocks().back().timestamp + 1);
        REQUIRE(produced.committed);
        return ledger.get_receipt(tx.hash());
    }

    void deploy_and_map() {
        send(owner, {OpType::Deploy, {}});
        send(owner, {OpType::DeviceFogMapping, {address(fog), address(device)}});
        send(owner, {OpType::UserDeviceMapping, {address(user), address(device), address(fog)}});
    }
};

}  // namespace

TEST_CASE("submit validates signatures") {
    Net net;
    Transaction tx = make_transaction(net.owner, {OpType::Deploy, {}}, 0);
    CHECK_NOTHROW(net.ledger.submit(tx));

    Transaction tampered =
        make_transaction(net.owner, {OpType::Approve, {net.address(net.user)}}, 1);
    tampered.operation.args[0] = net.address(net.fog);  // payload changed after signing
    CHECK_THROWS_AS(net.ledger.submit(tampered), SubmitError);

    Transaction wrong_sender = make_transaction(net.owner, {OpType::Deploy, {}}, 1);
    wrong_sender.sender = net.address(net.user);
    CHECK_THROWS_AS(net.ledger.submit(wrong_sender), SubmitError);
}

TEST_CASE("submit enforces strictly increasing nonces") {
    Net net;
    net.send(net.owner, {OpType::Deploy, {}});
    CHECK(net.ledger.next_nonce(net.address(net.owner)) == 1);

    Transaction duplicate =
        make_transaction(net.owner, {OpType::Approve, {net.address(net.user)}}, 0);
    CHECK_THROWS_AS(net.ledger.submit(duplicate), SubmitError);
    Transaction gap = make_transaction(net.owner, {OpType::Approve, {net.address(net.user)}}, 5);
    CHECK_THROWS_AS(net.ledger.submit(gap), SubmitError);
    Transaction next = make_transaction(net.owner, {OpType::Approve, {net.address(net.user)}}, 1);
    CHECK_NOTHROW(net.ledger.submit(next));
}

TEST_CASE("validator arithmetic") {
    CHECK(ValidatorSet(4).max_faulty() == 1);
    CHECK(ValidatorSet(4).quorum() == 3);
    CHECK(ValidatorSet(7).max_faulty() == 2);
    CHECK(ValidatorSet(7).quorum() == 5);
    CHECK_THROWS_AS(ValidatorSet(0), std::invalid_argument);
    CHECK_THROWS_AS(ValidatorSet(3), std::invalid_argument);
    CHECK_THROWS_AS(ValidatorSet(6), std::invalid_argument);
}

TEST_CASE("consensus commits with up to f silent faults") {
    ValidatorSet validators(4);
    SUBCASE("no faults: immediate commit") {
        auto outcome = run_consensus(validators, {false, false, false, false}, 1, 4);
        CHECK(outcome.committed);
        CHECK(outcome.deciding_round == 0);
        CHECK(outcome.rounds[0].commit_count == 4);
    }
    SUBCASE("one fault: still commits, even when the proposer is faulty") {
        for (std::uint32_t faulty = 0; faulty < 4; ++faulty) {
            std::vector<bool> mask(4, false);
            mask[faulty] = true;
            for (std::uint64_t height = 1; height <= 4; ++height) {
                auto outcome = run_consensus(validators, mask, height, 4);
                CHECK(outcome.committed);
            }
        }
    }
    SUBCASE("two faults: no quorum, proposer rotates") {
        auto outcome = run_consensus(validators, {true, true, false, false}, 1, 4);
        CHECK_FALSE(outcome.committed);
        CHECK(outcome.rounds.size() == 4);
        CHECK(outcome.rounds[0].proposer != outcome.rounds[1].proposer);
    }
}

TEST_CASE("blocks link into a single chain") {
    Net net;
    net.deploy_and_map();
    const Block& genesis = net.ledger.get_block(0);
    CHECK(genesis.parent_hash.is_zero());
    CHECK(net.ledger.blocks().size() == 4);
    for (std::size_t i = 0; i < net.ledger.blocks().size(); ++i) {
        const Block& b = net.ledger.get_block(i);
        CHECK(b.number == i);
        if (i > 0) {
            CHECK(b.parent_hash == net.ledger.get_block(i - 1).hash());
            CHECK(b.timestamp >= net.ledger.get_block(i - 1).timestamp);
        }
    }
    CHECK_THROWS_AS(net.ledger.get_block(99), NotFoundError);
}

TEST_CASE("reverted transactions keep no events but consume gas") {
    Net net;
    net.send(net.owner, {OpType::Deploy, {}});
    Receipt receipt = net.send(net.user, {OpType::Approve, {net.address(net.user)}});
    CHECK(receipt.status == TxStatus::Reverted);
    CHECK(receipt.revert_reason == "Not an Admin");
    CHECK(receipt.events.empty());
    CHECK(receipt.gas_used > 0);
    CHECK_THROWS_AS(net.ledger.get_receipt(Digest32{}), NotFoundError);
}

TEST_CASE("state roots replay from the event log") {
    Net net;
    net.deploy_and_map();
    net.send(net.user, {OpType::MintNft, {net.address(net.device), net.address(net.fog)}});

    RegistryState folded = Registry(net.address(net.owner)).state();
    for (const Receipt& receipt : net.ledger.receipts())
        for (const Event& ev : receipt.events) fold_event(folded, ev);
    CHECK(keccak256(snapshot_text(folded)) == net.ledger.blocks().back().state_root);
}

TEST_CASE("every stored state root is reproducible by replay") {
    Net net;
    net.deploy_and_map();
    net.send(net.user, {OpType::MintNft, {net.address(net.device), net.address(net.fog)}});
    net.send(net.owner, {OpType::DelUser, {net.address(net.user)}});

    RegistryState replayed = Registry(net.address(net.owner)).state();
    for (const Block& block : net.ledger.blocks()) {
        if (block.number == 0) {
            CHECK(block.state_root == keccak256(std::string()));
            continue;
        }
        for (const Digest32& tx_hash : block.tx_hashes)
            for (const Event& ev : net.ledger.get_receipt(tx_hash).events)
                fold_event(replayed, ev);
        CHECK(block.state_root == keccak256(snapshot_text(replayed)));
    }
}

TEST_CASE("transactions and receipts correspond one to one") {
    Net net;
    net.deploy_and_map();
    net.send(net.user, {OpType::MintNft, {net.address(net.device), net.address(net.fog)}});

    std::size_t chained = 0;
    for (const Block& block : net.ledger.blocks())
        for (const Digest32& tx_hash : block.tx_hashes) {
            const Receipt& receipt = net.ledger.get_receipt(tx_hash);
            CHECK(receipt.tx_hash == tx_hash);
            CHECK(receipt.block_number == block.number);
            ++chained;
        }
    CHECK(chained == net.ledger.receipts().size());
}

TEST_CASE("read-only calls cost execution gas but no fee") {
    Net net;
    net.deploy_and_map();
    Address owner = net.address(net.owner);

    CallOutcome admins = net.ledger.call_admin_add(owner);
    CHECK(admins.ok);
    CHECK(admins.fee == 0);
    CHECK(admins.execution_cost > 0);
    CHECK(admins.value == "address[]: " + owner.hex());

    CallOutcome count = net.ledger.call_no_of_admins(owner);
    CHECK(count.value == "uint256: 1");

    CallOutcome pair = net.ledger.call_users_devices(owner, net.address(net.user), 0);
    CHECK(pair.ok);
    CHECK(pair.value == "address: dev " + net.address(net.device).hex() + ", address: fog " +
                            net.address(net.fog).hex());

    CallOutcome gated = net.ledger.call_no_of_admins(net.address(net.user));
    CHECK_FALSE(gated.ok);
    CHECK(gated.error == "Not an Admin");
    CHECK(gated.fee == 0);

    std::uint64_t total_fees = admins.fee + count.fee + pair.fee + gated.fee;
    CHECK(total_fees == 0);
}

TEST_CASE("canonical transaction gas matches the calibrated schedule") {
    Net net;
    net.send(net.owner, {OpType::Deploy, {}});
    Receipt approve = net.send(net.owner, {OpType::Approve, {net.address(net.user)}});
    CHECK(approve.gas_used == 61613);
}

TEST_CASE("mint gas is affine in the fog list length") {
    // device appended last so the scan visits exactly k entries
    std::vector<std::uint64_t> gas;
    std::vector<std::size_t> ks = {1, 2, 4, 8};
    for (std::size_t k : ks) {
        Net net;
        net.send(net.owner, {OpType::Deploy, {}});
        Address decoy = net.address(net.fog);  // any distinct address works as a decoy device
        for (std::size_t i = 0; i + 1 < k; ++i)
            net.send(net.owner, {OpType::DeviceFogMapping, {net.address(net.fog), decoy}});
        net.send(net.owner,
                 {OpType::DeviceFogMapping, {net.address(net.fog), net.address(net.device)}});
        net.send(net.owner,
                 {OpType::UserDeviceMapping,
                  {net.address(net.user), net.address(net.device), net.address(net.fog)}});
        Receipt mint =
            net.send(net.user, {OpType::MintNft, {net.address(net.device), net.address(net.fog)}});
        CHECK(mint.status == TxStatus::Accepted);
        gas.push_back(mint.gas_used);
    }
    std::uint64_t slope = gas[1] - gas[0];
    CHECK(slope > 0);
    for (std::size_t i = 0; i < ks.size(); ++i) CHECK(gas[i] == gas[0] + slope * (ks[i] - 1));
}

TEST_CASE("adding an event or write strictly increases metered gas") {
    GasSchedule schedule;
    OpTrace base;
    base.storage_reads = 3;
    base.loop_iterations = 3;
    std::uint64_t baseline = meter_transaction(base, schedule);

    OpTrace with_write = base;
    with_write.storage_writes_new += 1;
    CHECK(meter_transaction(with_write, schedule) > baseline);

    OpTrace with_log = base;
    with_log.record_log(2, 0);
    CHECK(meter_transaction(with_log, schedule) > baseline);
}

TEST_CASE("trace_token lists the minting block's events") {
    Net net;
    net.deploy_and_map();
    Receipt mint =
        net.send(net.user, {OpType::MintNft, {net.address(net.device), net.address(net.fog)}});
    const auto& created = std::get<TokenCreated>(mint.events[1]);

    auto trail = net.ledger.trace_token(created.token_id);
    REQUIRE(trail.size() == 2);
    CHECK(trail[0].first == mint.block_number);
    CHECK(std::holds_alternative<Authenticated>(trail[0].second));
    CHECK(std::holds_alternative<TokenCreated>(trail[1].second));

    Digest32 unknown;
    unknown.bytes.fill(0x42);
    CHECK(net.ledger.trace_token(unknown).empty());
}

TEST_CASE("chain export is reproducible") {
    auto build = [] {
        Net net;
        net.deploy_and_map();
        net.send(net.user, {OpType::MintNft, {net.address(net.device), net.address(net.fog)}});
        return net.ledger.export_chain();
    };
    CHECK(build() == build());
}

TEST_CASE("gas schedule round-trips through its text form") {
    GasSchedule schedule;
    schedule.loop_iteration = 99;
    GasSchedule parsed = GasSchedule::from_text(schedule.to_text());
    CHECK(parsed.loop_iteration == 99);
    CHECK(parsed.tx_base == schedule.tx_base);
    CHECK_THROWS_AS(GasSchedule::from_text("bogus_key=1"), std::invalid_argument);
    CHECK_THROWS_AS(GasSchedule::from_text("tx_base"), std::invalid_argument);

    GasSchedule commented = GasSchedule::from_text("# comment\n  tx_base=123  \n");
    CHECK(commented.tx_base == 123);
}
