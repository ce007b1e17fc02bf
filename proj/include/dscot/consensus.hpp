// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace dscot {

/// IBFT-2.0-style validator set: tolerates f = floor((N-1)/3) silent faults
/// with a commit quorum of 2f+1.
struct ValidatorSet {
    explicit ValidatorSet(std::uint32_t count);

    std::uint32_t count;
    std::uint32_t max_faulty() const { return (count - 1) / 3; }
    std::uint32_t quorum() const { return 2 * max_faulty() + 1; }
};

/// Message tallies of one proposal/prepare/commit round.
struct RoundResult {
    std::uint32_t round = 0;
    std::uint32_t proposer = 0;
    bool proposal_sent = false;
    std::uint32_t prepare_count = 0;
    std::uint32_t commit_count = 0;
    bool committed = false;
};

struct ConsensusOutcome {
    bool committed = false;
    std::uint32_t deciding_round = 0;
    std::uint32_t proposer = 0;
    std::vector<RoundResult> rounds;
};

/// Simulates consensus for one block height. Faulty validators stay silent;
/// on quorum failure the proposer rotates and the next round begins, up to
/// max_rounds attempts.
ConsensusOutcome run_consensus(const ValidatorSet& validators, const std::vector<bool>& fault_mask,
                               std::uint64_t height, std::uint32_t max_rounds);

}  // namespace dscot
