// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/consensus.hpp"

#include <stdexcept>

namespace dscot {

ValidatorSet::ValidatorSet(std::uint32_t n) : count(n) {
    if (n == 0) throw std::invalid_argument("validator set must not be empty");
    // N <= 3f+2, i.e. quorum > 2N/3 - 1; multiples of 3 violate it
    std::uint32_t f = (n - 1) / 3;
    if (n < 3 * f + 1 || n > 3 * f + 2)
        throw std::invalid_argument("validator count breaks quorum intersection");
}

ConsensusOutcome run_consensus(const ValidatorSet& validators, const std::vector<bool>& fault_mask,
                               std::uint64_t height, std::uint32_t max_rounds) {
    if (fault_mask.size() != validators.count)
        throw std::invalid_argument("fault mask size mismatch");

    ConsensusOutcome outcome;
    for (std::uint32_t round = 0; round < max_rounds; ++round) {
        RoundResult r;
        r.round = round;
        r.proposer = static_cast<std::uint32_t>((height + round) % validators.count);
        r.proposal_sent = !fault_mask[r.proposer];

        if (r.proposal_sent) {
            for (std::uint32_t v = 0; v < validators.count; ++v)
                if (!fault_mask[v]) ++r.prepare_count;
            if (r.prepare_count >= validators.quorum()) {
                for (std::uint32_t v = 0; v < validators.count; ++v)
                    if (!fault_mask[v]) ++r.commit_count;
                r.committed = r.commit_count >= validators.quorum();
            }
        }

        bool committed = r.committed;
        std::uint32_t proposer = r.proposer;
        outcome.rounds.push_back(r);
        if (committed) {
            outcome.committed = true;
            outcome.deciding_round = round;
            outcome.proposer = proposer;
            break;
        }
    }
    return outcome;
}

}  // namespace dscot
