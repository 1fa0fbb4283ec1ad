#pragma once

#include "tyche/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tyche::network {

// Probabilistic exchange gate between two wires. Directed: the winner of the
// match instantiated on this gate always ends up on to_wire, which is the
// position of weakly higher expected payout.
struct Swapper {
    std::uint32_t from_wire = 0; // 1-based
    std::uint32_t to_wire = 0;   // 1-based
    Rat swap_probability;        // exact, in [0, 1]
};

using Round = std::vector<Swapper>;

struct ShufflingNetwork {
    std::uint32_t n = 0;
    std::vector<Round> rounds;

    // Wire ranges, per-round disjointness, probability range.
    void validate() const;
    std::size_t swapper_count() const;
};

// Non-increasing payout fractions per final position, summing to 1.
struct PayoutFunction {
    std::vector<Rat> payouts; // payouts[0] belongs to position 1

    void validate() const;
    std::uint32_t size() const { return static_cast<std::uint32_t>(payouts.size()); }
    const Rat& at_position(std::uint32_t pos) const { return payouts.at(pos - 1); }

    static PayoutFunction single_winner(std::uint32_t n);
    static PayoutFunction uniform_top(std::uint32_t n, std::uint32_t k);
    static PayoutFunction linear(std::uint32_t n);
};

// matrix[input][output wire], both 0-based; every row is the exact output
// distribution of one input.
using MarginalMatrix = std::vector<std::vector<Rat>>;

// Permutation maps input index -> final wire, both 0-based.
using Permutation = std::vector<std::uint32_t>;

// Single-elimination bracket for n = 2^k players in network notation: round r
// pairs adjacent surviving positions, winners directed toward wire 1.
ShufflingNetwork build_tournament_tree(std::uint32_t n);

// Block-halving construction on 2^k wires: round r splits every block of
// 2^(k-r) wires in half and pairs the halves at p = 1/2, directed upward.
// Depth k, k*2^(k-1) swappers, exactly uniform output marginals.
ShufflingNetwork build_butterfly(std::uint32_t k);

// Arbitrary n >= 2: per-batch butterflies over the power-of-two decomposition
// (largest batch on the top wires), one merge round per batch in decreasing
// size order, then per-batch butterflies again. Merge probabilities are forced
// by exact correctness: batch i absorbs with p = 2^{k_i} / sum_{t<=i} 2^{k_t}.
ShufflingNetwork build_general(std::uint32_t n);

MarginalMatrix marginal_distribution(const ShufflingNetwork& net);

// True iff every entry of the marginal matrix equals exactly 1/n.
bool verify_correct(const ShufflingNetwork& net);

// Exact distribution over output permutations by enumerating all swap/no-swap
// outcomes. Guarded: n <= 8 and at most 24 swappers.
std::map<Permutation, Rat> permutation_distribution(const ShufflingNetwork& net);

// Backward induction of expected payouts. stages[r] holds the per-wire
// expectation before round r; stages[depth] is the payout itself. stages[0]
// is the input-stage expectation.
std::vector<std::vector<Rat>> expected_payouts(const ShufflingNetwork& net,
                                               const PayoutFunction& payout);

// True iff for every swapper, at its own stage, the destination wire carries
// weakly higher expected payout than the source wire.
bool verify_monotonic(const ShufflingNetwork& net, const PayoutFunction& payout);

// Drops swappers whose two wires carry equal stage expectations (no-op games)
// and anything with no influence on a paying position. Input-stage expected
// payouts are preserved exactly.
ShufflingNetwork prune(const ShufflingNetwork& net, const PayoutFunction& payout);

// Number of nonempty rounds.
std::uint32_t depth(const ShufflingNetwork& net);

// Every swap probability replaced by its lambda-bit grid approximation, i.e.
// the probability actually realized when matches compare a uniform lambda-bit
// fraction against the threshold.
ShufflingNetwork snap_to_grid(const ShufflingNetwork& net, unsigned lambda_bits);

} // namespace tyche::network
