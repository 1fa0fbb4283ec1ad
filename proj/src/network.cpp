#include "tyche/network.hpp"

#include "tyche/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace tyche::network {

namespace {

bool is_power_of_two(std::uint32_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

std::uint32_t floor_log2(std::uint32_t n) {
    return 31u - static_cast<std::uint32_t>(std::countl_zero(n));
}

// Butterfly rounds for 2^k wires starting at wire `offset + 1`, written into
// rounds[start_round ...].
void emit_butterfly(std::vector<Round>& rounds, std::uint32_t k, std::uint32_t offset,
                    std::uint32_t start_round) {
    const Rat half = make_rat(1, 2);
    for (std::uint32_t r = 0; r < k; ++r) {
        std::uint32_t block = 1u << (k - r);
        std::uint32_t half_block = block / 2;
        Round& round = rounds.at(start_round + r);
        for (std::uint32_t base = 0; base < (1u << k); base += block) {
            for (std::uint32_t t = 0; t < half_block; ++t) {
                round.push_back(
                    Swapper{offset + base + half_block + t + 1, offset + base + t + 1, half});
            }
        }
    }
}

} // namespace

void ShufflingNetwork::validate() const {
    if (n == 0) throw std::invalid_argument("network needs at least one wire");
    for (const Round& round : rounds) {
        std::set<std::uint32_t> used;
        for (const Swapper& s : round) {
            if (s.from_wire == 0 || s.from_wire > n || s.to_wire == 0 || s.to_wire > n)
                throw std::invalid_argument("swapper wire out of range");
            if (s.from_wire == s.to_wire) throw std::invalid_argument("swapper on a single wire");
            if (s.swap_probability < 0 || s.swap_probability > 1)
                throw std::invalid_argument("swap probability outside [0, 1]");
            if (!used.insert(s.from_wire).second || !used.insert(s.to_wire).second)
                throw std::invalid_argument("wires within a round must be disjoint");
        }
    }
}

std::size_t ShufflingNetwork::swapper_count() const {
    std::size_t c = 0;
    for (const Round& r : rounds) c += r.size();
    return c;
}

void PayoutFunction::validate() const {
    if (payouts.empty()) throw std::invalid_argument("empty payout function");
    Rat sum = 0;
    for (std::size_t i = 0; i < payouts.size(); ++i) {
        if (payouts[i] < 0 || payouts[i] > 1)
            throw std::invalid_argument("payout fraction outside [0, 1]");
        if (i > 0 && payouts[i] > payouts[i - 1])
            throw std::invalid_argument("payout function must be non-increasing");
        sum += payouts[i];
    }
    if (sum != 1) throw std::invalid_argument("payout fractions must sum to 1");
}

PayoutFunction PayoutFunction::single_winner(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("empty payout function");
    PayoutFunction p;
    p.payouts.assign(n, Rat(0));
    p.payouts[0] = 1;
    return p;
}

PayoutFunction PayoutFunction::uniform_top(std::uint32_t n, std::uint32_t k) {
    if (k == 0 || k > n) throw std::invalid_argument("uniform_top needs 1 <= k <= n");
    PayoutFunction p;
    p.payouts.assign(n, Rat(0));
    for (std::uint32_t i = 0; i < k; ++i) p.payouts[i] = make_rat(1, static_cast<long>(k));
    return p;
}

PayoutFunction PayoutFunction::linear(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("empty payout function");
    PayoutFunction p;
    long total = static_cast<long>(n) * (static_cast<long>(n) + 1) / 2;
    p.payouts.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i)
        p.payouts.push_back(make_rat(static_cast<long>(n - i), total));
    return p;
}

ShufflingNetwork build_tournament_tree(std::uint32_t n) {
    if (n < 2 || !is_power_of_two(n))
        throw std::invalid_argument("tournament tree needs a power-of-two player count");
    const std::uint32_t k = floor_log2(n);
    ShufflingNetwork net;
    net.n = n;
    net.rounds.resize(k);
    const Rat half = make_rat(1, 2);
    for (std::uint32_t r = 0; r < k; ++r) {
        std::uint32_t step = 1u << r;
        for (std::uint32_t m = 0; m < (n >> (r + 1)); ++m) {
            std::uint32_t to = 1 + 2 * m * step;
            std::uint32_t from = to + step;
            net.rounds[r].push_back(Swapper{from, to, half});
        }
    }
    net.validate();
    return net;
}

ShufflingNetwork build_butterfly(std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("butterfly needs at least one level");
    ShufflingNetwork net;
    net.n = 1u << k;
    net.rounds.resize(k);
    emit_butterfly(net.rounds, k, 0, 0);
    net.validate();
    return net;
}

ShufflingNetwork build_general(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("shuffling network needs at least two wires");
    if (is_power_of_two(n)) return build_butterfly(floor_log2(n));

    // Power-of-two decomposition, exponents ascending.
    std::vector<std::uint32_t> exps;
    for (std::uint32_t b = 0; b < 32; ++b)
        if (n & (1u << b)) exps.push_back(b);
    const std::size_t l = exps.size();
    const std::uint32_t k_max = exps.back();

    // Batches occupy wires largest-first from wire 1.
    std::vector<std::uint32_t> offset(l); // offset[i] for ascending exponent index i
    {
        std::uint32_t pos = 0;
        for (std::size_t i = l; i-- > 0;) {
            offset[i] = pos;
            pos += 1u << exps[i];
        }
    }

    ShufflingNetwork net;
    net.n = n;
    net.rounds.resize(2 * k_max + 1);

    // First butterflies, all starting at round 0.
    for (std::size_t i = 0; i < l; ++i)
        if (exps[i] > 0) emit_butterfly(net.rounds, exps[i], offset[i], 0);

    // One merge round per batch, largest first, each pairing every wire of all
    // smaller batches with the bottom wires of the absorbing batch.
    for (std::size_t i = l; i-- > 1;) {
        std::uint32_t round_idx = k_max + static_cast<std::uint32_t>(l - 1 - i);
        std::uint32_t batch_size = 1u << exps[i];
        std::uint32_t smaller = 0;
        for (std::size_t t = 0; t < i; ++t) smaller += 1u << exps[t];
        Rat p = make_rat(static_cast<long>(batch_size), static_cast<long>(batch_size + smaller));
        // Smaller batches sit contiguously right below batch i.
        std::uint32_t small_first = offset[i] + batch_size + 1;          // 1-based
        std::uint32_t target_first = offset[i] + batch_size - smaller + 1; // 1-based
        for (std::uint32_t t = 0; t < smaller; ++t) {
            net.rounds[round_idx].push_back(Swapper{small_first + t, target_first + t, p});
        }
    }

    // Second butterflies; batch i may start right after its own merge round.
    for (std::size_t i = 0; i < l; ++i) {
        if (exps[i] == 0) continue;
        std::uint32_t merge_round =
            (i == l - 1) ? k_max : k_max + static_cast<std::uint32_t>(l - 1 - i);
        emit_butterfly(net.rounds, exps[i], offset[i], merge_round + 1);
    }

    net.validate();
    return net;
}

MarginalMatrix marginal_distribution(const ShufflingNetwork& net) {
    net.validate();
    const std::uint32_t n = net.n;
    // mass[input][wire]
    MarginalMatrix mass(n, std::vector<Rat>(n, Rat(0)));
    for (std::uint32_t i = 0; i < n; ++i) mass[i][i] = 1;
    for (const Round& round : net.rounds) {
        for (const Swapper& s : round) {
            const std::size_t a = s.from_wire - 1;
            const std::size_t b = s.to_wire - 1;
            const Rat& p = s.swap_probability;
            const Rat q = Rat(1) - p;
            for (std::uint32_t i = 0; i < n; ++i) {
                Rat ma = mass[i][a];
                Rat mb = mass[i][b];
                mass[i][a] = q * ma + p * mb;
                mass[i][b] = q * mb + p * ma;
            }
        }
    }
    return mass;
}

bool verify_correct(const ShufflingNetwork& net) {
    MarginalMatrix m = marginal_distribution(net);
    const Rat uniform = make_rat(1, static_cast<long>(net.n));
    for (const auto& row : m)
        for (const Rat& cell : row)
            if (cell != uniform) return false;
    return true;
}

std::map<Permutation, Rat> permutation_distribution(const ShufflingNetwork& net) {
    net.validate();
    const std::size_t count = net.swapper_count();
    if (net.n > 8 || count > 24)
        throw ResourceLimitError("permutation enumeration limited to n <= 8, 24 swappers");

    std::vector<const Swapper*> order;
    order.reserve(count);
    for (const Round& r : net.rounds)
        for (const Swapper& s : r) order.push_back(&s);

    std::map<Permutation, Rat> dist;
    // wire -> input occupying it; recursion over swap decisions.
    Permutation occupant(net.n);
    for (std::uint32_t i = 0; i < net.n; ++i) occupant[i] = i;

    struct Walker {
        const std::vector<const Swapper*>& order;
        std::map<Permutation, Rat>& dist;
        Permutation& occupant;
        std::uint32_t n;

        void walk(std::size_t idx, const Rat& weight) {
            if (weight == 0) return;
            if (idx == order.size()) {
                Permutation input_to_wire(n);
                for (std::uint32_t w = 0; w < n; ++w) input_to_wire[occupant[w]] = w;
                dist[input_to_wire] += weight;
                return;
            }
            const Swapper& s = *order[idx];
            const std::size_t a = s.from_wire - 1;
            const std::size_t b = s.to_wire - 1;
            walk(idx + 1, weight * (Rat(1) - s.swap_probability));
            std::swap(occupant[a], occupant[b]);
            walk(idx + 1, weight * s.swap_probability);
            std::swap(occupant[a], occupant[b]);
        }
    } walker{order, dist, occupant, net.n};
    walker.walk(0, Rat(1));
    return dist;
}

std::vector<std::vector<Rat>> expected_payouts(const ShufflingNetwork& net,
                                               const PayoutFunction& payout) {
    net.validate();
    payout.validate();
    if (payout.size() != net.n)
        throw std::invalid_argument("payout length must equal the wire count");

    const std::size_t d = net.rounds.size();
    std::vector<std::vector<Rat>> stages(d + 1);
    stages[d] = payout.payouts;
    for (std::size_t r = d; r-- > 0;) {
        stages[r] = stages[r + 1];
        for (const Swapper& s : net.rounds[r]) {
            const std::size_t a = s.from_wire - 1;
            const std::size_t b = s.to_wire - 1;
            const Rat& p = s.swap_probability;
            const Rat q = Rat(1) - p;
            Rat ea = stages[r][a];
            Rat eb = stages[r][b];
            stages[r][a] = q * ea + p * eb;
            stages[r][b] = q * eb + p * ea;
        }
    }
    return stages;
}

bool verify_monotonic(const ShufflingNetwork& net, const PayoutFunction& payout) {
    auto stages = expected_payouts(net, payout);
    for (std::size_t r = 0; r < net.rounds.size(); ++r) {
        for (const Swapper& s : net.rounds[r]) {
            if (stages[r + 1][s.to_wire - 1] < stages[r + 1][s.from_wire - 1]) return false;
        }
    }
    return true;
}

ShufflingNetwork prune(const ShufflingNetwork& net, const PayoutFunction& payout) {
    if (!verify_monotonic(net, payout))
        throw std::invalid_argument("prune requires a monotonic network");
    auto stages = expected_payouts(net, payout);

    // Wires from which a paying output is still reachable, walking backward.
    std::vector<bool> relevant(net.n, false);
    for (std::uint32_t w = 0; w < net.n; ++w) relevant[w] = payout.payouts[w] > 0;

    ShufflingNetwork pruned;
    pruned.n = net.n;
    pruned.rounds.resize(net.rounds.size());
    for (std::size_t r = net.rounds.size(); r-- > 0;) {
        for (const Swapper& s : net.rounds[r]) {
            const std::size_t a = s.from_wire - 1;
            const std::size_t b = s.to_wire - 1;
            bool noop = stages[r + 1][a] == stages[r + 1][b];
            bool influences = relevant[a] || relevant[b];
            if (!noop && influences) {
                pruned.rounds[r].push_back(s);
                relevant[a] = true;
                relevant[b] = true;
            }
        }
    }

    // Dropping a swapper must never move expectations.
    auto before = expected_payouts(net, payout)[0];
    auto after = expected_payouts(pruned, payout)[0];
    if (before != after) throw std::logic_error("pruning changed input expectations");

    // Trailing all-empty rounds carry no information.
    while (!pruned.rounds.empty() && pruned.rounds.back().empty()) pruned.rounds.pop_back();
    return pruned;
}

std::uint32_t depth(const ShufflingNetwork& net) {
    std::uint32_t d = 0;
    for (const Round& r : net.rounds)
        if (!r.empty()) ++d;
    return d;
}

ShufflingNetwork snap_to_grid(const ShufflingNetwork& net, unsigned lambda_bits) {
    ShufflingNetwork out = net;
    for (Round& round : out.rounds)
        for (Swapper& s : round) s.swap_probability = grid_probability(s.swap_probability, lambda_bits);
    return out;
}

} // namespace tyche::network
