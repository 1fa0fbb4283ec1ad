#pragma once

#include "tyche/bytes.hpp"
#include "tyche/rational.hpp"

#include <cstdint>
#include <vector>

namespace tyche::commitments {

struct SecurityParams {
    unsigned lambda_bits = 128;
    unsigned hash_output_bits = 256;

    // Production parameters. Throws on lambda < 128 or hash output < 2*lambda.
    void validate() const;

    // Small lambda for exhaustive tests; still checks the 2*lambda bound.
    static SecurityParams reduced(unsigned lambda_bits);

    std::size_t value_bytes() const { return (lambda_bits + 7) / 8; }
};

struct Opening {
    std::uint32_t round = 0;
    Bytes next_head; // c_{round+1}
    Bytes value;     // v_round, exactly lambda bits
};

// Lamport-style chain: c_r = H(c_{r+1} || v_r). The head c_0 is the only
// value published at commit time; each opening reveals one link and is
// implicitly the commitment for the following round.
class HashChainCommitment {
  public:
    // Deterministic in (seed, length, params). Values and the terminal link are
    // derived from the seed, so nothing but the seed needs to be stored.
    static HashChainCommitment create(const Bytes& seed, std::uint32_t length,
                                      const SecurityParams& params);

    // Chain over explicitly supplied per-round values (tests drive specific
    // randomness through the protocol with this).
    static HashChainCommitment from_values(const std::vector<Bytes>& values,
                                           const SecurityParams& params);

    const Bytes& head() const { return head_; }
    std::uint32_t length() const { return static_cast<std::uint32_t>(links_.size()); }
    const SecurityParams& params() const { return params_; }

    Opening open(std::uint32_t round) const;

  private:
    HashChainCommitment() = default;

    SecurityParams params_;
    Bytes head_;
    // links_[r] = (c_{r+1}, v_r)
    std::vector<std::pair<Bytes, Bytes>> links_;
};

// True iff current_head == H(opening.next_head || opening.value). Pure; never throws.
bool verify_opening(const Bytes& current_head, const Opening& opening);

// Keep only the low lambda bits of the digest, packed big-endian into
// ceil(lambda/8) bytes.
Bytes truncate_to_lambda(const Bytes& digest, unsigned lambda_bits);

// Big-endian integer value of a lambda-bit string.
Int value_to_int(const Bytes& value);

// Inverse of value_to_int for values below 2^lambda.
Bytes int_to_value(const Int& v, unsigned lambda_bits);

// (a XOR b) read as the binary fraction 0.b1b2...b_lambda, an exact rational
// in [0, 1).
Rat fixed_point(const Bytes& a, const Bytes& b, unsigned lambda_bits);

// H(seed_value || instance) truncated to lambda bits; instances are
// independent of each other by construction.
Bytes derive_sim_opening(const Bytes& seed_value, std::uint32_t instance,
                         const SecurityParams& params);

} // namespace tyche::commitments
