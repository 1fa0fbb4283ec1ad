#include "tyche/commitments.hpp"

#include "tyche/errors.hpp"
#include "tyche/hash.hpp"

#include <stdexcept>

namespace tyche::commitments {

namespace {

const Bytes kValueTag = ascii("v");
const Bytes kTerminalTag = ascii("term");

} // namespace

void SecurityParams::validate() const {
    if (lambda_bits < 128) throw std::invalid_argument("lambda must be at least 128 bits");
    if (hash_output_bits < 2 * lambda_bits)
        throw std::invalid_argument("hash output must be at least 2*lambda bits");
    if (hash_output_bits > kHashOutputBits)
        throw std::invalid_argument("hash output exceeds the backing hash");
}

SecurityParams SecurityParams::reduced(unsigned lambda_bits) {
    if (lambda_bits == 0) throw std::invalid_argument("lambda must be positive");
    SecurityParams p;
    p.lambda_bits = lambda_bits;
    p.hash_output_bits = kHashOutputBits;
    if (p.hash_output_bits < 2 * lambda_bits)
        throw std::invalid_argument("hash output must be at least 2*lambda bits");
    return p;
}

Bytes truncate_to_lambda(const Bytes& digest, unsigned lambda_bits) {
    std::size_t nbytes = (lambda_bits + 7) / 8;
    if (digest.size() < nbytes) throw std::invalid_argument("digest shorter than lambda");
    Bytes out(digest.begin(), digest.begin() + static_cast<std::ptrdiff_t>(nbytes));
    unsigned spare = static_cast<unsigned>(nbytes * 8) - lambda_bits;
    if (spare > 0) out[0] &= static_cast<std::uint8_t>(0xff >> spare);
    return out;
}

Int value_to_int(const Bytes& value) {
    Int v = 0;
    for (std::uint8_t b : value) {
        v <<= 8;
        v += b;
    }
    return v;
}

Bytes int_to_value(const Int& v, unsigned lambda_bits) {
    if (v < 0 || v >= pow2(lambda_bits)) throw std::invalid_argument("value out of lambda range");
    std::size_t nbytes = (lambda_bits + 7) / 8;
    Bytes out(nbytes, 0);
    Int rest = v;
    for (std::size_t i = nbytes; i-- > 0;) {
        Int byte = rest & Int(0xff);
        out[i] = static_cast<std::uint8_t>(byte.get_ui());
        rest >>= 8;
    }
    return out;
}

HashChainCommitment HashChainCommitment::create(const Bytes& seed, std::uint32_t length,
                                                const SecurityParams& params) {
    if (length == 0) throw std::invalid_argument("chain length must be at least 1");
    if (seed.empty()) throw std::invalid_argument("chain seed must be nonempty");

    HashChainCommitment chain;
    chain.params_ = params;
    std::vector<Bytes> values(length);
    for (std::uint32_t r = 0; r < length; ++r) {
        Bytes round_bytes = be32(r);
        values[r] = truncate_to_lambda(hash_fields({&seed, &kValueTag, &round_bytes}),
                                       params.lambda_bits);
    }
    Bytes length_bytes = be32(length);
    Bytes terminal = hash_fields({&seed, &kTerminalTag, &length_bytes});

    chain.links_.resize(length);
    Bytes next = terminal;
    for (std::uint32_t r = length; r-- > 0;) {
        chain.links_[r] = {next, values[r]};
        next = hash_fields({&next, &values[r]});
    }
    chain.head_ = next;
    return chain;
}

HashChainCommitment HashChainCommitment::from_values(const std::vector<Bytes>& values,
                                                     const SecurityParams& params) {
    if (values.empty()) throw std::invalid_argument("chain length must be at least 1");
    for (const Bytes& v : values) {
        if (v.size() != params.value_bytes() || value_to_int(v) >= pow2(params.lambda_bits))
            throw std::invalid_argument("chain value is not a lambda-bit string");
    }
    HashChainCommitment chain;
    chain.params_ = params;
    Bytes seedless = ascii("fixed");
    Bytes length_bytes = be32(static_cast<std::uint32_t>(values.size()));
    Bytes terminal = hash_fields({&seedless, &kTerminalTag, &length_bytes});

    chain.links_.resize(values.size());
    Bytes next = terminal;
    for (std::size_t r = values.size(); r-- > 0;) {
        chain.links_[r] = {next, values[r]};
        next = hash_fields({&next, &values[r]});
    }
    chain.head_ = next;
    return chain;
}

Opening HashChainCommitment::open(std::uint32_t round) const {
    if (round >= links_.size()) throw std::out_of_range("opening round beyond chain length");
    Opening o;
    o.round = round;
    o.next_head = links_[round].first;
    o.value = links_[round].second;
    return o;
}

bool verify_opening(const Bytes& current_head, const Opening& opening) {
    return hash_fields({&opening.next_head, &opening.value}) == current_head;
}

Rat fixed_point(const Bytes& a, const Bytes& b, unsigned lambda_bits) {
    std::size_t nbytes = (lambda_bits + 7) / 8;
    if (a.size() != nbytes || b.size() != nbytes)
        throw std::invalid_argument("fixed_point inputs must be exactly lambda bits");
    Bytes x(nbytes);
    for (std::size_t i = 0; i < nbytes; ++i) x[i] = a[i] ^ b[i];
    Int xi = value_to_int(x);
    if (xi >= pow2(lambda_bits))
        throw std::invalid_argument("fixed_point inputs must be exactly lambda bits");
    return make_rat(xi, pow2(lambda_bits));
}

Bytes derive_sim_opening(const Bytes& seed_value, std::uint32_t instance,
                         const SecurityParams& params) {
    Bytes idx = be32(instance);
    return truncate_to_lambda(hash_fields({&seed_value, &idx}), params.lambda_bits);
}

} // namespace tyche::commitments
