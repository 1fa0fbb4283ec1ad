#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tyche {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int pow2(unsigned bits) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, bits);
    return v;
}

// Number of integers x in [0, 2^lambda) with x / 2^lambda < p, for p in [0, 1].
inline Int grid_count_below(const Rat& p, unsigned lambda_bits) {
    Int scaled_num = p.get_num() * pow2(lambda_bits);
    Int count;
    mpz_cdiv_q(count.get_mpz_t(), scaled_num.get_mpz_t(), p.get_den().get_mpz_t());
    if (count < 0) count = 0;
    Int full = pow2(lambda_bits);
    if (count > full) count = full;
    return count;
}

// p snapped to the lambda-bit comparison grid: the probability that a uniform
// lambda-bit fraction lands strictly below p.
inline Rat grid_probability(const Rat& p, unsigned lambda_bits) {
    return make_rat(grid_count_below(p, lambda_bits), pow2(lambda_bits));
}

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

} // namespace tyche
