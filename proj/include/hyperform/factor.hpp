#ifndef HYPERFORM_FACTOR_HPP_
#define HYPERFORM_FACTOR_HPP_

#include "hyperform/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hyperform {

inline constexpr std::uint32_t default_trial_bound = 1'000'000;

/* Primes <= bound, sieved once per bound and cached. */
std::vector<std::uint32_t> const& primes_up_to(std::uint32_t bound);

bool is_prime(unsigned long n);

/* Factorization of |n| by trial division with the primes <= bound. A
 * remaining cofactor c <= bound^2 is prime; a larger one throws
 * errc::unfactored. n must be nonzero (errc::zero_input). */
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer const& n,
                                                         std::uint32_t bound = default_trial_bound);

/* p-adic valuation of a nonzero integer, and the unit part n / p^v. */
struct Valuation {
    unsigned long exponent;
    Integer unit;
};
Valuation split_valuation(Integer const& n, unsigned long p);

/* v_p of a nonzero rational (may be negative). */
long valuation(Rational const& r, unsigned long p);

}  // namespace hyperform

#endif /* HYPERFORM_FACTOR_HPP_ */
