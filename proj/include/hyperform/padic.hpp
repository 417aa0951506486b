#ifndef HYPERFORM_PADIC_HPP_
#define HYPERFORM_PADIC_HPP_

#include "hyperform/exact_linalg.hpp"
#include "hyperform/invariant_form.hpp"

#include <compare>
#include <map>
#include <span>
#include <vector>

namespace hyperform {

struct Signature {
    unsigned plus = 0;
    unsigned minus = 0;
    friend auto operator<=>(Signature const&, Signature const&) = default;
};

struct InvariantRecord {
    Signature signature;
    Integer discriminant;                     // signed squarefree
    std::map<unsigned long, int> hasse;       // primes where W_p was computed
    std::vector<unsigned long> relevant_primes;

    /* W_p, +1 for primes that were not computed. */
    int hasse_at(unsigned long p) const;

    friend bool operator==(InvariantRecord const&, InvariantRecord const&) = default;
};

/* Legendre symbol (a/p) for an odd prime p, by Euler's criterion. */
int legendre_symbol(Integer const& a, unsigned long p);

/* (a, b)_p by the closed formulas for odd p and p = 2. Throws
 * errc::zero_argument, errc::not_prime. */
int hilbert_symbol(Rational const& a, Rational const& b, unsigned long p);

/* (a, b)_p decided by searching for a primitive zero of
 * a'x^2 + b'y^2 - z^2 modulo p, p^2, ..., p^M where a', b' are a, b
 * rescaled by squares to integers with v_p < 2 and M = v_p(4a'b') + 3.
 * Exponential in M; meant for cross-checking hilbert_symbol. */
int hilbert_symbol_oracle(Rational const& a, Rational const& b, unsigned long p);

/* prod_{i<j} (a_i, a_j)_p. Throws errc::degenerate for a zero entry. */
int hasse_witt(std::span<Rational const> diagonal, unsigned long p);
int hasse_witt(DiagonalForm const& d, unsigned long p);

Signature real_signature(std::span<Rational const> diagonal);
Signature real_signature(DiagonalForm const& d);

/* squarefree_class(det Q). Throws errc::degenerate. */
Integer discriminant_class(QuadraticForm const& q);

/* {2} and every prime dividing a numerator or denominator of an entry. */
std::vector<unsigned long> relevant_primes(std::span<Rational const> diagonal);
std::vector<unsigned long> relevant_primes(DiagonalForm const& d);

inline constexpr unsigned long default_prime_bound = 149;

struct InvariantOptions {
    unsigned long prime_bound = default_prime_bound;
    /* Also evaluate W_p at every prime <= prime_bound, not only at the
     * relevant primes. */
    bool all_primes_to_bound = true;
};

/* Signature, discriminant and Hasse-Witt invariants from one
 * diagonalization. Throws errc::degenerate. */
InvariantRecord full_invariants(QuadraticForm const& q, InvariantOptions const& options = {});
InvariantRecord full_invariants(QuadraticForm const& q, DiagonalForm const& d,
                                InvariantOptions const& options = {});

}  // namespace hyperform

#endif /* HYPERFORM_PADIC_HPP_ */
