#ifndef HYPERFORM_RATIONAL_HPP_
#define HYPERFORM_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperform {

/* mpq_class results of arithmetic are always canonical (lowest terms,
 * positive denominator); values built by hand must go through
 * make_rational() or parse_rational(). */
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(Integer num, Integer den);

/* Accepts "n", "-n", "n/d" with d != 0. Throws errc::bad_rational. */
Rational parse_rational(std::string_view text);

std::string to_string(Rational const& r);

/* Representative of r + Z in [0, 1). */
Rational reduce_mod_one(Rational const& r);

inline int sign(Rational const& r) { return sgn(r); }

}  // namespace hyperform

#endif /* HYPERFORM_RATIONAL_HPP_ */
