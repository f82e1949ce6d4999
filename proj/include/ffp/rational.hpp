#ifndef FFP_RATIONAL_HPP
#define FFP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ffp/error.hpp"

namespace ffp {

/// Exact rational scalar. All symbolic algebra in the library runs on this
/// type; conversion to binary64 happens only at the numeric boundary
/// (root finding, distances).
using Rational = mpq_class;
using Integer = mpz_class;

/// q^e for e >= 0 (q^0 == 1).
Rational rational_pow(const Rational& q, unsigned long e);

/// n! as an exact integer.
Integer factorial(unsigned long n);

/// Falling factorial (d)_k = d (d-1) ... (d-k+1); (d)_0 == 1.
Integer falling_factorial(long d, unsigned long k);

/// Binomial coefficient C(n, k).
Integer binomial(unsigned long n, unsigned long k);

/// True iff q is the square of a rational, in which case *root is set.
bool rational_sqrt(const Rational& q, Rational* root);

/// Smallest representable-scale rational upper bound of sqrt(q), q >= 0.
/// The bound is exact when q is a perfect square and otherwise within
/// 2^-48 relative of the true value (always >= it).
Rational rational_sqrt_upper(const Rational& q);

/// Parses "p/q", plain integers, and decimal literals ("-1.25" -> -5/4).
/// Decimals are read exactly as scaled integers. Throws ArgumentError on
/// anything else.
Rational parse_rational(const std::string& text);

/// Canonical string form, "n" or "n/d" in lowest terms.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace ffp

#endif
