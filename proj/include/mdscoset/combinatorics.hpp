#pragma once

#include <gmpxx.h>

namespace mdscoset {

/// Exact signed integer. Every count in the library is carried in this type.
using Integer = mpz_class;
/// Exact rational, used only where a formula carries an explicit fraction.
using Rational = mpq_class;

/// Binomial coefficient n!/(k!(n-k)!). Returns 0 when k < 0 or k > n.
/// Throws DomainError for n < 0.
Integer binom(long n, long k);

/// Sum_{i=0}^{m} (-1)^i binom(n, i), by direct summation.
Integer alt_binom_sum(long n, long m);

/// base^exp for exp >= 0. Throws DomainError for a negative exponent.
Integer ipow(long base, long exp);

/// (-1)^e for any integer e, including negative e.
inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Converts a rational known to be integral; throws std::logic_error otherwise.
Integer exact_integer(const Rational& r);

}  // namespace mdscoset
