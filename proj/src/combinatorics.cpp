#include "mdscoset/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "mdscoset/errors.hpp"

namespace mdscoset {

Integer binom(long n, long k) {
  if (n < 0) {
    throw DomainError("binom: negative upper argument n=" + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer alt_binom_sum(long n, long m) {
  if (n < 1 || m < 0) {
    throw DomainError("alt_binom_sum: requires n >= 1 and m >= 0");
  }
  Integer acc = 0;
  for (long i = 0; i <= m; ++i) {
    if (i % 2 == 0) {
      acc += binom(n, i);
    } else {
      acc -= binom(n, i);
    }
  }
  return acc;
}

Integer ipow(long base, long exp) {
  if (exp < 0) {
    throw DomainError("ipow: negative exponent " + std::to_string(exp));
  }
  Integer r;
  Integer b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

Integer exact_integer(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1) {
    throw std::logic_error("expected an integral value, got " + c.get_str());
  }
  return c.get_num();
}

}  // namespace mdscoset
