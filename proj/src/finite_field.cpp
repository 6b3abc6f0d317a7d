#include "mdscoset/finite_field.hpp"

#include <optional>
#include <string>
#include <utility>

#include "mdscoset/errors.hpp"

namespace mdscoset {

namespace {

struct PrimePower {
  int p;
  int m;
};

std::optional<PrimePower> factor_prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) return std::nullopt;
  return PrimePower{p, m};
}

int mod_p(int a, int p) { return ((a % p) + p) % p; }

// Remainder of a modulo a monic b, over GF(p). Coefficients low to high.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = mod_p(a[shift + i] - lead * b[i], p);
      }
    }
    a.pop_back();
  }
  return a;
}

// Monic polynomial of degree deg whose lower coefficients are the base-p digits of code.
std::vector<int> monic_from_code(int code, int deg, int p) {
  std::vector<int> poly(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    poly[i] = code % p;
    code /= p;
  }
  poly[deg] = 1;
  return poly;
}

std::vector<int> digits(int index, int m, int p) {
  std::vector<int> d(m, 0);
  for (int i = 0; i < m; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Product of two field elements by schoolbook multiplication and reduction.
int slow_mul(int a, int b, int p, int m, const std::vector<int>& modulus) {
  const auto da = digits(a, m, p);
  const auto db = digits(b, m, p);
  std::vector<int> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) prod[i + j] = mod_p(prod[i + j] + da[i] * db[j], p);
  }
  auto r = poly_mod(std::move(prod), modulus, p);
  r.resize(m, 0);
  return from_digits(r, p);
}

}  // namespace

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int dd = 1; dd <= deg / 2; ++dd) {
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      auto r = poly_mod(poly, monic_from_code(code, dd, p), p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldElement Field::element(int index) const {
  if (index < 0 || index >= q_) {
    throw DomainError("field element index " + std::to_string(index) + " outside GF(" +
                      std::to_string(q_) + ")");
  }
  return FieldElement{static_cast<std::uint8_t>(index)};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.index == 0) throw DomainError("inverse of zero");
  return FieldElement{exp_[(q_ - 1 - log_[a.index]) % (q_ - 1)]};
}

FieldElement Field::pow(FieldElement a, int e) const {
  if (e < 0) throw DomainError("negative exponent");
  if (e == 0) return one();
  if (a.index == 0) return zero();
  const long le = static_cast<long>(log_[a.index]) * e % (q_ - 1);
  return FieldElement{exp_[le]};
}

Field make_field(int q) {
  if (q < 2 || q > Field::kMaxOrder) {
    throw DomainError("field order q=" + std::to_string(q) + " outside supported range [2, 32]");
  }
  const auto pp = factor_prime_power(q);
  if (!pp) throw DomainError("field order q=" + std::to_string(q) + " is not a prime power");

  Field f;
  f.q_ = q;
  f.p_ = pp->p;
  f.m_ = pp->m;

  const int lower = q;  // p^m candidates for the lower coefficients
  for (int code = 0; code < lower; ++code) {
    auto cand = monic_from_code(code, f.m_, f.p_);
    if (is_irreducible(cand, f.p_)) {
      f.modulus_ = std::move(cand);
      break;
    }
  }

  f.add_.resize(q * q);
  f.neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, f.m_, f.p_);
    std::vector<int> dn(f.m_);
    for (int i = 0; i < f.m_; ++i) dn[i] = mod_p(-da[i], f.p_);
    f.neg_[a] = static_cast<std::uint8_t>(from_digits(dn, f.p_));
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, f.m_, f.p_);
      std::vector<int> ds(f.m_);
      for (int i = 0; i < f.m_; ++i) ds[i] = (da[i] + db[i]) % f.p_;
      f.add_[a * q + b] = static_cast<std::uint8_t>(from_digits(ds, f.p_));
    }
  }

  // Smallest element of multiplicative order q-1.
  for (int g = 1; g < q; ++g) {
    std::vector<std::uint8_t> exp(q - 1);
    std::vector<int> log(q, -1);
    int x = 1;
    bool primitive = true;
    for (int e = 0; e < q - 1; ++e) {
      if (log[x] != -1) {
        primitive = false;
        break;
      }
      exp[e] = static_cast<std::uint8_t>(x);
      log[x] = e;
      x = slow_mul(x, g, f.p_, f.m_, f.modulus_);
    }
    if (primitive && x == 1) {
      f.exp_ = std::move(exp);
      f.log_ = std::move(log);
      break;
    }
  }
  return f;
}

}  // namespace mdscoset
