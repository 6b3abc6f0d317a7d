#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace mdscoset {

/// Element of GF(q) as a dense index in [0, q). Index i encodes the
/// polynomial sum c_j x^j over GF(p) with i = sum c_j p^j; index 0 is zero
/// and index 1 is one.
struct FieldElement {
  std::uint8_t index = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(q) for prime-power q <= 32. Immutable after construction.
///
/// The modulus is the smallest monic irreducible polynomial of degree m over
/// GF(p), where polynomials are ordered by their base-p encoding (equivalently
/// lexicographically from the leading coefficient down). Multiplication goes
/// through exp/log tables with respect to the smallest primitive element.
class Field {
 public:
  static constexpr int kMaxOrder = 32;

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }
  /// Monic modulus, coefficients from x^0 up to x^m.
  const std::vector<int>& modulus() const { return modulus_; }
  /// The primitive element backing the exp/log tables.
  FieldElement generator() const { return exp(1); }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  /// Element with the given index; throws DomainError outside [0, q).
  FieldElement element(int index) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    return FieldElement{add_[a.index * q_ + b.index]};
  }
  FieldElement neg(FieldElement a) const { return FieldElement{neg_[a.index]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.index == 0 || b.index == 0) return zero();
    int e = log_[a.index] + log_[b.index];
    if (e >= q_ - 1) e -= q_ - 1;
    return FieldElement{exp_[e]};
  }
  /// Throws DomainError for zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  /// a^e for e >= 0, with 0^0 = 1.
  FieldElement pow(FieldElement a, int e) const;

  /// Discrete log with respect to generator(); a must be nonzero.
  int log(FieldElement a) const { return log_[a.index]; }
  FieldElement exp(int e) const { return FieldElement{exp_[((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]}; }

  /// Flat q*q addition table, row-major; exposed for inner loops.
  const std::vector<std::uint8_t>& addition_table() const { return add_; }

  friend Field make_field(int q);

 private:
  Field() = default;

  int q_ = 0;
  int p_ = 0;
  int m_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> exp_;
  std::vector<int> log_;
};

/// Builds GF(q). Throws DomainError unless 2 <= q <= 32 and q is a prime power.
Field make_field(int q);

/// Returns true if poly (coefficients low to high, over GF(p)) is irreducible.
/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<int>& poly, int p);

}  // namespace mdscoset
