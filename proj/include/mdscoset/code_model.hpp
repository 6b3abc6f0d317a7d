#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdscoset/combinatorics.hpp"
#include "mdscoset/finite_field.hpp"

namespace mdscoset {

/// Validated parameters of an [n, k, d]_q MDS code; d = n - k + 1 and
/// t = floor((d - 1) / 2) are derived. Only obtainable through make_params.
class CodeParams {
 public:
  int n() const { return n_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int d() const { return d_; }
  int t() const { return t_; }
  /// Redundancy n - k.
  int r() const { return n_ - k_; }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
  friend CodeParams make_params(int n, int k, int q);

 private:
  CodeParams(int n, int k, int q) : n_(n), k_(k), q_(q), d_(n - k + 1), t_((n - k) / 2) {}

  int n_;
  int k_;
  int q_;
  int d_;
  int t_;
};

/// Throws DomainError naming the violated condition: q must be a prime power
/// in [2, 32] and 1 <= k <= n <= q + 1.
CodeParams make_params(int n, int k, int q);

/// Dense row-major matrix over a field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const FieldElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Rank by Gaussian elimination.
std::size_t rank(const Field& f, FieldMatrix m);

/// Basis of the right null space {x : m x^T = 0}, one vector per row.
FieldMatrix null_space(const Field& f, const FieldMatrix& m);

FieldMatrix multiply_transpose(const Field& f, const FieldMatrix& a, const FieldMatrix& b);

/// A concrete (extended) Reed-Solomon code realizing a CodeParams.
struct MdsCode {
  CodeParams params;
  Field field;
  FieldMatrix generator;     // k x n
  FieldMatrix parity_check;  // (n - k) x n
};

/// Reed-Solomon code with evaluation points the field elements of index
/// 0..n-1; for n = q + 1 an extra last coordinate carries the coefficient of
/// x^(k-1). Row i of the generator evaluates x^i.
MdsCode build_code(const CodeParams& params);

/// Checks that every k columns of the generator are independent.
/// Exhaustive over all binom(n, k) column subsets.
bool has_mds_property(const MdsCode& code);

/// Weight histogram of all q^k codewords, by enumeration.
/// Throws ResourceError when q^k exceeds max_codewords.
std::vector<std::uint64_t> codeword_weight_histogram(const MdsCode& code,
                                                     std::uint64_t max_codewords = 1'000'000);

/// Counts indexed by Hamming weight 0..n.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(int n) : counts_(static_cast<std::size_t>(n) + 1) {}
  explicit Spectrum(std::vector<Integer> counts) : counts_(std::move(counts)) {}

  int length() const { return static_cast<int>(counts_.size()) - 1; }
  std::size_t size() const { return counts_.size(); }
  Integer& operator[](int w) { return counts_.at(static_cast<std::size_t>(w)); }
  const Integer& operator[](int w) const { return counts_.at(static_cast<std::size_t>(w)); }
  const std::vector<Integer>& counts() const { return counts_; }
  Integer total() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Integer> counts_;
};

/// A_w of an MDS code: binom(n,w) sum_{j=0}^{w-d} (-1)^j binom(w,j) (q^{w-d+1-j} - 1)
/// for w >= d, 1 for w = 0, 0 for 0 < w < d. Throws DomainError outside [0, n].
Integer mds_weight(const CodeParams& params, int w);

Spectrum mds_weight_spectrum(const CodeParams& params);

/// V_n(t) = sum_{i=0}^{t} (q-1)^i binom(n,i). Requires 0 <= t <= n.
Integer sphere_volume(int n, int q, int t);

}  // namespace mdscoset
