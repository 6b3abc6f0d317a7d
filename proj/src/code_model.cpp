#include "mdscoset/code_model.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mdscoset/errors.hpp"

namespace mdscoset {

CodeParams make_params(int n, int k, int q) {
  // make_field validates q; the field itself is discarded.
  (void)make_field(q);
  if (k < 1) throw DomainError("invalid code parameters: k=" + std::to_string(k) + " violates k >= 1");
  if (k > n) {
    throw DomainError("invalid code parameters: k=" + std::to_string(k) + " > n=" + std::to_string(n) +
                      " violates k <= n");
  }
  if (n > q + 1) {
    throw DomainError("invalid code parameters: n=" + std::to_string(n) + " > q+1=" + std::to_string(q + 1) +
                      " violates n <= q+1");
  }
  return CodeParams(n, k, q);
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).index == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    const FieldElement s = f.inv(m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).index == 0) continue;
      const FieldElement c = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Field& f, FieldMatrix m) { return rref(f, m).size(); }

FieldMatrix null_space(const Field& f, const FieldMatrix& m) {
  FieldMatrix r = m;
  const auto pivots = rref(f, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  FieldMatrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = f.neg(r(i, free));
    ++out;
  }
  return basis;
}

FieldMatrix multiply_transpose(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError("multiply_transpose: column mismatch");
  FieldMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      FieldElement acc = f.zero();
      for (std::size_t l = 0; l < a.cols(); ++l) acc = f.add(acc, f.mul(a(i, l), b(j, l)));
      out(i, j) = acc;
    }
  }
  return out;
}

MdsCode build_code(const CodeParams& params) {
  Field field = make_field(params.q());
  const int n = params.n();
  const int k = params.k();
  const int q = params.q();

  FieldMatrix g(k, n);
  const int evaluated = n <= q ? n : q;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < evaluated; ++j) g(i, j) = field.pow(field.element(j), i);
  }
  if (n == q + 1) g(k - 1, n - 1) = field.one();

  FieldMatrix h = null_space(field, g);
  return MdsCode{params, std::move(field), std::move(g), std::move(h)};
}

bool has_mds_property(const MdsCode& code) {
  const int n = code.params.n();
  const int k = code.params.k();
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    FieldMatrix sub(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sub(i, j) = code.generator(i, cols[j]);
    }
    if (rank(code.field, sub) != static_cast<std::size_t>(k)) return false;

    int pos = k - 1;
    while (pos >= 0 && cols[pos] == n - k + pos) --pos;
    if (pos < 0) return true;
    ++cols[pos];
    for (int i = pos + 1; i < k; ++i) cols[i] = cols[i - 1] + 1;
  }
}

std::vector<std::uint64_t> codeword_weight_histogram(const MdsCode& code, std::uint64_t max_codewords) {
  const int n = code.params.n();
  const int k = code.params.k();
  const int q = code.params.q();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > max_codewords) {
      throw ResourceError("codeword enumeration: q^k exceeds " + std::to_string(max_codewords));
    }
  }

  const Field& f = code.field;
  std::vector<std::uint64_t> hist(n + 1, 0);
  std::vector<int> msg(k, 0);
  std::vector<FieldElement> word(n);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::fill(word.begin(), word.end(), f.zero());
    for (int i = 0; i < k; ++i) {
      if (msg[i] == 0) continue;
      const FieldElement m = f.element(msg[i]);
      for (int j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(m, code.generator(i, j)));
    }
    int w = 0;
    for (auto x : word) w += x.index != 0;
    ++hist[w];
    for (int i = k - 1; i >= 0; --i) {
      if (++msg[i] < q) break;
      msg[i] = 0;
    }
  }
  return hist;
}

Integer Spectrum::total() const {
  Integer s = 0;
  for (const auto& c : counts_) s += c;
  return s;
}

Integer mds_weight(const CodeParams& params, int w) {
  const int n = params.n();
  const int d = params.d();
  const int q = params.q();
  if (w < 0 || w > n) {
    throw DomainError("mds_weight: w=" + std::to_string(w) + " outside [0, " + std::to_string(n) + "]");
  }
  if (w == 0) return 1;
  if (w < d) return 0;
  Integer sum = 0;
  for (int j = 0; j <= w - d; ++j) {
    Integer term = binom(w, j) * (ipow(q, w - d + 1 - j) - 1);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return binom(n, w) * sum;
}

Spectrum mds_weight_spectrum(const CodeParams& params) {
  Spectrum s(params.n());
  for (int w = 0; w <= params.n(); ++w) s[w] = mds_weight(params, w);
  return s;
}

Integer sphere_volume(int n, int q, int t) {
  if (t < 0 || t > n) {
    throw DomainError("sphere_volume: radius t=" + std::to_string(t) + " outside [0, n=" + std::to_string(n) + "]");
  }
  Integer v = 0;
  for (int i = 0; i <= t; ++i) v += ipow(q - 1, i) * binom(n, i);
  return v;
}

}  // namespace mdscoset
