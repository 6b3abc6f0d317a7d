#include "mdscoset/spectra_formulas.hpp"

#include <string>

#include "mdscoset/errors.hpp"

namespace mdscoset {

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::weight_enumerator: return "weight_enumerator";
    case Family::cheung_cumulative: return "cheung_cumulative";
    case Family::sigma_le1: return "sigma_le1";
    case Family::sigma_w1: return "sigma_w1";
    case Family::sigma_le2: return "sigma_le2";
    case Family::sigma_w2: return "sigma_w2";
    case Family::sigma_w3: return "sigma_w3";
  }
  return "?";
}

const char* variant_name(FormId id) {
  switch (id.family) {
    case Family::sigma_le1:
      return static_cast<Le1Form>(id.variant) == Le1Form::lemma ? "lemma" : "corollary";
    case Family::sigma_w1:
      switch (static_cast<W1Form>(id.variant)) {
        case W1Form::binomial_sum: return "binomial_sum";
        case W1Form::omega_sum: return "omega_sum";
        case W1Form::omega_shifted: return "omega_shifted";
        case W1Form::omega_weight: return "omega_weight";
        case W1Form::explicit_weight: return "explicit_weight";
        case W1Form::length_q_plus_1: return "length_q_plus_1";
        case W1Form::length_q_plus_1_d5: return "length_q_plus_1_d5";
      }
      break;
    case Family::sigma_w2:
      switch (static_cast<W2Form>(id.variant)) {
        case W2Form::binomial_sum: return "binomial_sum";
        case W2Form::omega_sum: return "omega_sum";
        case W2Form::omega_shifted: return "omega_shifted";
        case W2Form::omega_weight: return "omega_weight";
        case W2Form::explicit_weight: return "explicit_weight";
        case W2Form::length_q_plus_1_d5: return "length_q_plus_1_d5";
      }
      break;
    case Family::sigma_w3:
      switch (static_cast<W3Form>(id.variant)) {
        case W3Form::complement: return "complement";
        case W3Form::decomposed: return "decomposed";
        case W3Form::expanded: return "expanded";
        case W3Form::length_q_plus_1: return "length_q_plus_1";
        case W3Form::length_q_plus_1_compact: return "length_q_plus_1_compact";
      }
      break;
    default:
      break;
  }
  return nullptr;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::string range_msg(const char* op, int w, long lo, long hi) {
  return std::string(op) + ": w=" + std::to_string(w) + " outside [" + std::to_string(lo) + ", " +
         std::to_string(hi) + "]";
}

// (-1)^e * x
Integer signed_by(long e, Integer x) {
  if (neg_one_pow(e) < 0) x = -x;
  return x;
}

}  // namespace

std::string to_string(FormId id) {
  std::string s = family_name(id.family);
  if (id.family == Family::cheung_cumulative) return s + "[t=" + std::to_string(id.variant) + "]";
  if (const char* v = variant_name(id)) s += std::string("/") + v;
  return s;
}

// Marks the outermost call so nested helpers attribute their binomials to it.
class EvalScope {
 public:
  EvalScope(int& depth, FormId& current, int& calls, FormId id) : depth_(depth) {
    if (depth_++ == 0) {
      current = id;
      calls = 0;
    }
  }
  ~EvalScope() { --depth_; }
  EvalScope(const EvalScope&) = delete;
  EvalScope& operator=(const EvalScope&) = delete;

 private:
  int& depth_;
};

#define MDS_SCOPE(id) EvalScope scope_guard_(depth_, current_, calls_, (id))

FormulaEvaluator::FormulaEvaluator(const CodeParams& params, std::optional<BinomialFault> fault)
    : params_(params),
      n_(params.n()),
      k_(params.k()),
      d_(params.d()),
      q_(params.q()),
      fault_(fault) {}

Integer FormulaEvaluator::binom_term(long top, long bottom) {
  Integer b = binom(top, bottom);
  if (fault_ && fault_->target == current_ && fault_->call_index == calls_) b += fault_->offset;
  ++calls_;
  return b;
}

Integer FormulaEvaluator::sphere(int length, int radius) {
  require(radius >= 0 && radius <= length, "sphere volume radius outside [0, length]");
  Integer v = 0;
  for (int i = 0; i <= radius; ++i) v += ipow(q_ - 1, i) * binom_term(length, i);
  return v;
}

// sum_{j=0}^{w+1-d} (-1)^j binom(w,j) q^{w+1-d-j}
Integer FormulaEvaluator::qsum_full(int w) {
  Integer s = 0;
  for (long j = 0; j <= w + 1 - d_; ++j) s += signed_by(j, binom_term(w, j) * ipow(q_, w + 1 - d_ - j));
  return s;
}

// sum_{j=0}^{w-d} (-1)^j binom(w,j) (q^{w+1-d-j} - 1)
Integer FormulaEvaluator::qsum_shifted(int w) {
  Integer s = 0;
  for (long j = 0; j <= w - d_; ++j) s += signed_by(j, binom_term(w, j) * (ipow(q_, w + 1 - d_ - j) - 1));
  return s;
}

Integer FormulaEvaluator::weight_enumerator(int w) {
  MDS_SCOPE((FormId{Family::weight_enumerator, 0}));
  require(w >= 0 && w <= n_, range_msg("weight_enumerator", w, 0, n_));
  if (w == 0) return 1;
  if (w < d_) return 0;
  Integer s = 0;
  for (long j = 0; j <= w - d_; ++j) s += signed_by(j, binom_term(w, j) * (ipow(q_, w - d_ + 1 - j) - 1));
  return binom_term(n_, w) * s;
}

Integer FormulaEvaluator::omega(int w, int j) {
  MDS_SCOPE((FormId{Family::weight_enumerator, -1}));
  require(j >= 0 && j <= 2, "omega: j must be 0, 1 or 2");
  return signed_by(w - d_, binom_term(n_ - j, w - j) * binom_term(w - j - 1, d_ - j - 2));
}

Integer FormulaEvaluator::phi(int w, int j) {
  MDS_SCOPE((FormId{Family::weight_enumerator, -1}));
  require(n_ == q_ + 1 && d_ == 5, "phi: defined only for n = q+1 and d = 5");
  require(j >= 0 && j <= 3, "phi: j must be in [0, 3]");
  Integer a = binom_term(q_ + 1, w) * binom_term(w - 1, 3);
  Integer b = binom_term(q_ + 1 - j, w - j) * binom_term(w - 1 - j, 3 - j);
  return signed_by(w - 5, a - b);
}

Integer FormulaEvaluator::delta(int w) {
  MDS_SCOPE((FormId{Family::weight_enumerator, -1}));
  Integer x = binom_term(n_, w) * binom_term(w, d_ - 2) * binom_term(n_ - d_ + 2, 2) * (q_ - 1);
  return signed_by(w - d_, x);
}

// Closed form (-1)^{w-d} binom(n-d+2, n-w) binom(n-2, d-2) / (q-1).
Rational FormulaEvaluator::delta_star(int w) {
  MDS_SCOPE((FormId{Family::weight_enumerator, -1}));
  Integer num = signed_by(w - d_, binom_term(n_ - d_ + 2, n_ - w) * binom_term(n_ - 2, d_ - 2));
  Rational r(num, Integer(q_ - 1));
  r.canonicalize();
  return r;
}

Integer FormulaEvaluator::cheung_cumulative(int t_cap, int u) {
  MDS_SCOPE((FormId{Family::cheung_cumulative, t_cap}));
  require(t_cap >= 1 && t_cap <= params_.t(),
          "cheung_cumulative: t_cap=" + std::to_string(t_cap) + " outside [1, t=" + std::to_string(params_.t()) + "]");
  require(d_ >= 2 * t_cap + 1, "cheung_cumulative: requires d >= 2 t_cap + 1");
  require(u >= d_ - t_cap && u <= n_, range_msg("cheung_cumulative", u, d_ - t_cap, n_));
  const long t = t_cap;

  const Integer vol = sphere(static_cast<int>(n_), t_cap);
  Integer total = 0;
  for (long j = 0; j <= u - d_ + t; ++j) {
    Integer nj;
    if (j <= u - d_) {
      Integer inner = 0;
      for (long i = 0; i <= t; ++i) inner += binom_term(u - j, i) * ipow(q_ - 1, i);
      nj = binom_term(u, j) * (ipow(q_, u - d_ + 1 - j) * vol - inner);
    } else {
      Integer outer = 0;
      for (long w = d_ - u + j; w <= t; ++w) {
        Integer weights = 0;
        for (long i = 0; i <= w - d_ + u - j; ++i) {
          weights += signed_by(i, binom_term(w, i) * (ipow(q_, w - d_ + u - j - i + 1) - 1));
        }
        Integer spread = 0;
        for (long s = w; s <= t; ++s) spread += binom_term(u - j, s - w) * ipow(q_ - 1, s - w);
        outer += binom_term(n_ - u + j, w) * weights * spread;
      }
      nj = binom_term(u, j) * outer;
    }
    total += signed_by(j, nj);
  }
  return binom_term(n_, u) * total;
}

Integer FormulaEvaluator::le1_lemma(int w) {
  Integer s = 0;
  for (long j = 0; j <= w - d_; ++j) {
    Integer bracket = ipow(q_, w - d_ + 1 - j) * (1 + n_ * (q_ - 1)) - 1 - (w - j) * (q_ - 1);
    s += signed_by(j, binom_term(w, j) * bracket);
  }
  s -= signed_by(w - d_, binom_term(w, d_ - 1) * (n_ - d_ + 1) * (q_ - 1));
  return binom_term(n_, w) * s;
}

Integer FormulaEvaluator::sigma_le1(int w, Le1Form form) {
  MDS_SCOPE(mdscoset::form(form));
  require(d_ >= 3, "sigma_le1: requires d >= 3");
  require(w >= d_ - 1 && w <= n_, range_msg("sigma_le1", w, d_ - 1, n_));
  switch (form) {
    case Le1Form::lemma:
      return le1_lemma(w);
    case Le1Form::corollary: {
      Integer s = 0;
      for (long j = 0; j <= 1; ++j) {
        s += signed_by(j, binom_term(n_ - j, w - j) * binom_term(w - j - 1, d_ - j - 2));
      }
      return weight_enumerator(w) * sphere(static_cast<int>(n_), 1) - signed_by(w - d_, n_ * (q_ - 1) * s);
    }
  }
  throw DomainError("sigma_le1: unknown form");
}

Integer FormulaEvaluator::sigma_w1(int w, W1Form form) {
  MDS_SCOPE(mdscoset::form(form));
  require(d_ >= 3, "sigma_w1: requires d >= 3");
  require(w >= d_ - 1 && w <= n_, range_msg("sigma_w1", w, d_ - 1, n_));
  const Integer nq = n_ * (q_ - 1);
  switch (form) {
    case W1Form::binomial_sum:
      return binom_term(n_, w) * (q_ - 1) *
             (n_ * qsum_full(w) + signed_by(w - d_, w * binom_term(w - 2, d_ - 3)));
    case W1Form::omega_sum:
      return nq * (binom_term(n_, w) * qsum_full(w) + omega(w, 1));
    case W1Form::omega_shifted:
      return nq * (binom_term(n_, w) * qsum_shifted(w) - omega(w, 0) + omega(w, 1));
    case W1Form::omega_weight:
      return nq * (weight_enumerator(w) - omega(w, 0) + omega(w, 1));
    case W1Form::explicit_weight: {
      Integer diff = binom_term(n_, w) * binom_term(w - 1, d_ - 2) - binom_term(n_ - 1, w - 1) * binom_term(w - 2, d_ - 3);
      return nq * (weight_enumerator(w) - signed_by(w - d_, diff));
    }
    case W1Form::length_q_plus_1: {
      require(n_ == q_ + 1, "sigma_w1 length_q_plus_1: requires n = q+1");
      Integer s = 0;
      for (long i = 0; i <= w - d_; ++i) {
        s += signed_by(i, (binom_term(w, i + 1) - binom_term(w, i)) * ipow(q_, w + 1 - d_ - i));
      }
      Integer tail = signed_by(w - d_, binom_term(w, d_ - 1) - w * binom_term(w - 2, d_ - 3));
      return binom_term(q_ + 1, w) * (q_ - 1) * (ipow(q_, w + 2 - d_) - s - tail);
    }
    case W1Form::length_q_plus_1_d5:
      require(n_ == q_ + 1 && d_ == 5, "sigma_w1 length_q_plus_1_d5: requires n = q+1 and d = 5");
      return (q_ * q_ - 1) * (weight_enumerator(w) - phi(w, 1));
  }
  throw DomainError("sigma_w1: unknown form");
}

Integer FormulaEvaluator::le2_lemma(int w) {
  const Integer vn = sphere(static_cast<int>(n_), 2);
  Integer s = 0;
  for (long j = 0; j <= w - d_; ++j) {
    Integer bracket = ipow(q_, w - d_ + 1 - j) * vn - sphere(static_cast<int>(w - j), 2);
    s += signed_by(j, binom_term(w, j) * bracket);
  }
  Integer inner = binom_term(w, d_ - 1) * (2 + (q_ - 1) * (n_ + d_ - 2)) - binom_term(w, d_ - 2) * (n_ - d_ + 2);
  Rational tail(Integer((n_ - d_ + 1) * (q_ - 1)) * inner, Integer(2));
  Rational result = Rational(s) - Rational(signed_by(w - d_, 1)) * tail;
  return binom_term(n_, w) * exact_integer(result);
}

Integer FormulaEvaluator::sigma_le2(int w) {
  MDS_SCOPE((FormId{Family::sigma_le2, 0}));
  require(d_ >= 5, "sigma_le2: requires d >= 5");
  require(w >= d_ - 2 && w <= n_, range_msg("sigma_le2", w, d_ - 2, n_));
  return le2_lemma(w);
}

Integer FormulaEvaluator::sigma_w2(int w, W2Form form) {
  MDS_SCOPE(mdscoset::form(form));
  require(d_ >= 5, "sigma_w2: requires d >= 5");
  require(w >= d_ - 2 && w <= n_, range_msg("sigma_w2", w, d_ - 2, n_));
  const Integer q1sq = (q_ - 1) * (q_ - 1);
  switch (form) {
    case W2Form::binomial_sum:
      return binom_term(n_, w) * q1sq *
                 (binom_term(n_, 2) * qsum_full(w) +
                  signed_by(w - d_, binom_term(w, 2) * binom_term(w - 3, d_ - 4))) +
             delta(w);
    case W2Form::omega_sum:
      return binom_term(n_, 2) * q1sq * (binom_term(n_, w) * qsum_full(w) + omega(w, 2)) + delta(w);
    case W2Form::omega_shifted:
      return binom_term(n_, 2) * q1sq * (binom_term(n_, w) * qsum_shifted(w) - omega(w, 0) + omega(w, 2)) +
             delta(w);
    case W2Form::omega_weight: {
      const Integer pairs = binom_term(n_, 2) * q1sq;
      Rational r = Rational(pairs * (weight_enumerator(w) - omega(w, 0) + omega(w, 2))) +
                   Rational(pairs) * delta_star(w);
      return exact_integer(r);
    }
    case W2Form::explicit_weight: {
      Integer diff = binom_term(n_, w) * binom_term(w - 1, d_ - 2) - binom_term(n_ - 2, w - 2) * binom_term(w - 3, d_ - 4);
      Integer head = binom_term(n_, 2) * q1sq * (weight_enumerator(w) - signed_by(w - d_, diff));
      Integer tail = binom_term(n_, 2) * (q_ - 1) * binom_term(n_ - d_ + 2, n_ - w) * binom_term(n_ - 2, d_ - 2);
      return head + signed_by(w - d_, tail);
    }
    case W2Form::length_q_plus_1_d5: {
      require(n_ == q_ + 1 && d_ == 5, "sigma_w2 length_q_plus_1_d5: requires n = q+1 and d = 5");
      Rational third(binom_term(q_ - 2, w - 3) * binom_term(q_ - 2, 2), Integer(3));
      Rational bracket = Rational(weight_enumerator(w) - phi(w, 2)) + Rational(signed_by(w - 5, 1)) * third;
      return exact_integer(Rational(binom_term(q_ + 1, 2) * q1sq) * bracket);
    }
  }
  throw DomainError("sigma_w2: unknown form");
}

Integer FormulaEvaluator::w1_below_range(int w) {
  if (w >= d_ - 1) return sigma_w1(w, W1Form::binomial_sum);
  return w == 1 ? Integer(n_ * (q_ - 1)) : Integer(0);
}

Integer FormulaEvaluator::w2_below_range(int w) {
  if (w >= d_ - 2) return sigma_w2(w, W2Form::binomial_sum);
  return w == 2 ? Integer(binom_term(n_, 2) * (q_ - 1) * (q_ - 1)) : Integer(0);
}

Integer FormulaEvaluator::sigma_w3(int w, W3Form form, int covering_radius) {
  MDS_SCOPE(mdscoset::form(form));
  require(d_ == 5, "sigma_w3: requires d = 5");
  require(k_ == n_ - 4, "sigma_w3: requires k = n - 4");
  require(covering_radius == 3,
          "sigma_w3: requires covering radius 3, got " + std::to_string(covering_radius));
  require(w >= 3 && w <= n_, range_msg("sigma_w3", w, 3, n_));
  const Integer all = binom_term(n_, w) * ipow(q_ - 1, w);
  switch (form) {
    case W3Form::complement:
      return all - le2_lemma(w);
    case W3Form::decomposed:
      return all - (weight_enumerator(w) + w1_below_range(w) + w2_below_range(w));
    case W3Form::expanded:
    case W3Form::length_q_plus_1: {
      const bool specialized = form == W3Form::length_q_plus_1;
      if (specialized) require(n_ == q_ + 1, "sigma_w3 length_q_plus_1: requires n = q+1");
      const long len = specialized ? q_ + 1 : n_;
      const Integer vn = sphere(static_cast<int>(len), 2);
      Integer s = 0;
      for (long j = 0; j <= w - 5; ++j) {
        s += signed_by(j, binom_term(w, j) * (ipow(q_, w - 4 - j) * vn - sphere(static_cast<int>(w - j), 2)));
      }
      Integer factor;
      Integer inner;
      if (specialized) {
        factor = (q_ - 3) * (q_ - 1);
        inner = binom_term(w, 4) * (q_ * q_ + 3 * q_ - 2) - binom_term(w, 3) * (q_ - 2);
      } else {
        factor = (n_ - 4) * (q_ - 1);
        inner = binom_term(w, 4) * (2 + (q_ - 1) * (n_ + 3)) - binom_term(w, 3) * (n_ - 3);
      }
      Rational tail = Rational(signed_by(w - 5, factor * inner), Integer(2));
      return all - binom_term(len, w) * exact_integer(Rational(s) - tail);
    }
    case W3Form::length_q_plus_1_compact: {
      require(n_ == q_ + 1, "sigma_w3 length_q_plus_1_compact: requires n = q+1");
      Integer inner = sphere(static_cast<int>(q_ + 1), 2) * weight_enumerator(w) - (q_ * q_ - 1) * phi(w, 1) -
                      binom_term(q_ + 1, 2) * (q_ - 1) * (q_ - 1) * phi(w, 2) + delta(w);
      return all - inner;
    }
  }
  throw DomainError("sigma_w3: unknown form");
}

Integer FormulaEvaluator::evaluate(FormId id, int w, int covering_radius) {
  switch (id.family) {
    case Family::weight_enumerator: return weight_enumerator(w);
    case Family::cheung_cumulative: return cheung_cumulative(id.variant, w);
    case Family::sigma_le1: return sigma_le1(w, static_cast<Le1Form>(id.variant));
    case Family::sigma_w1: return sigma_w1(w, static_cast<W1Form>(id.variant));
    case Family::sigma_le2: return sigma_le2(w);
    case Family::sigma_w2: return sigma_w2(w, static_cast<W2Form>(id.variant));
    case Family::sigma_w3: return sigma_w3(w, static_cast<W3Form>(id.variant), covering_radius);
  }
  throw DomainError("evaluate: unknown family");
}

#undef MDS_SCOPE

Integer cheung_cumulative(const CodeParams& params, int t_cap, int u) {
  return FormulaEvaluator(params).cheung_cumulative(t_cap, u);
}

Integer sigma_le1(const CodeParams& params, int w, Le1Form form) {
  return FormulaEvaluator(params).sigma_le1(w, form);
}

Integer sigma_w1(const CodeParams& params, int w, W1Form form) {
  return FormulaEvaluator(params).sigma_w1(w, form);
}

Integer sigma_le2(const CodeParams& params, int w) { return FormulaEvaluator(params).sigma_le2(w); }

Integer sigma_w2(const CodeParams& params, int w, W2Form form) {
  return FormulaEvaluator(params).sigma_w2(w, form);
}

Integer sigma_w3(const CodeParams& params, int w, W3Form form, int covering_radius) {
  return FormulaEvaluator(params).sigma_w3(w, form, covering_radius);
}

HelperTerms helper_terms(const CodeParams& params, int w) {
  require(w >= 0 && w <= params.n(), range_msg("helper_terms", w, 0, params.n()));
  FormulaEvaluator ev(params);
  const int n = params.n();
  const int d = params.d();
  HelperTerms h;
  for (int j = 0; j <= 2; ++j) {
    if (n - j >= 0 && w - j - 1 >= 0) h.omega[j] = ev.omega(w, j);
  }
  if (n == params.q() + 1 && d == 5) {
    for (int j = 0; j <= 2; ++j) {
      if (w - 1 - j >= 0) h.phi[j] = ev.phi(w, j);
    }
  }
  if (n - d + 2 >= 0 && n >= 2 && d >= 2) {
    h.delta = ev.delta(w);
    h.delta_star = ev.delta_star(w);
  }
  return h;
}

bool coset_weight_admissible(const CodeParams& params, int coset_weight) {
  switch (coset_weight) {
    case 0: return true;
    case 1: return params.d() >= 3;
    case 2: return params.d() >= 5;
    case 3: return params.d() == 5 && params.k() == params.n() - 4;
    default: return false;
  }
}

Spectrum full_spectrum(const CodeParams& params, int coset_weight, std::optional<int> covering_radius) {
  if (!coset_weight_admissible(params, coset_weight)) {
    throw DomainError("coset weight " + std::to_string(coset_weight) +
                      " not admissible (W=1 needs d>=3, W=2 needs d>=5, W=3 needs d=5 and k=n-4)");
  }
  const int n = params.n();
  const int d = params.d();
  const long q = params.q();
  FormulaEvaluator ev(params);
  Spectrum s(n);
  switch (coset_weight) {
    case 0:
      for (int w = 0; w <= n; ++w) s[w] = ev.weight_enumerator(w);
      break;
    case 1:
      for (int w = 0; w <= n; ++w) {
        if (w >= d - 1) {
          s[w] = ev.sigma_w1(w, W1Form::binomial_sum);
        } else {
          s[w] = w == 1 ? Integer(n * (q - 1)) : Integer(0);
        }
      }
      break;
    case 2:
      for (int w = 0; w <= n; ++w) {
        if (w >= d - 2) {
          s[w] = ev.sigma_w2(w, W2Form::binomial_sum);
        } else {
          s[w] = w == 2 ? Integer(binom(n, 2) * (q - 1) * (q - 1)) : Integer(0);
        }
      }
      break;
    case 3:
      if (!covering_radius) {
        throw DomainError("coset weight 3 requires a known covering radius (measured or asserted)");
      }
      for (int w = 3; w <= n; ++w) s[w] = ev.sigma_w3(w, W3Form::complement, *covering_radius);
      break;
  }
  return s;
}

std::vector<W1Form> applicable_forms_w1(const CodeParams& params, int w) {
  std::vector<W1Form> forms{W1Form::binomial_sum, W1Form::omega_sum, W1Form::omega_shifted, W1Form::omega_weight,
                            W1Form::explicit_weight};
  if (params.n() == params.q() + 1) {
    forms.push_back(W1Form::length_q_plus_1);
    if (params.d() == 5 && w >= 4) forms.push_back(W1Form::length_q_plus_1_d5);
  }
  return forms;
}

std::vector<W2Form> applicable_forms_w2(const CodeParams& params, int w) {
  std::vector<W2Form> forms{W2Form::binomial_sum, W2Form::omega_sum, W2Form::omega_shifted, W2Form::omega_weight,
                            W2Form::explicit_weight};
  if (params.n() == params.q() + 1 && params.d() == 5 && w >= 3) forms.push_back(W2Form::length_q_plus_1_d5);
  return forms;
}

std::vector<W3Form> applicable_forms_w3(const CodeParams& params) {
  std::vector<W3Form> forms{W3Form::complement, W3Form::decomposed, W3Form::expanded};
  if (params.n() == params.q() + 1) {
    forms.push_back(W3Form::length_q_plus_1);
    forms.push_back(W3Form::length_q_plus_1_compact);
  }
  return forms;
}

Integer expected_coset_count(const CodeParams& params, int coset_weight) {
  const long q = params.q();
  const int n = params.n();
  const Integer one_count = n * (q - 1);
  const Integer two_count = binom(n, 2) * (q - 1) * (q - 1);
  switch (coset_weight) {
    case 0: return 1;
    case 1: return one_count;
    case 2: return two_count;
    case 3: return ipow(q, params.r()) - 1 - one_count - two_count;
    default: throw DomainError("expected_coset_count: coset weight must be 0..3");
  }
}

}  // namespace mdscoset
