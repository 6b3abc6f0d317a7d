#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mdscoset/code_model.hpp"
#include "mdscoset/combinatorics.hpp"

namespace mdscoset {

// Closed-form integral weight spectra of the cosets of weight 0..3 of an
// [n, k, d = n-k+1]_q MDS code.
//
// Notation: Sigma_W(w) is the total number of weight-w vectors over all
// cosets of weight exactly W; Sigma_{<=W}(w) aggregates cosets of weight <= W.
// Every displayed form of a result has its own code path, so equality of the
// forms is checked rather than assumed. Empty sums evaluate to 0.

enum class Family {
  weight_enumerator,  // A_w
  cheung_cumulative,  // Sigma_{<=t}(u), variant = t_cap
  sigma_le1,
  sigma_w1,
  sigma_le2,
  sigma_w2,
  sigma_w3,
};

enum class Le1Form { lemma, corollary };

enum class W1Form {
  binomial_sum,        // binom(n,w)(q-1)[n * qsum + (-1)^{w-d} w binom(w-2,d-3)]
  omega_sum,           // n(q-1)[binom(n,w) qsum + Omega1]
  omega_shifted,       // n(q-1)[binom(n,w) qsum' - Omega0 + Omega1]
  omega_weight,        // n(q-1)[A_w - Omega0 + Omega1]
  explicit_weight,     // Omega terms written out
  length_q_plus_1,     // n = q+1
  length_q_plus_1_d5,  // n = q+1, d = 5: (q^2-1)[A_w - Phi1]
};

enum class W2Form {
  binomial_sum,
  omega_sum,
  omega_shifted,
  omega_weight,  // uses Delta* (exact rational)
  explicit_weight,
  length_q_plus_1_d5,
};

enum class W3Form {
  complement,               // binom(n,w)(q-1)^w - Sigma_{<=2}(w)
  decomposed,               // binom(n,w)(q-1)^w - [A_w + Sigma_1(w) + Sigma_2(w)]
  expanded,                 // Sigma_{<=2} written out with d = 5
  length_q_plus_1,          // expanded form at n = q+1
  length_q_plus_1_compact,  // via V_{q+1}(2), Phi and Delta
};

struct FormId {
  Family family;
  int variant = 0;

  friend bool operator==(const FormId&, const FormId&) = default;
};

std::string to_string(FormId id);

inline FormId form(Le1Form f) { return {Family::sigma_le1, static_cast<int>(f)}; }
inline FormId form(W1Form f) { return {Family::sigma_w1, static_cast<int>(f)}; }
inline FormId form(W2Form f) { return {Family::sigma_w2, static_cast<int>(f)}; }
inline FormId form(W3Form f) { return {Family::sigma_w3, static_cast<int>(f)}; }

/// Adds `offset` to the result of the `call_index`-th binomial evaluated while
/// computing `target` (counting from 0 within one evaluation). Test fixture
/// for demonstrating that a verification run is sensitive to every term.
struct BinomialFault {
  FormId target;
  int call_index = 0;
  long offset = 1;
};

/// Omega, Phi, Delta and Delta* at a weight w. Entries whose defining
/// binomials have a negative upper argument at this w are empty; phi is
/// present only for n = q+1, d = 5.
struct HelperTerms {
  std::array<std::optional<Integer>, 3> omega;
  std::array<std::optional<Integer>, 3> phi;
  std::optional<Integer> delta;
  std::optional<Rational> delta_star;
};

/// Evaluates the formulas for one code. Stateless apart from the binomial
/// call counter used by fault injection; use one instance per thread.
class FormulaEvaluator {
 public:
  explicit FormulaEvaluator(const CodeParams& params, std::optional<BinomialFault> fault = std::nullopt);

  const CodeParams& params() const { return params_; }

  Integer weight_enumerator(int w);
  Integer cheung_cumulative(int t_cap, int u);
  Integer sigma_le1(int w, Le1Form form);
  Integer sigma_w1(int w, W1Form form);
  Integer sigma_le2(int w);
  Integer sigma_w2(int w, W2Form form);
  /// covering_radius must be 3: a measured value or the caller's assertion.
  Integer sigma_w3(int w, W3Form form, int covering_radius);

  /// Dispatch on a FormId. covering_radius is only consulted for sigma_w3.
  Integer evaluate(FormId id, int w, int covering_radius = 3);

  /// Number of binomials evaluated by the most recent top-level call.
  int last_binomial_calls() const { return calls_; }

  Integer omega(int w, int j);
  Integer phi(int w, int j);
  Integer delta(int w);
  Rational delta_star(int w);

 private:
  Integer binom_term(long top, long bottom);
  void begin(FormId id);

  Integer sphere(int length, int radius);
  Integer qsum_full(int w);
  Integer qsum_shifted(int w);
  Integer le1_lemma(int w);
  Integer le2_lemma(int w);
  Integer w1_below_range(int w);
  Integer w2_below_range(int w);

  CodeParams params_;
  long n_, k_, d_, q_;
  std::optional<BinomialFault> fault_;
  FormId current_{Family::weight_enumerator, 0};
  int calls_ = 0;
  int depth_ = 0;
};

Integer cheung_cumulative(const CodeParams& params, int t_cap, int u);
Integer sigma_le1(const CodeParams& params, int w, Le1Form form = Le1Form::lemma);
Integer sigma_w1(const CodeParams& params, int w, W1Form form = W1Form::binomial_sum);
Integer sigma_le2(const CodeParams& params, int w);
Integer sigma_w2(const CodeParams& params, int w, W2Form form = W2Form::binomial_sum);
Integer sigma_w3(const CodeParams& params, int w, W3Form form, int covering_radius);

HelperTerms helper_terms(const CodeParams& params, int w);

/// Whether cosets of weight W are covered by a closed form for these
/// parameters (W = 3 additionally needs covering radius 3, not checked here).
bool coset_weight_admissible(const CodeParams& params, int coset_weight);

/// Complete spectrum over w = 0..n for coset weight 0..3: closed forms on
/// their ranges, forced values below (a single coset leader of weight W per
/// coset, zeros elsewhere). W = 3 requires covering_radius == 3.
Spectrum full_spectrum(const CodeParams& params, int coset_weight, std::optional<int> covering_radius = std::nullopt);

/// Variants applicable to the parameters (specializations need n = q+1, d = 5, ...).
std::vector<W1Form> applicable_forms_w1(const CodeParams& params, int w);
std::vector<W2Form> applicable_forms_w2(const CodeParams& params, int w);
std::vector<W3Form> applicable_forms_w3(const CodeParams& params);

/// Number of cosets of weight W implied by the parameters (W = 3 assumes R = 3).
Integer expected_coset_count(const CodeParams& params, int coset_weight);

}  // namespace mdscoset
