#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mdscoset {

/// Outcome of one exhaustive identity sweep.
struct SweepResult {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // first few counterexamples only

  bool ok() const { return failures.empty(); }
};

inline constexpr int kMaxIdentityWeight = 60;

/// Binomial identities and the two summation lemmas, exhaustively for all
/// arguments up to max_w (and integer field orders 2..max_q for the q-power
/// lemma), plus Delta = binom(n,2)(q-1)^2 Delta* over every constructible code
/// with prime-power q <= max_q. Throws DomainError if max_w is outside [0, 60].
std::vector<SweepResult> run_identity_sweeps(int max_w, int max_q);

/// Formula-level consistency over every constructible [n,k]_q with prime-power
/// q <= max_q: pairwise agreement of all variants of each spectrum, the
/// decompositions Sigma_{<=1} = A + Sigma_1 and Sigma_{<=2} = Sigma_{<=1} + Sigma_2,
/// agreement with the cumulative Cheung form, and sum_w A_w = q^k.
std::vector<SweepResult> run_form_sweeps(int max_q);

}  // namespace mdscoset
