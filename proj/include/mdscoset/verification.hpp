#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdscoset/code_model.hpp"
#include "mdscoset/coset_oracle.hpp"
#include "mdscoset/spectra_formulas.hpp"

namespace mdscoset {

/// One disagreement between a closed form (or census invariant) and the census.
/// w = -1 marks whole-coset quantities such as coset counts.
struct Mismatch {
  std::string check;
  int coset_weight = 0;
  int w = 0;
  std::string formula_value;
  std::string oracle_value;
};

enum class RunStatus { pass, fail, error };

const char* to_string(RunStatus s);

struct RunReport {
  std::string invocation;
  RunStatus status = RunStatus::pass;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;
  std::size_t comparisons = 0;
  int covering_radius = -1;
  double seconds = 0.0;
  std::string error;

  bool passed() const { return status == RunStatus::pass; }
};

struct VerifyOptions {
  int max_coset_weight = 3;
  int workers = 0;
  std::uint64_t max_vectors = kDefaultVectorBudget;
  std::optional<BinomialFault> fault;
};

/// Compares every applicable closed form for W <= max_coset_weight against a
/// census, and checks the census invariants (mass balance, unique leaders for
/// W <= t, zeros below W, per-w totality when R = 3).
RunReport verify_against_census(const CosetCensus& census, const VerifyOptions& options);

/// Builds the code, runs the census and verifies. Throws ResourceError when
/// the enumeration budget is exceeded.
RunReport verify_code(const CodeParams& params, const VerifyOptions& options);

/// Every FormId verify_against_census evaluates for these parameters.
std::vector<FormId> verified_forms(const CodeParams& params, int max_coset_weight, int covering_radius);

}  // namespace mdscoset
