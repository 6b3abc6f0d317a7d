#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "mdscoset/code_model.hpp"
#include "mdscoset/spectra_formulas.hpp"
#include "mdscoset/verification.hpp"

namespace mdscoset::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailed = 1,
  kExitInvalidArguments = 2,
  kExitBudgetExceeded = 3,
};

enum class Format { csv, json, text };

struct ComputeArgs {
  int n = 0;
  int k = 0;
  int q = 0;
  int coset_weight = 0;
  Format format = Format::csv;
  std::string out = "-";  // "-" writes to the output stream
  /// Skip the census for W = 3 and take R = 3 as given.
  bool assume_radius_3 = false;
  int workers = 0;
};

struct VerifyArgs {
  int n = 0;
  int k = 0;
  int q = 0;
  int max_coset_weight = 3;
  int workers = 0;
  Format format = Format::text;
  /// Test fixture only; never set from the command line.
  std::optional<BinomialFault> fault;
};

struct IdentitiesArgs {
  int max_w = 40;
  int max_q = 9;
};

/// Header `w,count`, then one row per weight 0..n.
std::string spectrum_csv(const Spectrum& s);
/// {"q","n","k","d","coset_weight","spectrum":[decimal strings]} in that key order.
std::string spectrum_json(const CodeParams& params, int coset_weight, const Spectrum& s);

std::string report_text(const RunReport& r);
std::string report_json(const RunReport& r);

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_identities(const IdentitiesArgs& args, std::ostream& out, std::ostream& err);

}  // namespace mdscoset::cli
