#include "mdscoset/verification.hpp"

#include <chrono>
#include <exception>
#include <string>

namespace mdscoset {

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::pass: return "pass";
    case RunStatus::fail: return "fail";
    case RunStatus::error: return "error";
  }
  return "?";
}

namespace {

class Checker {
 public:
  Checker(RunReport& report, FormulaEvaluator& ev) : report_(report), ev_(ev) {}

  void expect(const std::string& check, int W, int w, const Integer& formula, const Integer& oracle) {
    ++report_.comparisons;
    if (formula != oracle) report_.mismatches.push_back({check, W, w, formula.get_str(), oracle.get_str()});
  }

  void expect_form(FormId id, int W, int w, const Integer& oracle, int radius = 3) {
    ++report_.comparisons;
    try {
      const Integer v = ev_.evaluate(id, w, radius);
      if (v != oracle) report_.mismatches.push_back({to_string(id), W, w, v.get_str(), oracle.get_str()});
    } catch (const std::exception& e) {
      report_.mismatches.push_back({to_string(id), W, w, std::string("error: ") + e.what(), oracle.get_str()});
    }
  }

 private:
  RunReport& report_;
  FormulaEvaluator& ev_;
};

void check_census_invariants(const CosetCensus& c, Checker& chk) {
  const CodeParams& p = c.params;
  const int n = p.n();
  Integer cosets = 0;
  Integer vectors = 0;
  for (const auto& [W, cls] : c.per_weight) {
    cosets += cls.coset_count;
    vectors += cls.spectrum.total();
    chk.expect("census/class_mass", W, -1, cls.coset_count * ipow(p.q(), p.k()), cls.spectrum.total());
    for (int w = 0; w < W; ++w) chk.expect("census/zero_below_leader", W, w, 0, cls.spectrum[w]);
    if (W <= p.t()) {
      chk.expect("census/unique_leader_min", W, W, 1, Integer(static_cast<unsigned long>(cls.min_leaders)));
      chk.expect("census/unique_leader_max", W, W, 1, Integer(static_cast<unsigned long>(cls.max_leaders)));
    }
  }
  chk.expect("census/coset_total", -1, -1, ipow(p.q(), p.r()), cosets);
  chk.expect("census/vector_total", -1, -1, ipow(p.q(), n), vectors);
}

}  // namespace

std::vector<FormId> verified_forms(const CodeParams& params, int max_coset_weight, int covering_radius) {
  std::vector<FormId> ids{{Family::weight_enumerator, 0}};
  if (max_coset_weight >= 1 && coset_weight_admissible(params, 1)) {
    // The q+1, d=5 specialization only starts at w = 4 = d-1, so using w = n
    // lists exactly the forms applicable somewhere in the range.
    for (auto f : applicable_forms_w1(params, params.n())) ids.push_back(form(f));
    ids.push_back(form(Le1Form::lemma));
    ids.push_back(form(Le1Form::corollary));
    ids.push_back({Family::cheung_cumulative, 1});
  }
  if (max_coset_weight >= 2 && coset_weight_admissible(params, 2)) {
    for (auto f : applicable_forms_w2(params, params.n())) ids.push_back(form(f));
    ids.push_back({Family::sigma_le2, 0});
    ids.push_back({Family::cheung_cumulative, 2});
  }
  if (max_coset_weight >= 3 && coset_weight_admissible(params, 3) && covering_radius == 3) {
    for (auto f : applicable_forms_w3(params)) ids.push_back(form(f));
  }
  return ids;
}

RunReport verify_against_census(const CosetCensus& census, const VerifyOptions& options) {
  RunReport report;
  report.covering_radius = census.covering_radius;
  const CodeParams& p = census.params;
  const int n = p.n();
  const int d = p.d();
  const long q = p.q();
  FormulaEvaluator ev(p, options.fault);
  Checker chk(report, ev);

  check_census_invariants(census, chk);

  const Spectrum s0 = census.spectrum(0);
  const Spectrum s1 = census.spectrum(1);
  const Spectrum s2 = census.spectrum(2);
  const Spectrum s3 = census.spectrum(3);

  chk.expect("coset_count", 0, -1, expected_coset_count(p, 0), census.coset_count(0));
  for (int w = 0; w <= n; ++w) chk.expect_form({Family::weight_enumerator, 0}, 0, w, s0[w]);

  if (options.max_coset_weight >= 1) {
    if (!coset_weight_admissible(p, 1)) {
      report.notes.push_back("W=1 skipped: closed forms need d >= 3 (d=" + std::to_string(d) + ")");
    } else {
      chk.expect("coset_count", 1, -1, expected_coset_count(p, 1), census.coset_count(1));
      for (int w = d - 1; w <= n; ++w) {
        for (auto f : applicable_forms_w1(p, w)) chk.expect_form(form(f), 1, w, s1[w]);
        const Integer cumulative = s0[w] + s1[w];
        chk.expect_form(form(Le1Form::lemma), 1, w, cumulative);
        chk.expect_form(form(Le1Form::corollary), 1, w, cumulative);
        chk.expect_form({Family::cheung_cumulative, 1}, 1, w, cumulative);
      }
      const Spectrum full = full_spectrum(p, 1);
      for (int w = 0; w <= n; ++w) chk.expect("full_spectrum", 1, w, full[w], s1[w]);
    }
  }

  if (options.max_coset_weight >= 2) {
    if (!coset_weight_admissible(p, 2)) {
      report.notes.push_back("W=2 skipped: closed forms need d >= 5 (d=" + std::to_string(d) + ")");
    } else {
      chk.expect("coset_count", 2, -1, expected_coset_count(p, 2), census.coset_count(2));
      for (int w = d - 2; w <= n; ++w) {
        for (auto f : applicable_forms_w2(p, w)) chk.expect_form(form(f), 2, w, s2[w]);
        const Integer cumulative = s0[w] + s1[w] + s2[w];
        chk.expect_form({Family::sigma_le2, 0}, 2, w, cumulative);
        chk.expect_form({Family::cheung_cumulative, 2}, 2, w, cumulative);
      }
      const Spectrum full = full_spectrum(p, 2);
      for (int w = 0; w <= n; ++w) chk.expect("full_spectrum", 2, w, full[w], s2[w]);
    }
  }

  if (options.max_coset_weight >= 3) {
    if (!coset_weight_admissible(p, 3)) {
      report.notes.push_back("W=3 skipped: closed forms need d = 5 and k = n-4");
    } else if (census.covering_radius != 3) {
      report.notes.push_back("W=3 skipped: measured covering radius is " + std::to_string(census.covering_radius) +
                             ", closed forms need R = 3");
    } else {
      chk.expect("coset_count", 3, -1, expected_coset_count(p, 3), census.coset_count(3));
      for (int w = 3; w <= n; ++w) {
        for (auto f : applicable_forms_w3(p)) chk.expect_form(form(f), 3, w, s3[w], census.covering_radius);
      }
      const Spectrum full = full_spectrum(p, 3, census.covering_radius);
      for (int w = 0; w <= n; ++w) chk.expect("full_spectrum", 3, w, full[w], s3[w]);
      for (int w = 0; w <= n; ++w) {
        chk.expect("census/weight_totality", -1, w, binom(n, w) * ipow(q - 1, w), s0[w] + s1[w] + s2[w] + s3[w]);
      }
    }
  }

  report.status = report.mismatches.empty() ? RunStatus::pass : RunStatus::fail;
  return report;
}

RunReport verify_code(const CodeParams& params, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int workers = options.workers > 0 ? options.workers : 1;
  check_budget(params, options.max_vectors, workers);
  const MdsCode code = build_code(params);
  CensusOptions co;
  co.workers = options.workers;
  co.max_vectors = options.max_vectors;
  RunReport report = verify_against_census(census(code, co), options);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mdscoset
