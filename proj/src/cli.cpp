#include "mdscoset/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mdscoset/coset_oracle.hpp"
#include "mdscoset/errors.hpp"
#include "mdscoset/identities.hpp"

namespace mdscoset::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string code_label(int n, int k, int q) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(n - k + 1) + "]_" +
         std::to_string(q);
}

int write_output(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return kExitPass;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file " << path << "\n";
    return kExitInvalidArguments;
  }
  f << text;
  return kExitPass;
}

}  // namespace

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream os;
  os << "w,count\n";
  for (int w = 0; w <= s.length(); ++w) os << w << "," << s[w].get_str() << "\n";
  return os.str();
}

std::string spectrum_json(const CodeParams& params, int coset_weight, const Spectrum& s) {
  ordered_json j;
  j["q"] = params.q();
  j["n"] = params.n();
  j["k"] = params.k();
  j["d"] = params.d();
  j["coset_weight"] = coset_weight;
  j["spectrum"] = ordered_json::array();
  for (const auto& c : s.counts()) j["spectrum"].push_back(c.get_str());
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& r) {
  std::ostringstream os;
  os << "verify " << r.invocation << "\n";
  if (r.covering_radius >= 0) os << "covering radius: " << r.covering_radius << "\n";
  os << "comparisons: " << r.comparisons << "\n";
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  for (const auto& m : r.mismatches) {
    os << "mismatch: " << m.check << " W=" << m.coset_weight << " w=" << m.w << " formula=" << m.formula_value
       << " oracle=" << m.oracle_value << "\n";
  }
  if (!r.error.empty()) os << "error: " << r.error << "\n";
  os << "mismatches: " << r.mismatches.size() << "\n";
  os << "status: " << to_string(r.status) << "\n";
  os << "time: " << r.seconds << " s\n";
  return os.str();
}

std::string report_json(const RunReport& r) {
  ordered_json j;
  j["invocation"] = r.invocation;
  j["status"] = to_string(r.status);
  j["covering_radius"] = r.covering_radius;
  j["comparisons"] = r.comparisons;
  j["mismatches"] = ordered_json::array();
  for (const auto& m : r.mismatches) {
    j["mismatches"].push_back({{"check", m.check},
                               {"W", m.coset_weight},
                               {"w", m.w},
                               {"formula_value", m.formula_value},
                               {"oracle_value", m.oracle_value}});
  }
  j["notes"] = r.notes;
  if (!r.error.empty()) j["error"] = r.error;
  j["seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const CodeParams params = make_params(args.n, args.k, args.q);
    if (!coset_weight_admissible(params, args.coset_weight)) {
      err << "error: coset weight " << args.coset_weight << " not admissible for "
          << code_label(args.n, args.k, args.q)
          << " (W=1 needs d>=3, W=2 needs d>=5, W=3 needs d=5 and k=n-4)\n";
      return kExitInvalidArguments;
    }
    if (args.format == Format::text) {
      err << "error: compute supports --format csv or json\n";
      return kExitInvalidArguments;
    }
    std::optional<int> radius;
    if (args.coset_weight == 3) {
      if (args.assume_radius_3) {
        radius = 3;
      } else {
        CensusOptions co;
        co.workers = args.workers;
        radius = covering_radius(build_code(params), co);
        if (*radius != 3) {
          err << "error: measured covering radius " << *radius << " != 3; weight-3 closed forms do not apply\n";
          return kExitInvalidArguments;
        }
      }
    }
    const Spectrum s = full_spectrum(params, args.coset_weight, radius);
    const std::string text =
        args.format == Format::json ? spectrum_json(params, args.coset_weight, s) : spectrum_csv(s);
    return write_output(args.out, text, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << " (pass --assume-radius-3 to skip the census)\n";
    return kExitBudgetExceeded;
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  RunReport report;
  report.invocation = code_label(args.n, args.k, args.q) + " max-coset-weight=" +
                      std::to_string(args.max_coset_weight) + " workers=" + std::to_string(args.workers);
  int code = kExitPass;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (args.max_coset_weight < 0 || args.max_coset_weight > 3) {
      throw DomainError("--max-coset-weight must be in [0, 3]");
    }
    if (args.workers < 0) throw DomainError("--workers must be >= 0");
    const CodeParams params = make_params(args.n, args.k, args.q);
    VerifyOptions opts;
    opts.max_coset_weight = args.max_coset_weight;
    opts.workers = args.workers;
    opts.fault = args.fault;
    const std::string invocation = report.invocation;
    report = verify_code(params, opts);
    report.invocation = invocation;
    code = report.passed() ? kExitPass : kExitVerificationFailed;
  } catch (const DomainError& e) {
    report.status = RunStatus::error;
    report.error = e.what();
    code = kExitInvalidArguments;
  } catch (const ResourceError& e) {
    report.status = RunStatus::error;
    report.error = e.what();
    code = kExitBudgetExceeded;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << (args.format == Format::json ? report_json(report) : report_text(report));
  if (code == kExitInvalidArguments || code == kExitBudgetExceeded) err << "error: " << report.error << "\n";
  return code;
}

int cmd_identities(const IdentitiesArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_w < 0 || args.max_w > kMaxIdentityWeight) {
    err << "error: --max-w must be in [0, " << kMaxIdentityWeight << "]\n";
    return kExitInvalidArguments;
  }
  if (args.max_q < 2 || args.max_q > 32) {
    err << "error: --max-q must be in [2, 32]\n";
    return kExitInvalidArguments;
  }
  auto sweeps = run_identity_sweeps(args.max_w, args.max_q);
  for (auto& s : run_form_sweeps(args.max_q)) sweeps.push_back(std::move(s));
  bool ok = true;
  for (const auto& s : sweeps) {
    out << (s.ok() ? "pass" : "FAIL") << "  " << s.name << "  cases=" << s.cases << "\n";
    for (const auto& f : s.failures) out << "      " << f << "\n";
    ok = ok && s.ok();
  }
  out << "status: " << (ok ? "pass" : "fail") << "\n";
  return ok ? kExitPass : kExitVerificationFailed;
}

}  // namespace mdscoset::cli
