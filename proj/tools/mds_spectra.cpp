// Command-line front end: spectra tables, formula-vs-census verification and
// identity sweeps.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mdscoset/cli.hpp"

namespace cli = mdscoset::cli;

int main(int argc, char** argv) {
  CLI::App app{"Integral weight spectra of MDS code cosets of weight 0..3"};
  app.require_subcommand(1);

  const std::map<std::string, cli::Format> data_formats{{"csv", cli::Format::csv}, {"json", cli::Format::json}};
  const std::map<std::string, cli::Format> report_formats{{"text", cli::Format::text}, {"json", cli::Format::json}};

  cli::ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Print the full spectrum of one coset weight");
  c->add_option("--q", compute.q, "Field order (prime power <= 32)")->required();
  c->add_option("--n", compute.n, "Code length")->required();
  c->add_option("--k", compute.k, "Code dimension")->required();
  c->add_option("--coset-weight", compute.coset_weight, "Coset weight W in 0..3")->required();
  c->add_option("--format", compute.format, "csv or json")->transform(CLI::CheckedTransformer(data_formats));
  c->add_option("--out", compute.out, "Output file, - for stdout");
  c->add_option("--workers", compute.workers, "Census threads when W=3 needs the covering radius");
  c->add_flag("--assume-radius-3", compute.assume_radius_3, "Take covering radius 3 as given for W=3");

  cli::VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Compare every closed form with an exhaustive coset census");
  v->add_option("--q", verify.q, "Field order (prime power <= 32)")->required();
  v->add_option("--n", verify.n, "Code length")->required();
  v->add_option("--k", verify.k, "Code dimension")->required();
  v->add_option("--max-coset-weight", verify.max_coset_weight, "Highest coset weight to check (0..3)");
  v->add_option("--workers", verify.workers, "OpenMP threads for the census (0 = runtime default)");
  v->add_option("--format", verify.format, "text or json")->transform(CLI::CheckedTransformer(report_formats));

  cli::IdentitiesArgs identities;
  auto* i = app.add_subcommand("identities", "Exhaustive identity and formula-consistency sweeps");
  i->add_option("--max-w", identities.max_w, "Largest weight / binomial argument (<= 60)");
  i->add_option("--max-q", identities.max_q, "Largest field order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitInvalidArguments;
  }

  if (*c) return cli::cmd_compute(compute, std::cout, std::cerr);
  if (*v) return cli::cmd_verify(verify, std::cout, std::cerr);
  return cli::cmd_identities(identities, std::cout, std::cerr);
}
