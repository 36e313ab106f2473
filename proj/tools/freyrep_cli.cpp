// Command-line front end for the verification pipeline.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "freyrep/errors.hpp"
#include "freyrep/report.hpp"

namespace {

freyrep::OutputFormat parse_format(const std::string& s) {
  return s == "markdown" ? freyrep::OutputFormat::Markdown
                         : freyrep::OutputFormat::JsonLines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify non-minimally elliptic mod-ell representations of E^ell"};
  app.require_subcommand(1);

  freyrep::RunConfig cfg;
  std::string format = "json-lines";
  std::string mode = "totally-real";

  auto* verify = app.add_subcommand("verify", "Run the verification sweep over primes ell");
  verify->add_option("--ell-min", cfg.ell_min, "Lower end of the ell window (> 7)")->required();
  verify->add_option("--ell-max", cfg.ell_max, "Upper end of the ell window")->required();
  verify->add_option("--jobs", cfg.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--aux-prime", cfg.aux_prime, "Auxiliary prime for irreducibility");
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json-lines", "markdown"}));

  auto* fixtures = app.add_subcommand("fixtures", "Check the ell = 7 example curve");

  auto* weil = app.add_subcommand("weil-table", "Dimension-growth exclusion bounds");
  weil->add_option("--p", cfg.weil_p, "Prime p of the trace")->required();
  weil->add_option("--max-degree", cfg.weil_dmax, "Largest degree d")->required();
  weil->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json-lines", "markdown"}));
  weil->add_option("--mode", mode, "Root bound: totally-real or absolute-value")
      ->check(CLI::IsMember({"totally-real", "absolute-value"}));

  std::uint64_t count_ell = 0, count_p = 0;
  auto* count = app.add_subcommand("count", "Count points of E^ell mod p");
  count->add_option("--ell", count_ell, "Prime ell >= 5")->required();
  count->add_option("--p", count_p, "Odd prime of good reduction")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? freyrep::kExitOk : freyrep::kExitUsage;
  }

  cfg.output_format = parse_format(format);
  if (mode == "absolute-value") cfg.weil_options.mode = freyrep::RootBound::AbsoluteValue;

  try {
    if (*verify) return freyrep::run_sweep(cfg, std::cout, std::cerr);
    if (*fixtures) return freyrep::run_fixture_checks(std::cout);
    if (*weil) {
      cfg.ell_min = cfg.ell_max = 11;
      return freyrep::run_weil_table(cfg, std::cout, std::cerr);
    }
    if (*count) return freyrep::run_count(count_ell, count_p, std::cout, std::cerr);
  } catch (const freyrep::PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return freyrep::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return freyrep::kExitFailure;
  }
  return freyrep::kExitUsage;
}
