#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "freyrep/galois.hpp"
#include "freyrep/weil.hpp"

namespace freyrep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { JsonLines, Markdown };

struct RunConfig {
  std::uint64_t ell_min = 11;
  std::uint64_t ell_max = 11;
  std::uint64_t aux_prime = 5;
  std::uint64_t weil_p = 3;
  unsigned weil_dmax = 2;
  unsigned parallelism = 1;
  OutputFormat output_format = OutputFormat::JsonLines;
  EnumerationOptions weil_options{};
};

/// Throws PreconditionError describing the first violated invariant.
void validate(const RunConfig& cfg);

nlohmann::ordered_json to_json(const VerificationReport& report);
/// Inverse of to_json; throws nlohmann::json exceptions or Error on a
/// malformed object.
VerificationReport report_from_json(const nlohmann::json& j);

std::string markdown_header();
std::string markdown_row(const VerificationReport& report);

/// Verifies every prime in [ell_min, ell_max] using `parallelism` workers and
/// writes reports to `out` in ascending ell. Diagnostics go to `err`.
/// Returns kExitOk iff every report holds and nothing errored.
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named claims about Calegari's mod-7 example, evaluated on `model`.
std::vector<FixtureCheck> calegari_fixture_checks(const WeierstrassModel& model);

int run_fixture_checks(std::ostream& out,
                       const WeierstrassModel& model = calegari_curve());

nlohmann::ordered_json to_json(const ExclusionBound& row);

int run_weil_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Prints #E^ell(F_p) and a_p.
int run_count(std::uint64_t ell, std::uint64_t p, std::ostream& out,
              std::ostream& err);

}  // namespace freyrep
