#include "freyrep/report.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include "freyrep/errors.hpp"

namespace freyrep {
namespace {

using nlohmann::json;

std::string dec(std::uint64_t v) { return std::to_string(v); }
std::string dec(std::int64_t v) { return std::to_string(v); }

nlohmann::ordered_json verdict_json(Verdict v) {
  if (v == Verdict::Inapplicable) return "inapplicable";
  return v == Verdict::True;
}

Verdict verdict_from(const json& j) {
  if (j.is_boolean()) return verdict(j.get<bool>());
  if (j.is_string() && j.get<std::string>() == "inapplicable") {
    return Verdict::Inapplicable;
  }
  throw Error("report_from_json: bad verdict " + j.dump());
}

std::uint64_t u64_from(const json& j) { return std::stoull(j.get<std::string>()); }
std::int64_t i64_from(const json& j) { return std::stoll(j.get<std::string>()); }

std::string join(const std::vector<std::int64_t>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(values[i]);
  }
  return s + "}";
}

ReducibilityConfig reducibility_config(const RunConfig& cfg) {
  ReducibilityConfig out;
  out.auxiliary_prime = cfg.aux_prime;
  return out;
}

std::string describe(const ExclusionBound& row) {
  return to_string(row.witness);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.ell_min <= 7) {
    throw PreconditionError("ell-min must be > 7, got " + dec(cfg.ell_min));
  }
  if (cfg.ell_min > cfg.ell_max) {
    throw PreconditionError("ell-min must not exceed ell-max");
  }
  if (!is_prime(cfg.aux_prime) || cfg.aux_prime == 2) {
    throw PreconditionError("aux prime must be an odd prime");
  }
  if (!is_prime(cfg.weil_p)) {
    throw PreconditionError("weil p must be prime, got " + dec(cfg.weil_p));
  }
  if (cfg.weil_dmax == 0 || cfg.weil_dmax > cfg.weil_options.degree_cap) {
    throw PreconditionError("max degree must be in [1, " +
                            std::to_string(cfg.weil_options.degree_cap) + "]");
  }
  if (cfg.parallelism == 0) throw PreconditionError("jobs must be >= 1");
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json odd = nlohmann::ordered_json::array();
  for (std::uint64_t p : r.odd_bad_primes_checked) odd.push_back(dec(p));
  nlohmann::ordered_json exceptions = nlohmann::ordered_json::array();
  for (std::int64_t a : r.reducibility_exception_set) exceptions.push_back(dec(a));
  return nlohmann::ordered_json{
      {"ell", dec(r.ell)},
      {"bad_at_2", verdict_json(r.bad_at_2)},
      {"bad_at_3", verdict_json(r.bad_at_3)},
      {"good_at_5", verdict_json(r.good_at_5)},
      {"good_at_ell", verdict_json(r.good_at_ell)},
      {"semistable_outside_2", verdict_json(r.semistable_outside_2)},
      {"odd_bad_primes_checked", odd},
      {"v3_min_disc", std::to_string(r.v3_min_disc)},
      {"unramified_at_3", verdict_json(r.unramified_at_3)},
      {"tate_residues_at_3",
       nlohmann::ordered_json::array({dec(r.tate_residues_at_3[0]), dec(r.tate_residues_at_3[1])})},
      {"reducibility_exception_set", exceptions},
      {"actual_a5", dec(r.actual_a5)},
      {"irreducible", verdict_json(r.irreducible)},
      {"no_good_reduction_curve_at_3", verdict_json(r.no_good_reduction_curve_at_3)},
      {"theorem_holds", verdict_json(r.theorem_holds)},
  };
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.ell = u64_from(j.at("ell"));
  r.bad_at_2 = verdict_from(j.at("bad_at_2"));
  r.bad_at_3 = verdict_from(j.at("bad_at_3"));
  r.good_at_5 = verdict_from(j.at("good_at_5"));
  r.good_at_ell = verdict_from(j.at("good_at_ell"));
  r.semistable_outside_2 = verdict_from(j.at("semistable_outside_2"));
  for (const json& p : j.at("odd_bad_primes_checked")) {
    r.odd_bad_primes_checked.push_back(u64_from(p));
  }
  r.v3_min_disc = static_cast<unsigned>(u64_from(j.at("v3_min_disc")));
  r.unramified_at_3 = verdict_from(j.at("unramified_at_3"));
  const json& residues = j.at("tate_residues_at_3");
  if (residues.size() != 2) throw Error("report_from_json: residue pair expected");
  r.tate_residues_at_3 = {u64_from(residues[0]), u64_from(residues[1])};
  for (const json& a : j.at("reducibility_exception_set")) {
    r.reducibility_exception_set.push_back(i64_from(a));
  }
  r.actual_a5 = i64_from(j.at("actual_a5"));
  r.irreducible = verdict_from(j.at("irreducible"));
  r.no_good_reduction_curve_at_3 = verdict_from(j.at("no_good_reduction_curve_at_3"));
  r.theorem_holds = verdict_from(j.at("theorem_holds"));
  return r;
}

std::string markdown_header() {
  return "| ell | bad@2 | bad@3 | good@5 | good@ell | semistable | v3(disc_min) | "
         "unram@3 | a3 residues | exceptions | a5 | irreducible | no good@3 | "
         "theorem |\n"
         "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
}

std::string markdown_row(const VerificationReport& r) {
  std::ostringstream os;
  os << "| " << r.ell << " | " << to_string(r.bad_at_2) << " | "
     << to_string(r.bad_at_3) << " | " << to_string(r.good_at_5) << " | "
     << to_string(r.good_at_ell) << " | " << to_string(r.semistable_outside_2)
     << " | " << r.v3_min_disc << " | " << to_string(r.unramified_at_3) << " | {"
     << r.tate_residues_at_3[0] << ", " << r.tate_residues_at_3[1] << "} | "
     << join(r.reducibility_exception_set) << " | " << r.actual_a5 << " | "
     << to_string(r.irreducible) << " | "
     << to_string(r.no_good_reduction_curve_at_3) << " | "
     << to_string(r.theorem_holds) << " |\n";
  return os.str();
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  const std::vector<std::uint64_t> primes = primes_in_range(cfg.ell_min, cfg.ell_max);
  const ReducibilityConfig rcfg = reducibility_config(cfg);

  using Outcome = std::variant<VerificationReport, std::string>;
  std::vector<std::optional<Outcome>> slots(primes.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      Outcome outcome;
      try {
        outcome = verify_theorem(primes[i], rcfg);
      } catch (const std::exception& e) {
        outcome = std::string(e.what());
      }
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(outcome);
      }
      ready.notify_all();
    }
  };

  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(cfg.parallelism, std::max<std::size_t>(primes.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);

  if (cfg.output_format == OutputFormat::Markdown) out << markdown_header();
  bool all_hold = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Outcome outcome;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      outcome = std::move(*slots[i]);
    }
    if (const auto* report = std::get_if<VerificationReport>(&outcome)) {
      if (report->theorem_holds != Verdict::True) all_hold = false;
      if (cfg.output_format == OutputFormat::JsonLines) {
        out << to_json(*report).dump() << '\n';
      } else {
        out << markdown_row(*report);
      }
    } else {
      all_hold = false;
      err << "error: ell = " << primes[i] << ": " << std::get<std::string>(outcome)
          << '\n';
    }
  }
  out.flush();
  return all_hold ? kExitOk : kExitFailure;
}

std::vector<FixtureCheck> calegari_fixture_checks(const WeierstrassModel& model) {
  std::vector<FixtureCheck> checks;
  auto check = [&](std::string name, auto&& body) {
    FixtureCheck c{std::move(name), false, {}};
    try {
      std::tie(c.passed, c.detail) = body();
    } catch (const std::exception& e) {
      c.detail = std::string("error: ") + e.what();
    }
    checks.push_back(std::move(c));
  };
  constexpr std::uint64_t ell = 7;
  const Integer expected_disc = -Integer(128) * 5 * 1331;  // -2^7 * 5 * 11^3

  check("discriminant", [&] {
    const Integer disc = compute_invariants(model).disc;
    return std::pair{disc == expected_disc, "disc = " + disc.get_str()};
  });
  check("v2_disc", [&] {
    const unsigned v = valuation(compute_invariants(model).disc, 2);
    return std::pair{v == 7, "v2(disc) = " + std::to_string(v)};
  });
  check("multiplicative_at_2", [&] {
    const LocalReduction local = local_data(model, 2);
    return std::pair{is_multiplicative(local.kind), to_string(local.kind)};
  });
  check("unramified_at_2", [&] {
    const UnramifiedResult r = unramified_at(model, 2, ell);
    return std::pair{r.unramified, "witness " + std::to_string(r.witness)};
  });
  check("tate_residues_at_2", [&] {
    const ResiduePair r = tate_trace_residues(2, ell);
    return std::pair{r == ResiduePair{3, 4},
                     "{" + dec(r[0]) + ", " + dec(r[1]) + "}"};
  });
  check("good_reduction_obstruction_at_2", [&] {
    const bool b = good_reduction_obstruction(ell, 2);
    return std::pair{b, std::string(b ? "true" : "false")};
  });
  check("conductor_support", [&] {
    const ConductorSupport s = prime_to_ell_conductor_support(model, ell);
    std::string detail = "{";
    for (std::size_t i = 0; i < s.primes.size(); ++i) {
      detail += (i ? ", " : "") + dec(s.primes[i]);
    }
    detail += "}, conductor " + (s.conductor ? dec(*s.conductor) : std::string("?"));
    const bool ok = s.primes == std::vector<std::uint64_t>{5, 11} &&
                    s.conductor == std::uint64_t{55};
    return std::pair{ok, detail};
  });
  return checks;
}

int run_fixture_checks(std::ostream& out, const WeierstrassModel& model) {
  bool all = true;
  for (const FixtureCheck& c : calegari_fixture_checks(model)) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    all = all && c.passed;
  }
  return all ? kExitOk : kExitFailure;
}

nlohmann::ordered_json to_json(const ExclusionBound& row) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const Integer& c : row.witness.coefficients()) coeffs.push_back(c.get_str());
  return nlohmann::ordered_json{{"p", dec(row.p)},
              {"degree", std::to_string(row.degree)},
              {"bound", row.bound.get_str()},
              {"witness", coeffs},
              {"witness_product", row.witness_product.get_str()}};
}

int run_weil_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  std::map<unsigned, ExclusionBound> table;
  try {
    table = dimension_growth_table(cfg.weil_p, cfg.weil_dmax, cfg.weil_options);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (cfg.output_format == OutputFormat::Markdown) {
    out << "| p | degree | bound | witness | witness product |\n"
        << "|---|---|---|---|---|\n";
    for (const auto& [d, row] : table) {
      out << "| " << row.p << " | " << d << " | " << row.bound << " | "
          << describe(row) << " | " << row.witness_product << " |\n";
    }
  } else {
    for (const auto& [d, row] : table) out << to_json(row).dump() << '\n';
  }
  return kExitOk;
}

int run_count(std::uint64_t ell, std::uint64_t p, std::ostream& out,
              std::ostream& err) {
  try {
    const ReducedCurve curve = reduce_mod_p(frey_curve(ell), p);
    const std::uint64_t n = count_points(curve);
    const FrobeniusTrace a = trace_of_frobenius(curve);
    out << "N = " << n << "\na_p = " << a.trace << '\n';
    return kExitOk;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BadReductionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace freyrep
