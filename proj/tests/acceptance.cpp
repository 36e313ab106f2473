// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact; only the runtime budgets are timing-based.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "freyrep/errors.hpp"
#include "freyrep/report.hpp"
#include "oracles.hpp"

using namespace freyrep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << ". " << title;
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

constexpr std::uint64_t kEllMin = 11;
constexpr std::uint64_t kEllMax = 499;

}  // namespace

int main() {
  criterion(1, "full-theorem sweep, ell in [11, 499], single-threaded, < 10 s", [] {
    Outcome o;
    RunConfig cfg;
    cfg.ell_min = kEllMin;
    cfg.ell_max = kEllMax;
    cfg.parallelism = 1;
    std::ostringstream out, err;
    const auto start = Clock::now();
    const int rc = run_sweep(cfg, out, err);
    const double elapsed = seconds_since(start);
    o.require(rc == kExitOk, "exit status " + std::to_string(rc) + ": " + err.str());
    std::istringstream lines(out.str());
    std::size_t count = 0;
    for (std::string line; std::getline(lines, line); ++count) {
      const VerificationReport r = report_from_json(nlohmann::json::parse(line));
      o.require(r.theorem_holds == Verdict::True,
                "theorem fails at ell = " + std::to_string(r.ell));
    }
    o.require(count == 91, "expected 91 reports, got " + std::to_string(count));
    o.require(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
    if (o.ok) o.detail = "91 reports, " + std::to_string(elapsed) + " s";
    return o;
  });

  criterion(2, "E^17 mod 5 has 8 points and a_5 = -2", [] {
    Outcome o;
    const ReducedCurve c = reduce_mod_p(frey_curve(17), 5);
    o.require(count_points(c) == 8, "point count " + std::to_string(count_points(c)));
    o.require(trace_of_frobenius(c).trace == -2, "wrong trace");
    return o;
  });

  criterion(3, "reducibility exceptions empty except {+1, -1} at ell = 17", [] {
    Outcome o;
    for (std::uint64_t ell : primes_in_range(kEllMin, kEllMax)) {
      const auto ex = reducibility_exceptions(ell);
      if (ell == 17) {
        o.require(ex == std::vector<std::int64_t>{-1, 1}, "wrong set at 17");
      } else {
        o.require(ex.empty(), "nonempty at ell = " + std::to_string(ell));
      }
    }
    return o;
  });

  criterion(4, "Calegari ell = 7 fixture", [] {
    Outcome o;
    const WeierstrassModel e = calegari_curve();
    const Integer disc = compute_invariants(e).disc;
    o.require(disc == -oracle::pow_int(2, 7) * 5 * oracle::pow_int(11, 3),
              "disc = " + disc.get_str());
    o.require(valuation(disc, 2) == 7, "v2(disc) != 7");
    o.require(is_multiplicative(local_data(e, 2).kind), "not multiplicative at 2");
    o.require(unramified_at(e, 2, 7).unramified, "ramified at 2");
    o.require(good_reduction_obstruction(7, 2), "no obstruction at 2");
    const ConductorSupport s = prime_to_ell_conductor_support(e, 7);
    o.require(s.primes == std::vector<std::uint64_t>{5, 11}, "support differs");
    o.require(s.conductor == std::uint64_t{55}, "conductor != 55");
    for (const FixtureCheck& c : calegari_fixture_checks(e)) {
      o.require(c.passed, "fixture check " + c.name + ": " + c.detail);
    }
    return o;
  });

  criterion(5, "good-reduction obstruction sharp: false at ell = 7, true on [11, 499]", [] {
    Outcome o;
    o.require(!good_reduction_obstruction(7, 3), "obstruction holds at ell = 7");
    for (std::uint64_t ell : primes_in_range(kEllMin, kEllMax)) {
      o.require(good_reduction_obstruction(ell, 3), "fails at " + std::to_string(ell));
    }
    return o;
  });

  criterion(6, "v3(disc_min(E^ell)) = 2 ell, matching 16 * 3^(2 ell) (3^ell + 1)^2", [] {
    Outcome o;
    for (std::uint64_t ell : primes_in_range(kEllMin, kEllMax)) {
      const WeierstrassModel e = frey_curve(ell);
      const Integer closed = 16 * oracle::pow_int(3, static_cast<unsigned>(2 * ell)) *
                             (oracle::pow_int(3, static_cast<unsigned>(ell)) + 1) *
                             (oracle::pow_int(3, static_cast<unsigned>(ell)) + 1);
      o.require(compute_invariants(e).disc == closed, "disc mismatch at " + std::to_string(ell));
      o.require(oracle::valuation_by_division(closed, 3) == 2 * ell, "closed form valuation");
      o.require(local_data(e, 3).min_disc_valuation == 2 * ell,
                "minimal valuation at " + std::to_string(ell));
    }
    return o;
  });

  criterion(7, "Weil exclusion bound: d = 1 -> 7, d = 2 -> 29 (pinned), monotone", [] {
    Outcome o;
    const auto table = dimension_growth_table(3, 2);
    o.require(table.at(1).bound == 7, "d = 1 bound " + table.at(1).bound.get_str());
    o.require(table.at(2).bound == 29, "d = 2 bound " + table.at(2).bound.get_str());
    o.require(table.at(2).bound >= table.at(1).bound, "not monotone");
    o.require(excluded_prime_bound(3, 1).bound == 7, "excluded_prime_bound(3, 1)");
    return o;
  });

  criterion(8, "property suites (invariants 1e4, point counts 1e3, transforms), < 30 s", [] {
    Outcome o;
    const auto start = Clock::now();
    std::mt19937_64 rng(20041);

    for (int i = 0; i < 10000; ++i) {
      const WeierstrassModel m = oracle::random_model(rng, i % 3 ? 1000 : 1'000'000'000);
      const CurveInvariants inv = compute_invariants(m);
      o.require(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4, "b8 identity");
      o.require(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == 1728 * inv.disc, "c identity");
    }

    const std::vector<std::uint64_t> primes = primes_in_range(3, 97);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<std::int64_t> coeff(0, 96);
    int counted = 0;
    while (counted < 1000) {
      const std::uint64_t p = primes[pick(rng)];
      try {
        const ReducedCurve c(p, coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng));
        const std::uint64_t n = count_points_scan(c);
        o.require(n == count_points_character(c), "strategies disagree");
        const auto t = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(n);
        o.require(std::abs(t) <= two_sqrt_floor(p), "Hasse bound");
        ++counted;
      } catch (const BadReductionError&) {
      }
    }

    std::uniform_int_distribution<long> shift(-50, 50);
    int round_trips = 0;
    while (round_trips < 500) {
      const WeierstrassModel m = oracle::random_model(rng, 300);
      const CurveInvariants inv = compute_invariants(m);
      if (inv.disc == 0) continue;
      const WeierstrassModel t = transform(m, 1, shift(rng), shift(rng), shift(rng));
      o.require(*compute_invariants(t).j == *inv.j, "j changed under transform");
      for (long p : {2L, 3L, 5L}) {
        const WeierstrassModel up{m.a1 * p, m.a2 * p * p, m.a3 * p * p * p,
                                  m.a4 * oracle::pow_int(p, 4), m.a6 * oracle::pow_int(p, 6)};
        o.require(transform(up, p, 0, 0, 0) == m, "scale round trip");
        o.require(local_data(up, static_cast<std::uint64_t>(p)).min_disc_valuation ==
                      local_data(m, static_cast<std::uint64_t>(p)).min_disc_valuation,
                  "minimal valuation not recovered");
      }
      ++round_trips;
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
    if (o.ok) o.detail = std::to_string(elapsed) + " s";
    return o;
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
