#include "freyrep/galois.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "freyrep/errors.hpp"

namespace freyrep {
namespace {

void require_prime(std::uint64_t n, const char* who) {
  if (!is_prime(n)) {
    throw PreconditionError(std::string(who) + ": " + std::to_string(n) +
                            " is not prime");
  }
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(std::uint64_t ell) {
  const std::vector<std::uint64_t> factors = distinct_prime_factors(ell - 1);
  for (std::uint64_t g = 2; g < ell; ++g) {
    const bool generates = std::all_of(
        factors.begin(), factors.end(),
        [&](std::uint64_t q) { return pow_mod(g, (ell - 1) / q, ell) != 1; });
    if (generates) return g;
  }
  return 1;  // ell = 2
}

// Exponent of (Z/n)^*, by brute force over the units.
unsigned unit_group_exponent(unsigned n) {
  unsigned exponent = 1;
  for (unsigned a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    unsigned order = 1;
    for (unsigned x = a % n; x != 1 % n; x = x * a % n) ++order;
    exponent = std::lcm(exponent, order);
  }
  return exponent;
}

void validate(const ReducibilityConfig& cfg) {
  if (cfg.max_character_conductor == 0 ||
      unit_group_exponent(cfg.max_character_conductor) != cfg.max_character_order) {
    throw PreconditionError(
        "ReducibilityConfig: max_character_order must equal the exponent of "
        "(Z/max_character_conductor)^*");
  }
  require_prime(cfg.auxiliary_prime, "ReducibilityConfig.auxiliary_prime");
}

template <typename F>
auto claim(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ClaimError&) {
    throw;
  } catch (const Error& e) {
    throw ClaimError(name, e.what());
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

UnramifiedResult unramified_at(const WeierstrassModel& model, std::uint64_t p,
                               std::uint64_t ell) {
  require_prime(ell, "unramified_at");
  if (p == ell) throw PreconditionError("unramified_at: p must differ from ell");
  const LocalReduction local = local_data(model, p);
  if (local.kind == ReductionKind::Additive ||
      local.kind == ReductionKind::UnclassifiedAt2) {
    throw CriterionInapplicable("unramified_at: reduction at " +
                                std::to_string(p) + " is " +
                                to_string(local.kind) +
                                ", Tate criterion does not apply");
  }
  UnramifiedResult out;
  out.witness = local.min_disc_valuation;
  out.unramified = is_multiplicative(local.kind) && out.witness % ell == 0;
  return out;
}

ResiduePair tate_trace_residues(std::uint64_t p, std::uint64_t ell) {
  if (p == ell) {
    throw PreconditionError("tate_trace_residues: p must differ from ell");
  }
  const std::uint64_t plus = (p + 1) % ell;
  const std::uint64_t minus = (ell - plus) % ell;
  return ResiduePair{std::min(plus, minus), std::max(plus, minus)};
}

std::vector<std::uint64_t> roots_of_unity(std::uint64_t ell, unsigned order) {
  require_prime(ell, "roots_of_unity");
  if (order == 0) throw PreconditionError("roots_of_unity: order must be >= 1");
  const std::uint64_t k = std::gcd<std::uint64_t>(order, ell - 1);
  const std::uint64_t h = pow_mod(primitive_root(ell), (ell - 1) / k, ell);
  std::vector<std::uint64_t> out;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    out.push_back(r);
    r = mul_mod(r, h, ell);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> reducibility_exceptions(std::uint64_t ell,
                                                  const ReducibilityConfig& cfg) {
  validate(cfg);
  require_prime(ell, "reducibility_exceptions");
  if (ell < 11 || ell == cfg.auxiliary_prime) {
    throw PreconditionError("reducibility_exceptions: need prime ell >= 11 "
                            "distinct from the auxiliary prime");
  }
  const std::uint64_t q = cfg.auxiliary_prime % ell;
  std::vector<std::uint64_t> targets;
  for (std::uint64_t r : roots_of_unity(ell, cfg.max_character_order)) {
    targets.push_back((r + mul_mod(q, inv_mod(r, ell), ell)) % ell);
  }
  std::vector<std::int64_t> out;
  for (std::int64_t a : hasse_interval(cfg.auxiliary_prime)) {
    if (std::find(targets.begin(), targets.end(), mod(a, ell)) != targets.end()) {
      out.push_back(a);
    }
  }
  return out;
}

IrreducibilityEvidence is_irreducible(const WeierstrassModel& model,
                                      std::uint64_t ell,
                                      const ReducibilityConfig& cfg) {
  IrreducibilityEvidence out;
  out.exceptions = reducibility_exceptions(ell, cfg);
  out.actual_trace =
      trace_of_frobenius(reduce_mod_p(model, cfg.auxiliary_prime)).trace;
  out.irreducible = std::find(out.exceptions.begin(), out.exceptions.end(),
                              out.actual_trace) == out.exceptions.end();
  return out;
}

bool good_reduction_obstruction(std::uint64_t ell, std::uint64_t p) {
  const ResiduePair residues = tate_trace_residues(p, ell);
  for (std::int64_t t : hasse_interval(p)) {
    const std::uint64_t r = mod(t, ell);
    if (r == residues[0] || r == residues[1]) return false;
  }
  return true;
}

ConductorSupport prime_to_ell_conductor_support(const WeierstrassModel& model,
                                                std::uint64_t ell) {
  const CurveInvariants inv = compute_invariants(model);
  if (inv.disc == 0) {
    throw PreconditionError("prime_to_ell_conductor_support: degenerate model");
  }
  ConductorSupport out;
  std::uint64_t conductor = 1;
  bool all_multiplicative = true;
  for (const PrimePower& pp : factor_trial(inv.disc)) {
    if (!pp.prime.fits_ulong_p()) {
      throw Error("prime_to_ell_conductor_support: prime factor too large");
    }
    const std::uint64_t p = pp.prime.get_ui();
    if (p == ell) continue;
    const LocalReduction local = local_data(model, p);
    if (local.kind == ReductionKind::Good) continue;
    if (is_multiplicative(local.kind)) {
      if (local.min_disc_valuation % ell == 0) continue;
      conductor *= p;
    } else {
      all_multiplicative = false;
    }
    out.primes.push_back(p);
  }
  if (all_multiplicative) out.conductor = conductor;
  return out;
}

VerificationReport verify_theorem(std::uint64_t ell,
                                  const ReducibilityConfig& cfg) {
  if (ell <= 7 || !is_prime(ell)) {
    throw PreconditionError("verify_theorem: ell must be a prime > 7, got " +
                            std::to_string(ell));
  }
  VerificationReport rep;
  rep.ell = ell;
  const WeierstrassModel model = frey_curve(ell);
  const CurveInvariants inv = compute_invariants(model);

  const LocalReduction at2 = claim("bad_at_2", [&] { return local_data(model, 2); });
  rep.bad_at_2 = verdict(at2.kind != ReductionKind::Good);
  const LocalReduction at3 = claim("bad_at_3", [&] { return local_data(model, 3); });
  rep.bad_at_3 = verdict(at3.kind != ReductionKind::Good);
  rep.good_at_5 = claim("good_at_5", [&] {
    return verdict(local_data(model, cfg.auxiliary_prime).kind == ReductionKind::Good);
  });
  rep.good_at_ell = claim("good_at_ell", [&] {
    return verdict(local_data(model, ell).kind == ReductionKind::Good);
  });

  rep.semistable_outside_2 = claim("semistable_outside_2", [&] {
    Integer rest = abs(inv.disc);
    bool all_multiplicative = true;
    for (std::uint64_t p = 3; p <= kSemistabilityTrialBound; p += 2) {
      if (!is_prime(p) || mod(rest, p) != 0) continue;
      const Integer prime(static_cast<unsigned long>(p));
      while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) rest /= prime;
      rep.odd_bad_primes_checked.push_back(p);
      const LocalReduction local = local_data(model, p);
      if (local.kind == ReductionKind::Additive) all_multiplicative = false;
    }
    // an odd prime dividing disc but not c4 is multiplicative on this model
    Integer shared = gcd(inv.c4, inv.disc);
    while (shared % 2 == 0) shared /= 2;
    for (std::uint64_t p : rep.odd_bad_primes_checked) {
      const Integer prime(static_cast<unsigned long>(p));
      while (mpz_divisible_p(shared.get_mpz_t(), prime.get_mpz_t())) shared /= prime;
    }
    if (!all_multiplicative) return Verdict::False;
    return shared == 1 ? Verdict::True : Verdict::Inapplicable;
  });

  rep.v3_min_disc = at3.min_disc_valuation;
  rep.unramified_at_3 = claim("unramified_at_3", [&] {
    try {
      return verdict(unramified_at(model, 3, ell).unramified);
    } catch (const CriterionInapplicable&) {
      return Verdict::Inapplicable;
    }
  });
  rep.tate_residues_at_3 =
      claim("tate_residues_at_3", [&] { return tate_trace_residues(3, ell); });

  const IrreducibilityEvidence irr =
      claim("irreducible", [&] { return is_irreducible(model, ell, cfg); });
  rep.reducibility_exception_set = irr.exceptions;
  rep.actual_a5 = irr.actual_trace;
  rep.irreducible = verdict(irr.irreducible);

  rep.no_good_reduction_curve_at_3 = claim("no_good_reduction_curve_at_3", [&] {
    return verdict(good_reduction_obstruction(ell, 3));
  });

  const Verdict parts[] = {rep.bad_at_2, rep.bad_at_3, rep.good_at_5,
                           rep.good_at_ell, rep.semistable_outside_2,
                           rep.unramified_at_3, rep.irreducible,
                           rep.no_good_reduction_curve_at_3};
  rep.theorem_holds = verdict(std::all_of(std::begin(parts), std::end(parts),
                                          [](Verdict v) { return v == Verdict::True; }));
  return rep;
}

}  // namespace freyrep
