#include "freyrep/weierstrass.hpp"

#include <sstream>

#include "freyrep/errors.hpp"

namespace freyrep {
namespace {

Integer power(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// v_p with v_p(0) treated as "at least `cap`".
bool valuation_at_least(const Integer& n, std::uint64_t p, unsigned cap) {
  return n == 0 || valuation(n, p) >= cap;
}

bool reducible_at(const CurveInvariants& inv, std::uint64_t p) {
  return valuation_at_least(inv.c4, p, 4) && valuation_at_least(inv.c6, p, 6) &&
         valuation(inv.disc, p) >= 12;
}

std::optional<WeierstrassModel> try_transform(const WeierstrassModel& m,
                                              const Integer& u,
                                              const Integer& r,
                                              const Integer& s,
                                              const Integer& t) {
  const Integer n1 = m.a1 + 2 * s;
  const Integer n2 = m.a2 - s * m.a1 + 3 * r - s * s;
  const Integer n3 = m.a3 + r * m.a1 + 2 * t;
  const Integer n4 = m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 +
                     3 * r * r - 2 * s * t;
  const Integer n6 = m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 -
                     t * t - r * t * m.a1;
  const Integer u2 = u * u;
  const Integer u3 = u2 * u;
  const Integer u4 = u2 * u2;
  const Integer u6 = u3 * u3;
  if (!divides(u, n1) || !divides(u2, n2) || !divides(u3, n3) ||
      !divides(u4, n4) || !divides(u6, n6)) {
    return std::nullopt;
  }
  WeierstrassModel out{n1 / u, n2 / u2, n3 / u3, n4 / u4, n6 / u6};
  return out;
}

// One u = p step for p in {2, 3}. Integrality depends only on r mod p^2,
// s mod p and t mod p^3, so this search is exhaustive.
std::optional<WeierstrassModel> reduce_once_small(const WeierstrassModel& m,
                                                  std::uint64_t p) {
  const Integer u(static_cast<unsigned long>(p));
  const unsigned long p2 = p * p;
  const unsigned long p3 = p2 * p;
  for (unsigned long r = 0; r < p2; ++r) {
    for (unsigned long s = 0; s < p; ++s) {
      for (unsigned long t = 0; t < p3; ++t) {
        if (auto out = try_transform(m, u, Integer(r), Integer(s), Integer(t))) {
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

bool split_criterion(const Integer& c6, std::uint64_t p) {
  const Integer minus_c6 = -c6;
  if (p == 2) return mod(minus_c6, 8) == 1;
  return legendre(mod(minus_c6, p), p) == 1;
}

void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p)) {
    throw PreconditionError(std::string(who) + ": " + std::to_string(p) +
                            " is not prime");
  }
}

}  // namespace

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Good: return "good";
    case ReductionKind::MultiplicativeSplit: return "multiplicative_split";
    case ReductionKind::MultiplicativeNonSplit: return "multiplicative_nonsplit";
    case ReductionKind::Additive: return "additive";
    case ReductionKind::UnclassifiedAt2: return "unclassified_at_2";
  }
  return "unknown";
}

CurveInvariants compute_invariants(const WeierstrassModel& m) {
  CurveInvariants inv;
  inv.b2 = m.a1 * m.a1 + 4 * m.a2;
  inv.b4 = 2 * m.a4 + m.a1 * m.a3;
  inv.b6 = m.a3 * m.a3 + 4 * m.a6;
  inv.b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
           m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
  inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
  inv.c6 = -inv.b2 * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
  inv.disc = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4 * inv.b4 * inv.b4 -
             27 * inv.b6 * inv.b6 + 9 * inv.b2 * inv.b4 * inv.b6;
  if (inv.disc != 0) {
    Rational j(inv.c4 * inv.c4 * inv.c4, inv.disc);
    j.canonicalize();
    inv.j = j;
  }
  return inv;
}

WeierstrassModel frey_curve(std::uint64_t ell) {
  if (ell < 5 || !is_prime(ell)) {
    throw PreconditionError("frey_curve: ell must be a prime >= 5, got " +
                            std::to_string(ell));
  }
  const Integer a = power(3, ell);
  return WeierstrassModel{0, -(2 * a + 1), 0, a * (a + 1), 0};
}

Integer frey_discriminant(std::uint64_t ell) {
  const Integer a = power(3, ell);
  return 16 * a * a * (a + 1) * (a + 1);
}

WeierstrassModel calegari_curve() { return WeierstrassModel{1, 0, 1, -89, 316}; }

WeierstrassModel transform(const WeierstrassModel& model, const Integer& u,
                           const Integer& r, const Integer& s,
                           const Integer& t) {
  if (u == 0) throw PreconditionError("transform: u must be nonzero");
  if (auto out = try_transform(model, u, r, s, t)) return *out;
  throw DivisibilityError("transform: (u, r, s, t) = (" + u.get_str() + ", " +
                          r.get_str() + ", " + s.get_str() + ", " +
                          t.get_str() + ") gives a non-integral model");
}

MinimalAtP minimize_at(const WeierstrassModel& model, std::uint64_t p) {
  require_prime(p, "minimize_at");
  MinimalAtP out{model, 0};
  CurveInvariants inv = compute_invariants(out.model);
  if (inv.disc == 0) throw PreconditionError("minimize_at: degenerate model");
  if (p >= 5 && reducible_at(inv, p)) {
    // the short model (0, 0, 0, -27 c4, -54 c6) has the same valuations at p
    out.model = WeierstrassModel{0, 0, 0, -27 * inv.c4, -54 * inv.c6};
    inv = compute_invariants(out.model);
  }
  const Integer u(static_cast<unsigned long>(p));
  while (reducible_at(inv, p)) {
    std::optional<WeierstrassModel> next =
        p >= 5 ? try_transform(out.model, u, 0, 0, 0)
               : reduce_once_small(out.model, p);
    if (!next) break;
    out.model = *next;
    ++out.steps;
    inv = compute_invariants(out.model);
  }
  return out;
}

LocalReduction local_data(const WeierstrassModel& model, std::uint64_t p) {
  require_prime(p, "local_data");
  CurveInvariants inv = compute_invariants(model);
  if (inv.disc == 0) throw PreconditionError("local_data: degenerate model");

  if (inv.c4 == 0 || valuation(inv.c4, p) > 0) {
    inv = compute_invariants(minimize_at(model, p).model);
  }

  LocalReduction out;
  out.prime = p;
  out.min_disc_valuation = valuation(inv.disc, p);
  if (inv.c4 != 0) out.c4_valuation = valuation(inv.c4, p);

  if (out.min_disc_valuation == 0) {
    out.kind = ReductionKind::Good;
  } else if (out.c4_valuation == 0u) {
    out.kind = split_criterion(inv.c6, p) ? ReductionKind::MultiplicativeSplit
                                          : ReductionKind::MultiplicativeNonSplit;
  } else {
    out.kind = p == 2 ? ReductionKind::UnclassifiedAt2 : ReductionKind::Additive;
  }
  return out;
}

std::string to_string(const WeierstrassModel& m) {
  std::ostringstream os;
  os << "[" << m.a1 << ", " << m.a2 << ", " << m.a3 << ", " << m.a4 << ", "
     << m.a6 << "]";
  return os.str();
}

}  // namespace freyrep
