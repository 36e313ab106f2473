#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "freyrep/arith.hpp"

namespace freyrep {

// Integral long Weierstrass equation
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
// Nondegeneracy (disc != 0) is checked where needed, not at construction.
struct WeierstrassModel {
  Integer a1, a2, a3, a4, a6;

  friend bool operator==(const WeierstrassModel&,
                         const WeierstrassModel&) = default;
};

struct CurveInvariants {
  Integer b2, b4, b6, b8;
  Integer c4, c6;
  Integer disc;
  /// c4^3 / disc in lowest terms; empty when disc = 0.
  std::optional<Rational> j;
};

enum class ReductionKind {
  Good,
  MultiplicativeSplit,
  MultiplicativeNonSplit,
  Additive,
  UnclassifiedAt2,
};

std::string to_string(ReductionKind kind);

inline bool is_multiplicative(ReductionKind kind) {
  return kind == ReductionKind::MultiplicativeSplit ||
         kind == ReductionKind::MultiplicativeNonSplit;
}

struct LocalReduction {
  std::uint64_t prime = 0;
  unsigned min_disc_valuation = 0;
  ReductionKind kind = ReductionKind::Good;
  /// v_p(c4) of the p-minimal model; empty when c4 = 0.
  std::optional<unsigned> c4_valuation;
};

CurveInvariants compute_invariants(const WeierstrassModel& model);

inline bool is_nondegenerate(const WeierstrassModel& model) {
  return compute_invariants(model).disc != 0;
}

/// E^ell : y^2 = x (x - 3^ell) (x - 3^ell - 1), for prime ell >= 5.
WeierstrassModel frey_curve(std::uint64_t ell);

/// Closed form of disc(E^ell): 16 * 3^(2 ell) * (3^ell + 1)^2.
Integer frey_discriminant(std::uint64_t ell);

/// Calegari's curve y^2 + xy + y = x^3 - 89x + 316.
WeierstrassModel calegari_curve();

/// Standard (u, r, s, t) change of variables x = u^2 x' + r,
/// y = u^3 y' + s u^2 x' + t. Throws DivisibilityError when the new
/// coefficients are not integral.
WeierstrassModel transform(const WeierstrassModel& model, const Integer& u,
                           const Integer& r, const Integer& s,
                           const Integer& t);

/// Reduction data at p, after making the model p-minimal.
LocalReduction local_data(const WeierstrassModel& model, std::uint64_t p);

/// A model isomorphic to `model` over Q that is minimal at p, together with
/// the number of u = p divisions performed.
struct MinimalAtP {
  WeierstrassModel model;
  unsigned steps = 0;
};
MinimalAtP minimize_at(const WeierstrassModel& model, std::uint64_t p);

std::string to_string(const WeierstrassModel& model);

}  // namespace freyrep
