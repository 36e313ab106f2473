#pragma once

#include <cstdint>
#include <vector>

#include "freyrep/weierstrass.hpp"

namespace freyrep {

/// A Weierstrass model over F_p, p odd, with good reduction. Construction
/// validates the invariant.
class ReducedCurve {
 public:
  /// Residues are taken mod p. Throws PreconditionError if p is not an odd
  /// prime below 2^32, BadReductionError if the discriminant vanishes mod p.
  ReducedCurve(std::uint64_t p, std::int64_t a1, std::int64_t a2,
               std::int64_t a3, std::int64_t a4, std::int64_t a6);

  std::uint64_t p() const { return p_; }
  std::uint64_t a1() const { return a1_; }
  std::uint64_t a2() const { return a2_; }
  std::uint64_t a3() const { return a3_; }
  std::uint64_t a4() const { return a4_; }
  std::uint64_t a6() const { return a6_; }

  friend bool operator==(const ReducedCurve&, const ReducedCurve&) = default;

 private:
  std::uint64_t p_, a1_, a2_, a3_, a4_, a6_;
};

struct FrobeniusTrace {
  std::uint64_t p;
  std::int64_t trace;
};

ReducedCurve reduce_mod_p(const WeierstrassModel& model, std::uint64_t p);

/// Projective point count by scanning every affine (x, y).
std::uint64_t count_points_scan(const ReducedCurve& curve);

/// Projective point count as p + 1 + sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6).
std::uint64_t count_points_character(const ReducedCurve& curve);

/// Point count; both strategies are run and must agree.
std::uint64_t count_points(const ReducedCurve& curve);

FrobeniusTrace trace_of_frobenius(const ReducedCurve& curve);

/// All t with |t| <= floor(2 sqrt(p)), ascending.
std::vector<std::int64_t> hasse_interval(std::uint64_t p);

}  // namespace freyrep
