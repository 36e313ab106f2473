#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "freyrep/arith.hpp"

namespace freyrep {

/// Monic integer polynomial, coefficients stored lowest degree first.
class IntegerPolynomial {
 public:
  /// Throws PreconditionError unless the leading coefficient is 1 and the
  /// degree is at least 1.
  explicit IntegerPolynomial(std::vector<Integer> coefficients);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer operator()(const Integer& x) const;

  friend bool operator==(const IntegerPolynomial&,
                         const IntegerPolynomial&) = default;
  friend auto operator<=>(const IntegerPolynomial& a,
                          const IntegerPolynomial& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  std::vector<Integer> coeffs_;
};

std::string to_string(const IntegerPolynomial& poly);

/// How the Weil bound on the roots of a trace candidate is imposed.
enum class RootBound {
  /// All roots real and in [-2 sqrt p, 2 sqrt p], certified exactly.
  TotallyReal,
  /// Only |e_k| <= C(d, k) (2 sqrt p)^k on the elementary symmetric
  /// functions; a larger superset of candidates.
  AbsoluteValue,
};

struct EnumerationOptions {
  RootBound mode = RootBound::TotallyReal;
  unsigned degree_cap = 4;
  /// Largest coefficient box accepted in AbsoluteValue mode.
  std::uint64_t max_box = 50'000'000;
};

/// Exact test that every complex root of `coeffs` (ascending, nonzero
/// leading coefficient, degree >= 1) is real and lies in the closed interval
/// [-sqrt(radius_sq), sqrt(radius_sq)]. Uses a Sturm chain, with the
/// endpoints handled in Q(sqrt(radius_sq)).
bool all_roots_real_in(const std::vector<Integer>& coeffs,
                       const Integer& radius_sq);

/// floor(C(d, k) * (2 sqrt p)^k), the bound on |e_k|.
Integer symmetric_function_bound(std::uint64_t p, unsigned d, unsigned k);

void for_each_trace_poly(std::uint64_t p, unsigned d,
                         const EnumerationOptions& opts,
                         const std::function<void(const IntegerPolynomial&)>& visit);

std::vector<IntegerPolynomial> enumerate_trace_polys(
    std::uint64_t p, unsigned d, const EnumerationOptions& opts = {});

struct ExclusionBound {
  std::uint64_t p = 0;
  unsigned degree = 0;
  Integer bound;
  IntegerPolynomial witness{{0, 1}};
  /// m(p+1) * m(-(p+1)) for the witness; divisible by `bound`.
  Integer witness_product;
};

ExclusionBound excluded_prime_bound(std::uint64_t p, unsigned d,
                                    const EnumerationOptions& opts = {});

/// excluded_prime_bound(p, d) for d = 1..d_max.
std::map<unsigned, ExclusionBound> dimension_growth_table(
    std::uint64_t p, unsigned d_max, const EnumerationOptions& opts = {});

}  // namespace freyrep
