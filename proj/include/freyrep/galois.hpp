#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "freyrep/finite_field.hpp"
#include "freyrep/weierstrass.hpp"

namespace freyrep {

/// Constants of the reducibility argument. A reducible residual
/// representation would contain a character unramified outside 2 whose
/// conductor is bounded by the 2-part of the curve conductor.
struct ReducibilityConfig {
  unsigned max_curve_conductor_2part = 256;
  unsigned max_character_conductor = 16;
  /// Exponent of (Z/16)^*; hard-coded rather than derived from the conductor.
  unsigned max_character_order = 4;
  std::uint64_t auxiliary_prime = 5;
};

/// Three-valued outcome of a claim. Inapplicable never collapses to false.
enum class Verdict { False, True, Inapplicable };

std::string to_string(Verdict v);
inline Verdict verdict(bool b) { return b ? Verdict::True : Verdict::False; }

struct UnramifiedResult {
  bool unramified = false;
  /// v_p of the minimal discriminant.
  unsigned witness = 0;
};

/// Tate-curve criterion at p for the mod-ell representation. Throws
/// CriterionInapplicable for additive or unclassified reduction.
UnramifiedResult unramified_at(const WeierstrassModel& model, std::uint64_t p,
                               std::uint64_t ell);

/// Unordered pair {+(p+1), -(p+1)} mod ell, stored ascending. Both entries
/// coincide when ell | p + 1.
using ResiduePair = std::array<std::uint64_t, 2>;
ResiduePair tate_trace_residues(std::uint64_t p, std::uint64_t ell);

/// The r in F_ell^* with r^order = 1, ascending.
std::vector<std::uint64_t> roots_of_unity(std::uint64_t ell, unsigned order);

/// Values a in the Hasse interval at the auxiliary prime q with
/// a = r + q/r (mod ell) for some root of unity r of the configured order.
std::vector<std::int64_t> reducibility_exceptions(std::uint64_t ell,
                                                  const ReducibilityConfig& cfg = {});

struct IrreducibilityEvidence {
  bool irreducible = false;
  std::vector<std::int64_t> exceptions;
  std::int64_t actual_trace = 0;
};

IrreducibilityEvidence is_irreducible(const WeierstrassModel& model,
                                      std::uint64_t ell,
                                      const ReducibilityConfig& cfg = {});

/// True iff no Frobenius trace of a curve with good reduction at p is
/// congruent to +-(p+1) mod ell.
bool good_reduction_obstruction(std::uint64_t ell, std::uint64_t p);

/// Primes p != ell where the mod-ell representation of `model` is ramified,
/// read off a trial-division factorization of the discriminant. The
/// conductor is available only when every such prime is multiplicative.
struct ConductorSupport {
  std::vector<std::uint64_t> primes;
  std::optional<std::uint64_t> conductor;
};
ConductorSupport prime_to_ell_conductor_support(const WeierstrassModel& model,
                                                std::uint64_t ell);

struct VerificationReport {
  std::uint64_t ell = 0;
  Verdict bad_at_2 = Verdict::Inapplicable;
  Verdict bad_at_3 = Verdict::Inapplicable;
  Verdict good_at_5 = Verdict::Inapplicable;
  Verdict good_at_ell = Verdict::Inapplicable;
  Verdict semistable_outside_2 = Verdict::Inapplicable;
  /// Odd primes of bad reduction found by trial division and classified
  /// individually; the remaining odd primes are covered by gcd(c4, disc).
  std::vector<std::uint64_t> odd_bad_primes_checked;
  unsigned v3_min_disc = 0;
  Verdict unramified_at_3 = Verdict::Inapplicable;
  ResiduePair tate_residues_at_3{};
  std::vector<std::int64_t> reducibility_exception_set;
  std::int64_t actual_a5 = 0;
  Verdict irreducible = Verdict::Inapplicable;
  Verdict no_good_reduction_curve_at_3 = Verdict::Inapplicable;
  Verdict theorem_holds = Verdict::Inapplicable;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

/// Trial-division bound for the explicit semistability check.
inline constexpr std::uint64_t kSemistabilityTrialBound = 10000;

/// Runs the whole argument for E^ell. Component failures are rethrown as
/// ClaimError naming the claim.
VerificationReport verify_theorem(std::uint64_t ell,
                                  const ReducibilityConfig& cfg = {});

}  // namespace freyrep
