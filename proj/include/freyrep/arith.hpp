#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace freyrep {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation of a nonzero integer. Throws PreconditionError for n = 0
/// or p < 2.
unsigned valuation(const Integer& n, std::uint64_t p);

/// Deterministic primality test for machine-word integers.
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Largest t with t*t <= n.
std::uint64_t floor_sqrt(std::uint64_t n);

/// Floor of 2*sqrt(p), via the integer square root of 4p.
std::int64_t two_sqrt_floor(std::uint64_t p);

/// Least nonnegative residue of n modulo m (m > 0).
std::uint64_t mod(const Integer& n, std::uint64_t m);
std::uint64_t mod(std::int64_t n, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse modulo a prime; a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Legendre symbol (a | p) for odd prime p: -1, 0 or 1.
int legendre(std::uint64_t a, std::uint64_t p);

/// Prime factors of an integer found by trial division, fully factoring
/// |n|. Intended for small magnitudes only.
struct PrimePower {
  Integer prime;
  unsigned exponent;
};
std::vector<PrimePower> factor_trial(const Integer& n);

/// Largest prime factor of |n| by trial division; n must not be 0 or +-1.
Integer largest_prime_factor(const Integer& n);

}  // namespace freyrep
