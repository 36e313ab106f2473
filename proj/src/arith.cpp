#include "freyrep/arith.hpp"

#include "freyrep/errors.hpp"

namespace freyrep {

unsigned valuation(const Integer& n, std::uint64_t p) {
  if (p < 2) throw PreconditionError("valuation: p must be at least 2");
  if (n == 0) throw PreconditionError("valuation: v_p(0) is infinite");
  Integer q = abs(n);
  const Integer prime(static_cast<unsigned long>(p));
  // mpz_remove is exact and handles large exponents efficiently
  Integer rest;
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), q.get_mpz_t(), prime.get_mpz_t()));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw PreconditionError("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these bases are deterministic for all 64-bit n
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == UINT64_MAX) break;
  }
  return out;
}

std::uint64_t floor_sqrt(std::uint64_t n) {
  Integer root;
  const Integer value(static_cast<unsigned long>(n));
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root.get_ui();
}

std::int64_t two_sqrt_floor(std::uint64_t p) {
  return static_cast<std::int64_t>(floor_sqrt(4 * p));
}

std::uint64_t mod(const Integer& n, std::uint64_t m) {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m));
}

std::uint64_t mod(std::int64_t n, std::uint64_t m) {
  const auto mm = static_cast<__int128>(m);
  __int128 r = static_cast<__int128>(n) % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::vector<PrimePower> factor_trial(const Integer& n) {
  if (n == 0) throw PreconditionError("factor_trial: cannot factor 0");
  std::vector<PrimePower> out;
  Integer rest = abs(n);
  auto strip = [&](const Integer& d) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      rest /= d;
      ++e;
    }
    if (e > 0) out.push_back({d, e});
  };
  strip(2);
  for (Integer d = 3; d * d <= rest; d += 2) strip(d);
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

Integer largest_prime_factor(const Integer& n) {
  if (abs(n) < 2) {
    throw PreconditionError("largest_prime_factor: |n| must be at least 2");
  }
  return factor_trial(n).back().prime;
}

}  // namespace freyrep
