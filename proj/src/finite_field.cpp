#include "freyrep/finite_field.hpp"

#include <string>

#include "freyrep/errors.hpp"

namespace freyrep {
namespace {

constexpr std::uint64_t kMaxCountingPrime = 1ULL << 32;

std::uint64_t disc_mod(std::uint64_t p, std::uint64_t a1, std::uint64_t a2,
                       std::uint64_t a3, std::uint64_t a4, std::uint64_t a6) {
  const WeierstrassModel lifted{Integer(a1), Integer(a2), Integer(a3),
                                Integer(a4), Integer(a6)};
  return mod(compute_invariants(lifted).disc, p);
}

}  // namespace

ReducedCurve::ReducedCurve(std::uint64_t p, std::int64_t a1, std::int64_t a2,
                           std::int64_t a3, std::int64_t a4, std::int64_t a6) {
  if (p == 2) {
    throw PreconditionError("ReducedCurve: characteristic 2 is not supported");
  }
  if (p >= kMaxCountingPrime || !is_prime(p)) {
    throw PreconditionError("ReducedCurve: p = " + std::to_string(p) +
                            " is not an odd prime below 2^32");
  }
  p_ = p;
  a1_ = mod(a1, p);
  a2_ = mod(a2, p);
  a3_ = mod(a3, p);
  a4_ = mod(a4, p);
  a6_ = mod(a6, p);
  if (disc_mod(p_, a1_, a2_, a3_, a4_, a6_) == 0) {
    throw BadReductionError("ReducedCurve: discriminant vanishes mod " +
                            std::to_string(p));
  }
}

ReducedCurve reduce_mod_p(const WeierstrassModel& model, std::uint64_t p) {
  if (p == 2) throw PreconditionError("reduce_mod_p: p = 2 is not supported");
  if (p >= kMaxCountingPrime || !is_prime(p)) {
    throw PreconditionError("reduce_mod_p: p = " + std::to_string(p) +
                            " is not an odd prime below 2^32");
  }
  if (mod(compute_invariants(model).disc, p) == 0) {
    throw BadReductionError("reduce_mod_p: bad reduction at " +
                            std::to_string(p));
  }
  auto r = [p](const Integer& a) { return static_cast<std::int64_t>(mod(a, p)); };
  return ReducedCurve(p, r(model.a1), r(model.a2), r(model.a3), r(model.a4),
                      r(model.a6));
}

std::uint64_t count_points_scan(const ReducedCurve& c) {
  const std::uint64_t p = c.p();
  std::uint64_t count = 1;  // point at infinity
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = mul_mod(x, x, p);
    const std::uint64_t rhs =
        (mul_mod(x2, x, p) + mul_mod(c.a2(), x2, p) + mul_mod(c.a4(), x, p) +
         c.a6()) % p;
    const std::uint64_t linear = (mul_mod(c.a1(), x, p) + c.a3()) % p;
    for (std::uint64_t y = 0; y < p; ++y) {
      const std::uint64_t lhs = (mul_mod(y, y, p) + mul_mod(linear, y, p)) % p;
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

std::uint64_t count_points_character(const ReducedCurve& c) {
  const std::uint64_t p = c.p();
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  const std::uint64_t b2 = (mul_mod(c.a1(), c.a1(), p) + 4 * c.a2()) % p;
  const std::uint64_t b4 = (2 * c.a4() + mul_mod(c.a1(), c.a3(), p)) % p;
  const std::uint64_t b6 = (mul_mod(c.a3(), c.a3(), p) + 4 * c.a6()) % p;
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = mul_mod(x, x, p);
    const std::uint64_t f = (mul_mod(4, mul_mod(x2, x, p), p) +
                             mul_mod(b2, x2, p) + mul_mod(2 * b4 % p, x, p) + b6) %
                            p;
    sum += legendre(f, p);
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + sum);
}

std::uint64_t count_points(const ReducedCurve& curve) {
  const std::uint64_t scanned = count_points_scan(curve);
  const std::uint64_t by_character = count_points_character(curve);
  if (scanned != by_character) {
    throw Error("count_points: strategies disagree (" + std::to_string(scanned) +
                " vs " + std::to_string(by_character) + ") mod " +
                std::to_string(curve.p()));
  }
  return scanned;
}

FrobeniusTrace trace_of_frobenius(const ReducedCurve& curve) {
  const auto p = static_cast<std::int64_t>(curve.p());
  const auto n = static_cast<std::int64_t>(count_points(curve));
  const std::int64_t trace = p + 1 - n;
  const std::int64_t bound = two_sqrt_floor(curve.p());
  if (trace > bound || trace < -bound) {
    throw Error("trace_of_frobenius: Hasse bound violated, a_p = " +
                std::to_string(trace));
  }
  return FrobeniusTrace{curve.p(), trace};
}

std::vector<std::int64_t> hasse_interval(std::uint64_t p) {
  if (!is_prime(p)) {
    throw PreconditionError("hasse_interval: " + std::to_string(p) +
                            " is not prime");
  }
  const std::int64_t bound = two_sqrt_floor(p);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(2 * bound + 1));
  for (std::int64_t t = -bound; t <= bound; ++t) out.push_back(t);
  return out;
}

}  // namespace freyrep
