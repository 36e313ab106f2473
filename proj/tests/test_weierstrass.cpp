#include <doctest.h>

#include "freyrep/errors.hpp"
#include "freyrep/weierstrass.hpp"
#include "oracles.hpp"

using namespace freyrep;

namespace {

WeierstrassModel scale_up(const WeierstrassModel& m, long u) {
  return {m.a1 * u, m.a2 * oracle::pow_int(u, 2), m.a3 * oracle::pow_int(u, 3),
          m.a4 * oracle::pow_int(u, 4), m.a6 * oracle::pow_int(u, 6)};
}

}  // namespace

TEST_CASE("invariants of degenerate and example curves") {
  const CurveInvariants cusp = compute_invariants({0, 0, 0, 0, 0});
  CHECK(cusp.disc == 0);
  CHECK_FALSE(cusp.j.has_value());

  const CurveInvariants cal = compute_invariants(calegari_curve());
  CHECK(cal.disc == -851840);
  CHECK(cal.disc == -oracle::pow_int(2, 7) * 5 * oracle::pow_int(11, 3));
  CHECK(valuation(cal.disc, 2) == 7);
  REQUIRE(cal.j.has_value());
  Rational j(cal.c4 * cal.c4 * cal.c4, cal.disc);
  j.canonicalize();
  CHECK(*cal.j == j);
  CHECK(cal.j->get_den() > 0);
}

TEST_CASE("frey curve coefficients") {
  const WeierstrassModel e11 = frey_curve(11);
  CHECK(e11.a2 == -354295);
  CHECK(e11.a4 == Integer("31381236756"));
  CHECK(Integer(177147) * 177148 == e11.a4);
  CHECK(e11.a1 == 0);
  CHECK(e11.a3 == 0);
  CHECK(e11.a6 == 0);

  const Integer t13 = oracle::pow_int(3, 13);
  const WeierstrassModel e13 = frey_curve(13);
  CHECK(e13.a2 == -(2 * t13 + 1));
  CHECK(e13.a4 == t13 * (t13 + 1));

  CHECK_THROWS_AS(frey_curve(4), PreconditionError);
  CHECK_THROWS_AS(frey_curve(3), PreconditionError);
  CHECK_THROWS_AS(frey_curve(15), PreconditionError);
}

TEST_CASE("frey discriminant matches the product of root differences") {
  for (std::uint64_t ell : {5u, 7u, 11u, 13u, 101u}) {
    const Integer a = oracle::pow_int(3, static_cast<unsigned>(ell));
    const Integer e[3] = {0, a, a + 1};
    Integer prod = 16;
    for (int i = 0; i < 3; ++i) {
      for (int k = i + 1; k < 3; ++k) prod *= (e[i] - e[k]) * (e[i] - e[k]);
    }
    CHECK(compute_invariants(frey_curve(ell)).disc == prod);
    CHECK(frey_discriminant(ell) == prod);
  }
}

TEST_CASE("invariant identities on random models") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 3000; ++i) {
    const WeierstrassModel m = oracle::random_model(rng, i % 2 ? 50 : 1'000'000);
    const CurveInvariants inv = compute_invariants(m);
    CHECK(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4);
    CHECK(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == 1728 * inv.disc);
    CHECK(inv.j.has_value() == (inv.disc != 0));
  }
}

TEST_CASE("transform") {
  const WeierstrassModel e11 = frey_curve(11);
  CHECK(transform(e11, 1, 0, 0, 0) == e11);
  CHECK(transform(calegari_curve(), 1, 0, 0, 0) == calegari_curve());

  const WeierstrassModel shifted = transform(e11, 1, 1, 0, 0);
  CHECK_FALSE(shifted == e11);
  CHECK(compute_invariants(shifted).disc == compute_invariants(e11).disc);

  const WeierstrassModel big = scale_up(calegari_curve(), 3);
  const CurveInvariants before = compute_invariants(big);
  const WeierstrassModel back = transform(big, 3, 0, 0, 0);
  CHECK(back == calegari_curve());
  CHECK(compute_invariants(back).disc * oracle::pow_int(3, 12) == before.disc);
  CHECK(compute_invariants(back).c4 * 81 == before.c4);
  CHECK(compute_invariants(back).c6 * 729 == before.c6);

  CHECK_THROWS_AS(transform(calegari_curve(), 3, 0, 0, 0), DivisibilityError);
  CHECK_THROWS_AS(transform(calegari_curve(), 0, 0, 0, 0), PreconditionError);
}

TEST_CASE("transform preserves j under random integral changes") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> shift(-20, 20);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const WeierstrassModel m = oracle::random_model(rng, 1000);
    const CurveInvariants inv = compute_invariants(m);
    if (inv.disc == 0) continue;
    const WeierstrassModel t =
        transform(m, i % 2 ? 1 : -1, shift(rng), shift(rng), shift(rng));
    const CurveInvariants tinv = compute_invariants(t);
    CHECK(tinv.disc == inv.disc);
    CHECK(*tinv.j == *inv.j);
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("local data of the frey curve") {
  const WeierstrassModel e11 = frey_curve(11);
  const LocalReduction at3 = local_data(e11, 3);
  CHECK(is_multiplicative(at3.kind));
  CHECK(at3.min_disc_valuation == 22);
  CHECK(at3.c4_valuation == 0u);
  // mod 3 the curve is y^2 = x^2 (x - 1): tangents y = +-sqrt(-1) x
  CHECK(at3.kind == ReductionKind::MultiplicativeNonSplit);

  CHECK(local_data(e11, 5).kind == ReductionKind::Good);
  CHECK(local_data(e11, 11).kind == ReductionKind::Good);

  const LocalReduction at2 = local_data(e11, 2);
  CHECK(at2.kind == ReductionKind::UnclassifiedAt2);
  CHECK(at2.min_disc_valuation == 8);
}

TEST_CASE("local data of the calegari curve") {
  const LocalReduction at2 = local_data(calegari_curve(), 2);
  CHECK(is_multiplicative(at2.kind));
  CHECK(at2.min_disc_valuation == 7);
  CHECK(at2.c4_valuation == 0u);
  CHECK(local_data(calegari_curve(), 5).min_disc_valuation == 1);
  CHECK(local_data(calegari_curve(), 11).min_disc_valuation == 3);
  CHECK(local_data(calegari_curve(), 7).kind == ReductionKind::Good);
  CHECK_THROWS_AS(local_data({0, 0, 0, 0, 0}, 3), PreconditionError);
  CHECK_THROWS_AS(local_data(calegari_curve(), 4), PreconditionError);
}

TEST_CASE("additive reduction is detected at odd primes") {
  // y^2 = x^3 + 3 has a cusp mod 3 and v_3(disc) = 5
  const LocalReduction r = local_data({0, 0, 0, 0, 3}, 3);
  CHECK(r.kind == ReductionKind::Additive);
  CHECK(r.min_disc_valuation == 5);
  CHECK_FALSE(r.c4_valuation.has_value());  // c4 = 0
  // y^2 = x^3 - 25x + 25: v_5(c4) = 2, v_5(disc) = 4
  CHECK(local_data({0, 0, 0, -25, 25}, 5).kind == ReductionKind::Additive);
}

TEST_CASE("minimalization recovers the minimal discriminant valuation") {
  std::mt19937_64 rng(31337);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const WeierstrassModel m = oracle::random_model(rng, 200);
    if (compute_invariants(m).disc == 0) continue;
    for (long p : {2L, 3L, 5L, 7L}) {
      const auto up = static_cast<std::uint64_t>(p);
      const LocalReduction base = local_data(m, up);
      const LocalReduction once = local_data(scale_up(m, p), up);
      const LocalReduction twice = local_data(scale_up(scale_up(m, p), p), up);
      CHECK(once.min_disc_valuation == base.min_disc_valuation);
      CHECK(twice.min_disc_valuation == base.min_disc_valuation);
      CHECK(once.kind == base.kind);
      CHECK(*compute_invariants(scale_up(m, p)).j == *compute_invariants(m).j);
    }
    ++checked;
  }
  CHECK(checked > 350);
}

TEST_CASE("local reduction invariants and split flag against point counts") {
  // Singular reduction with a node has p (split) or p + 2 (nonsplit) points.
  std::mt19937_64 rng(4242);
  int multiplicative = 0;
  for (int i = 0; i < 4000; ++i) {
    const WeierstrassModel m = oracle::random_model(rng, 60);
    const CurveInvariants inv = compute_invariants(m);
    if (inv.disc == 0) continue;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      const auto up = static_cast<std::uint64_t>(p);
      const LocalReduction r = local_data(m, up);
      CHECK((r.kind == ReductionKind::Good) == (r.min_disc_valuation == 0));
      if (r.kind == ReductionKind::UnclassifiedAt2) CHECK(p == 2);
      if (!is_multiplicative(r.kind)) continue;
      CHECK(r.c4_valuation == 0u);
      CHECK(r.min_disc_valuation > 0);
      if (inv.c4 % p == 0) continue;  // count only on an already minimal model
      const std::uint64_t n = oracle::projective_count(p, m);
      CHECK(n == (r.kind == ReductionKind::MultiplicativeSplit ? up : up + 2));
      ++multiplicative;
    }
  }
  CHECK(multiplicative > 500);
}

TEST_CASE("semistability of the frey family") {
  for (std::uint64_t ell : primes_in_range(11, 499)) {
    const WeierstrassModel e = frey_curve(ell);
    CHECK(local_data(e, 3).min_disc_valuation == 2 * ell);
    CHECK(local_data(e, 5).kind == ReductionKind::Good);
    CHECK(local_data(e, ell).kind == ReductionKind::Good);
  }
}
