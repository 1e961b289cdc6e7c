#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "padichyp/curves.hpp"
#include "padichyp/errors.hpp"
#include "padichyp/gfunc.hpp"

using namespace padichyp;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

long trace_of(const WeierstrassCurve& e, long p) { return oracle::trace(e.a1, e.a2, e.a3, e.a4, e.a6, p); }

}  // namespace

TEST(EvenForm, IsogenyFamilyExample) {
  const long p = 7;
  const WeierstrassCurve e(3, 0, 2, 0, 0, p);
  const WeierstrassCurve r = reduce_to_even_form(e, p);
  const long inv4 = inv_mod(4, p), inv2 = inv_mod(2, p);
  EXPECT_EQ(r, WeierstrassCurve(0, mul_mod(9, inv4, p), 0, mul_mod(6, inv2, p), mul_mod(4, inv4, p), p));
  EXPECT_EQ(r, WeierstrassCurve(0, mul_mod(9, inv4, p), 0, 3, 1, p));
  EXPECT_EQ(trace_of(r, p), trace_of(e, p));
}

TEST(EvenForm, FixedPointAndSmallPrimes) {
  const WeierstrassCurve e(0, 2, 0, 3, 4, 11);
  EXPECT_EQ(reduce_to_even_form(e, 11), e);
  EXPECT_THROW(reduce_to_even_form(e, 3), DomainError);
}

TEST(EvenForm, PreservesPointCountsOnRandomCurves) {
  std::mt19937 rng(2024);
  for (long p : {13L, 17L, 29L}) {
    std::uniform_int_distribution<long> c(0, p - 1);
    int checked = 0;
    while (checked < 10) {
      const WeierstrassCurve e(c(rng), c(rng), c(rng), c(rng), c(rng), p);
      if (is_singular(e, p)) continue;
      const WeierstrassCurve r = reduce_to_even_form(e, p);
      EXPECT_EQ(count_points_naive(r, p), count_points_naive(e, p));
      EXPECT_EQ(oracle::count_points(e.a1, e.a2, e.a3, e.a4, e.a6, p), count_points_naive(e, p));
      EXPECT_EQ(ap(e, p), trace_of(e, p));
      ++checked;
    }
  }
}

TEST(Ap, Examples) {
  EXPECT_EQ(ap(WeierstrassCurve(0, 0, 0, 1, 0, 5), 5), 2);
  EXPECT_EQ(oracle::count_points(0, 0, 0, 1, 0, 5), 4);
  EXPECT_THROW(ap(WeierstrassCurve(0, 0, 0, 0, 0, 7), 7), DomainError);
}

TEST(Ap, HalfFamilyAgainstSixthsFunction) {
  const long p = 7, t = 2;
  const long trace = ap(WeierstrassCurve(0, -3, 0, 0, 4 * t, p), p);
  EXPECT_EQ(trace, oracle::trace(0, -3, 0, 0, 4 * t, p));
  const GParams g({q(1, 6), q(5, 6)}, {q(0), q(0)});
  const PadicNum v = eval_G(g, q(1, t), p, 2);
  EXPECT_EQ(trace, legendre(-3L, p) * centered_lift(v, p, 2));
}

TEST(Ap, ThirdsFamilyExample) {
  const long p = 7;
  const long trace = ap(WeierstrassCurve(3, 0, 2, 0, 0, p), p);
  EXPECT_EQ(trace, oracle::trace(3, 0, 2, 0, 0, p));
  const GParams g({q(1, 3), q(2, 3)}, {q(0), q(0)});
  EXPECT_EQ(reduce_mod_p(q(27, 27 * 2), p), reduce_mod_p(q(1, 2), p));
  EXPECT_EQ(trace, centered_lift(eval_G(g, q(1, 2), p, 2), p, 2));
}

TEST(Ap, HasseBound) {
  for (long p : primes_in(5, 101)) {
    const QuadraticCharacter phi(p);
    for (long a = 0; a < p; a += 3) {
      for (long b = 1; b < p; b += 5) {
        const WeierstrassCurve e(0, 0, 0, a, b, p);
        if (is_singular(e, p)) continue;
        const long t = ap(e, phi);
        EXPECT_LE(t * t, 4 * p);
      }
    }
  }
}

TEST(QuadraticTwist, Examples) {
  const long p = 11;
  const WeierstrassCurve e(0, 0, 0, 1, 1, p);
  EXPECT_EQ(quadratic_twist(e, 1, p), e);
  const long base = trace_of(e, p);
  EXPECT_EQ(trace_of(quadratic_twist(e, 4, p), p), base);
  EXPECT_EQ(legendre(2L, p), -1);
  EXPECT_EQ(trace_of(quadratic_twist(e, 2, p), p), -base);
  EXPECT_THROW(quadratic_twist(e, 11, p), DomainError);
}

TEST(QuadraticTwist, LegendreRelationExhaustive) {
  for (long p : {7L, 13L, 19L}) {
    const WeierstrassCurve e(0, 2, 0, 3, 1, p);
    ASSERT_FALSE(is_singular(e, p));
    for (long D = 1; D < p; ++D) {
      EXPECT_EQ(ap(e, p), legendre(D, p) * ap(quadratic_twist(e, D, p), p));
    }
  }
}

TEST(IsogenousPair, Examples) {
  EXPECT_TRUE(verify_prop31(5));
  EXPECT_TRUE(verify_prop31(7));
  EXPECT_TRUE(verify_prop31(13));
  for (long p : {5L, 7L, 13L}) {
    for (long t = 2; t < p; ++t) {
      EXPECT_EQ(oracle::trace(3, 0, t, 0, 0, p), legendre(-3L, p) * oracle::trace(3, 0, 1 - t, 0, 0, p));
    }
  }
}
