#include <gtest/gtest.h>

#include "oracle.hpp"
#include "padichyp/errors.hpp"
#include "padichyp/modforms.hpp"
#include "padichyp/padic.hpp"

using namespace padichyp;

TEST(EtaFactor, PentagonalExpansion) {
  const QSeries e = eta_factor(1, 1, 12);
  std::vector<BigInt> expected(13, 0);
  expected[0] = 1;
  expected[1] = -1;
  expected[2] = -1;
  expected[5] = 1;
  expected[7] = 1;
  expected[12] = -1;
  EXPECT_EQ(e.coefficients(), expected);
}

TEST(EtaFactor, ZeroExponentAndSquares) {
  EXPECT_EQ(eta_factor(3, 0, 20), QSeries::one(20));
  EXPECT_EQ(eta_factor(1, 1, 60) * eta_factor(1, 1, 60), eta_factor(1, 2, 60));
  EXPECT_THROW(eta_factor(1, 1, 0), DomainError);
}

TEST(EtaFactor, MatchesDenseProducts) {
  for (long m : {1L, 2L, 4L, 6L, 8L}) {
    for (int e : {1, 2, 3, 6}) {
      EXPECT_EQ(eta_factor(m, e, 150).coefficients(), oracle::eta_dense(m, e, 150)) << m << " " << e;
    }
  }
}

TEST(EtaFactor, NegativeExponentInverts) {
  const QSeries prod = eta_factor(2, 3, 100) * eta_factor(2, -3, 100);
  EXPECT_EQ(prod, QSeries::one(100));
}

TEST(EtaFactor, PrefixStableUnderLargerLimit) {
  const QSeries small = eta_factor(4, 6, 80);
  const QSeries large = eta_factor(4, 6, 400);
  for (long n = 0; n <= 80; ++n) EXPECT_EQ(small[n], large[n]);
}

TEST(Newforms, Examples) {
  EXPECT_EQ(newform_coeffs(Newform::A, 20)[5], -6);
  EXPECT_EQ(newform_coeffs(Newform::B, 20)[7], 2);
  EXPECT_EQ(newform_coeffs(Newform::C, 20)[3], -2);
  EXPECT_EQ(4 * 1 - 2 * 5, -6);
  EXPECT_EQ(4 * 4 - 2 * 7, 2);
  EXPECT_EQ(4 * 1 - 2 * 3, -2);
  for (Newform f : {Newform::A, Newform::B, Newform::C}) {
    const auto c = newform_coeffs(f, 10);
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[1], 1);
  }
}

TEST(Newforms, MatchDenseEtaProducts) {
  const long L = 300;
  using oracle::eta_dense;
  using oracle::mul;
  const auto a = eta_dense(4, 6, L);
  const auto b = mul(eta_dense(6, 3, L), eta_dense(2, 3, L));
  const auto c = mul(mul(mul(eta_dense(8, 2, L), eta_dense(4, 1, L)), eta_dense(2, 1, L)), eta_dense(1, 2, L));
  const auto A = newform_coeffs(Newform::A, L), B = newform_coeffs(Newform::B, L),
             C = newform_coeffs(Newform::C, L);
  for (long n = 1; n <= L; ++n) {
    EXPECT_EQ(A[n], a[n - 1]) << n;
    EXPECT_EQ(B[n], b[n - 1]) << n;
    EXPECT_EQ(C[n], c[n - 1]) << n;
  }
}

TEST(Newforms, AgreeWithClosedFormAndBound) {
  const long L = 10000;
  const auto A = newform_coeffs(Newform::A, L), B = newform_coeffs(Newform::B, L),
             C = newform_coeffs(Newform::C, L);
  for (long p : primes_in(3, L)) {
    const BigInt bound = 2 * p;
    EXPECT_LE(abs(A[p]), bound);
    EXPECT_LE(abs(B[p]), bound);
    EXPECT_LE(abs(C[p]), bound);
    EXPECT_EQ(C[p], phi_M(2, p)) << p;
    if (p > 3) {
      EXPECT_EQ(A[p], phi_M(4, p)) << p;
      EXPECT_EQ(B[p], phi_M(3, p)) << p;
    }
  }
}

TEST(Cornacchia, Examples) {
  EXPECT_EQ(cornacchia(3, 7), std::make_optional(std::make_pair(2L, 1L)));
  EXPECT_EQ(cornacchia(1, 5), std::make_optional(std::make_pair(1L, 2L)));
  EXPECT_FALSE(cornacchia(2, 5).has_value());
}

TEST(Cornacchia, MatchesExhaustiveSearch) {
  for (long M : {1L, 2L, 3L, 4L, 7L}) {
    for (long p : primes_in(3, 2000)) {
      if (p == M) continue;
      long x = 0, y = 0;
      const bool found = oracle::represent(M, p, x, y);
      const auto rep = cornacchia(M, p);
      ASSERT_EQ(found, rep.has_value()) << M << " " << p;
      if (found) {
        EXPECT_EQ(rep->first * rep->first + M * rep->second * rep->second, p);
        if (M == 1) EXPECT_EQ(rep->first % 2, 1);
        EXPECT_EQ(rep->first, x);
      }
    }
  }
}

TEST(PhiM, Examples) {
  EXPECT_EQ(phi_M(2, 3), -2);
  EXPECT_EQ(phi_M(3, 5), 0);
  EXPECT_EQ(phi_M(4, 5), -6);
}
