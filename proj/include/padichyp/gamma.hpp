#pragma once

#include <vector>

#include "padichyp/padic.hpp"
#include "padichyp/rational.hpp"

namespace padichyp {

/// Morita's p-adic gamma function modulo p^N.
///
/// For an integer 0 <= r < p^N, Gamma_p(r) = (-1)^r prod_{0<j<r, p!|j} j. The
/// product splits into q = floor((r-1)/p) complete blocks and a partial block.
/// Block k contributes P(kp) where P(y) = prod_{j=1}^{p-1} (y + j). Writing
/// G(x) = P(px) mod p^N, the coefficient of x^i is divisible by p^i, so G has
/// effective degree < N. The table keeps H_{2^k}(x) = prod_{j<2^k} G(x + j)
/// (same degree bound) and the partial-block polynomials R_s(y) =
/// prod_{j=1}^{s} (y + j), so a query costs O(N log r) multiplications.
class GammaTable {
 public:
  GammaTable(long p, int N);

  long prime() const { return p_; }
  int precision() const { return N_; }
  const BigInt& modulus() const { return modulus_; }

  /// Gamma_p(r) mod p^N for an integer 0 <= r < p^N.
  BigInt at_integer(const BigInt& r) const;
  /// Integer representative of x in [0, p^N); throws DomainError if p | den(x).
  BigInt representative(const Rational& x) const;
  /// Gamma_p(x) as a unit known mod p^N.
  PadicNum operator()(const Rational& x) const;
  BigInt residue(const Rational& x) const { return at_integer(representative(x)); }

 private:
  using Poly = std::vector<BigInt>;  // coefficient i already carries its factor p^i

  BigInt eval(const Poly& f, const BigInt& x) const;
  BigInt block_product(const BigInt& q) const;

  long p_;
  int N_;
  BigInt modulus_;
  std::vector<Poly> doubling_;  // H_{2^k}
  std::vector<Poly> partial_;   // R_s, s = 0..p-1
};

PadicNum gamma_p(const Rational& x, long p, int N);

/// Entry a (0 <= a <= p-2) is Gamma_p(<c - a/(p-1)>).
std::vector<PadicNum> gamma_seq(const Rational& c, const GammaTable& table);
std::vector<PadicNum> gamma_seq(const Rational& c, long p, int N);

}  // namespace padichyp
