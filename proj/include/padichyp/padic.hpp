#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "padichyp/rational.hpp"

namespace padichyp {

/// p^e as a BigInt.
BigInt pow_p(long p, int e);

/// Largest k with p^k | n (n != 0).
int valuation_of(const BigInt& n, long p);

/// A p-adic number u * p^v known to a finite number of digits.
///
/// Nonzero values carry a unit u in [1, p^precision) with p not dividing u, so
/// the value is known modulo p^(v + precision). A zero either is exact or is
/// only known to vanish modulo p^v ("0 + O(p^v)"); its relative precision is 0.
class PadicNum {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  PadicNum() = default;

  static PadicNum exact_zero(long p);
  /// Zero known modulo p^absolute_precision.
  static PadicNum zero(long p, int absolute_precision);
  /// Integer n known modulo p^absolute_precision (n may be divisible by p).
  static PadicNum from_residue(const BigInt& n, long p, int absolute_precision);
  /// u * p^v with u known to `precision` digits; u may contain factors of p.
  static PadicNum from_parts(const BigInt& u, int valuation, long p, int precision);
  /// (-p)^k exactly, represented with `precision` unit digits.
  static PadicNum neg_p_power(int k, long p, int precision);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && valuation_ >= kExact; }
  /// For a zero this is the absolute precision to which it is known.
  int valuation() const { return valuation_; }
  int precision() const { return zero_ ? 0 : precision_; }
  int absolute_precision() const { return zero_ ? valuation_ : valuation_ + precision_; }
  const BigInt& unit() const { return unit_; }

  PadicNum operator-() const;
  friend PadicNum operator+(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }
  friend PadicNum operator*(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator/(const PadicNum& a, const PadicNum& b);
  PadicNum& operator+=(const PadicNum& o) { return *this = *this + o; }
  PadicNum& operator*=(const PadicNum& o) { return *this = *this * o; }

  /// Multiplies by an integer known exactly (any sign, possibly divisible by p).
  PadicNum scaled(const BigInt& k) const;
  /// Multiplies by p^k (shifts the valuation).
  PadicNum shifted(int k) const;
  /// Forgets digits beyond p^absolute_precision.
  PadicNum truncated(int absolute_precision) const;

  /// Residue of the value mod p^N; requires valuation >= 0 and absolute_precision >= N.
  BigInt residue(int N) const;

  std::string str() const;

 private:
  PadicNum(long p, BigInt unit, int valuation, int precision, bool zero)
      : p_(p), unit_(std::move(unit)), valuation_(valuation), precision_(precision), zero_(zero) {}

  long p_ = 0;
  BigInt unit_ = 0;
  int valuation_ = kExact;
  int precision_ = 0;
  bool zero_ = true;
};

std::ostream& operator<<(std::ostream& os, const PadicNum& x);

/// True iff a - b vanishes mod p^N; throws PrecisionError if the difference
/// is not known to p^N.
bool congruent(const PadicNum& a, const PadicNum& b, int N);

/// r as u * p^v with u known mod p^N. r = 0 gives the exact zero.
PadicNum embed_rational(const Rational& r, long p, int N);

/// Teichmuller lift: the (p-1)-th root of unity congruent to a mod p, as a residue mod p^N.
BigInt teichmuller_residue(const BigInt& a, long p, int N);
PadicNum teichmuller(const BigInt& a, long p, int N);

/// omega-bar^a(t) = omega(t)^(-a); exact zero when p | t (chi(0) = 0 for every character).
PadicNum char_value(long a, const BigInt& t, long p, int N);

/// Representative in (-p^N/2, p^N/2].
BigInt centered_lift(const PadicNum& x, long p, int N);
BigInt centered_residue(const BigInt& r, const BigInt& modulus);

/// Quadratic character of a mod p, with phi(0) = 0.
int legendre(const BigInt& a, long p);
inline int legendre(long a, long p) { return legendre(BigInt(a), p); }

/// a mod p in [0, p).
inline long mod_p(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}
long mod_p(const BigInt& a, long p);
long mul_mod(long a, long b, long p);
long pow_mod(long base, long e, long p);
long inv_mod(long a, long p);

/// Rational reduced into F_p; throws DomainError if p divides the denominator.
long reduce_mod_p(const Rational& r, long p);

bool is_prime(long n);
std::vector<long> primes_in(long lo, long hi);
long primitive_root(long p);

/// Quadratic character tabulated on F_p.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(long p);
  long prime() const { return p_; }
  int operator()(long a) const { return table_[static_cast<std::size_t>(mod_p(a, p_))]; }

 private:
  long p_;
  std::vector<std::int8_t> table_;
};

/// Teichmuller character powers on F_p^x modulo p^N, via discrete logarithms to
/// a primitive root g: omega^j(x) = omega(g)^(j * log_g x).
class TeichmullerTable {
 public:
  TeichmullerTable(long p, int N);

  long prime() const { return p_; }
  int precision() const { return N_; }
  const BigInt& modulus() const { return modulus_; }
  long generator() const { return g_; }

  /// Discrete log of x in F_p^x.
  long log(long x) const { return log_[static_cast<std::size_t>(mod_p(x, p_))]; }
  /// omega(g)^k for any integer k.
  const BigInt& root_power(long k) const {
    return powers_[static_cast<std::size_t>(mod_p(k, p_ - 1))];
  }
  /// omega^j(x) as a residue mod p^N; 0 when p | x.
  BigInt omega(long j, long x) const;

 private:
  long p_;
  int N_;
  long g_;
  BigInt modulus_;
  std::vector<long> log_;
  std::vector<BigInt> powers_;
};

}  // namespace padichyp
