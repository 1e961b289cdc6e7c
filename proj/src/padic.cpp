#include "padichyp/padic.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include "padichyp/errors.hpp"

namespace padichyp {

BigInt pow_p(long p, int e) {
  if (e < 0) throw DomainError("negative exponent in pow_p");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

int valuation_of(const BigInt& n, long p) {
  if (n == 0) throw DomainError("valuation of zero");
  BigInt m = n;
  int k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("element not invertible modulo " + m.get_str());
  }
  return r;
}

// Strips p from n in place and returns the stripped count.
int strip_p(BigInt& n, long p) {
  int k = 0;
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

int sat_add(int a, int b) {
  if (a >= PadicNum::kExact || b >= PadicNum::kExact) return PadicNum::kExact;
  return a + b;
}

}  // namespace

PadicNum PadicNum::exact_zero(long p) { return PadicNum(p, BigInt(0), kExact, 0, true); }

PadicNum PadicNum::zero(long p, int absolute_precision) {
  return PadicNum(p, BigInt(0), std::min(absolute_precision, kExact), 0, true);
}

PadicNum PadicNum::from_parts(const BigInt& u, int valuation, long p, int precision) {
  if (precision <= 0) return zero(p, valuation + precision);
  const BigInt modulus = pow_p(p, precision);
  BigInt n = mod_pos(u, modulus);
  if (n == 0) return zero(p, valuation + precision);
  const int k = strip_p(n, p);
  const int rel = precision - k;
  return PadicNum(p, mod_pos(n, pow_p(p, rel)), valuation + k, rel, false);
}

PadicNum PadicNum::from_residue(const BigInt& n, long p, int absolute_precision) {
  return from_parts(n, 0, p, absolute_precision);
}

PadicNum PadicNum::neg_p_power(int k, long p, int precision) {
  const BigInt modulus = pow_p(p, precision);
  BigInt u = (k % 2 == 0) ? BigInt(1) : BigInt(modulus - 1);
  return PadicNum(p, mod_pos(u, modulus), k, precision, false);
}

PadicNum PadicNum::operator-() const {
  if (zero_) return *this;
  const BigInt modulus = pow_p(p_, precision_);
  return PadicNum(p_, mod_pos(-unit_, modulus), valuation_, precision_, false);
}

PadicNum operator+(const PadicNum& a, const PadicNum& b) {
  if (a.p_ != b.p_) throw DomainError("adding p-adic numbers for different primes");
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const long p = a.p_;
  const int abs = std::min(a.absolute_precision(), b.absolute_precision());
  const int v = std::min(a.valuation_, b.valuation_);
  if (abs <= v) return PadicNum::zero(p, abs);
  BigInt x = 0;
  if (!a.zero_) x += a.unit_ * pow_p(p, a.valuation_ - v);
  if (!b.zero_) x += b.unit_ * pow_p(p, b.valuation_ - v);
  return PadicNum::from_parts(x, v, p, abs - v);
}

PadicNum operator*(const PadicNum& a, const PadicNum& b) {
  if (a.p_ != b.p_) throw DomainError("multiplying p-adic numbers for different primes");
  const long p = a.p_;
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicNum::exact_zero(p);
  if (a.zero_ || b.zero_) return PadicNum::zero(p, sat_add(a.valuation_, b.valuation_));
  const int prec = std::min(a.precision_, b.precision_);
  const BigInt modulus = pow_p(p, prec);
  return PadicNum(p, mod_pos(a.unit_ * b.unit_, modulus), a.valuation_ + b.valuation_, prec, false);
}

PadicNum operator/(const PadicNum& a, const PadicNum& b) {
  if (a.p_ != b.p_) throw DomainError("dividing p-adic numbers for different primes");
  const long p = a.p_;
  if (b.zero_) throw DomainError("division by a p-adic zero");
  if (a.is_exact_zero()) return a;
  if (a.zero_) return PadicNum::zero(p, a.valuation_ - b.valuation_);
  const int prec = std::min(a.precision_, b.precision_);
  const BigInt modulus = pow_p(p, prec);
  BigInt q = mod_pos(a.unit_ * inverse_mod(b.unit_, modulus), modulus);
  return PadicNum(p, q, a.valuation_ - b.valuation_, prec, false);
}

PadicNum PadicNum::scaled(const BigInt& k) const {
  if (k == 0) return exact_zero(p_);
  BigInt m = k;
  const int j = strip_p(m, p_);
  if (zero_) return zero(p_, sat_add(valuation_, j));
  const BigInt modulus = pow_p(p_, precision_);
  return PadicNum(p_, mod_pos(unit_ * m, modulus), valuation_ + j, precision_, false);
}

PadicNum PadicNum::shifted(int k) const {
  if (zero_) return zero(p_, is_exact_zero() ? kExact : valuation_ + k);
  return PadicNum(p_, unit_, valuation_ + k, precision_, false);
}

PadicNum PadicNum::truncated(int absolute_precision) const {
  if (absolute_precision >= this->absolute_precision()) return *this;
  if (zero_ || absolute_precision <= valuation_) return zero(p_, absolute_precision);
  return from_parts(unit_, valuation_, p_, absolute_precision - valuation_);
}

BigInt PadicNum::residue(int N) const {
  if (!zero_ && valuation_ < 0) {
    throw PrecisionError("residue of a p-adic number with negative valuation");
  }
  if (absolute_precision() < N) {
    throw PrecisionError("p-adic number known only mod p^" + std::to_string(absolute_precision()) +
                         ", requested p^" + std::to_string(N));
  }
  if (zero_ || valuation_ >= N) return 0;
  const BigInt modulus = pow_p(p_, N);
  return mod_pos(unit_ * pow_p(p_, valuation_), modulus);
}

std::string PadicNum::str() const {
  std::ostringstream os;
  if (is_exact_zero()) {
    os << "0";
  } else if (zero_) {
    os << "O(" << p_ << "^" << valuation_ << ")";
  } else {
    os << unit_ << "*" << p_ << "^" << valuation_ << " + O(" << p_ << "^" << absolute_precision()
       << ")";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicNum& x) { return os << x.str(); }

bool congruent(const PadicNum& a, const PadicNum& b, int N) {
  const PadicNum d = a - b;
  if (d.absolute_precision() < N) {
    throw PrecisionError("difference known only mod p^" + std::to_string(d.absolute_precision()) +
                         ", requested p^" + std::to_string(N));
  }
  return d.is_zero() || d.valuation() >= N;
}

PadicNum embed_rational(const Rational& r, long p, int N) {
  if (r.is_zero()) return PadicNum::exact_zero(p);
  BigInt num = r.num();
  BigInt den = r.den();
  const int v = strip_p(num, p) - strip_p(den, p);
  const BigInt modulus = pow_p(p, N);
  return PadicNum::from_parts(mod_pos(num * inverse_mod(den, modulus), modulus), v, p, N);
}

BigInt teichmuller_residue(const BigInt& a, long p, int N) {
  if (mod_p(a, p) == 0) throw DomainError("Teichmuller lift of a multiple of p");
  const BigInt modulus = pow_p(p, N);
  const BigInt e = pow_p(p, N - 1);
  BigInt base = mod_pos(a, modulus);
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

PadicNum teichmuller(const BigInt& a, long p, int N) {
  return PadicNum::from_residue(teichmuller_residue(a, p, N), p, N);
}

PadicNum char_value(long a, const BigInt& t, long p, int N) {
  if (mod_p(t, p) == 0) return PadicNum::exact_zero(p);
  const BigInt modulus = pow_p(p, N);
  const BigInt w = teichmuller_residue(t, p, N);
  const BigInt e = mod_p(-a, p - 1);
  BigInt r;
  mpz_powm(r.get_mpz_t(), w.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
  return PadicNum::from_residue(r, p, N);
}

BigInt centered_residue(const BigInt& r, const BigInt& modulus) {
  BigInt m = mod_pos(r, modulus);
  if (2 * m > modulus) m -= modulus;
  return m;
}

BigInt centered_lift(const PadicNum& x, long p, int N) {
  if (x.prime() != p) throw DomainError("centered lift for a different prime");
  return centered_residue(x.residue(N), pow_p(p, N));
}

int legendre(const BigInt& a, long p) {
  const BigInt pp(p);
  const BigInt r = mod_pos(a, pp);
  return mpz_legendre(r.get_mpz_t(), pp.get_mpz_t());
}

long mod_p(const BigInt& a, long p) {
  return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)));
}

long mul_mod(long a, long b, long p) {
  return static_cast<long>((static_cast<__int128>(mod_p(a, p)) * mod_p(b, p)) % p);
}

long pow_mod(long base, long e, long p) {
  long result = 1 % p;
  long b = mod_p(base, p);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, b, p);
    b = mul_mod(b, b, p);
    e >>= 1;
  }
  return result;
}

long inv_mod(long a, long p) {
  if (mod_p(a, p) == 0) throw DomainError("inverse of zero mod " + std::to_string(p));
  const BigInt r = inverse_mod(BigInt(mod_p(a, p)), BigInt(p));
  return r.get_si();
}

long reduce_mod_p(const Rational& r, long p) {
  const long den = mod_p(r.den(), p);
  if (den == 0) throw DomainError(std::to_string(p) + " divides the denominator of " + r.str());
  return mul_mod(mod_p(r.num(), p), inv_mod(den, p), p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  if (hi < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (long i = 2; i <= hi; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    if (i >= lo) out.push_back(i);
    for (long j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

long primitive_root(long p) {
  if (p == 2) return 1;
  std::vector<long> factors;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](long q) { return pow_mod(g, (p - 1) / q, p) != 1; })) {
      return g;
    }
  }
  throw DomainError("no primitive root mod " + std::to_string(p));
}

QuadraticCharacter::QuadraticCharacter(long p) : p_(p), table_(static_cast<std::size_t>(p), -1) {
  table_[0] = 0;
  for (long x = 1; x < p; ++x) table_[static_cast<std::size_t>(mul_mod(x, x, p))] = 1;
}

TeichmullerTable::TeichmullerTable(long p, int N)
    : p_(p), N_(N), g_(0), modulus_(pow_p(p, N)) {
  if (p < 3 || !is_prime(p)) throw DomainError("Teichmuller table needs an odd prime");
  g_ = primitive_root(p);
  log_.assign(static_cast<std::size_t>(p), -1);
  powers_.reserve(static_cast<std::size_t>(p - 1));
  const BigInt w = teichmuller_residue(BigInt(g_), p, N);
  BigInt cur = 1;
  long x = 1;
  for (long k = 0; k < p - 1; ++k) {
    log_[static_cast<std::size_t>(x)] = k;
    powers_.push_back(cur);
    cur = mod_pos(cur * w, modulus_);
    x = mul_mod(x, g_, p);
  }
}

BigInt TeichmullerTable::omega(long j, long x) const {
  const long xr = mod_p(x, p_);
  if (xr == 0) return 0;
  const long e = mul_mod(mod_p(j, p_ - 1), log(xr), p_ - 1);
  return powers_[static_cast<std::size_t>(e)];
}

}  // namespace padichyp
