#include "padichyp/truncated.hpp"

#include "padichyp/errors.hpp"
#include "padichyp/padic.hpp"

namespace padichyp {

namespace {

struct FactorialRatio {
  std::vector<long> num;  // (c n)! factors in the numerator
  std::vector<long> den;
  long base;
};

FactorialRatio factorial_form(TruncKind::Family f) {
  switch (f) {
    case TruncKind::Family::Eq1: return {{2, 2, 2}, {1, 1, 1, 1, 1, 1}, 64};
    case TruncKind::Family::Eq2: return {{3, 2}, {1, 1, 1, 1, 1}, 108};
    case TruncKind::Family::Eq3: return {{4}, {1, 1, 1, 1}, 256};
    case TruncKind::Family::Eq4: return {{6}, {3, 1, 1, 1}, 1728};
    case TruncKind::Family::Generic: break;
  }
  throw DomainError("no factorial form for the generic kind");
}

void check_generic(int d) {
  if (d != 2 && d != 3 && d != 4 && d != 6) {
    throw DomainError("truncated 3F2 supports d in {2,3,4,6}, got " + std::to_string(d));
  }
}

// Integer factors of T_{n+1} / T_n.
void step_factors(const TruncKind& kind, long n, std::vector<long>& num, std::vector<long>& den) {
  num.clear();
  den.clear();
  if (kind.family == TruncKind::Family::Generic) {
    const long d = kind.d;
    num = {2 * n + 1, d * n + 1, d * n + d - 1};
    den = {2 * d * d, n + 1, n + 1, n + 1};
    return;
  }
  const FactorialRatio form = factorial_form(kind.family);
  for (long c : form.num) {
    for (long j = 1; j <= c; ++j) num.push_back(c * n + j);
  }
  for (long c : form.den) {
    for (long j = 1; j <= c; ++j) den.push_back(c * n + j);
  }
  den.push_back(form.base);
}

// T_n = unit * p^valuation, unit a p-adic unit known mod p^2.
class TermState {
 public:
  explicit TermState(long p) : p_(p), modulus_(p * p) {}

  void multiply(long k) { unit_ = mul_mod(unit_, strip(k, +1), modulus_); }
  void divide(long k) { unit_ = mul_mod(unit_, inv_mod(strip(k, -1), modulus_), modulus_); }

  int valuation() const { return valuation_; }
  long residue() const {
    if (valuation_ < 0) throw DomainError("truncated-sum term is not p-integral");
    if (valuation_ >= 2) return 0;
    return mul_mod(unit_, valuation_ == 1 ? p_ : 1, modulus_);
  }

 private:
  long strip(long k, int direction) {
    while (k % p_ == 0) {
      k /= p_;
      valuation_ += direction;
    }
    return mod_p(k, modulus_);
  }

  long p_;
  long modulus_;
  long unit_ = 1;
  int valuation_ = 0;
};

BigInt centered_p2(long r, long p) { return centered_residue(BigInt(r), BigInt(p * p)); }

}  // namespace

TruncKind TruncKind::eq(int which) {
  switch (which) {
    case 1: return {Family::Eq1, 0};
    case 2: return {Family::Eq2, 0};
    case 3: return {Family::Eq3, 0};
    case 4: return {Family::Eq4, 0};
    default: throw DomainError("truncated sums are eq1..eq4");
  }
}

TruncKind TruncKind::generic(int d) {
  check_generic(d);
  return {Family::Generic, d};
}

TruncKind TruncKind::parse(std::string_view name) {
  if (name == "eq1") return eq(1);
  if (name == "eq2") return eq(2);
  if (name == "eq3") return eq(3);
  if (name == "eq4") return eq(4);
  if (name.starts_with("generic") && name.size() == 8) return generic(name[7] - '0');
  throw std::invalid_argument("unknown truncated-sum kind '" + std::string(name) + "'");
}

std::string TruncKind::name() const {
  switch (family) {
    case Family::Eq1: return "eq1";
    case Family::Eq2: return "eq2";
    case Family::Eq3: return "eq3";
    case Family::Eq4: return "eq4";
    case Family::Generic: return "generic" + std::to_string(d);
  }
  return "?";
}

BigInt trunc_partial(const TruncKind& kind, long p, long upto) {
  if (p <= 3 || !is_prime(p)) throw DomainError("truncated sums need a prime p > 3");
  if (kind.family == TruncKind::Family::Generic) check_generic(kind.d);
  if (upto < 0) throw DomainError("partial sum needs upto >= 0");
  const long modulus = p * p;
  TermState term(p);
  long sum = term.residue();
  std::vector<long> num, den;
  for (long n = 0; n < upto; ++n) {
    step_factors(kind, n, num, den);
    for (long k : num) term.multiply(k);
    for (long k : den) term.divide(k);
    sum = mod_p(sum + term.residue(), modulus);
  }
  return centered_p2(sum, p);
}

TruncSum trunc_sum(const TruncKind& kind, long p) { return {kind, p, trunc_partial(kind, p, p - 1)}; }

BigInt trunc_3f2_rising(int d, long p) { return trunc_partial(TruncKind::generic(d), p, p - 1); }

Rational trunc_term(const TruncKind& kind, long n) {
  if (n < 0) throw DomainError("term index must be non-negative");
  if (kind.family == TruncKind::Family::Generic) {
    check_generic(kind.d);
    Rational t(1);
    const Rational a(BigInt(1), BigInt(2));
    const Rational b(BigInt(1), BigInt(kind.d));
    const Rational c(BigInt(kind.d - 1), BigInt(kind.d));
    for (long k = 0; k < n; ++k) {
      t *= (a + Rational(k)) * (b + Rational(k)) * (c + Rational(k));
      t /= Rational(k + 1) * Rational(k + 1) * Rational(k + 1);
    }
    return t;
  }
  const FactorialRatio form = factorial_form(kind.family);
  auto fact = [](long m) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
  };
  BigInt num = 1, den = 1;
  for (long c : form.num) num *= fact(c * n);
  for (long c : form.den) den *= fact(c * n);
  BigInt base;
  mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(form.base), static_cast<unsigned long>(n));
  return Rational(num, den * base);
}

BigInt trunc_term_residue(const TruncKind& kind, long p, long n) {
  const PadicNum t = embed_rational(trunc_term(kind, n), p, 2);
  return centered_residue(t.residue(2), BigInt(p * p));
}

int gamma_sign(long p) { return p % 12 == 5 ? -1 : 1; }

}  // namespace padichyp
