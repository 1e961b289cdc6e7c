#include "padichyp/ffhyper.hpp"

#include "padichyp/errors.hpp"

namespace padichyp {

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_precision(const JacobiTable& table, int needed) {
  if (table.precision() < needed) {
    throw PrecisionError("Jacobi table carries " + std::to_string(table.precision()) +
                         " digits, need " + std::to_string(needed));
  }
}

PadicNum jacobi_product(JacobiTable& table, std::span<const CharIdx> upper,
                        std::span<const CharIdx> lower) {
  const long p = table.prime();
  PadicNum prod = PadicNum::from_residue(BigInt(1), p, table.precision());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const CharIdx a = upper[i + 1];
    prod *= table(a, a.inverse() * lower[i]);
  }
  return prod;
}

}  // namespace

JacobiTable::JacobiTable(long p, int N)
    : p_(p),
      N_(N),
      modulus_(pow_p(p, N)),
      chars_(std::make_shared<const TeichmullerTable>(p, N)),
      memo_(static_cast<std::size_t>((p - 1) * (p - 1))) {}

const BigInt& JacobiTable::residue(CharIdx a, CharIdx b) {
  const long m = p_ - 1;
  if (a.group_order() != m || b.group_order() != m) {
    throw DomainError("character index for a different prime");
  }
  auto& slot = memo_[static_cast<std::size_t>(a.index() * m + b.index())];
  if (slot) return *slot;
  BigInt sum = 0;
  const TeichmullerTable& t = *chars_;
  for (long x = 2; x < p_; ++x) {
    sum += t.root_power(a.index() * t.log(x) + b.index() * t.log(1 - x));
  }
  slot = mod_pos(sum, modulus_);
  auto& mirror = memo_[static_cast<std::size_t>(b.index() * m + a.index())];
  if (!mirror) mirror = *slot;
  return *slot;
}

PadicNum jacobi_sum(CharIdx a, CharIdx b, long p, int N) { return JacobiTable(p, N)(a, b); }

PadicNum greene_binom(JacobiTable& table, CharIdx a, CharIdx b) {
  const long p = table.prime();
  BigInt j = table.residue(a, b.inverse());
  if (b.at_minus_one() < 0) j = -j;
  return PadicNum::from_residue(j, p, table.precision()).shifted(-1);
}

PadicNum greene_binom(CharIdx a, CharIdx b, long p, int N) {
  JacobiTable table(p, N + 1);
  return greene_binom(table, a, b);
}

PadicNum greene_hyper(JacobiTable& table, std::span<const CharIdx> upper,
                      std::span<const CharIdx> lower, long x, int N) {
  const std::size_t n = lower.size();
  if (upper.size() != n + 1) throw DomainError("(n+1)Fn needs n+1 upper and n lower characters");
  const long p = table.prime();
  const long xr = mod_p(x, p);
  if (xr == 0) return PadicNum::exact_zero(p);
  const int working = greene_working_precision(n, N);
  require_precision(table, working);
  const BigInt modulus = pow_p(p, working);

  const TeichmullerTable& chars = table.characters();
  BigInt sum = 0;
  for (long k = 0; k < p - 1; ++k) {
    const CharIdx chi(k, p);
    BigInt term = table.residue(upper[0] * chi, chi.inverse());
    int sign = chi.at_minus_one();
    for (std::size_t i = 0; i < n; ++i) {
      const CharIdx bchi = lower[i] * chi;
      term = mod_pos(term * table.residue(upper[i + 1] * chi, bchi.inverse()), modulus);
      sign *= bchi.at_minus_one();
    }
    term *= chars.omega(k, xr);
    if (sign < 0) sum -= term;
    else sum += term;
  }
  // p/(p-1) * p^-(n+1) * sum
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), BigInt(p - 1).get_mpz_t(), modulus.get_mpz_t());
  PadicNum value = PadicNum::from_residue(mod_pos(sum * inv, modulus), p, working)
                       .shifted(-static_cast<int>(n));
  if (value.absolute_precision() < N) {
    throw PrecisionError("Greene sum known only mod p^" + std::to_string(value.absolute_precision()));
  }
  return value;
}

PadicNum greene_hyper(std::span<const CharIdx> upper, std::span<const CharIdx> lower, long x,
                      long p, int N) {
  JacobiTable table(p, greene_working_precision(lower.size(), N));
  return greene_hyper(table, upper, lower, x, N);
}

PadicNum period_P(JacobiTable& table, std::span<const CharIdx> upper,
                  std::span<const CharIdx> lower, long x, int N) {
  const long p = table.prime();
  const PadicNum hyper = greene_hyper(table, upper, lower, x, N);
  int sign = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    sign *= (upper[i + 1] * lower[i]).at_minus_one();
  }
  PadicNum value = hyper.shifted(static_cast<int>(lower.size())).scaled(BigInt(sign));
  if (mod_p(x, p) == 0) value += jacobi_product(table, upper, lower);
  return value;
}

PadicNum period_P(std::span<const CharIdx> upper, std::span<const CharIdx> lower, long x, long p,
                  int N) {
  JacobiTable table(p, greene_working_precision(lower.size(), N));
  return period_P(table, upper, lower, x, N);
}

PadicNum fl_F(JacobiTable& table, std::span<const CharIdx> upper, std::span<const CharIdx> lower,
              long x, int N) {
  if (upper.size() != lower.size() + 1) {
    throw DomainError("(n+1)Fn needs n+1 upper and n lower characters");
  }
  const PadicNum norm = jacobi_product(table, upper, lower);
  if (norm.is_zero()) throw DomainError("normalizing Jacobi product vanishes");
  return period_P(table, upper, lower, x, N) / norm;
}

PadicNum fl_F(std::span<const CharIdx> upper, std::span<const CharIdx> lower, long x, long p,
              int N) {
  JacobiTable table(p, greene_working_precision(lower.size(), N));
  return fl_F(table, upper, lower, x, N);
}

JacobiGammaSides jacobi_gamma_sides(JacobiTable& table, const GammaTable& gamma, long a, long b,
                                    int N) {
  const long p = table.prime();
  const long m = p - 1;
  if (mod_p(a, m) == 0 || mod_p(b, m) == 0 || mod_p(a + b, m) == 0) {
    throw DomainError("Jacobi/gamma check needs a, b, a+b nonzero mod p-1");
  }
  require_precision(table, N);
  if (gamma.precision() < N) throw PrecisionError("gamma table below requested precision");

  const PadicNum lhs = table(CharIdx(-a, p), CharIdx(-b, p));
  const Rational fa = frac_part(Rational(BigInt(a), BigInt(m)));
  const Rational fb = frac_part(Rational(BigInt(b), BigInt(m)));
  const Rational fab = frac_part(Rational(BigInt(a + b), BigInt(m)));
  const int e = static_cast<int>((fa + fb - fab).num().get_si());
  const PadicNum rhs =
      -(PadicNum::neg_p_power(e, p, gamma.precision()) * gamma(fa) * gamma(fb) / gamma(fab));
  return {lhs, rhs};
}

bool jacobi_gamma_crosscheck(JacobiTable& table, const GammaTable& gamma, long a, long b, int N) {
  const auto [lhs, rhs] = jacobi_gamma_sides(table, gamma, a, b, N);
  return congruent(lhs, rhs, N);
}

bool jacobi_gamma_crosscheck(long a, long b, long p, int N) {
  JacobiTable table(p, N);
  const GammaTable gamma(p, N);
  return jacobi_gamma_crosscheck(table, gamma, a, b, N);
}

}  // namespace padichyp
