#include "padichyp/gamma.hpp"

#include "padichyp/errors.hpp"

namespace padichyp {

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

GammaTable::GammaTable(long p, int N) : p_(p), N_(N) {
  if (p < 3 || !is_prime(p)) throw DomainError("p-adic gamma needs an odd prime, got " + std::to_string(p));
  if (N < 1) throw DomainError("p-adic gamma needs precision >= 1");
  modulus_ = pow_p(p, N);
  const auto deg = static_cast<std::size_t>(N);

  // R_s(y) = prod_{j<=s} (y + j), truncated to degree < N.
  std::vector<Poly> raw;
  raw.reserve(static_cast<std::size_t>(p));
  Poly cur(deg, BigInt(0));
  cur[0] = 1;
  raw.push_back(cur);
  for (long j = 1; j < p; ++j) {
    Poly next(deg, BigInt(0));
    for (std::size_t i = 0; i < deg; ++i) {
      next[i] = cur[i] * j;
      if (i > 0) next[i] += cur[i - 1];
      next[i] = mod_pos(next[i], modulus_);
    }
    cur = std::move(next);
    raw.push_back(cur);
  }
  // Substitute y = p x so the polynomials are evaluated at the block index.
  partial_.reserve(raw.size());
  for (const auto& f : raw) {
    Poly g(deg);
    for (std::size_t i = 0; i < deg; ++i) g[i] = mod_pos(f[i] * pow_p(p, static_cast<int>(i)), modulus_);
    partial_.push_back(std::move(g));
  }

  const BigInt max_blocks = pow_p(p, N - 1);
  const std::size_t bits = mpz_sizeinbase(max_blocks.get_mpz_t(), 2);
  doubling_.reserve(bits);
  doubling_.push_back(partial_.back());
  for (std::size_t k = 1; k < bits; ++k) {
    const Poly& h = doubling_.back();
    BigInt shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, k - 1);
    // h(x + shift)
    Poly shifted(deg, BigInt(0));
    for (std::size_t j = 0; j < deg; ++j) {
      BigInt binom = 1;  // C(j, i) accumulated downward from i = j
      BigInt spow = 1;   // shift^(j - i)
      for (std::size_t i = j + 1; i-- > 0;) {
        shifted[i] += h[j] * binom * spow;
        // C(j, i-1) = C(j, i) * i / (j - i + 1)
        if (i > 0) {
          binom = binom * static_cast<unsigned long>(i) / static_cast<unsigned long>(j - i + 1);
          spow *= shift;
        }
      }
    }
    Poly prod(deg, BigInt(0));
    for (std::size_t i = 0; i < deg; ++i) {
      shifted[i] = mod_pos(shifted[i], modulus_);
      for (std::size_t j = 0; i + j < deg; ++j) prod[i + j] += h[i] * shifted[j];
    }
    for (auto& c : prod) c = mod_pos(c, modulus_);
    doubling_.push_back(std::move(prod));
  }
}

BigInt GammaTable::eval(const Poly& f, const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = mod_pos(acc * x + f[i], modulus_);
  return acc;
}

BigInt GammaTable::block_product(const BigInt& q) const {
  BigInt result = 1;
  BigInt offset = 0;
  for (std::size_t k = doubling_.size(); k-- > 0;) {
    if (mpz_tstbit(q.get_mpz_t(), k) == 0) continue;
    result = mod_pos(result * eval(doubling_[k], offset), modulus_);
    BigInt step;
    mpz_ui_pow_ui(step.get_mpz_t(), 2, k);
    offset += step;
  }
  return result;
}

BigInt GammaTable::at_integer(const BigInt& r) const {
  if (r < 0 || r >= modulus_) throw DomainError("gamma argument outside [0, p^N)");
  if (r == 0) return 1;
  const BigInt m = r - 1;
  BigInt q, s;
  mpz_fdiv_qr_ui(q.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p_));
  BigInt prod = mod_pos(block_product(q) * eval(partial_[s.get_ui()], q), modulus_);
  if (mpz_odd_p(r.get_mpz_t()) != 0) prod = mod_pos(-prod, modulus_);
  return prod;
}

BigInt GammaTable::representative(const Rational& x) const {
  BigInt den = x.den();
  if (mod_p(den, p_) == 0) {
    throw DomainError("gamma_p argument " + x.str() + " is not in Z_" + std::to_string(p_));
  }
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  return mod_pos(x.num() * inv, modulus_);
}

PadicNum GammaTable::operator()(const Rational& x) const {
  return PadicNum::from_residue(residue(x), p_, N_);
}

PadicNum gamma_p(const Rational& x, long p, int N) { return GammaTable(p, N)(x); }

std::vector<PadicNum> gamma_seq(const Rational& c, const GammaTable& table) {
  const long p = table.prime();
  std::vector<PadicNum> out;
  out.reserve(static_cast<std::size_t>(p - 1));
  for (long a = 0; a <= p - 2; ++a) {
    out.push_back(table(frac_part(c - Rational(BigInt(a), BigInt(p - 1)))));
  }
  return out;
}

std::vector<PadicNum> gamma_seq(const Rational& c, long p, int N) {
  return gamma_seq(c, GammaTable(p, N));
}

}  // namespace padichyp
