#include "padichyp/gfunc.hpp"

#include <algorithm>

#include "padichyp/errors.hpp"

namespace padichyp {

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inverse(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("non-invertible gamma value");
  }
  return r;
}

void check_params(const GParams& params, long p) {
  if (params.upper.empty()) throw DomainError("nGn needs at least one parameter pair");
  if (params.upper.size() != params.lower.size()) {
    throw DomainError("nGn needs as many lower as upper parameters");
  }
  auto check = [p](const Rational& r) {
    if (mod_p(r.den(), p) == 0) {
      throw DomainError("parameter " + r.str() + " is not in Z_" + std::to_string(p));
    }
  };
  std::for_each(params.upper.begin(), params.upper.end(), check);
  std::for_each(params.lower.begin(), params.lower.end(), check);
}

}  // namespace

GParams::GParams(std::vector<Rational> up, std::vector<Rational> low)
    : upper(std::move(up)), lower(std::move(low)) {
  if (upper.size() != lower.size()) {
    throw DomainError("nGn needs as many lower as upper parameters");
  }
}

std::vector<Rational> GParams::parse_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(Rational::parse(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

GFactorCache::GFactorCache(const GParams& params, long p, int N)
    : p_(p), N_(N), working_(g_working_precision(params.arity(), N)) {
  check_params(params, p);
  build(params, GammaTable(p, working_));
}

GFactorCache::GFactorCache(const GParams& params, const GammaTable& gamma, int N)
    : p_(gamma.prime()), N_(N), working_(g_working_precision(params.arity(), N)) {
  check_params(params, p_);
  if (gamma.precision() < working_) {
    throw PrecisionError("gamma table precision " + std::to_string(gamma.precision()) +
                         " below working precision " + std::to_string(working_));
  }
  build(params, gamma);
}

void GFactorCache::build(const GParams& params, const GammaTable& gamma) {
  const long p = p_;
  const auto n = static_cast<long>(params.arity());
  modulus_ = pow_p(p, working_);
  neg_inv_p_minus_1_ = mod_pos(-inverse(BigInt(p - 1), modulus_), modulus_);
  chars_ = std::make_shared<const TeichmullerTable>(p, working_);

  auto gamma_mod = [&](const Rational& x) { return mod_pos(gamma.residue(x), modulus_); };

  std::vector<Rational> ups, lows;
  BigInt base_inv = 1;
  for (const auto& a : params.upper) ups.push_back(frac_part(a));
  for (const auto& b : params.lower) lows.push_back(frac_part(-b));
  for (const auto& x : ups) base_inv = mod_pos(base_inv * inverse(gamma_mod(x), modulus_), modulus_);
  for (const auto& x : lows) base_inv = mod_pos(base_inv * inverse(gamma_mod(x), modulus_), modulus_);

  std::vector<BigInt> units;
  std::vector<int> exponents;
  units.reserve(static_cast<std::size_t>(p - 1));
  exponents.reserve(static_cast<std::size_t>(p - 1));
  for (long a = 0; a <= p - 2; ++a) {
    const Rational shift(BigInt(a), BigInt(p - 1));
    long e = 0;
    BigInt u = base_inv;
    for (const auto& x : ups) {
      const FracFloor ff = frac_floor(x - shift);
      e -= ff.floor.get_si();
      u = mod_pos(u * gamma_mod(ff.frac), modulus_);
    }
    for (const auto& y : lows) {
      const FracFloor ff = frac_floor(y + shift);
      e -= ff.floor.get_si();
      u = mod_pos(u * gamma_mod(ff.frac), modulus_);
    }
    // (-1)^(an) and the sign part of (-p)^e.
    if (((a * n) + e) % 2 != 0) u = mod_pos(-u, modulus_);
    units.push_back(std::move(u));
    exponents.push_back(static_cast<int>(e));
  }
  min_exponent_ = *std::min_element(exponents.begin(), exponents.end());
  scaled_.resize(units.size());
  for (std::size_t a = 0; a < units.size(); ++a) {
    scaled_[a] = mod_pos(units[a] * pow_p(p, exponents[a] - min_exponent_), modulus_);
  }
}

PadicNum GFactorCache::finish(const BigInt& sum) const {
  PadicNum value =
      PadicNum::from_residue(mod_pos(sum * neg_inv_p_minus_1_, modulus_), p_, working_).shifted(min_exponent_);
  if (value.absolute_precision() < N_) {
    throw PrecisionError("nGn value known only mod p^" + std::to_string(value.absolute_precision()));
  }
  return value;
}

PadicNum GFactorCache::evaluate(long t) const {
  const long tr = mod_p(t, p_);
  if (tr == 0) throw DomainError("nGn is not evaluated at t = 0");
  const long lt = chars_->log(tr);
  BigInt sum = 0;
  for (std::size_t a = 0; a < scaled_.size(); ++a) {
    sum += scaled_[a] * chars_->root_power(-static_cast<long>(a) * lt % (p_ - 1));
  }
  return finish(sum);
}

std::vector<PadicNum> GFactorCache::sweep() const {
  std::vector<PadicNum> out(static_cast<std::size_t>(p_), PadicNum::exact_zero(p_));
  for (long t = 1; t < p_; ++t) out[static_cast<std::size_t>(t)] = evaluate(t);
  return out;
}

PadicNum eval_G(const GParams& params, long t, long p, int N) {
  if (mod_p(t, p) == 0) throw DomainError("nGn is not evaluated at t = 0");
  return GFactorCache(params, p, N).evaluate(t);
}

PadicNum eval_G(const GParams& params, const Rational& t, long p, int N) {
  return eval_G(params, reduce_mod_p(t, p), p, N);
}

std::map<long, PadicNum> eval_G_sweep(const GParams& params, long p, int N) {
  const GFactorCache cache(params, p, N);
  std::map<long, PadicNum> out;
  const auto values = cache.sweep();
  for (long t = 1; t < p; ++t) out.emplace(t, values[static_cast<std::size_t>(t)]);
  return out;
}

}  // namespace padichyp
