#pragma once

#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include "padichyp/gamma.hpp"
#include "padichyp/padic.hpp"
#include "padichyp/rational.hpp"

namespace padichyp {

/// Upper parameters a_1..a_n and lower parameters b_1..b_n of nGn[...|t]_p.
struct GParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;

  GParams() = default;
  GParams(std::vector<Rational> up, std::vector<Rational> low);

  std::size_t arity() const { return upper.size(); }
  /// Parses comma-separated rationals, e.g. "1/2,1/3,2/3".
  static std::vector<Rational> parse_list(std::string_view text);
};

/// The t-independent part of nGn over one prime.
///
/// Entry a holds (-1)^(an) prod_k (-p)^(e_k(a)) Gamma_p(<a_k - a/(p-1)>)/Gamma_p(<a_k>)
///   * Gamma_p(<-b_k + a/(p-1)>)/Gamma_p(<-b_k>),
/// with e_k(a) = -floor(<a_k> - a/(p-1)) - floor(<-b_k> + a/(p-1)). Evaluating at t
/// is then a single pass of sum_a entry_a * omega-bar^a(t).
///
/// Units are carried to N + n + 1 digits: each e_k lies in {-1, 0, 1}, so the sum
/// is known to at least N + 1 absolute digits.
class GFactorCache {
 public:
  GFactorCache(const GParams& params, long p, int N);
  GFactorCache(const GParams& params, const GammaTable& gamma, int N);

  long prime() const { return p_; }
  int precision() const { return N_; }
  int working_precision() const { return working_; }
  /// Smallest (-p)-exponent over all a; a lower bound for the result's valuation.
  int min_exponent() const { return min_exponent_; }

  PadicNum evaluate(long t) const;
  /// Values at t = 1..p-1 (index t; slot 0 is unused and holds an exact zero).
  std::vector<PadicNum> sweep() const;

 private:
  void build(const GParams& params, const GammaTable& gamma);
  PadicNum finish(const BigInt& sum) const;

  long p_;
  int N_;
  int working_;
  int min_exponent_ = 0;
  BigInt modulus_;
  BigInt neg_inv_p_minus_1_;
  std::vector<BigInt> scaled_;  // entry_a / p^min_exponent, mod p^working
  std::shared_ptr<const TeichmullerTable> chars_;
};

/// Working precision used for an arity-n evaluation requested to N digits.
inline int g_working_precision(std::size_t n, int N) { return N + static_cast<int>(n) + 1; }

PadicNum eval_G(const GParams& params, long t, long p, int N);
PadicNum eval_G(const GParams& params, const Rational& t, long p, int N);
std::map<long, PadicNum> eval_G_sweep(const GParams& params, long p, int N);

}  // namespace padichyp
