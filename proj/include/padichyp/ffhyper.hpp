#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "padichyp/gamma.hpp"
#include "padichyp/padic.hpp"

namespace padichyp {

/// The character omega^j on F_p, with j reduced mod p-1.
class CharIdx {
 public:
  CharIdx(long j, long p) : order_(p - 1), j_(mod_p(j, p - 1)) {}

  static CharIdx trivial(long p) { return {0, p}; }
  static CharIdx quadratic(long p) { return {(p - 1) / 2, p}; }

  long index() const { return j_; }
  long group_order() const { return order_; }
  bool is_trivial() const { return j_ == 0; }
  /// Value at -1, which is (-1)^j since omega(-1) = -1.
  int at_minus_one() const { return j_ % 2 == 0 ? 1 : -1; }

  CharIdx inverse() const { return {-j_, order_ + 1}; }
  friend CharIdx operator*(CharIdx a, CharIdx b) { return {a.j_ + b.j_, a.order_ + 1}; }
  friend bool operator==(CharIdx a, CharIdx b) { return a.j_ == b.j_ && a.order_ == b.order_; }

 private:
  long order_;
  long j_;
};

/// Memoized Jacobi sums J(omega^i, omega^j) = sum_x omega^i(x) omega^j(1-x) mod p^N.
/// Not synchronized: one table per prime per worker.
class JacobiTable {
 public:
  JacobiTable(long p, int N);

  long prime() const { return p_; }
  int precision() const { return N_; }
  const TeichmullerTable& characters() const { return *chars_; }

  /// Residue of J(A, B) mod p^N.
  const BigInt& residue(CharIdx a, CharIdx b);
  PadicNum operator()(CharIdx a, CharIdx b) { return PadicNum::from_residue(residue(a, b), p_, N_); }

 private:
  long p_;
  int N_;
  BigInt modulus_;
  std::shared_ptr<const TeichmullerTable> chars_;
  std::vector<std::optional<BigInt>> memo_;
};

PadicNum jacobi_sum(CharIdx a, CharIdx b, long p, int N);

/// Greene's binomial (A choose B) = B(-1)/p * J(A, B-bar).
PadicNum greene_binom(JacobiTable& table, CharIdx a, CharIdx b);
PadicNum greene_binom(CharIdx a, CharIdx b, long p, int N);

/// Working precision for an (n+1)Fn sum requested to N digits.
inline int greene_working_precision(std::size_t n, int N) { return N + static_cast<int>(n) + 2; }

/// Greene's (n+1)Fn(A_0..A_n; B_1..B_n | x) over F_p. `upper` has n+1 entries,
/// `lower` has n. The table must carry at least greene_working_precision digits.
PadicNum greene_hyper(JacobiTable& table, std::span<const CharIdx> upper,
                      std::span<const CharIdx> lower, long x, int N);
PadicNum greene_hyper(std::span<const CharIdx> upper, std::span<const CharIdx> lower, long x,
                      long p, int N);

/// Period function: delta(x) prod J(A_i, A_i-bar B_i)
///   + p^(n+1)/(p-1) prod A_iB_i(-1) * sum_chi (binomials) chi(x).
PadicNum period_P(JacobiTable& table, std::span<const CharIdx> upper,
                  std::span<const CharIdx> lower, long x, int N);
PadicNum period_P(std::span<const CharIdx> upper, std::span<const CharIdx> lower, long x, long p,
                  int N);

/// Normalized function: period_P divided by prod J(A_i, A_i-bar B_i).
PadicNum fl_F(JacobiTable& table, std::span<const CharIdx> upper, std::span<const CharIdx> lower,
              long x, int N);
PadicNum fl_F(std::span<const CharIdx> upper, std::span<const CharIdx> lower, long x, long p,
              int N);

/// Checks J(omega-bar^a, omega-bar^b) against the gamma-quotient
/// -(-p)^e Gamma_p(<a/(p-1)>) Gamma_p(<b/(p-1)>) / Gamma_p(<(a+b)/(p-1)>) mod p^N,
/// e = <a/(p-1)> + <b/(p-1)> - <(a+b)/(p-1)>. Needs a, b, a+b nonzero mod p-1.
struct JacobiGammaSides {
  PadicNum jacobi;
  PadicNum gamma_quotient;
};
JacobiGammaSides jacobi_gamma_sides(JacobiTable& table, const GammaTable& gamma, long a, long b,
                                    int N);
bool jacobi_gamma_crosscheck(JacobiTable& table, const GammaTable& gamma, long a, long b, int N);
bool jacobi_gamma_crosscheck(long a, long b, long p, int N);

}  // namespace padichyp
