#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padichyp/rational.hpp"

namespace padichyp {

/// Integer power series sum_{n=0}^{limit} c_n q^n; nothing above q^limit is kept.
class QSeries {
 public:
  explicit QSeries(long limit);
  QSeries(std::vector<BigInt> coeffs, long limit);

  static QSeries one(long limit);

  long limit() const { return limit_; }
  const BigInt& operator[](long n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  BigInt& operator[](long n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  long limit_;
  std::vector<BigInt> coeffs_;
};

/// prod_{n>=1} (1 - q^(m n))^e up to q^limit. Negative e is allowed.
QSeries eta_factor(long scale, int exponent, long limit);

enum class Newform {
  A,  // eta^6(4z)
  B,  // eta^3(6z) eta^3(2z)
  C,  // eta^2(8z) eta(4z) eta(2z) eta^2(z)
};

/// Coefficients indexed 0..limit (index 0 is zero).
std::vector<BigInt> newform_coeffs(Newform form, long limit);

/// p = x^2 + M y^2 with x, y > 0 (x odd when M = 1), or nothing.
std::optional<std::pair<long, long>> cornacchia(long M, long p);

/// 0 if (-M/p) = -1, else 4a^2 - 2p where p = a^2 + M b^2.
long phi_M(long M, long p);

}  // namespace padichyp
