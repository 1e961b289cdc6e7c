#include "padichyp/modforms.hpp"

#include <cmath>

#include "padichyp/errors.hpp"
#include "padichyp/padic.hpp"

namespace padichyp {

namespace {

// Nonzero terms (exponent, sign) of prod_{n>=1} (1 - q^(m n)) up to q^limit,
// from Euler's pentagonal number theorem.
std::vector<std::pair<long, int>> pentagonal_terms(long scale, long limit) {
  std::vector<std::pair<long, int>> terms{{0, 1}};
  for (long k = 1;; ++k) {
    const long e1 = scale * (k * (3 * k - 1) / 2);
    const long e2 = scale * (k * (3 * k + 1) / 2);
    if (e1 > limit) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    terms.emplace_back(e1, sign);
    if (e2 <= limit) terms.emplace_back(e2, sign);
  }
  return terms;
}

void multiply_sparse(std::vector<BigInt>& dense, const std::vector<std::pair<long, int>>& sparse) {
  const auto limit = static_cast<long>(dense.size()) - 1;
  for (long n = limit; n >= 0; --n) {
    BigInt acc = 0;
    for (const auto& [e, s] : sparse) {
      if (e > n) break;
      const auto& c = dense[static_cast<std::size_t>(n - e)];
      if (s > 0) acc += c;
      else acc -= c;
    }
    dense[static_cast<std::size_t>(n)] = acc;
  }
}

// dense <- dense / sparse, sparse having constant term 1.
void divide_sparse(std::vector<BigInt>& dense, const std::vector<std::pair<long, int>>& sparse) {
  const auto limit = static_cast<long>(dense.size()) - 1;
  for (long n = 0; n <= limit; ++n) {
    BigInt acc = dense[static_cast<std::size_t>(n)];
    for (std::size_t i = 1; i < sparse.size(); ++i) {
      const auto& [e, s] = sparse[i];
      if (e > n) break;
      const auto& c = dense[static_cast<std::size_t>(n - e)];
      if (s > 0) acc -= c;
      else acc += c;
    }
    dense[static_cast<std::size_t>(n)] = acc;
  }
}

void apply_factor(std::vector<BigInt>& dense, long scale, int exponent) {
  const auto sparse = pentagonal_terms(scale, static_cast<long>(dense.size()) - 1);
  for (int i = 0; i < exponent; ++i) multiply_sparse(dense, sparse);
  for (int i = 0; i > exponent; --i) divide_sparse(dense, sparse);
}

}  // namespace

QSeries::QSeries(long limit) : limit_(limit) {
  if (limit < 0) throw DomainError("q-series limit must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(limit) + 1, BigInt(0));
}

QSeries::QSeries(std::vector<BigInt> coeffs, long limit) : QSeries(limit) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
}

QSeries QSeries::one(long limit) {
  QSeries s(limit);
  s.coeffs_[0] = 1;
  return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const long limit = std::min(a.limit_, b.limit_);
  QSeries out(limit);
  for (long i = 0; i <= limit; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= limit; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QSeries eta_factor(long scale, int exponent, long limit) {
  if (limit <= 0) throw DomainError("eta factor needs a positive limit");
  if (scale <= 0) throw DomainError("eta factor needs a positive scale");
  QSeries s = QSeries::one(limit);
  std::vector<BigInt> dense = s.coefficients();
  apply_factor(dense, scale, exponent);
  return QSeries(std::move(dense), limit);
}

std::vector<BigInt> newform_coeffs(Newform form, long limit) {
  if (limit < 2) throw DomainError("newform expansion needs limit >= 2");
  // Every product below carries the prefactor q^1; expand the rest to q^(limit-1).
  std::vector<BigInt> dense(static_cast<std::size_t>(limit), BigInt(0));
  dense[0] = 1;
  switch (form) {
    case Newform::A:
      apply_factor(dense, 4, 6);
      break;
    case Newform::B:
      apply_factor(dense, 6, 3);
      apply_factor(dense, 2, 3);
      break;
    case Newform::C:
      apply_factor(dense, 8, 2);
      apply_factor(dense, 4, 1);
      apply_factor(dense, 2, 1);
      apply_factor(dense, 1, 2);
      break;
  }
  std::vector<BigInt> out(static_cast<std::size_t>(limit) + 1, BigInt(0));
  for (long n = 1; n <= limit; ++n) out[static_cast<std::size_t>(n)] = dense[static_cast<std::size_t>(n - 1)];
  return out;
}

std::optional<std::pair<long, long>> cornacchia(long M, long p) {
  if (M <= 0) throw DomainError("cornacchia needs M > 0");
  for (long y = 1; M * y * y < p; ++y) {
    const long rest = p - M * y * y;
    auto x = static_cast<long>(std::sqrt(static_cast<double>(rest)));
    while (x * x > rest) --x;
    while ((x + 1) * (x + 1) <= rest) ++x;
    if (x > 0 && x * x == rest && (M != 1 || x % 2 == 1)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

long phi_M(long M, long p) {
  if (p % 2 == 0 || M % p == 0) throw DomainError("phi_M needs an odd prime not dividing M");
  if (legendre(-M, p) == -1) return 0;
  const auto rep = cornacchia(M, p);
  if (!rep) {
    throw DomainError("no representation " + std::to_string(p) + " = a^2 + " + std::to_string(M) + "b^2");
  }
  return 4 * rep->first * rep->first - 2 * p;
}

}  // namespace padichyp
