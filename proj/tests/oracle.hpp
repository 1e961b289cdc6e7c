// Slow reference implementations. Nothing here calls into the library's
// arithmetic beyond the BigInt/Rational types.
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

inline Z pw(long p, int e) {
  Z r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

inline Z md(const Z& a, const Z& m) {
  Z r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Z centered(const Z& a, const Z& m) {
  Z r = md(a, m);
  if (2 * r > m) r -= m;
  return r;
}

inline Z inverse(const Z& a, const Z& m) {
  Z r;
  if (mpz_invert(r.get_mpz_t(), md(a, m).get_mpz_t(), m.get_mpz_t()) == 0) std::abort();
  return r;
}

inline Z floor_q(const Q& x) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

inline Q frac_q(const Q& x) { return x - Q(floor_q(x)); }

/// Representative of a p-integral rational in [0, p^N).
inline Z representative(const Q& x, long p, int N) {
  const Z m = pw(p, N);
  return md(x.get_num() * inverse(x.get_den(), m), m);
}

/// Gamma_p(r) = (-1)^r prod_{0<j<r, p !| j} j, by the direct product.
inline Z gamma_int(const Z& r, long p, int N) {
  const Z m = pw(p, N);
  Z prod = 1;
  if (m.fits_slong_p() && m < Z(1L << 31)) {
    const long mm = m.get_si();
    const long rr = r.get_si();
    long acc = 1;
    for (long j = 1; j < rr; ++j) {
      if (j % p != 0) acc = static_cast<long>((static_cast<__int128>(acc) * j) % mm);
    }
    prod = acc;
  } else {
    for (Z j = 1; j < r; ++j) {
      if (j % p != 0) prod = md(prod * j, m);
    }
  }
  if (mpz_odd_p(r.get_mpz_t())) prod = -prod;
  return md(prod, m);
}

// Memoized: the G oracle asks for the same arguments once per t.
inline Z gamma(const Q& x, long p, int N) {
  static std::map<std::tuple<Q, long, int>, Z> memo;
  const auto key = std::make_tuple(x, p, N);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  return memo[key] = gamma_int(representative(x, p, N), p, N);
}

/// The (p-1)-th root of unity congruent to a, found by search over a + kp.
inline Z teich(long a, long p, int N) {
  const Z m = pw(p, N);
  const Z start = md(Z(a), Z(p));
  for (Z x = start; x < m; x += p) {
    Z y;
    mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p - 1), m.get_mpz_t());
    if (y == 1) return x;
  }
  std::abort();
}

/// omega^j(x) with omega(0) = 0 (j may be negative).
inline Z omega_pow(long j, long x, long p, int N) {
  const Z m = pw(p, N);
  if (md(Z(x), Z(p)) == 0) return 0;
  Z base = teich(x, p, N);
  long e = j % (p - 1);
  if (e < 0) e += p - 1;
  Z r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
  return r;
}

inline int legendre(long a, long p) {
  const long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (long y = 1; y < p; ++y) {
    if ((y * y) % p == r) return 1;
  }
  return -1;
}

/// nGn[upper; lower | t]_p straight from its defining sum. Returns
/// p^shift * G mod p^N as a centered integer; shift must make the value integral.
inline Z g_value(const std::vector<Q>& upper, const std::vector<Q>& lower, long t, long p, int N,
                 int shift = 0) {
  const int n = static_cast<int>(upper.size());
  const int M = N + n + 2;
  const Z mod = pw(p, M);
  struct Term {
    int e;
    Z unit;
  };
  std::vector<Term> terms;
  int emin = 1 << 20;
  for (long a = 0; a <= p - 2; ++a) {
    Q r(a, p - 1);
    r.canonicalize();
    int e = 0;
    Z u = omega_pow(-a, t, p, M);
    if ((a * n) % 2 == 1) u = -u;
    for (int k = 0; k < n; ++k) {
      const Q ak = frac_q(upper[k]);
      const Q bk = frac_q(-lower[k]);
      e -= static_cast<int>(floor_q(ak - r).get_si());
      e -= static_cast<int>(floor_q(bk + r).get_si());
      u = md(u * gamma(frac_q(ak - r), p, M), mod);
      u = md(u * gamma(frac_q(bk + r), p, M), mod);
      u = md(u * inverse(gamma(ak, p, M), mod), mod);
      u = md(u * inverse(gamma(bk, p, M), mod), mod);
    }
    if (e % 2 != 0) u = -u;  // (-p)^e = (-1)^e p^e
    terms.push_back({e, u});
    emin = std::min(emin, e);
  }
  Z sum = 0;
  for (const Term& tm : terms) sum += tm.unit * pw(p, tm.e - emin);
  sum = md(-sum * inverse(Z(p - 1), mod), mod);
  const int total = emin + shift;
  if (total < 0) {
    Z q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), pw(p, -total).get_mpz_t());
    if (r != 0) std::abort();
    sum = q;
  } else {
    sum *= pw(p, total);
  }
  return centered(sum, pw(p, N));
}

/// J(omega^i, omega^j) = sum_x omega^i(x) omega^j(1-x) mod p^N.
inline Z jacobi(long i, long j, long p, int N) {
  Z s = 0;
  for (long x = 0; x < p; ++x) s += omega_pow(i, x, p, N) * omega_pow(j, 1 - x, p, N);
  return md(s, pw(p, N));
}

/// p^2 3F2(phi,phi,phi; eps,eps | x) = sum_{y,z} phi(y(1-y) z(1-z) (1-xyz)).
inline long greene_3f2_phi(long x, long p) {
  long s = 0;
  for (long y = 0; y < p; ++y) {
    for (long z = 0; z < p; ++z) {
      const long v = (y * (1 - y + p) % p) * (z * (1 - z + p) % p) % p;
      const long w = ((1 - x * y % p * z) % p + p) % p;
      s += legendre(v * w, p);
    }
  }
  return s;
}

/// #E(F_p) for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, with infinity.
inline long count_points(long a1, long a2, long a3, long a4, long a6, long p) {
  long n = 1;
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      const long lhs = (y * y + a1 * x * y + a3 * y) % p;
      const long rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p;
      if (((lhs - rhs) % p + p) % p == 0) ++n;
    }
  }
  return n;
}

inline long trace(long a1, long a2, long a3, long a4, long a6, long p) {
  auto r = [p](long v) { return ((v % p) + p) % p; };
  return p + 1 - count_points(r(a1), r(a2), r(a3), r(a4), r(a6), p);
}

/// prod_{n>=1} (1 - q^(m n))^e mod q^(limit+1), e >= 0, by dense multiplication.
inline std::vector<Z> eta_dense(long m, int e, long limit) {
  std::vector<Z> s(static_cast<std::size_t>(limit + 1), 0);
  s[0] = 1;
  for (int rep = 0; rep < e; ++rep) {
    for (long n = 1; m * n <= limit; ++n) {
      const long k = m * n;
      for (long i = limit; i >= k; --i) s[i] -= s[i - k];
    }
  }
  return s;
}

inline std::vector<Z> mul(const std::vector<Z>& a, const std::vector<Z>& b) {
  std::vector<Z> c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// p = x^2 + M y^2 by exhaustive search; x odd when M = 1.
inline bool represent(long M, long p, long& x_out, long& y_out) {
  for (long x = 1; x * x < p; ++x) {
    for (long y = 1; x * x + M * y * y <= p; ++y) {
      if (x * x + M * y * y == p && (M != 1 || x % 2 == 1)) {
        x_out = x;
        y_out = y;
        return true;
      }
    }
  }
  return false;
}

inline Q factorial(long n) {
  Z f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Q(f);
}

/// sum_{n<=upto} T_n exactly, then reduced mod p^2 (centered).
inline Z exact_trunc(int kind, long p, long upto) {
  Q s = 0;
  for (long n = 0; n <= upto; ++n) {
    Q t;
    switch (kind) {
      case 1: t = factorial(2 * n) * factorial(2 * n) * factorial(2 * n) /
                  (factorial(n) * factorial(n) * factorial(n) * factorial(n) * factorial(n) * factorial(n));
              t /= Q(pw(64, static_cast<int>(n)));
              break;
      case 2: t = factorial(3 * n) * factorial(2 * n) /
                  (factorial(n) * factorial(n) * factorial(n) * factorial(n) * factorial(n));
              t /= Q(pw(108, static_cast<int>(n)));
              break;
      case 3: t = factorial(4 * n) / (factorial(n) * factorial(n) * factorial(n) * factorial(n));
              t /= Q(pw(256, static_cast<int>(n)));
              break;
      default: t = factorial(6 * n) / (factorial(3 * n) * factorial(n) * factorial(n) * factorial(n));
               t /= Q(pw(1728, static_cast<int>(n)));
               break;
    }
    s += t;
  }
  s.canonicalize();
  const Z m = pw(p, 2);
  return centered(s.get_num() * inverse(s.get_den(), m), m);
}

}  // namespace oracle
