#include "padichyp/curves.hpp"

#include "padichyp/errors.hpp"

namespace padichyp {

WeierstrassCurve::WeierstrassCurve(long c1, long c2, long c3, long c4, long c6, long p)
    : a1(mod_p(c1, p)), a2(mod_p(c2, p)), a3(mod_p(c3, p)), a4(mod_p(c4, p)), a6(mod_p(c6, p)) {}

long discriminant(const WeierstrassCurve& e, long p) {
  auto m = [p](long a, long b) { return mul_mod(a, b, p); };
  const long b2 = mod_p(m(e.a1, e.a1) + 4 * e.a2, p);
  const long b4 = mod_p(2 * e.a4 + m(e.a1, e.a3), p);
  const long b6 = mod_p(m(e.a3, e.a3) + 4 * e.a6, p);
  const long b8 = mod_p(m(m(e.a1, e.a1), e.a6) + 4 * m(e.a2, e.a6) - m(m(e.a1, e.a3), e.a4) +
                            m(m(e.a2, e.a3), e.a3) - m(e.a4, e.a4),
                        p);
  const long t1 = m(m(b2, b2), b8);
  const long t2 = m(8, m(m(b4, b4), b4));
  const long t3 = m(27, m(b6, b6));
  const long t4 = m(9, m(m(b2, b4), b6));
  return mod_p(-t1 - t2 - t3 + t4, p);
}

WeierstrassCurve reduce_to_even_form(const WeierstrassCurve& e, long p) {
  if (p <= 3) throw DomainError("reduction to even form needs p > 3");
  if (e.is_even_form()) return e;
  const long b2 = mod_p(mul_mod(e.a1, e.a1, p) + 4 * e.a2, p);
  const long b4 = mod_p(2 * e.a4 + mul_mod(e.a1, e.a3, p), p);
  const long b6 = mod_p(mul_mod(e.a3, e.a3, p) + 4 * e.a6, p);
  const long inv2 = inv_mod(2, p);
  const long inv4 = inv_mod(4, p);
  return {0, mul_mod(b2, inv4, p), 0, mul_mod(b4, inv2, p), mul_mod(b6, inv4, p), p};
}

long ap(const WeierstrassCurve& e, const QuadraticCharacter& phi) {
  const long p = phi.prime();
  if (is_singular(e, p)) throw DomainError("a_p of a singular curve");
  const WeierstrassCurve r = reduce_to_even_form(e, p);
  long sum = 0;
  for (long x = 0; x < p; ++x) {
    // ((x + a2) x + a4) x + a6
    const long f = mod_p(mul_mod(mod_p(mul_mod(x + r.a2, x, p) + r.a4, p), x, p) + r.a6, p);
    sum += phi(f);
  }
  return -sum;
}

long ap(const WeierstrassCurve& e, long p) { return ap(e, QuadraticCharacter(p)); }

long count_points_naive(const WeierstrassCurve& e, long p) {
  long count = 1;
  for (long x = 0; x < p; ++x) {
    const long rhs = mod_p(mul_mod(mul_mod(x, x, p), x, p) + mul_mod(e.a2, mul_mod(x, x, p), p) +
                               mul_mod(e.a4, x, p) + e.a6,
                           p);
    for (long y = 0; y < p; ++y) {
      const long lhs = mod_p(mul_mod(y, y, p) + mul_mod(e.a1, mul_mod(x, y, p), p) + mul_mod(e.a3, y, p), p);
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, long D, long p) {
  if (mod_p(D, p) == 0) throw DomainError("quadratic twist by D = 0");
  if (!e.is_even_form()) throw DomainError("quadratic twist needs a1 = a3 = 0");
  const long d2 = mul_mod(D, D, p);
  return {0, mul_mod(D, e.a2, p), 0, mul_mod(d2, e.a4, p), mul_mod(mul_mod(d2, D, p), e.a6, p), p};
}

bool verify_prop31(long p) {
  if (p <= 3) throw DomainError("isogeny check needs p > 3");
  const QuadraticCharacter phi(p);
  const int sign = phi(-3);
  for (long t = 2; t < p; ++t) {
    const WeierstrassCurve et(3, 0, t, 0, 0, p);
    const WeierstrassCurve e1t(3, 0, 1 - t, 0, 0, p);
    if (ap(et, phi) != sign * ap(e1t, phi)) return false;
  }
  return true;
}

}  // namespace padichyp
