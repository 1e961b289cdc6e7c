#pragma once

#include "padichyp/padic.hpp"

namespace padichyp {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p; coefficients are kept reduced.
struct WeierstrassCurve {
  long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  WeierstrassCurve() = default;
  WeierstrassCurve(long c1, long c2, long c3, long c4, long c6, long p);

  bool is_even_form() const { return a1 == 0 && a3 == 0; }
  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

/// Standard discriminant Delta mod p.
long discriminant(const WeierstrassCurve& e, long p);
inline bool is_singular(const WeierstrassCurve& e, long p) { return discriminant(e, p) == 0; }

/// y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4 with b2 = a1^2 + 4a2, b4 = 2a4 + a1a3,
/// b6 = a3^2 + 4a6. Needs p > 3.
WeierstrassCurve reduce_to_even_form(const WeierstrassCurve& e, long p);

/// a_p = p + 1 - #E(F_p), as -sum_x phi(f(x)) on the even form.
long ap(const WeierstrassCurve& e, long p);
long ap(const WeierstrassCurve& e, const QuadraticCharacter& phi);

/// #E(F_p) by enumerating every affine (x, y) of the original equation, plus infinity.
long count_points_naive(const WeierstrassCurve& e, long p);

/// y^2 = x^3 + D a x^2 + D^2 b x + D^3 c for an even-form curve.
WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, long D, long p);

/// a_p(E_t) = (-3/p) a_p(E_{1-t}) for E_t: y^2 + 3xy + ty = x^3 and every t != 0, 1.
bool verify_prop31(long p);

}  // namespace padichyp
