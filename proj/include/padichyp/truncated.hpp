#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "padichyp/rational.hpp"

namespace padichyp {

/// Which truncated sum sum_{n=0}^{p-1} T_n is meant.
///   eq1: (2n)!^3 / n!^6 * 64^-n
///   eq2: (3n)!(2n)! / n!^5 * 108^-n
///   eq3: (4n)! / n!^4 * 256^-n
///   eq4: (6n)! / ((3n)! n!^3) * 1728^-n
///   generic(d): (1/2)_n (1/d)_n ((d-1)/d)_n / n!^3, the truncated 3F2 at 1
struct TruncKind {
  enum class Family { Eq1, Eq2, Eq3, Eq4, Generic };
  Family family = Family::Eq1;
  int d = 0;

  static TruncKind eq(int which);
  static TruncKind generic(int d);
  static TruncKind parse(std::string_view name);
  std::string name() const;
};

struct TruncSum {
  TruncKind kind;
  long p = 0;
  BigInt value;  // centered residue mod p^2
};

/// Sum of T_0..T_upto mod p^2, centered. Terms are built from T_{n+1}/T_n with
/// p-power bookkeeping, so no non-invertible element is ever reduced mod p^2.
BigInt trunc_partial(const TruncKind& kind, long p, long upto);
TruncSum trunc_sum(const TruncKind& kind, long p);
BigInt trunc_3f2_rising(int d, long p);

/// T_n and the residue of T_n mod p^2 exactly; used to compare the two term forms.
Rational trunc_term(const TruncKind& kind, long n);
BigInt trunc_term_residue(const TruncKind& kind, long p, long n);

/// -1 if p = 5 mod 12, else 1.
int gamma_sign(long p);

}  // namespace padichyp
