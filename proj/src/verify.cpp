#include "padichyp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include "padichyp/curves.hpp"
#include "padichyp/errors.hpp"
#include "padichyp/ffhyper.hpp"
#include "padichyp/gamma.hpp"
#include "padichyp/gfunc.hpp"
#include "padichyp/modforms.hpp"
#include "padichyp/truncated.hpp"

namespace padichyp {

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

GParams zero_lower(std::vector<Rational> upper) {
  std::vector<Rational> lower(upper.size(), Rational(0));
  return GParams(std::move(upper), std::move(lower));
}

const GParams& g_third() {
  static const GParams g = zero_lower({q(1, 3), q(2, 3)});
  return g;
}
const GParams& g_sixth() {
  static const GParams g = zero_lower({q(1, 6), q(5, 6)});
  return g;
}
const GParams& g_half3() {
  static const GParams g = zero_lower({q(1, 2), q(1, 2), q(1, 2)});
  return g;
}
const GParams& g_cubic() {
  static const GParams g = zero_lower({q(1, 2), q(1, 6), q(5, 6)});
  return g;
}
const GParams& g_quarter() {
  static const GParams g = zero_lower({q(1, 2), q(1, 4), q(3, 4)});
  return g;
}
const GParams& g_dth(int d) {
  static const GParams g2 = zero_lower({q(1, 2), q(1, 2), q(1, 2)});
  static const GParams g3 = zero_lower({q(1, 2), q(1, 3), q(2, 3)});
  static const GParams g4 = zero_lower({q(1, 2), q(1, 4), q(3, 4)});
  static const GParams g6 = zero_lower({q(1, 2), q(1, 6), q(5, 6)});
  switch (d) {
    case 2: return g2;
    case 3: return g3;
    case 4: return g4;
    default: return g6;
  }
}
const GParams& g_trace_half() {
  static const GParams g({q(1, 2), q(1, 2)}, {q(1, 3), q(2, 3)});
  return g;
}

// Precision of the gamma table shared by every G evaluation of one prime.
int gamma_precision(int N) { return g_working_precision(3, N); }

struct Newforms {
  std::vector<BigInt> a, b, c;
};

class Emitter {
 public:
  Emitter(std::string suite, long p, std::vector<ReportEntry>& out)
      : suite_(std::move(suite)), p_(p), out_(out) {}

  void congruence(std::string case_id, const PadicNum& lhs, const PadicNum& rhs, int N) {
    ReportEntry e = base(std::move(case_id), pow_p(p_, N).get_str());
    try {
      const BigInt l = centered_lift(lhs, p_, N);
      const BigInt r = centered_lift(rhs, p_, N);
      e.lhs = l.get_str();
      e.rhs = r.get_str();
      e.status = l == r ? Status::Pass : Status::Fail;
    } catch (const std::exception& ex) {
      e.lhs = std::string("error: ") + ex.what();
      e.rhs = "-";
      e.status = Status::Fail;
    }
    out_.push_back(std::move(e));
  }

  void exact(std::string case_id, const BigInt& lhs, const BigInt& rhs) {
    ReportEntry e = base(std::move(case_id), "exact");
    e.lhs = lhs.get_str();
    e.rhs = rhs.get_str();
    e.status = lhs == rhs ? Status::Pass : Status::Fail;
    out_.push_back(std::move(e));
  }

  void skip(std::string case_id, std::string reason) {
    ReportEntry e = base(std::move(case_id), "-");
    e.lhs = "-";
    e.rhs = "-";
    e.status = Status::Skip;
    e.reason = std::move(reason);
    out_.push_back(std::move(e));
  }

  void failure(std::string case_id, const std::string& what) {
    ReportEntry e = base(std::move(case_id), "-");
    e.lhs = "error: " + what;
    e.rhs = "-";
    e.status = Status::Fail;
    out_.push_back(std::move(e));
  }

  long p() const { return p_; }

 private:
  ReportEntry base(std::string case_id, std::string modulus) const {
    ReportEntry e;
    e.suite = suite_;
    e.p = p_;
    e.case_id = std::move(case_id);
    e.modulus = std::move(modulus);
    return e;
  }

  std::string suite_;
  long p_;
  std::vector<ReportEntry>& out_;
};

PadicNum integer(const BigInt& n, long p, int N) { return PadicNum::from_residue(n, p, N); }

std::string tag(std::string_view key, long v) { return std::string(key) + "=" + std::to_string(v); }

// --- mt1, mt2 -------------------------------------------------------------

void run_kummer(Emitter& em, const GParams& params, long sign_arg, int N, const GammaTable& gamma) {
  const long p = em.p();
  const std::vector<PadicNum> vals = GFactorCache(params, gamma, N).sweep();
  const long sign = legendre(sign_arg, p);
  for (long t = 2; t < p; ++t) {
    const PadicNum& lhs = vals[static_cast<std::size_t>(inv_mod(t, p))];
    const PadicNum rhs = vals[static_cast<std::size_t>(inv_mod(mod_p(1 - t, p), p))].scaled(BigInt(sign));
    em.congruence(tag("t", t), lhs, rhs, N);
  }
}

// --- mt3 ------------------------------------------------------------------

void run_cubic(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const std::vector<PadicNum> half = GFactorCache(g_half3(), gamma, N).sweep();
  const std::vector<PadicNum> cubic = GFactorCache(g_cubic(), gamma, N).sweep();
  JacobiTable jt(p, greene_working_precision(2, N));
  const CharIdx phi = CharIdx::quadratic(p);
  const CharIdx eps = CharIdx::trivial(p);
  const std::vector<CharIdx> up{phi, phi, phi};
  const std::vector<CharIdx> low{eps, eps};
  const long phi_m1 = legendre(-1L, p);
  for (long x = 2; x < p; ++x) {
    const long four_x = mod_p(4 * x, p);
    const PadicNum greene = greene_hyper(jt, up, low, four_x, N).shifted(2);
    const PadicNum& mid = half[static_cast<std::size_t>(inv_mod(four_x, p))];
    const long xm1 = mod_p(x - 1, p);
    const long num = mod_p(-4 * mul_mod(mul_mod(xm1, xm1, p), xm1, p), p);
    const long den = mul_mod(27 % p, mul_mod(x, x, p), p);
    const long arg = mul_mod(num, inv_mod(den, p), p);
    PadicNum rhs = cubic[static_cast<std::size_t>(arg)].scaled(BigInt(legendre(1 - x, p)));
    if (mod_p(x + 2, p) == 0) rhs += integer(BigInt(phi_m1 * p), p, N + 1);
    em.congruence(tag("x", x) + ":greene", greene, mid, N);
    em.congruence(tag("x", x) + ":cubic", mid, rhs, N);
  }
}

// --- mt4, mt5, mt6 --------------------------------------------------------

void run_value(Emitter& em, const GParams& params, const BigInt& eta, long M, long sign, int N,
               const GammaTable& gamma) {
  const long p = em.p();
  em.exact("eta-vs-cornacchia", eta, BigInt(phi_M(M, p)));
  const PadicNum g = GFactorCache(params, gamma, N).evaluate(1);
  em.congruence("t=1", g, integer(eta * sign, p, N), N);
}

// --- cor17 ----------------------------------------------------------------

void run_supercongruence(Emitter& em, const Newforms& nf) {
  const long p = em.p();
  const auto idx = static_cast<std::size_t>(p);
  const BigInt targets[4] = {nf.a[idx], nf.b[idx], nf.c[idx], nf.a[idx] * gamma_sign(p)};
  for (int k = 1; k <= 4; ++k) {
    const TruncSum s = trunc_sum(TruncKind::eq(k), p);
    em.congruence("eq" + std::to_string(k), integer(s.value, p, 2), integer(targets[k - 1], p, 2), 2);
  }
}

// --- cor42 ----------------------------------------------------------------

void run_zero_values(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const PadicNum zero = PadicNum::exact_zero(p);
  if (p % 3 == 2) em.congruence("2G2[1/3,2/3|2]", GFactorCache(g_third(), gamma, N).evaluate(2), zero, N);
  if (p % 4 == 3) em.congruence("2G2[1/6,5/6|2]", GFactorCache(g_sixth(), gamma, N).evaluate(2), zero, N);
}

// --- cor43 ----------------------------------------------------------------

struct SpecialValue {
  const char* id;
  long num, den;  // the argument num/den
  long twist;
  long M;
  std::vector<long> split_mod;  // residues of p mod `modulus` that use p = x^2 + M y^2
  long modulus;
};

const std::vector<SpecialValue>& special_values() {
  static const std::vector<SpecialValue> v{
      {"i:1331/8", 1331, 8, 33, 1, {1}, 4},
      {"ii:125/27", 125, 27, 10, 2, {1, 3}, 8},
      {"iii:125/4", 125, 4, 5, 3, {1}, 3},
      {"iv:-125/64", -125, 64, 105, 7, {1, 2, 4}, 7},
      {"v:614125/64", 614125, 64, 1785, 7, {1, 2, 4}, 7},
  };
  return v;
}

void run_special_values(Emitter& em, int N, const GammaTable* gamma) {
  const long p = em.p();
  std::optional<GFactorCache> cache;
  for (const SpecialValue& sv : special_values()) {
    if (p <= 3) {
      em.skip(sv.id, "p divides a parameter denominator");
      continue;
    }
    if (sv.den % p == 0) {
      em.skip(sv.id, "p divides the argument's denominator");
      continue;
    }
    if (sv.M == 7 && p == 7) {
      em.skip(sv.id, "p = 7 is degenerate for the mod-7 split");
      continue;
    }
    const long t = reduce_mod_p(q(sv.num, sv.den), p);
    if (t == 0) {
      em.skip(sv.id, "argument = 0 mod p");
      continue;
    }
    if (!cache) cache.emplace(g_cubic(), *gamma, N);
    const long twist = legendre(sv.twist, p);
    BigInt rhs;
    const long cls = p % sv.modulus;
    if (std::find(sv.split_mod.begin(), sv.split_mod.end(), cls) != sv.split_mod.end()) {
      const auto rep = cornacchia(sv.M, p);
      if (!rep) {
        em.failure(sv.id, "no representation p = x^2 + " + std::to_string(sv.M) + "y^2");
        continue;
      }
      const BigInt x = rep->first;
      rhs = BigInt(twist) * (4 * x * x - p);
    } else {
      rhs = BigInt(-p * twist);
    }
    em.congruence(sv.id, cache->evaluate(t), integer(rhs, p, N), N);
  }
}

// --- lit212 ---------------------------------------------------------------

void run_quartic(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const std::vector<PadicNum> half = GFactorCache(g_half3(), gamma, N).sweep();
  const std::vector<PadicNum> quarter = GFactorCache(g_quarter(), gamma, N).sweep();
  const PadicNum g2 = gamma(q(1, 2));
  const PadicNum s = gamma(q(1, 4)) * gamma(q(3, 4)) * g2 * g2;
  const long phi_m1 = legendre(-1L, p);
  for (long x = 2; x < p; ++x) {
    const long omx = mod_p(1 - x, p);
    const long arg = mod_p(-mul_mod(mul_mod(omx, omx, p), inv_mod(mod_p(4 * x, p), p), p), p);
    PadicNum rhs = s * quarter[static_cast<std::size_t>(arg)].scaled(BigInt(legendre(2 * omx, p)));
    if (mod_p(x + 1, p) == 0) rhs += integer(BigInt(phi_m1 * p), p, N + 1);
    em.congruence(tag("x", x), half[static_cast<std::size_t>(inv_mod(x, p))], rhs, N);
  }
}

// --- lit213 ---------------------------------------------------------------

void run_truncation(Emitter& em, const GammaTable& gamma) {
  const long p = em.p();
  for (int d : {2, 3, 4, 6}) {
    if (p % d != 1 && p % d != d - 1) continue;
    const int N = 2;
    const PadicNum g = GFactorCache(g_dth(d), gamma, N).evaluate(1);
    em.congruence(tag("d", d), g, integer(trunc_3f2_rising(d, p), p, N), N);
  }
}

// --- props ----------------------------------------------------------------

void run_multiplication(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const long m = p - 1;
  for (long t : {2L, 3L, 4L, 6L}) {
    if (t % p == 0) continue;
    PadicNum fixed = PadicNum::from_residue(BigInt(1), p, N);
    for (long h = 1; h < t; ++h) fixed *= gamma(q(h, t));
    for (long a = 0; a <= p - 2; ++a) {
      const PadicNum lhs = char_value(t * a, BigInt(t), p, gamma.precision()) *
                           gamma(frac_part(q(-t * a, m))) * fixed;
      PadicNum rhs = PadicNum::from_residue(BigInt(1), p, gamma.precision());
      for (long h = 0; h < t; ++h) rhs *= gamma(frac_part(q(1 + h, t) - q(a, m)));
      em.congruence("mult:" + tag("t", t) + ":" + tag("a", a), lhs, rhs, N);
    }
  }
}

void run_reflection(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  for (long a = 1; a <= p - 2; ++a) {
    const PadicNum lhs = gamma(frac_part(Rational(1) - q(a, p - 1))) * gamma(q(a, p - 1));
    const PadicNum rhs = -char_value(a, BigInt(-1), p, gamma.precision());
    em.congruence("reflect:" + tag("a", a), lhs, rhs, N);
  }
}

void run_floor_identity(Emitter& em) {
  const long p = em.p();
  for (long d : {2L, 3L, 4L, 6L}) {
    if (d % p == 0) continue;
    for (long a = 1; a <= p - 2; ++a) {
      const BigInt lhs = floor_of(q(-d * a, p - 1));
      BigInt rhs = -1;
      for (long h = 1; h < d; ++h) rhs += floor_of(q(h, d) - q(a, p - 1));
      em.exact("floor:" + tag("d", d) + ":" + tag("a", a), lhs, rhs);
    }
  }
}

void run_character_sum(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const TeichmullerTable chars(p, N);
  const QuadraticCharacter phi(p);
  const BigInt modulus = pow_p(p, N);
  const PadicNum g_half = gamma(q(1, 2));
  for (long a = 1; a < p - 1; ++a) {
    const Rational r = q(a, p - 1);
    const long e = -floor_of(q(1, 2) - r).get_si();
    const PadicNum lhs = PadicNum::neg_p_power(static_cast<int>(e), p, gamma.precision()) *
                         gamma(frac_part(r)) * gamma(frac_part(q(1, 2) - r)) / g_half;
    BigInt sum = 0;
    for (long t = 2; t < p; ++t) {
      const int ph = phi(mul_mod(t, t - 1, p));
      if (ph != 0) sum += chars.omega(a, mod_p(-t, p)) * ph;
    }
    em.congruence("charsum:" + tag("a", a), lhs, integer(-sum, p, N), N);
  }
}

void run_sign_identity(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const PadicNum g2 = gamma(q(1, 2));
  const PadicNum s = gamma(q(1, 4)) * gamma(q(3, 4)) * g2 * g2;
  const long sign = ((p - 1) / 4 + (p - 1) / 2) % 2 == 0 ? 1 : -1;
  em.congruence("s(p)", s, integer(BigInt(sign), p, N), N);
  em.exact("s(p)=phi(2)", BigInt(sign), BigInt(legendre(2L, p)));
}

void run_jacobi_gamma(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const long m = p - 1;
  JacobiTable jt(p, N);
  for (long a = 1; a < m; ++a) {
    for (long b = 1; b < m; ++b) {
      if ((a + b) % m == 0) continue;
      const JacobiGammaSides sides = jacobi_gamma_sides(jt, gamma, a, b, N);
      em.congruence("jacobi-gamma:" + tag("a", a) + ":" + tag("b", b), sides.jacobi,
                    sides.gamma_quotient, N);
    }
  }
}

void run_isogeny_traces(Emitter& em) {
  const long p = em.p();
  const QuadraticCharacter phi(p);
  const long sign = legendre(-3L, p);
  for (long t = 2; t < p; ++t) {
    const long lhs = ap(WeierstrassCurve(3, 0, t, 0, 0, p), phi);
    const long rhs = sign * ap(WeierstrassCurve(3, 0, 1 - t, 0, 0, p), phi);
    em.exact("isogeny:" + tag("t", t), BigInt(lhs), BigInt(rhs));
  }
}

void run_trace_third(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const QuadraticCharacter phi(p);
  const std::vector<PadicNum> vals = GFactorCache(g_third(), gamma, N).sweep();
  for (long a1 = 1; a1 < p; ++a1) {
    const long cube = mul_mod(mul_mod(a1, a1, p), a1, p);
    for (long a3 = 1; a3 < p; ++a3) {
      const long arg = mul_mod(cube, inv_mod(mul_mod(27 % p, a3, p), p), p);
      if (arg == 1) continue;  // a1^3 = 27 a3: singular
      const long trace = ap(WeierstrassCurve(a1, 0, a3, 0, 0, p), phi);
      em.congruence("trace-third:" + tag("a1", a1) + ":" + tag("a3", a3), integer(BigInt(trace), p, N),
                    vals[static_cast<std::size_t>(arg)], N);
    }
  }
}

void run_trace_half(Emitter& em, int N, const GammaTable& gamma) {
  const long p = em.p();
  const QuadraticCharacter phi(p);
  const std::vector<PadicNum> vals = GFactorCache(g_trace_half(), gamma, N).sweep();
  for (long t = 2; t < p; ++t) {
    const long trace = ap(WeierstrassCurve(0, -3, 0, 0, 4 * t, p), phi);
    const PadicNum rhs = vals[static_cast<std::size_t>(t)].shifted(1).scaled(BigInt(phi(t)));
    em.congruence("trace-half:" + tag("t", t), integer(BigInt(trace), p, N), rhs, N);
  }
}

void run_properties(Emitter& em, int N, const GammaTable& gamma) {
  run_multiplication(em, N, gamma);
  run_reflection(em, N, gamma);
  run_floor_identity(em);
  run_character_sum(em, N, gamma);
  run_sign_identity(em, N, gamma);
  run_jacobi_gamma(em, N, gamma);
  run_isogeny_traces(em);
  run_trace_third(em, N, gamma);
  run_trace_half(em, N, gamma);
}

// --- dispatch -------------------------------------------------------------

struct SuiteInfo {
  std::string name;
  int default_precision;
  long min_prime;
  bool needs_newforms;
  bool needs_gamma;
};

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> s{
      {"mt1", 3, 5, false, true},    {"mt2", 3, 5, false, true},    {"mt3", 3, 5, false, true},
      {"mt4", 2, 3, true, true},     {"mt5", 2, 5, true, true},     {"mt6", 2, 5, true, true},
      {"cor17", 2, 5, true, false},  {"cor42", 2, 5, false, true},  {"cor43", 2, 3, false, true},
      {"lit212", 3, 5, false, true}, {"lit213", 2, 5, false, true}, {"props", 3, 5, false, true},
  };
  return s;
}

const SuiteInfo& find_suite(std::string_view name) {
  for (const SuiteInfo& s : suites()) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

void run_prime(const SuiteInfo& info, long p, int N, const Newforms& nf,
               std::vector<ReportEntry>& out) {
  Emitter em(info.name, p, out);
  // cor43 at p = 3 only produces skips; Gamma_3 tables are never needed there.
  std::optional<GammaTable> gamma;
  if (info.needs_gamma && !(info.name == "cor43" && p == 3)) {
    gamma.emplace(p, std::max(gamma_precision(N), gamma_precision(2)));
  }
  const auto idx = static_cast<std::size_t>(p);
  const std::string& n = info.name;
  if (n == "mt1") run_kummer(em, g_third(), -3, N, *gamma);
  else if (n == "mt2") run_kummer(em, g_sixth(), -1, N, *gamma);
  else if (n == "mt3") run_cubic(em, N, *gamma);
  else if (n == "mt4") run_value(em, g_quarter(), nf.c[idx], 2, 1, N, *gamma);
  else if (n == "mt5") run_value(em, g_dth(3), nf.b[idx], 3, 1, N, *gamma);
  else if (n == "mt6") run_value(em, g_cubic(), nf.a[idx], 4, gamma_sign(p), N, *gamma);
  else if (n == "cor17") run_supercongruence(em, nf);
  else if (n == "cor42") run_zero_values(em, N, *gamma);
  else if (n == "cor43") run_special_values(em, N, gamma ? &*gamma : nullptr);
  else if (n == "lit212") run_quartic(em, N, *gamma);
  else if (n == "lit213") run_truncation(em, *gamma);
  else if (n == "props") run_properties(em, N, *gamma);
}

std::vector<ReportEntry> run(const SuiteInfo& info, long p_min, long p_max, int N, int threads) {
  if (p_min > p_max) throw std::invalid_argument("empty prime range");
  if (p_min < info.min_prime) {
    throw std::invalid_argument("suite " + info.name + " needs p_min >= " +
                                std::to_string(info.min_prime));
  }
  if (N < 1) throw std::invalid_argument("precision must be at least 1");
  if (threads < 1) throw std::invalid_argument("thread count must be at least 1");

  const std::vector<long> primes = primes_in(p_min, p_max);
  Newforms nf;
  if (info.needs_newforms && !primes.empty()) {
    const long limit = std::max(primes.back(), 2L);
    nf.a = newform_coeffs(Newform::A, limit);
    nf.b = newform_coeffs(Newform::B, limit);
    nf.c = newform_coeffs(Newform::C, limit);
  }

  std::vector<std::vector<ReportEntry>> parts(primes.size());
  std::vector<std::exception_ptr> errors(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        run_prime(info, primes[i], N, nf, parts[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(threads), primes.size());
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<ReportEntry> all;
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  return all;
}

}  // namespace

std::string ReportEntry::status_text() const {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip(" + reason + ")";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const SuiteInfo& s : suites()) v.push_back(s.name);
    return v;
  }();
  return names;
}

int default_precision(std::string_view suite) { return find_suite(suite).default_precision; }

long min_prime(std::string_view suite) { return find_suite(suite).min_prime; }

std::vector<ReportEntry> run_suite(std::string_view name, long p_min, long p_max, int N,
                                   int threads) {
  return run(find_suite(name), p_min, p_max, N, threads);
}

std::vector<ReportEntry> run_cor43(long p_min, long p_max, int N, int threads) {
  return run(find_suite("cor43"), p_min, p_max, N, threads);
}

bool any_failed(std::span<const ReportEntry> entries) {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.status == Status::Fail; });
}

Counts count_entries(std::span<const ReportEntry> entries) {
  Counts c;
  for (const ReportEntry& e : entries) {
    switch (e.status) {
      case Status::Pass: ++c.pass; break;
      case Status::Fail: ++c.fail; break;
      case Status::Skip: ++c.skip; break;
    }
  }
  return c;
}

}  // namespace padichyp
