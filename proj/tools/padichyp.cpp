#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padichyp/curves.hpp"
#include "padichyp/errors.hpp"
#include "padichyp/gamma.hpp"
#include "padichyp/gfunc.hpp"
#include "padichyp/modforms.hpp"
#include "padichyp/truncated.hpp"
#include "padichyp/verify.hpp"

namespace {

using namespace padichyp;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stol(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
  }
  return out;
}

void require_prime(long p) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("--p must be an odd prime");
}

struct VerifyArgs {
  std::string suite;
  long pmin = 5, pmax = 47;
  int prec = 0;
  std::string format = "summary";
  int threads = 1;
};

int cmd_verify(const VerifyArgs& a) {
  const int N = a.prec > 0 ? a.prec : default_precision(a.suite);
  const ReportFormat fmt = parse_format(a.format);
  const auto entries = run_suite(a.suite, a.pmin, a.pmax, N, a.threads);
  emit_report(entries, fmt, std::cout);
  return any_failed(entries) ? kExitFail : kExitPass;
}

int cmd_gamma(long p, int prec, const std::string& x) {
  require_prime(p);
  const PadicNum g = gamma_p(Rational::parse(x), p, prec);
  std::cout << centered_lift(g, p, prec) << '\n';
  return kExitPass;
}

int cmd_geval(long p, int prec, const std::string& upper, const std::string& lower,
              const std::string& t) {
  require_prime(p);
  const GParams params(GParams::parse_list(upper), GParams::parse_list(lower));
  const PadicNum v = eval_G(params, Rational::parse(t), p, prec);
  if (v.valuation() >= 0) std::cout << centered_lift(v, p, prec) << '\n';
  else std::cout << v << '\n';
  return kExitPass;
}

int cmd_ap(long p, const std::string& curve) {
  require_prime(p);
  const std::vector<long> c = parse_longs(curve);
  if (c.size() != 5) throw std::invalid_argument("--curve needs a1,a2,a3,a4,a6");
  std::cout << ap(WeierstrassCurve(c[0], c[1], c[2], c[3], c[4], p), p) << '\n';
  return kExitPass;
}

int cmd_fourier(const std::string& form, long limit) {
  Newform f;
  if (form == "a") f = Newform::A;
  else if (form == "b") f = Newform::B;
  else if (form == "c") f = Newform::C;
  else throw std::invalid_argument("--form must be a, b or c");
  const std::vector<BigInt> coeffs = newform_coeffs(f, limit);
  for (long n = 1; n <= limit; ++n) std::cout << n << ' ' << coeffs[static_cast<std::size_t>(n)] << '\n';
  return kExitPass;
}

int cmd_trunc(const std::string& kind, long p) {
  std::cout << trunc_sum(TruncKind::parse(kind), p).value << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic and finite-field hypergeometric functions"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite over a prime range");
  verify->add_option("suite", va.suite, "suite name")->required();
  verify->add_option("--pmin", va.pmin, "smallest prime");
  verify->add_option("--pmax", va.pmax, "largest prime");
  verify->add_option("--prec", va.prec, "precision N (default depends on the suite)");
  verify->add_option("--format", va.format, "json | csv | summary")
      ->check(CLI::IsMember({"json", "csv", "summary"}));
  verify->add_option("--threads", va.threads, "worker threads")->check(CLI::PositiveNumber);

  long p = 0;
  int prec = 2;
  std::string x, upper, lower, t, curve, form, kind;
  long limit = 0;

  auto* gamma = app.add_subcommand("gamma", "Gamma_p(x) mod p^prec, centered");
  gamma->add_option("--p", p)->required();
  gamma->add_option("--prec", prec);
  gamma->add_option("--x", x)->required();

  auto* geval = app.add_subcommand("geval", "nGn[upper; lower | t]_p, centered");
  geval->add_option("--p", p)->required();
  geval->add_option("--prec", prec);
  geval->add_option("--upper", upper)->required();
  geval->add_option("--lower", lower)->required();
  geval->add_option("--t", t)->required();

  auto* apc = app.add_subcommand("ap", "trace of Frobenius of a Weierstrass curve");
  apc->add_option("--p", p)->required();
  apc->add_option("--curve", curve, "a1,a2,a3,a4,a6")->required();

  auto* fourier = app.add_subcommand("fourier", "eta-product newform coefficients 1..limit");
  fourier->add_option("--form", form, "a | b | c")->required();
  fourier->add_option("--limit", limit)->required();

  auto* trunc = app.add_subcommand("trunc", "truncated sum mod p^2, centered");
  trunc->add_option("--kind", kind, "eq1 | eq2 | eq3 | eq4")->required();
  trunc->add_option("--p", p)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*gamma) return cmd_gamma(p, prec, x);
    if (*geval) return cmd_geval(p, prec, upper, lower, t);
    if (*apc) return cmd_ap(p, curve);
    if (*fourier) return cmd_fourier(form, limit);
    if (*trunc) return cmd_trunc(kind, p);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
