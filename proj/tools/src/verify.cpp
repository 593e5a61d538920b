#include "verify.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>

#include "padic_ell/exact.hpp"
#include "padic_ell/gamma_g.hpp"
#include "padic_ell/measures.hpp"

namespace padic_ell::cli {
namespace {

int parse_int(const std::string& s, const std::string& whole) {
  int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw std::invalid_argument("malformed range '" + whole + "' (expected a..b)");
  return v;
}

CongruenceRecord record(std::string claim, std::vector<std::pair<std::string, std::string>> params,
                        int observed, int required) {
  return {std::move(claim), std::move(params), observed, required, observed >= required};
}

std::string str(i64 v) { return std::to_string(v); }

Range pick(const std::optional<Range>& r, int lo, int hi) { return r ? *r : Range{lo, hi}; }

VerifyReport interpolation(const VerifyConfig& cfg) {
  VerifyReport rep;
  Range n = pick(cfg.n, 1, 8);
  EllContext ctx(cfg.p, cfg.chi, cfg.prec, cfg.guard);
  for (int i = std::max(n.lo, 1); i <= n.hi; ++i) {
    auto v = ell_p(ctx.scalar(1 - i), ctx);
    auto e = ExtElement::embed(ctx.ring(), epsilon(i, ctx.chi(), cfg.p));
    rep.records.push_back(record("l(1-n, chi) = eps_{n,chi}",
                                 {{"p", str(cfg.p)}, {"chi", ctx.chi().to_string()}, {"n", str(i)}},
                                 congruence_depth(v.value, e), v.certified_precision));
  }
  return rep;
}

VerifyReport kummer(const VerifyConfig& cfg) {
  VerifyReport rep;
  Range k = pick(cfg.k, 1, 3);
  Range n = pick(cfg.n, 1, 6);
  const DirichletChar chi = cfg.chi.primitivize();
  const int c = static_cast<int>(cfg.p) - 1;
  for (int kk = std::max(k.lo, 1); kk <= k.hi; ++kk)
    for (int nn = std::max(n.lo, 1); nn <= n.hi; ++nn) {
      rep.records.push_back(kummer_delta_check(chi, nn, kk, c, cfg.p));
      rep.records.push_back(kummer_refined_check(chi, nn, nn + c, kk, c, cfg.p));
      if (nn >= kk) rep.records.push_back(euler_delta_check(chi, nn, kk, cfg.p));
    }
  if (!k.empty())
    for (int nn = std::max(n.lo, 1); nn <= n.hi; ++nn) rep.records.push_back(c_n_check(chi, nn, cfg.p));
  return rep;
}

VerifyReport reflection(const VerifyConfig& cfg) {
  VerifyReport rep;
  EllContext ctx(cfg.p, cfg.chi, cfg.prec, cfg.guard);
  const u64 F = ctx.modulus();
  const u64 mod = nt::ipow(cfg.p, cfg.prec);
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    const u64 r = rng() % mod;
    auto s = PadicElement::from_residue(cfg.p, cfg.prec, r);
    for (u64 a = 1; a < F; ++a) {
      if (a % cfg.p == 0) continue;
      auto h1 = washington_H(s, static_cast<i64>(a), ctx);
      auto h2 = washington_H(s, static_cast<i64>(F - a), ctx);
      rep.records.push_back(record("H(s, a, F) = H(s, F-a, F)",
                                   {{"p", str(cfg.p)}, {"F", str(F)}, {"s", s.to_string()}, {"a", str(a)}},
                                   congruence_depth(h1, h2), cfg.prec - cfg.guard));
    }
  }
  rep.vacuous = cfg.samples <= 0;
  return rep;
}

VerifyReport gamma_equations(const VerifyConfig& cfg) {
  VerifyReport rep;
  EllContext ctx(cfg.p, cfg.chi, cfg.prec, cfg.guard);
  const u64 F = ctx.modulus();
  const u64 p = cfg.p;
  const int req = cfg.prec - cfg.guard;
  const int g = cfg.guard;
  for (u64 a = 1; a < F; ++a) {
    if (a % p == 0) continue;
    auto x = PadicElement::from_rational(p, cfg.prec, BigRational(BigInt(a), BigInt(F)));
    auto one = ctx.scalar(1);
    auto two_x_log = ctx.scalar(2) * x * (log_iwasawa(x, g) - one);
    const std::vector<std::pair<std::string, std::string>> params{
        {"p", str(p)}, {"x", std::to_string(a) + "/" + std::to_string(F)}};
    auto gx = G(x, g);
    rep.records.push_back(record("G(x) + G(1-x) = 0", params,
                                 congruence_depth(gx + G(one - x, g), PadicElement::zero(p)), req));
    rep.records.push_back(record("G(x) - G(-x) = 2x(log x - 1)", params,
                                 congruence_depth(gx - G(-x, g), two_x_log), req));
    rep.records.push_back(record("G(1+x) + G(x) = 2x(log x - 1)", params,
                                 congruence_depth(G(one + x, g) + gx, two_x_log), req));
    rep.records.push_back(record("G series = G limit", params,
                                 congruence_depth(gx, G_limit_oracle(x, cfg.level, g)), cfg.level - g));
  }
  return rep;
}

VerifyReport measures(const VerifyConfig& cfg) {
  VerifyReport rep;
  Range n = pick(cfg.n, 1, 6);
  EllContext ctx(cfg.p, cfg.chi, cfg.prec, cfg.guard);
  const DirichletChar& chi = ctx.chi();
  const auto& ring = ctx.ring();
  const int M = cfg.level;
  const int req = M - cfg.guard;
  for (int i = std::max(n.lo, 1); i <= n.hi; ++i) {
    const std::vector<std::pair<std::string, std::string>> params{
        {"p", str(cfg.p)}, {"chi", chi.to_string()}, {"n", str(i)}, {"M", str(M)}};
    auto on_x = char_integral(i, chi, ring, M, Domain::X);
    auto on_px = char_integral(i, chi, ring, M, Domain::pX);
    auto on_units = char_integral(i, chi, ring, M, Domain::Xstar);
    auto e = generalized_euler_number(i, chi);
    auto chi_p = embed_char_value(ring, chi, static_cast<i64>(cfg.p));
    auto pn = ExtElement::from_int(ring, static_cast<i64>(nt::ipow(cfg.p, i)));
    auto ee = ExtElement::embed(ring, e);
    rep.records.push_back(record("int_X chi x^n = E_{n,chi}", params, congruence_depth(on_x, ee), req));
    rep.records.push_back(record("int_X = int_pX + int_X*", params,
                                 congruence_depth(on_x, on_px + on_units), cfg.prec));
    rep.records.push_back(record("int_X* chi x^n = (1 - chi(p) p^n) E_{n,chi}", params,
                                 congruence_depth(on_units, ee - chi_p * pn * ee), req));
    auto s = ctx.scalar(1 - i);
    auto meas = ell_p_measure(s, ctx, M);
    rep.records.push_back(record("measure form = Witt partial sum", params,
                                 congruence_depth(meas, ell_p_witt(s, ctx, M)), cfg.prec));
    rep.records.push_back(record("measure form at 1-n = eps_{n,chi}", params,
                                 congruence_depth(meas, ExtElement::embed(ring, epsilon(i, chi, cfg.p))), req));
  }
  return rep;
}

VerifyReport derivative(const VerifyConfig& cfg) {
  VerifyReport rep;
  Range j = pick(cfg.k, 3, 5);
  EllContext ctx(cfg.p, cfg.chi, cfg.prec, cfg.guard);
  if (j.empty()) return rep;
  auto d = ell_derivative_0(ctx);
  auto l0 = ell_p(ctx.scalar(0), ctx);
  rep.records.push_back(record("l(0, chi) = eps_{1,chi}", {{"p", str(cfg.p)}, {"chi", ctx.chi().to_string()}},
                               congruence_depth(l0.value, ExtElement::embed(ctx.ring(), epsilon(1, ctx.chi(), cfg.p))),
                               l0.certified_precision));
  for (int jj = std::max(j.lo, 1); jj <= j.hi; ++jj) {
    if (jj > cfg.prec - 4) throw std::invalid_argument("derivative: step exponent j must be <= N - 4");
    auto h = ctx.scalar(static_cast<i64>(nt::ipow(cfg.p, jj)));
    auto q = (ell_p(h, ctx).value - l0.value) / h;
    rep.records.push_back(record("l'(0) = (l(h) - l(0)) / h, h = p^j",
                                 {{"p", str(cfg.p)}, {"chi", ctx.chi().to_string()}, {"j", str(jj)}},
                                 congruence_depth(q, d.value), jj - cfg.guard));
  }
  return rep;
}

}  // namespace

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = parse_int(text, text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), text), parse_int(text.substr(dots + 2), text)};
}

int VerifyReport::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"interpolation", "kummer", "reflection",
                                              "gamma-functional-equations", "measures", "derivative"};
  return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
  VerifyReport rep;
  if (suite == "interpolation") rep = interpolation(cfg);
  else if (suite == "kummer") rep = kummer(cfg);
  else if (suite == "reflection") rep = reflection(cfg);
  else if (suite == "gamma-functional-equations") rep = gamma_equations(cfg);
  else if (suite == "measures") rep = measures(cfg);
  else if (suite == "derivative") rep = derivative(cfg);
  else throw std::invalid_argument("unknown verify suite '" + suite + "'");
  rep.suite = suite;
  if (rep.records.empty()) rep.vacuous = true;
  return rep;
}

}  // namespace padic_ell::cli
