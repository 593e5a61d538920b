#include "padic_ell/euler_ell.hpp"

#include <algorithm>
#include <stdexcept>

#include "padic_ell/euler.hpp"
#include "padic_ell/gamma_g.hpp"

namespace padic_ell {

namespace {

constexpr int kInf = BigRational::kInfiniteValuation;

void check_prime(u64 p) {
  if (p < 3 || !nt::is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

// Sums per character class: the value is sum_e zeta_L^e * sums[e].
ExtElement combine_classes(const ExtRingPtr& ring, u64 order, const std::vector<PadicElement>& sums) {
  ExtElement total = ExtElement::zero(ring);
  for (size_t e = 0; e < sums.size(); ++e) {
    if (sums[e].is_exact_zero()) continue;
    total += ExtElement::root_power(ring, order, static_cast<i64>(e)) * sums[e];
  }
  return total;
}

// log(1 + z) mod p^digits for v_p(z) >= 1, with per-k constants precomputed.
class LogKernel {
 public:
  LogKernel(u64 p, int digits, int guard)
      : p_(p), out_(nt::ipow(p, digits)), out_ring_(out_) {
    u64 k0 = 1;
    auto floor_log = [p](u64 k) {
      int e = 0;
      for (; k >= p; k /= p) ++e;
      return e;
    };
    while (static_cast<i64>(k0) - floor_log(k0) < digits + guard) ++k0;
    const int extra = k0 > 1 ? floor_log(k0 - 1) : 0;
    if (digits + extra > nt::max_digits(p)) throw std::overflow_error("LogKernel: precision too large");
    work_ = std::make_unique<nt::MontgomeryRing>(nt::ipow(p, digits + extra));
    for (u64 k = 1; k < k0; ++k) {
      const int e = nt::valuation(k, p);
      const u64 pe = nt::ipow(p, e);
      pe_.push_back(pe);
      u64 inv = nt::invmod((k / pe) % out_, out_);
      if (k % 2 == 0) inv = nt::submod(0, inv, out_);
      inv_.push_back(out_ring_.to_mont(inv));
    }
  }

  u64 operator()(u64 z) const {
    const auto& w = *work_;
    const u64 zm = w.to_mont(z);
    u64 zk = w.one();
    u64 sum = 0;
    for (size_t i = 0; i < pe_.size(); ++i) {
      zk = w.mul(zk, zm);
      const u64 t = (w.from_mont(zk) / pe_[i]) % out_;
      sum = out_ring_.add(sum, out_ring_.mul(t, inv_[i]));
    }
    return sum;  // mul(t, mont(inv)) = t * inv in normal form
  }

 private:
  u64 p_;
  u64 out_;
  nt::MontgomeryRing out_ring_;
  std::unique_ptr<nt::MontgomeryRing> work_;
  std::vector<u64> pe_;
  std::vector<u64> inv_;
};

std::string num(i64 v) { return std::to_string(v); }

CongruenceRecord make_record(std::string claim, std::vector<std::pair<std::string, std::string>> params,
                             int observed, int required) {
  return {std::move(claim), std::move(params), observed, required, observed >= required};
}

}  // namespace

EllContext::EllContext(u64 p, const DirichletChar& chi, int prec, int guard, u64 modulus)
    : p_(p), prec_(prec), guard_(guard), chi_(chi.primitivize()), modulus_(modulus) {
  check_prime(p);
  if (guard < 0 || prec < guard + 2) throw std::invalid_argument("EllContext: need precision >= guard + 2");
  const u64 f = chi_.conductor();
  if (f % 2 == 0) throw std::invalid_argument("EllContext: conductor must be odd");
  if (modulus_ == 0) modulus_ = nt::lcm(f, p);
  if (modulus_ % 2 == 0 || modulus_ % p != 0 || modulus_ % f != 0)
    throw std::invalid_argument("EllContext: F must be an odd multiple of p and the conductor");
  const u64 order = ring_order_for(chi_, p);
  if (order % p == 0)
    throw std::invalid_argument("EllContext: p divides the order of chi; values lie in a ramified extension");
  ring_ = ExtRing::make(p, prec, order);
}

EllContext EllContext::with_chi(const DirichletChar& chi) const { return EllContext(p_, chi, prec_, guard_); }

EllContext EllContext::with_modulus(u64 modulus) const {
  return EllContext(p_, chi_, prec_, guard_, modulus);
}

CycRational epsilon(int n, const DirichletChar& chi, u64 p) {
  check_prime(p);
  if (n < 0) throw std::invalid_argument("epsilon: n must be >= 0");
  const DirichletChar chi_n = twist_teichmuller(chi, n, p);
  CycRational e = generalized_euler_number(n, chi_n);
  const int order = static_cast<int>(chi_n.order());
  auto at_p = chi_n.evaluate(static_cast<i64>(p));
  if (!at_p) return e;
  BigRational pn = pow(BigRational(static_cast<unsigned long>(p)), static_cast<unsigned>(n));
  return e - CycRational::root_power(order, static_cast<i64>(*at_p)) * pn * e;
}

namespace {

// Inputs to H_p(s, a, F) shared across a: C(1-s, k) and E_k.
struct WashingtonSeries {
  PadicElement one_minus_s;
  std::vector<PadicElement> terms;  // C(1-s, k) E_k

  WashingtonSeries(const PadicElement& s, const EllContext& ctx)
      : one_minus_s(ctx.scalar(1) - s) {
    if (!one_minus_s.is_exact_zero() && one_minus_s.valuation() < 0)
      throw std::domain_error("l_{p,E}: s must lie in Z_p");
    const int k_max = ctx.precision() + ctx.guard();
    auto table = default_euler_cache().get(k_max);
    for (int k = 0; k < k_max; ++k) {
      const BigRational& e = (*table)[k];
      if (e.is_zero()) {
        terms.push_back(PadicElement::zero(ctx.prime()));
      } else {
        terms.push_back(binom_padic(one_minus_s, k) * ctx.scalar(e));
      }
    }
  }

  PadicElement eval(i64 a, u64 modulus, const EllContext& ctx) const {
    const u64 p = ctx.prime();
    if (nt::reduce_signed(a, p) == 0) throw std::domain_error("H_p: p divides a");
    const PadicElement ratio = ctx.scalar(BigRational(BigInt(static_cast<unsigned long>(modulus)), BigInt(static_cast<long>(a))));
    PadicElement sum = PadicElement::zero(p);
    PadicElement power = ctx.scalar(1);
    for (const auto& t : terms) {
      if (!t.is_exact_zero()) sum += t * power;
      power *= ratio;
    }
    return pow_angle(a, one_minus_s, p, ctx.precision(), ctx.guard()) * sum;
  }
};

}  // namespace

PadicElement washington_H(const PadicElement& s, i64 a, u64 modulus, const EllContext& ctx) {
  if (modulus % ctx.prime() != 0) throw std::invalid_argument("H_p: F must be a multiple of p");
  return WashingtonSeries(s, ctx).eval(a, modulus, ctx);
}

PadicElement washington_H(const PadicElement& s, i64 a, const EllContext& ctx) {
  return washington_H(s, a, ctx.modulus(), ctx);
}

EllValue ell_p(const PadicElement& s, const EllContext& ctx) {
  const WashingtonSeries series(s, ctx);
  const u64 p = ctx.prime();
  const auto& chi = ctx.chi();
  std::vector<PadicElement> classes(chi.order(), PadicElement::zero(p));
  for (u64 a = 1; a <= ctx.modulus(); ++a) {
    if (a % p == 0) continue;
    auto e = chi.evaluate(static_cast<i64>(a));
    if (!e) continue;
    PadicElement h = series.eval(static_cast<i64>(a), ctx.modulus(), ctx);
    classes[*e] = (a % 2 == 0) ? classes[*e] + h : classes[*e] - h;
  }
  ExtElement value = combine_classes(ctx.ring(), chi.order(), classes);
  return {value, std::min(value.absolute_precision(), ctx.precision() - ctx.guard())};
}

std::vector<ExtElement> ell_p_witt_levels(const PadicElement& s, const EllContext& ctx,
                                          const std::vector<int>& levels) {
  const u64 p = ctx.prime();
  const auto& chi = ctx.chi();
  const PadicElement y = ctx.scalar(1) - s;
  if (!y.is_exact_zero() && y.valuation() < 0) throw std::domain_error("l_{p,E}: s must lie in Z_p");
  if (!std::is_sorted(levels.begin(), levels.end()) || (!levels.empty() && levels.front() < 0))
    throw std::invalid_argument("ell_p_witt: levels must be ascending and >= 0");

  // <a>^y = a^Y omega(a)^{-Y} with Y = y mod p^{K-1}; omega depends on a mod p.
  const int digits = y.is_exact_zero() ? ctx.precision() : std::min(ctx.precision(), y.absolute_precision() + 1);
  const u64 mod = nt::ipow(p, digits);
  const u64 exponent = y.residue(std::min(digits - 1, y.absolute_precision()));
  const nt::MontgomeryRing mr(mod);

  const u64 f = chi.modulus();
  const auto table = chi.table();
  const size_t order = chi.order();
  std::vector<u64> omega_pow(p, 0);
  for (u64 r = 1; r < p; ++r) {
    const u64 w = teichmuller(static_cast<i64>(r), p, digits).residue(digits);
    const u64 winv = nt::invmod(w, mod);
    omega_pow[r] = nt::powmod(winv, exponent % (p - 1), mod);
  }

  std::vector<u64> sums(order * p, 0);  // Montgomery form, index e * p + (a mod p)
  std::vector<ExtElement> out;
  u64 a = 0;
  u64 a_mod_f = 0;
  u64 a_mod_p = 0;
  for (int level : levels) {
    const u64 bound = f * nt::ipow(p, level);
    for (; a < bound;) {
      ++a;
      if (++a_mod_f == f) a_mod_f = 0;
      if (++a_mod_p == p) a_mod_p = 0;
      if (a_mod_p == 0) continue;
      const int e = table[a_mod_f];
      if (e == DirichletChar::kZero) continue;
      const u64 term = mr.pow(mr.to_mont(a), exponent);
      u64& slot = sums[static_cast<size_t>(e) * p + a_mod_p];
      slot = (a & 1) ? mr.sub(slot, term) : mr.add(slot, term);
    }
    std::vector<PadicElement> classes(order, PadicElement::zero(p));
    for (size_t e = 0; e < order; ++e) {
      u64 c = 0;
      for (u64 r = 1; r < p; ++r)
        c = nt::addmod(c, nt::mulmod(mr.from_mont(sums[e * p + r]), omega_pow[r], mod), mod);
      classes[e] = PadicElement::from_residue(p, digits, c);
    }
    out.push_back(combine_classes(ctx.ring(), order, classes));
  }
  return out;
}

ExtElement ell_p_witt(const PadicElement& s, const EllContext& ctx, int level) {
  return ell_p_witt_levels(s, ctx, {level}).front();
}

std::vector<EllValue> series_coeffs(const EllContext& ctx, int n_max, int level) {
  const u64 p = ctx.prime();
  const auto& chi = ctx.chi();
  if (chi.is_trivial()) throw std::invalid_argument("series_coeffs: chi must be non-trivial");
  if (chi.conductor() % (p * p) == 0) throw std::invalid_argument("series_coeffs: requires p^2 not dividing f");
  if (n_max < 0 || level < 1) throw std::invalid_argument("series_coeffs: need n_max >= 0 and level >= 1");

  // log<a> = log(a^{p-1}) / (p-1) = p * lambda; accumulate lambda^n.
  const int digits = ctx.precision();
  const u64 mod = nt::ipow(p, digits);
  const u64 mod1 = nt::ipow(p, digits + 1);
  const LogKernel log_kernel(p, digits + 1, ctx.guard());
  const u64 inv_pm1 = nt::invmod((p - 1) % mod1, mod1);
  const nt::MontgomeryRing mr(mod);
  const size_t order = chi.order();
  const auto table = chi.table();
  const u64 f = chi.modulus();
  std::vector<u64> sums((static_cast<size_t>(n_max) + 1) * order, 0);  // [n * order + e], Montgomery form

  const u64 bound = f * nt::ipow(p, level);
  for (u64 a = 1; a <= bound; ++a) {
    if (a % p == 0) continue;
    const int e = table[a % f];
    if (e == DirichletChar::kZero) continue;
    const u64 u = nt::powmod(a % mod1, p - 1, mod1);
    const u64 log_a = nt::mulmod(log_kernel(nt::submod(u, 1, mod1)), inv_pm1, mod1);
    const u64 lambda = mr.to_mont((log_a / p) % mod);
    u64 power = mr.one();
    for (int n = 0; n <= n_max; ++n) {
      u64& slot = sums[static_cast<size_t>(n) * order + static_cast<size_t>(e)];
      slot = (a & 1) ? mr.sub(slot, power) : mr.add(slot, power);
      power = mr.mul(power, lambda);
    }
  }

  std::vector<EllValue> out;
  const int certified = level - ctx.guard();
  for (int n = 0; n <= n_max; ++n) {
    std::vector<PadicElement> classes(order, PadicElement::zero(p));
    for (size_t e = 0; e < order; ++e)
      classes[e] = PadicElement::from_residue(p, digits, mr.from_mont(sums[static_cast<size_t>(n) * order + e]), n);
    ExtElement v = combine_classes(ctx.ring(), order, classes) /
                   PadicElement::from_bigint(p, digits, factorial(static_cast<unsigned long>(n)));
    out.push_back({v, std::min(v.absolute_precision(), certified)});
  }
  return out;
}

EllValue ell_derivative_0(const EllContext& ctx) {
  const u64 p = ctx.prime();
  const u64 big_f = ctx.modulus();
  const DirichletChar chi1 = twist_teichmuller(ctx.chi(), 1, p);
  std::vector<PadicElement> classes(chi1.order(), PadicElement::zero(p));
  for (u64 a = 1; a <= big_f; ++a) {
    if (a % p == 0) continue;
    auto e = chi1.evaluate(static_cast<i64>(a));
    if (!e) continue;
    PadicElement g = G(ctx.scalar(BigRational(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(big_f)))),
                       ctx.guard());
    // (-1)^{a+1}
    classes[*e] = (a % 2 == 1) ? classes[*e] + g : classes[*e] - g;
  }
  const PadicElement f_scalar = ctx.scalar(static_cast<i64>(big_f));
  ExtElement first = combine_classes(ctx.ring(), chi1.order(), classes) * f_scalar;
  const EllValue at_zero = ell_p(ctx.scalar(0), ctx);
  const PadicElement factor = ctx.scalar(1) + log_iwasawa(f_scalar, ctx.guard());
  ExtElement value = first - at_zero.value * factor;
  return {value, std::min(value.absolute_precision(), ctx.precision() - ctx.guard())};
}

EllValue ell_at_positive(int n, const EllContext& ctx) {
  if (n < 1) throw std::invalid_argument("ell_at_positive: n must be >= 1");
  const u64 p = ctx.prime();
  const auto& chi = ctx.chi();
  if (n == 1) {
    CycRational e0 = generalized_euler_number(0, chi);
    auto at_p = chi.evaluate(static_cast<i64>(p));
    if (at_p) e0 = e0 - CycRational::root_power(static_cast<int>(chi.order()), static_cast<i64>(*at_p)) * e0;
    ExtElement v = ExtElement::embed(ctx.ring(), e0);
    return {v, std::min(v.absolute_precision(), ctx.precision())};
  }
  const u64 pf = p * chi.conductor();
  std::vector<PadicElement> classes(chi.order(), PadicElement::zero(p));
  for (u64 a = 1; a <= pf; ++a) {
    if (a % p == 0) continue;
    auto e = chi.evaluate(static_cast<i64>(a));
    if (!e) continue;
    PadicElement d = G_deriv(n, ctx.scalar(BigRational(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(pf)))),
                             ctx.guard());
    classes[*e] = (a % 2 == 0) ? classes[*e] + d : classes[*e] - d;
  }
  // (-1)^n (pf)^{1-n} / (n-2)!
  BigRational pre = pow(BigRational(static_cast<unsigned long>(pf)), static_cast<unsigned>(n - 1));
  pre = BigRational(1) / (pre * BigRational(factorial(static_cast<unsigned long>(n - 2))));
  if (n % 2 == 1) pre = -pre;
  ExtElement value = combine_classes(ctx.ring(), chi.order(), classes) * ctx.scalar(pre);
  const int loss = static_cast<int>(nt::factorial_valuation(static_cast<u64>(n - 2), p)) + (n - 1);
  return {value, std::min(value.absolute_precision(), ctx.precision() - ctx.guard() - loss)};
}

int cyc_valuation(const CycRational& x, u64 p, int prec) {
  if (x.is_zero()) return kInf;
  auto ring = ExtRing::make(p, prec, static_cast<u64>(x.order()));
  return ExtElement::embed(ring, x).valuation();
}

namespace {

std::string chi_text(const DirichletChar& chi) { return chi.to_string(); }

CycRational delta_eps(const DirichletChar& chi, int n, int k, int c, u64 p) {
  const int order = static_cast<int>(ring_order_for(chi, p));
  auto seq = [&](int m) { return epsilon(m, chi, p).lift(order); };
  return delta_power<CycRational>(k, c, seq, n);
}

int working_precision(int required) { return std::max(16, required + 4); }

}  // namespace

CongruenceRecord kummer_delta_check(const DirichletChar& chi, int n, int k, int c, u64 p) {
  check_prime(p);
  if (c < 1 || c % static_cast<int>(p - 1) != 0) throw std::invalid_argument("kummer_delta_check: c must be a positive multiple of p-1");
  if (n < 1 || k < 1) throw std::invalid_argument("kummer_delta_check: n and k must be >= 1");
  const auto prim = chi.primitivize();
  const int v = cyc_valuation(delta_eps(prim, n, k, c, p), p, working_precision(k));
  return make_record("Delta_c^k eps_{n,chi} = 0 mod p^k",
                     {{"chi", chi_text(prim)}, {"p", num(static_cast<i64>(p))}, {"n", num(n)}, {"k", num(k)}, {"c", num(c)}},
                     v, k);
}

CongruenceRecord kummer_refined_check(const DirichletChar& chi, int n, int n2, int k, int c, u64 p) {
  check_prime(p);
  if (c < 1 || c % static_cast<int>(p - 1) != 0) throw std::invalid_argument("kummer_refined_check: c must be a positive multiple of p-1");
  if ((n - n2) % static_cast<int>(p - 1) != 0) throw std::invalid_argument("kummer_refined_check: n and n' must agree mod p-1");
  if (n < 1 || n2 < 1 || k < 1) throw std::invalid_argument("kummer_refined_check: n, n', k must be >= 1");
  const auto prim = chi.primitivize();
  const CycRational diff = delta_eps(prim, n, k, c, p) - delta_eps(prim, n2, k, c, p);
  const int v = cyc_valuation(diff, p, working_precision(k + 1));
  return make_record("Delta_c^k eps_{n,chi} = Delta_c^k eps_{n',chi} mod p^{k+1}",
                     {{"chi", chi_text(prim)}, {"p", num(static_cast<i64>(p))}, {"n", num(n)}, {"n'", num(n2)},
                      {"k", num(k)}, {"c", num(c)}},
                     v, k + 1);
}

CongruenceRecord euler_delta_check(const DirichletChar& chi, int n, int k, u64 p) {
  check_prime(p);
  if (k < 1 || n < k) throw std::invalid_argument("euler_delta_check: need 1 <= k <= n");
  const auto prim = chi.primitivize();
  auto seq = [&](int m) { return generalized_euler_number(m, prim); };
  const CycRational d = delta_power<CycRational>(k, static_cast<int>(p - 1), seq, n);
  const int v = cyc_valuation(d, p, working_precision(k));
  return make_record("Delta_{p-1}^k E_{n,chi} = 0 mod p^k",
                     {{"chi", chi_text(prim)}, {"p", num(static_cast<i64>(p))}, {"n", num(n)}, {"k", num(k)}}, v, k);
}

CongruenceRecord c_n_check(const DirichletChar& chi, int n, u64 p) {
  check_prime(p);
  if (n < 0) throw std::invalid_argument("c_n_check: n must be >= 0");
  const auto prim = chi.primitivize();
  const int order = static_cast<int>(ring_order_for(prim, p));
  CycRational c = CycRational::zero(order);
  for (int i = 0; i <= n; ++i) {
    BigRational w(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)));
    if ((n - i) % 2 == 1) w = -w;
    c += epsilon(i, prim, p).lift(order) * w;
  }
  const int v = cyc_valuation(c, p, working_precision(n));
  return make_record("v_p(c_n) >= n", {{"chi", chi_text(prim)}, {"p", num(static_cast<i64>(p))}, {"n", num(n)}}, v, n);
}

CongruenceRecord kummer_classical_check(int m, int n, u64 p, int k) {
  check_prime(p);
  if (m < 0 || n < 0 || k < 0) throw std::invalid_argument("kummer_classical_check: arguments must be >= 0");
  const i64 period = static_cast<i64>(p - 1) * static_cast<i64>(nt::ipow(p, k));
  if ((m - n) % period != 0) throw std::invalid_argument("kummer_classical_check: need m = n mod (p-1)p^k");
  auto table = default_euler_cache().get(std::max(m, n));
  auto side = [&](int j) {
    return (BigRational(1) - pow(BigRational(static_cast<unsigned long>(p)), static_cast<unsigned>(j))) * (*table)[j];
  };
  const BigRational diff = side(m) - side(n);
  return make_record("(1-p^m)E_m = (1-p^n)E_n mod p^{k+1}",
                     {{"p", num(static_cast<i64>(p))}, {"m", num(m)}, {"n", num(n)}, {"k", num(k)}},
                     diff.valuation(p), k + 1);
}

CongruenceRecord euler_shift_check(int n, int big_n, int s, u64 p) {
  check_prime(p);
  if (n < 1 || n % static_cast<int>(p) == 0 || big_n < 1 || s < 0)
    throw std::invalid_argument("euler_shift_check: need gcd(n,p) = 1, N >= 1, s >= 0");
  const int hi = n * static_cast<int>(nt::ipow(p, big_n)) + s;
  const int lo = n * static_cast<int>(nt::ipow(p, big_n - 1)) + s;
  auto table = default_euler_cache().get(hi);
  const BigRational diff = (*table)[hi] - (*table)[lo];
  return make_record("E_{np^N+s} = E_{np^{N-1}+s} mod p^N",
                     {{"p", num(static_cast<i64>(p))}, {"n", num(n)}, {"N", num(big_n)}, {"s", num(s)}},
                     diff.valuation(p), big_n);
}

}  // namespace padic_ell
