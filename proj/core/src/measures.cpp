#include "padic_ell/measures.hpp"

#include <stdexcept>

#include "padic_ell/euler.hpp"

namespace padic_ell {

CompactOpen CompactOpen::make(u64 p, u64 d, int level, u64 residue) {
  if (d == 0 || level < 0) throw std::invalid_argument("CompactOpen: need d >= 1 and level >= 0");
  if (residue >= d * nt::ipow(p, level)) throw std::invalid_argument("CompactOpen: residue out of range");
  return {p, d, level, residue};
}

Domain parse_domain(const std::string& text) {
  if (text == "X") return Domain::X;
  if (text == "pX") return Domain::pX;
  if (text == "X*" || text == "Xstar") return Domain::Xstar;
  throw std::invalid_argument("unknown domain '" + text + "' (expected X, pX or X*)");
}

std::string to_string(Domain domain) {
  switch (domain) {
    case Domain::X:
      return "X";
    case Domain::pX:
      return "pX";
    case Domain::Xstar:
      return "X*";
  }
  return "?";
}

LocallyDefinedFunction monomial(int n, u64 p, int digits) {
  if (n < 0) throw std::invalid_argument("monomial: n must be >= 0");
  const u64 mod = nt::ipow(p, digits);
  return {1, digits,
          [mod, n](u64 a) -> std::optional<std::pair<u64, u64>> {
            return std::make_pair(u64{0}, nt::powmod(a % mod, static_cast<u64>(n), mod));
          },
          "x^" + std::to_string(n)};
}

LocallyDefinedFunction shifted_monomial(int n, const BigRational& x, u64 p, int digits) {
  if (n < 0) throw std::invalid_argument("shifted_monomial: n must be >= 0");
  const u64 mod = nt::ipow(p, digits);
  const u64 xr = x.residue(mod);
  return {1, digits,
          [mod, n, xr](u64 a) -> std::optional<std::pair<u64, u64>> {
            return std::make_pair(u64{0}, nt::powmod(nt::addmod(xr, a % mod, mod), static_cast<u64>(n), mod));
          },
          "(" + x.to_string() + "+x)^" + std::to_string(n)};
}

LocallyDefinedFunction char_monomial(const DirichletChar& chi, int n, u64 p, int digits) {
  if (n < 0) throw std::invalid_argument("char_monomial: n must be >= 0");
  const u64 mod = nt::ipow(p, digits);
  return {chi.order(), digits,
          [chi, mod, n](u64 a) -> std::optional<std::pair<u64, u64>> {
            auto e = chi.evaluate(static_cast<i64>(a));
            if (!e) return std::nullopt;
            return std::make_pair(*e, nt::powmod(a % mod, static_cast<u64>(n), mod));
          },
          "chi(x) x^" + std::to_string(n) + " [" + chi.to_string() + "]"};
}

LocallyDefinedFunction char_angle_power(const DirichletChar& chi, const PadicElement& s, int digits) {
  const u64 p = s.prime();
  const PadicElement y = PadicElement::from_int(p, digits, 1) - s;
  if (!y.is_exact_zero() && y.valuation() < 0) throw std::domain_error("char_angle_power: s must lie in Z_p");
  const int k = y.is_exact_zero() ? digits : std::min(digits, y.absolute_precision() + 1);
  const u64 mod = nt::ipow(p, k);
  // <a> = a * omega(a)^{-1} = a^{1 + (p-2) p^{k-1}}, so <a>^Y is a single
  // power of a with the exponent reduced mod phi(p^k) = (p-1) p^{k-1}.
  const u64 phi = (p - 1) * nt::ipow(p, k - 1);
  const u64 big_y = y.residue(std::min(k - 1, y.absolute_precision()));
  const u64 angle_exp = (1 + (p - 2) * nt::ipow(p, k - 1)) % phi;
  const u64 exponent = static_cast<u64>((static_cast<u128>(angle_exp) * big_y) % phi);
  auto ring = std::make_shared<nt::MontgomeryRing>(mod);
  return {chi.order(), k,
          [chi, ring, exponent, p](u64 a) -> std::optional<std::pair<u64, u64>> {
            if (a % p == 0) return std::nullopt;
            auto e = chi.evaluate(static_cast<i64>(a));
            if (!e) return std::nullopt;
            return std::make_pair(*e, ring->from_mont(ring->pow(ring->to_mont(a), exponent)));
          },
          "chi(x) <x>^(1-s) [" + chi.to_string() + "]"};
}

BigRational euler_measure(int n, const CompactOpen& cell) {
  if (n < 1) throw std::invalid_argument("euler_measure: n must be >= 1");
  if (cell.d != 1) throw std::invalid_argument("euler_measure: only d = 1 cells are supported");
  const BigRational pm(BigInt(static_cast<unsigned long>(nt::ipow(cell.p, cell.level))));
  BigRational value = pow(pm, static_cast<unsigned>(n)) *
                      eval_euler_poly(n, BigRational(BigInt(static_cast<unsigned long>(cell.residue))) / pm);
  return cell.residue % 2 == 1 ? -value : value;
}

ExtElement fermionic_integral(const LocallyDefinedFunction& f, const ExtRingPtr& ring, int level, Domain domain,
                              u64 d) {
  const u64 p = ring->prime();
  if (level < 0 || d == 0) throw std::invalid_argument("fermionic_integral: need level >= 0 and d >= 1");
  if (ring->root_order() % f.order != 0)
    throw std::invalid_argument("fermionic_integral: ring cannot hold the integrand's roots of unity");
  const int digits = std::min(f.digits, ring->precision());
  const u64 mod = nt::ipow(p, digits);
  std::vector<u64> classes(f.order, 0);
  const u64 count = d * nt::ipow(p, level);
  for (u64 a = 0; a < count; ++a) {
    const bool unit = a % p != 0;
    if ((domain == Domain::pX && unit) || (domain == Domain::Xstar && !unit)) continue;
    auto v = f.rule(a);
    if (!v) continue;
    u64& slot = classes[v->first];
    slot = (a % 2 == 1) ? nt::submod(slot, v->second % mod, mod) : nt::addmod(slot, v->second % mod, mod);
  }
  ExtElement total = ExtElement::zero(ring);
  for (u64 e = 0; e < f.order; ++e) {
    if (classes[e] == 0) continue;
    total += ExtElement::root_power(ring, f.order, static_cast<i64>(e)) *
             PadicElement::from_residue(p, digits, classes[e]);
  }
  // Every summand is known mod p^digits, so the sum is too.
  return total + ExtElement::big_oh(ring, digits);
}

ExtElement char_integral(int n, const DirichletChar& chi, const ExtRingPtr& ring, int level, Domain domain) {
  const auto prim = chi.primitivize();
  return fermionic_integral(char_monomial(prim, n, ring->prime(), ring->precision()), ring, level, domain,
                            prim.conductor());
}

ExtElement ell_p_measure(const PadicElement& s, const EllContext& ctx, int level) {
  return fermionic_integral(char_angle_power(ctx.chi(), s, ctx.precision()), ctx.ring(), level, Domain::Xstar,
                            ctx.chi().conductor());
}

}  // namespace padic_ell
