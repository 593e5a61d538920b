#pragma once

// The p-adic Euler l-function l_{p,E}(s, chi):
//   l(1-n, chi) = eps_{n,chi} = (1 - chi_n(p) p^n) E_{n,chi_n},
// evaluated through the Washington form
//   l(s, chi) = sum_{a<=F, p!|a} (-1)^a chi(a) H_p(s, a, F),
//   H_p(s, a, F) = <a>^{1-s} sum_k C(1-s, k) (F/a)^k E_k,
// and through level-M fermionic partial sums.

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "padic_ell/cyclotomic.hpp"
#include "padic_ell/dirichlet.hpp"
#include "padic_ell/exact.hpp"
#include "padic_ell/ext_ring.hpp"
#include "padic_ell/padic.hpp"

namespace padic_ell {

/// Evaluation setup for one prime and character.
class EllContext {
 public:
  /// chi is primitivized. modulus = 0 selects F = lcm(f, p). Throws
  /// std::invalid_argument for even conductor, F not an odd multiple of p
  /// and f, or p dividing the order of chi (ramified values).
  EllContext(u64 p, const DirichletChar& chi, int prec = 12, int guard = 2, u64 modulus = 0);

  u64 prime() const { return p_; }
  int precision() const { return prec_; }
  int guard() const { return guard_; }
  const DirichletChar& chi() const { return chi_; }
  u64 modulus() const { return modulus_; }
  const ExtRingPtr& ring() const { return ring_; }

  /// Same setup for another character sharing this ring (e.g. a twist).
  EllContext with_chi(const DirichletChar& chi) const;
  EllContext with_modulus(u64 modulus) const;

  PadicElement scalar(i64 v) const { return PadicElement::from_int(p_, prec_, v); }
  PadicElement scalar(const BigRational& q) const { return PadicElement::from_rational(p_, prec_, q); }

 private:
  u64 p_;
  int prec_;
  int guard_;
  DirichletChar chi_;
  u64 modulus_;
  ExtRingPtr ring_;
};

struct EllValue {
  ExtElement value;
  /// Absolute p-adic digits certified correct.
  int certified_precision;

  ExtElement certified() const { return value.truncate(certified_precision); }
};

/// eps_{n,chi} = (1 - chi_n(p) p^n) E_{n,chi_n} in Q(zeta_L), L = order of chi_n.
CycRational epsilon(int n, const DirichletChar& chi, u64 p);

/// H_p(s, a, F) with F = ctx.modulus(); the series stops at k = N + g.
/// Throws std::domain_error when p | a.
PadicElement washington_H(const PadicElement& s, i64 a, const EllContext& ctx);
/// Same with an explicit modulus F (any multiple of p).
PadicElement washington_H(const PadicElement& s, i64 a, u64 modulus, const EllContext& ctx);

/// l_{p,E}(s, chi) for s in Z_p, certified to N - g digits.
EllValue ell_p(const PadicElement& s, const EllContext& ctx);

/// Level-M partial sum sum_{a<=f p^M, p!|a} (-1)^a chi(a) <a>^{1-s}, exact
/// mod p^N. f is the conductor of ctx.chi().
ExtElement ell_p_witt(const PadicElement& s, const EllContext& ctx, int level);
/// Partial sums at several increasing levels in one pass.
std::vector<ExtElement> ell_p_witt_levels(const PadicElement& s, const EllContext& ctx,
                                          const std::vector<int>& levels);

/// a_0..a_{n_max} with l(s) = sum_n a_n (1-s)^n, as level-M partial sums
/// of sum (-1)^a chi(a) (log_p <a>)^n / n!. Each value is certified to
/// M - g digits. Rejects trivial chi and p^2 | f.
std::vector<EllValue> series_coeffs(const EllContext& ctx, int n_max, int level);

/// l'(0, chi) = F sum_{p!|a<=F} (-1)^{a+1} chi_1(a) G(a/F) - (1 + log_p F) l(0, chi).
EllValue ell_derivative_0(const EllContext& ctx);

/// l(n, chi_{n-1}) for n >= 2 from D^n G at a/(pf):
///   ((-1)^n (pf)^{1-n} / (n-2)!) sum_{p!|a<=pf} (-1)^a chi(a) D^n G(a/(pf)),
/// and l(1, chi) = (1 - chi(p)) E_{0,chi} for n = 1.
EllValue ell_at_positive(int n, const EllContext& ctx);

/// Outcome of one congruence test. observed_valuation is kInfiniteValuation
/// for an exact zero and is capped by the working precision otherwise.
struct CongruenceRecord {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> parameters;
  int observed_valuation;
  int required_valuation;
  bool pass;
};

/// Valuation of an exact element of Q(zeta_L) via the unramified embedding
/// at precision prec (kInfiniteValuation for zero).
int cyc_valuation(const CycRational& x, u64 p, int prec = 16);

/// Delta_c^k eps_{n,chi} = 0 mod p^k. Rejects c != 0 mod p-1.
CongruenceRecord kummer_delta_check(const DirichletChar& chi, int n, int k, int c, u64 p);
/// Delta_c^k eps_{n,chi} = Delta_c^k eps_{n',chi} mod p^{k+1} for n = n' mod p-1.
CongruenceRecord kummer_refined_check(const DirichletChar& chi, int n, int n2, int k, int c, u64 p);
/// Delta_{p-1}^k E_{n,chi} = 0 mod p^k for n >= k.
CongruenceRecord euler_delta_check(const DirichletChar& chi, int n, int k, u64 p);
/// c_n = sum_i C(n,i) (-1)^{n-i} eps_{i,chi} has v_p(c_n) >= n.
CongruenceRecord c_n_check(const DirichletChar& chi, int n, u64 p);
/// (1 - p^m) E_m = (1 - p^n) E_n mod p^{k+1} for m = n mod (p-1) p^k.
CongruenceRecord kummer_classical_check(int m, int n, u64 p, int k);
/// E_{n p^N + s} = E_{n p^{N-1} + s} mod p^N for gcd(n, p) = 1.
CongruenceRecord euler_shift_check(int n, int big_n, int s, u64 p);

}  // namespace padic_ell
