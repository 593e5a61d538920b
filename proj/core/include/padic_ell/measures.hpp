#pragma once

// Euler measures and the fermionic measure mu_{-1} on X = lim Z/d p^M.
// Integrals are level-M Riemann sums; their limits are not taken here.

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "padic_ell/dirichlet.hpp"
#include "padic_ell/euler_ell.hpp"
#include "padic_ell/ext_ring.hpp"

namespace padic_ell {

/// The cell a + d p^M Z_p of X, 0 <= a < d p^M.
struct CompactOpen {
  u64 p;
  u64 d;
  int level;
  u64 residue;

  /// Throws std::invalid_argument when residue is out of range.
  static CompactOpen make(u64 p, u64 d, int level, u64 residue);
  bool in_units() const { return residue % p != 0; }
};

/// X, pX and X* = X \ pX (with d = 1 these are Z_p, pZ_p, Z_p^x).
enum class Domain { X, pX, Xstar };

Domain parse_domain(const std::string& text);
std::string to_string(Domain domain);

/// a -> zeta_L^e(a) * r(a), where r(a) is a residue mod p^digits; a rule
/// returning nullopt means f(a) = 0.
struct LocallyDefinedFunction {
  using Rule = std::function<std::optional<std::pair<u64, u64>>(u64)>;
  u64 order;
  int digits;
  Rule rule;
  std::string descriptor;
};

/// a -> a^n.
LocallyDefinedFunction monomial(int n, u64 p, int digits);
/// a -> (x + a)^n for a p-integral rational x.
LocallyDefinedFunction shifted_monomial(int n, const BigRational& x, u64 p, int digits);
/// a -> chi(a) a^n.
LocallyDefinedFunction char_monomial(const DirichletChar& chi, int n, u64 p, int digits);
/// a -> chi(a) <a>^{1-s} for p !| a (zero on pX).
LocallyDefinedFunction char_angle_power(const DirichletChar& chi, const PadicElement& s, int digits);

/// mu_{n,E}(a + p^M Z_p) = (-1)^a p^{nM} E_n(a / p^M). Requires d = 1, n >= 1.
BigRational euler_measure(int n, const CompactOpen& cell);

/// sum_{0 <= a < d p^M, a in domain} (-1)^a f(a), embedded in the ring
/// (whose root order must be a multiple of f.order).
ExtElement fermionic_integral(const LocallyDefinedFunction& f, const ExtRingPtr& ring, int level, Domain domain,
                              u64 d = 1);

/// Level-M sum of chi(x) x^n over the domain with d = f_chi.
ExtElement char_integral(int n, const DirichletChar& chi, const ExtRingPtr& ring, int level, Domain domain);

/// l_{p,E}(s, chi) as the level-M integral of chi(x) <x>^{1-s} over X*.
ExtElement ell_p_measure(const PadicElement& s, const EllContext& ctx, int level);

}  // namespace padic_ell
