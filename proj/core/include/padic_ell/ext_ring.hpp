#pragma once

// Unramified extension rings (Z/p^N)[t]/(h) hosting character values.
//
// For a root order U prime to p, the ring is Z_p[zeta_U] mod p^N, built as
// the Galois ring GR(p^N, d) with d = ord_U(p) and t = zeta_U. The
// particular U-th root is fixed so that zeta_{p-1} := t^{U/(p-1)} is the
// Teichmuller lift of the smallest primitive root g mod p (when p-1 | U).
// This makes the embedded Teichmuller character agree with teichmuller().
//
// ExtElement uses the same capped-relative model as PadicElement: value
// p^v * w where w has at least one coefficient prime to p, w known mod p^r.

#include <memory>
#include <string>
#include <vector>

#include "padic_ell/cyclotomic.hpp"
#include "padic_ell/dirichlet.hpp"
#include "padic_ell/padic.hpp"

namespace padic_ell {

class ExtRing {
 public:
  /// Ring for roots of unity of order U; throws std::invalid_argument when
  /// p | U or p is not an odd prime. Cached: equal arguments return the
  /// same object.
  static std::shared_ptr<const ExtRing> make(u64 p, int prec, u64 root_order);

  u64 prime() const { return p_; }
  int precision() const { return prec_; }
  u64 root_order() const { return order_; }
  int degree() const { return static_cast<int>(h_.size()) - 1; }
  /// Monic defining polynomial mod p^N, lowest degree first.
  const std::vector<u64>& modulus_poly() const { return h_; }

  /// a * b mod (h, p^k) on coefficient vectors of length degree().
  std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b, int k) const;
  /// Coefficients of t^e for any integer e (t has order U).
  std::vector<u64> root_power_coeffs(i64 e, int k) const;

  ExtRing(u64 p, int prec, u64 root_order);

 private:
  u64 p_;
  int prec_;
  u64 order_;
  std::vector<u64> h_;
};

using ExtRingPtr = std::shared_ptr<const ExtRing>;

/// lcm(order of chi, p-1): the root order of a ring holding chi, every
/// Teichmuller twist chi_n, and omega.
u64 ring_order_for(const DirichletChar& chi, u64 p);

class ExtElement {
 public:
  static constexpr int kInfinity = PadicElement::kInfinity;

  static ExtElement zero(ExtRingPtr ring);
  static ExtElement big_oh(ExtRingPtr ring, int abs_prec);
  static ExtElement from_scalar(ExtRingPtr ring, const PadicElement& x);
  static ExtElement from_int(ExtRingPtr ring, i64 v);
  static ExtElement from_rational(ExtRingPtr ring, const BigRational& q);
  /// zeta_L^e with L | U.
  static ExtElement root_power(ExtRingPtr ring, u64 order, i64 exponent);
  /// Image of an element of Q(zeta_L), L | U; coefficients may have p in
  /// the denominator.
  static ExtElement embed(ExtRingPtr ring, const CycRational& x);
  /// p^shift * (coefficients mod p^digits).
  static ExtElement from_coeffs(ExtRingPtr ring, int digits, std::vector<u64> coeffs, int shift = 0);

  const ExtRingPtr& ring() const { return ring_; }
  int valuation() const { return val_; }
  int relative_precision() const { return prec_; }
  int absolute_precision() const { return val_ == kInfinity ? kInfinity : val_ + prec_; }
  bool is_exact_zero() const { return val_ == kInfinity; }
  bool is_zero() const { return prec_ == 0; }
  /// Unit-part coefficients, each mod p^r.
  const std::vector<u64>& unit_coeffs() const { return coeffs_; }
  /// Coefficients of the value mod p^k (requires v >= 0, k <= abs precision).
  std::vector<u64> residue(int k) const;
  /// True when the value lies in Z_p to the known precision.
  bool is_scalar() const;
  /// The constant coefficient as a p-adic number (requires is_scalar()).
  PadicElement scalar() const;

  ExtElement truncate(int abs_prec) const;

  ExtElement operator-() const;
  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const PadicElement& s);
  friend ExtElement operator*(const PadicElement& s, const ExtElement& a) { return a * s; }
  /// Division by a p-adic scalar with a known nonzero digit.
  friend ExtElement operator/(const ExtElement& a, const PadicElement& s);
  ExtElement& operator+=(const ExtElement& o) { return *this = *this + o; }
  ExtElement& operator-=(const ExtElement& o) { return *this = *this - o; }
  ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }

  ExtElement pow(u64 e) const;

  /// Valuation of a - b, capped by the known precision.
  friend int congruence_depth(const ExtElement& a, const ExtElement& b);

  /// "p^v * [c0, c1, ...]" with decimal unit coefficients; "0" or "O(p^k)".
  std::string to_string() const;

 private:
  ExtElement(ExtRingPtr ring, int val, int prec, std::vector<u64> coeffs)
      : ring_(std::move(ring)), val_(val), prec_(prec), coeffs_(std::move(coeffs)) {}

  ExtRingPtr ring_;
  int val_ = kInfinity;
  int prec_ = 0;
  std::vector<u64> coeffs_;
};

/// Embeds chi(a) into the ring: zeta_L^{e(a)}, or exact zero when gcd(a, M) > 1.
ExtElement embed_char_value(const ExtRingPtr& ring, const DirichletChar& chi, i64 a);

namespace ffield {

/// Monic irreducible polynomial of degree d over F_p, smallest in the order
/// that compares coefficient vectors as base-p integers (c_0 least
/// significant).
std::vector<u64> smallest_irreducible(u64 p, int d);
/// Rabin irreducibility test for a monic polynomial over F_p.
bool is_irreducible(const std::vector<u64>& f, u64 p);

}  // namespace ffield

}  // namespace padic_ell
