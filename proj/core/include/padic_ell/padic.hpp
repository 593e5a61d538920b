#pragma once

// Fixed-precision p-adic numbers in the capped-relative model.
//
// A PadicElement is u * p^v with u a unit known modulo p^r (r = relative
// precision), i.e. the value is known modulo p^{v+r}. Sums lose relative
// digits on cancellation and report it; products and quotients keep
// min(r_a, r_b). A value with no known nonzero digit is O(p^k) (r = 0,
// v = k). The exact zero has v = kInfinity.

#include <climits>
#include <string>
#include <vector>

#include "padic_ell/bigrational.hpp"
#include "padic_ell/modular.hpp"

namespace padic_ell {

class PadicElement {
 public:
  static constexpr int kInfinity = INT_MAX;

  /// Exact zero.
  static PadicElement zero(u64 p);
  /// O(p^abs_prec).
  static PadicElement big_oh(u64 p, int abs_prec);
  static PadicElement from_int(u64 p, int rel_prec, i64 value);
  static PadicElement from_bigint(u64 p, int rel_prec, const BigInt& value);
  static PadicElement from_rational(u64 p, int rel_prec, const BigRational& value);
  /// p^shift * residue, where residue is known modulo p^digits.
  static PadicElement from_residue(u64 p, int digits, u64 residue, int shift = 0);

  u64 prime() const { return p_; }
  int valuation() const { return val_; }
  int relative_precision() const { return prec_; }
  /// v + r; kInfinity for the exact zero.
  int absolute_precision() const;
  u64 unit() const { return unit_; }
  bool is_exact_zero() const { return val_ == kInfinity; }
  /// No nonzero digit is known (exact zero or O(p^k)).
  bool is_zero() const { return prec_ == 0; }

  /// Value mod p^k as an integer in [0, p^k). Requires v >= 0 and
  /// k <= absolute_precision().
  u64 residue(int k) const;
  /// Base-p digits of the unit part, least significant first.
  std::vector<u64> unit_digits() const;
  /// Drops known digits so that absolute precision is at most abs_prec.
  PadicElement truncate(int abs_prec) const;

  PadicElement operator-() const;
  friend PadicElement operator+(const PadicElement& a, const PadicElement& b);
  friend PadicElement operator-(const PadicElement& a, const PadicElement& b) { return a + (-b); }
  friend PadicElement operator*(const PadicElement& a, const PadicElement& b);
  /// Throws std::domain_error when b has no known nonzero digit.
  friend PadicElement operator/(const PadicElement& a, const PadicElement& b);
  PadicElement& operator+=(const PadicElement& o) { return *this = *this + o; }
  PadicElement& operator-=(const PadicElement& o) { return *this = *this - o; }
  PadicElement& operator*=(const PadicElement& o) { return *this = *this * o; }

  PadicElement pow(i64 e) const;

  /// Valuation of a - b, capped by the precision at which it is known.
  friend int congruence_depth(const PadicElement& a, const PadicElement& b);

  /// "p^v * (d0 + d1*p + d2*p^2 + ...)"; "0" for exact zero, "O(p^k)" otherwise.
  std::string to_string() const;

 private:
  PadicElement(u64 p, int val, int prec, u64 unit) : p_(p), val_(val), prec_(prec), unit_(unit) {}
  static void check_prime(u64 p);

  u64 p_ = 3;
  int val_ = kInfinity;
  int prec_ = 0;
  u64 unit_ = 0;
};

/// omega(a) = lim a^{p^n}, computed as a^{p^{N-1}} mod p^N. Rejects p | a.
PadicElement teichmuller(i64 a, u64 p, int prec);
/// <a> = omega(a)^{-1} a, a principal unit. Rejects p | a.
PadicElement angle(i64 a, u64 p, int prec);

/// log of a principal unit u = 1 mod p; the series is truncated once the
/// tail valuation reaches abs_prec(u) + guard. Throws std::domain_error off
/// 1 + pZ_p.
PadicElement log_p(const PadicElement& u, int guard = 2);
/// Iwasawa logarithm on Q_p^x: log_p(p) = 0 and log_p(root of unity) = 0,
/// i.e. log_p(p^v w u') = log_p(u') for the principal-unit part u'.
PadicElement log_iwasawa(const PadicElement& x, int guard = 2);
/// exp on pZ_p; throws std::domain_error when v_p(z) < 1.
PadicElement exp_p(const PadicElement& z, int guard = 2);

/// <a>^s via exp(s log_p <a>), for s in Z_p.
PadicElement pow_angle(i64 a, const PadicElement& s, u64 p, int prec, int guard = 2);
/// u^y for a principal unit u and y in Z_p, using the integer representative
/// of y modulo p^{k-1}: exact square-and-multiply, no series.
PadicElement pow_principal_unit(const PadicElement& u, const PadicElement& y);

/// C(y, k) = y (y-1) ... (y-k+1) / k! for y in Z_p.
PadicElement binom_padic(const PadicElement& y, int k);
/// Same for an exact integer y, computed in Z and then reduced.
PadicElement binom_padic(i64 y, int k, u64 p, int prec);

namespace kernel {

/// log(1 + z) mod p^digits for an integer lift z of an element with
/// v_p(z) >= 1, z known mod p^digits.
u64 log_one_plus(u64 z, u64 p, int digits, int guard);
/// exp(z) mod p^digits for v_p(z) >= 1.
u64 exp_residue(u64 z, u64 p, int digits, int guard);

}  // namespace kernel

}  // namespace padic_ell
