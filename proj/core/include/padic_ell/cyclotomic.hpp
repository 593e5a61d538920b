#pragma once

#include <string>
#include <vector>

#include "padic_ell/bigrational.hpp"

namespace padic_ell {

/// Integer coefficients of the L-th cyclotomic polynomial, lowest degree first.
std::vector<i64> cyclotomic_polynomial(int order);

/// Element of Q(zeta_L), stored as the unique representative of degree
/// < phi(L) modulo Phi_L. zeta_L is the abstract primitive L-th root of unity
/// with the compatible normalization zeta_{kL}^k = zeta_L.
class CycRational {
 public:
  static CycRational zero(int order);
  static CycRational from_rational(int order, const BigRational& q);
  /// zeta_L^e (any integer e).
  static CycRational root_power(int order, i64 exponent);
  /// sum_e weights[e] * zeta_L^e for e in [0, weights.size()).
  static CycRational from_exponent_sums(int order, const std::vector<BigRational>& weights);

  int order() const { return order_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when the element lies in Q.
  bool is_rational() const;
  /// The rational value; throws std::logic_error unless is_rational().
  BigRational rational_value() const;

  /// Same element viewed in Q(zeta_{new_order}); order() must divide new_order.
  CycRational lift(int new_order) const;

  CycRational& operator+=(const CycRational& o);
  CycRational& operator-=(const CycRational& o);
  CycRational& operator*=(const BigRational& s);
  friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
  friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
  friend CycRational operator*(CycRational a, const BigRational& s) { return a *= s; }
  friend CycRational operator*(const BigRational& s, CycRational a) { return a *= s; }
  friend CycRational operator*(const CycRational& a, const CycRational& b);
  CycRational operator-() const;

  friend bool operator==(const CycRational& a, const CycRational& b);
  friend bool operator!=(const CycRational& a, const CycRational& b) { return !(a == b); }

  /// "c0 + c1*z + c2*z^2" with z = zeta_L; "0" for zero.
  std::string to_string() const;

 private:
  CycRational(int order, std::vector<BigRational> coeffs);
  static CycRational reduce(int order, std::vector<BigRational> poly);

  int order_ = 1;
  std::vector<BigRational> coeffs_;
};

}  // namespace padic_ell
