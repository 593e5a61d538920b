#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "padic_ell/modular.hpp"

namespace padic_ell {

using BigInt = mpz_class;

/// Exact rational with arbitrary-precision numerator and denominator, always
/// kept in lowest terms with a positive denominator.
class BigRational {
 public:
  static constexpr int kInfiniteValuation = INT_MAX;

  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  BigRational(unsigned long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(unsigned v) : q_(v) {}       // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& v) : q_(v) {}
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "num" or "num/den" in decimal.
  static BigRational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;

  /// p-adic valuation; kInfiniteValuation for zero.
  int valuation(u64 p) const;

  /// num * den^{-1} mod `modulus`, where modulus is a power of p and the
  /// value is p-integral. Throws std::domain_error otherwise.
  u64 residue(u64 modulus) const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

BigRational pow(const BigRational& base, unsigned exponent);
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// v_p of a nonzero big integer.
int valuation(const BigInt& n, u64 p);

/// n mod m in [0, m).
u64 residue(const BigInt& n, u64 m);

}  // namespace padic_ell
