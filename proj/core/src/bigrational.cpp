#include "padic_ell/bigrational.hpp"

#include <stdexcept>

namespace padic_ell {

namespace {

BigInt from_u64(u64 v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

u64 to_u64(const BigInt& v) {
  // v is known to be in [0, 2^64)
  u64 out = 0;
  size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return count == 0 ? 0 : out;
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s, 10));
    return BigRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("BigRational::parse: malformed rational '" + s + "'");
  }
}

std::string BigRational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

int BigRational::valuation(u64 p) const {
  if (is_zero()) return kInfiniteValuation;
  return padic_ell::valuation(q_.get_num(), p) - padic_ell::valuation(q_.get_den(), p);
}

u64 BigRational::residue(u64 modulus) const {
  if (modulus == 1) return 0;
  u64 n = padic_ell::residue(q_.get_num(), modulus);
  u64 d = padic_ell::residue(q_.get_den(), modulus);
  return nt::mulmod(n, nt::invmod(d, modulus), modulus);
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational pow(const BigRational& base, unsigned exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return BigRational(n, d);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

int valuation(const BigInt& n, u64 p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  BigInt m = n;
  BigInt bp = from_u64(p);
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), bp.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), bp.get_mpz_t());
    ++v;
  }
  return v;
}

u64 residue(const BigInt& n, u64 m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), from_u64(m).get_mpz_t());
  return to_u64(r);
}

}  // namespace padic_ell
