#include "padic_ell/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace padic_ell {

namespace {

void require_same_prime(const PadicElement& a, const PadicElement& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("PadicElement: mismatched primes");
}

int floor_log(u64 k, u64 p) {
  int e = 0;
  while (k >= p) {
    k /= p;
    ++e;
  }
  return e;
}

u64 checked_modulus(u64 p, int digits) {
  if (digits > nt::max_digits(p))
    throw std::overflow_error("p-adic kernel: p^" + std::to_string(digits) +
                              " exceeds the 62-bit working modulus");
  return nt::ipow(p, digits);
}

}  // namespace

void PadicElement::check_prime(u64 p) {
  if (p < 3 || !nt::is_prime(p)) throw std::invalid_argument("PadicElement: p must be an odd prime");
}

PadicElement PadicElement::zero(u64 p) {
  check_prime(p);
  return PadicElement(p, kInfinity, 0, 0);
}

PadicElement PadicElement::big_oh(u64 p, int abs_prec) {
  check_prime(p);
  return PadicElement(p, abs_prec, 0, 0);
}

PadicElement PadicElement::from_residue(u64 p, int digits, u64 residue, int shift) {
  check_prime(p);
  if (digits < 0) throw std::invalid_argument("PadicElement: negative precision");
  const u64 mod = nt::ipow(p, digits);
  residue %= mod;
  if (residue == 0) return PadicElement(p, shift + digits, 0, 0);
  int t = nt::valuation(residue, p);
  return PadicElement(p, shift + t, digits - t, residue / nt::ipow(p, t));
}

PadicElement PadicElement::from_int(u64 p, int rel_prec, i64 value) {
  return from_bigint(p, rel_prec, BigInt(static_cast<long>(value)));
}

PadicElement PadicElement::from_bigint(u64 p, int rel_prec, const BigInt& value) {
  return from_rational(p, rel_prec, BigRational(value));
}

PadicElement PadicElement::from_rational(u64 p, int rel_prec, const BigRational& value) {
  check_prime(p);
  if (rel_prec < 1 || rel_prec > nt::max_digits(p))
    throw std::invalid_argument("PadicElement: relative precision out of range for p=" +
                                std::to_string(p));
  if (value.is_zero()) return zero(p);
  const int v = value.valuation(p);
  BigRational scaled = value;
  if (v > 0) scaled /= padic_ell::pow(BigRational(static_cast<unsigned long>(p)), static_cast<unsigned>(v));
  if (v < 0) scaled *= padic_ell::pow(BigRational(static_cast<unsigned long>(p)), static_cast<unsigned>(-v));
  return PadicElement(p, v, rel_prec, scaled.residue(nt::ipow(p, rel_prec)));
}

int PadicElement::absolute_precision() const {
  return is_exact_zero() ? kInfinity : val_ + prec_;
}

u64 PadicElement::residue(int k) const {
  if (k < 0 || k > absolute_precision())
    throw std::domain_error("PadicElement::residue: not known to the requested precision");
  if (is_exact_zero() || val_ >= k) return 0;
  if (val_ < 0) throw std::domain_error("PadicElement::residue: value is not integral");
  return (unit_ % nt::ipow(p_, k - val_)) * nt::ipow(p_, val_);
}

std::vector<u64> PadicElement::unit_digits() const {
  std::vector<u64> out;
  u64 u = unit_;
  for (int i = 0; i < prec_; ++i) {
    out.push_back(u % p_);
    u /= p_;
  }
  return out;
}

PadicElement PadicElement::truncate(int abs_prec) const {
  if (abs_prec >= absolute_precision()) return *this;
  if (abs_prec <= val_) return PadicElement(p_, abs_prec, 0, 0);
  const int r = abs_prec - val_;
  return PadicElement(p_, val_, r, unit_ % nt::ipow(p_, r));
}

PadicElement PadicElement::operator-() const {
  if (prec_ == 0) return *this;
  return PadicElement(p_, val_, prec_, nt::ipow(p_, prec_) - unit_);
}

PadicElement operator+(const PadicElement& a, const PadicElement& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const u64 p = a.p_;
  const int abs = std::min(a.absolute_precision(), b.absolute_precision());
  const int m = std::min(a.val_, b.val_);
  if (abs <= m) return PadicElement(p, abs, 0, 0);
  const int k = abs - m;
  const u64 mod = nt::ipow(p, k);
  u64 x = 0;
  for (const PadicElement* e : {&a, &b}) {
    if (e->prec_ == 0 || e->val_ >= abs) continue;
    u64 part = e->unit_ % nt::ipow(p, abs - e->val_);
    x = nt::addmod(x, nt::mulmod(part, nt::ipow(p, e->val_ - m), mod), mod);
  }
  return PadicElement::from_residue(p, k, x, m);
}

PadicElement operator*(const PadicElement& a, const PadicElement& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicElement::zero(a.p_);
  if (a.prec_ == 0 || b.prec_ == 0) return PadicElement(a.p_, a.val_ + b.val_, 0, 0);
  const int r = std::min(a.prec_, b.prec_);
  const u64 mod = nt::ipow(a.p_, r);
  return PadicElement(a.p_, a.val_ + b.val_, r, nt::mulmod(a.unit_ % mod, b.unit_ % mod, mod));
}

PadicElement operator/(const PadicElement& a, const PadicElement& b) {
  require_same_prime(a, b);
  if (b.prec_ == 0) throw std::domain_error("PadicElement: division by a value with no known digit");
  if (a.is_exact_zero()) return a;
  if (a.prec_ == 0) return PadicElement(a.p_, a.val_ - b.val_, 0, 0);
  const int r = std::min(a.prec_, b.prec_);
  const u64 mod = nt::ipow(a.p_, r);
  const u64 inv = nt::invmod(b.unit_ % mod, mod);
  return PadicElement(a.p_, a.val_ - b.val_, r, nt::mulmod(a.unit_ % mod, inv, mod));
}

PadicElement PadicElement::pow(i64 e) const {
  if (e == 0) {
    const int r = prec_ > 0 ? prec_ : nt::max_digits(p_);
    return PadicElement(p_, 0, r, 1);
  }
  if (e < 0) return from_int(p_, prec_ > 0 ? prec_ : 1, 1) / pow(-e);
  if (is_exact_zero()) return *this;
  if (prec_ == 0) return PadicElement(p_, val_ * static_cast<int>(e), 0, 0);
  const u64 mod = nt::ipow(p_, prec_);
  return PadicElement(p_, val_ * static_cast<int>(e), prec_, nt::powmod(unit_, static_cast<u64>(e), mod));
}

int congruence_depth(const PadicElement& a, const PadicElement& b) {
  PadicElement d = a - b;
  return d.valuation();
}

std::string PadicElement::to_string() const {
  const std::string ps = std::to_string(p_);
  if (is_exact_zero()) return "0";
  if (prec_ == 0) return "O(" + ps + "^" + std::to_string(val_) + ")";
  std::string out = ps + "^" + std::to_string(val_) + " * (";
  auto digits = unit_digits();
  for (size_t i = 0; i < digits.size(); ++i) {
    if (i) out += " + ";
    out += std::to_string(digits[i]);
    if (i == 1) out += "*" + ps;
    if (i > 1) out += "*" + ps + "^" + std::to_string(i);
  }
  return out + ")";
}

PadicElement teichmuller(i64 a, u64 p, int prec) {
  if (p < 3 || !nt::is_prime(p)) throw std::invalid_argument("teichmuller: p must be an odd prime");
  const u64 mod = nt::ipow(p, prec);
  const u64 r = nt::reduce_signed(a, mod);
  if (r % p == 0) throw std::domain_error("teichmuller: argument divisible by p");
  return PadicElement::from_residue(p, prec, nt::powmod(r, nt::ipow(p, prec - 1), mod));
}

PadicElement angle(i64 a, u64 p, int prec) {
  const u64 mod = nt::ipow(p, prec);
  const u64 w = teichmuller(a, p, prec).residue(prec);
  const u64 r = nt::reduce_signed(a, mod);
  return PadicElement::from_residue(p, prec, nt::mulmod(r, nt::invmod(w, mod), mod));
}

namespace kernel {

u64 log_one_plus(u64 z, u64 p, int digits, int guard) {
  if (digits <= 0) return 0;
  const u64 out_mod = nt::ipow(p, digits);
  z %= out_mod;
  if (z == 0) return 0;
  const int vz = nt::valuation(z, p);
  if (vz < 1) throw std::domain_error("log_p: argument is not a principal unit");
  // k vz - floor(log_p k) is nondecreasing, so every term from k0 on lies
  // below p^{digits + guard}.
  u64 k0 = 1;
  while (static_cast<i64>(k0) * vz - floor_log(k0, p) < digits + guard) ++k0;
  const int extra = k0 > 1 ? floor_log(k0 - 1, p) : 0;
  const u64 work_mod = checked_modulus(p, digits + extra);
  u64 zk = 1;
  u64 sum = 0;
  for (u64 k = 1; k < k0; ++k) {
    zk = nt::mulmod(zk, z, work_mod);
    const int e = nt::valuation(k, p);
    const u64 pe = nt::ipow(p, e);
    const u64 t = (zk / pe) % out_mod;
    const u64 c = nt::mulmod(t, nt::invmod((k / pe) % out_mod, out_mod), out_mod);
    sum = (k % 2 == 1) ? nt::addmod(sum, c, out_mod) : nt::submod(sum, c, out_mod);
  }
  return sum;
}

u64 exp_residue(u64 z, u64 p, int digits, int guard) {
  if (digits <= 0) return 0;
  const u64 out_mod = nt::ipow(p, digits);
  z %= out_mod;
  if (z == 0) return 1 % out_mod;
  const int vz = nt::valuation(z, p);
  if (vz < 1) throw std::domain_error("exp_p: argument must have positive valuation");
  // v(z^k / k!) >= k vz - floor((k-1)/(p-1)), which is nondecreasing in k.
  auto bound = [&](u64 k) { return static_cast<i64>(k) * vz - static_cast<i64>((k - 1) / (p - 1)); };
  u64 k0 = 1;
  while (bound(k0) < digits + guard) ++k0;
  const int extra = static_cast<int>(nt::factorial_valuation(k0 - 1, p));
  const u64 work_mod = checked_modulus(p, digits + extra);
  u64 zk = 1;
  u64 unit_fact = 1;
  int fact_val = 0;
  u64 sum = 1 % out_mod;
  for (u64 k = 1; k < k0; ++k) {
    zk = nt::mulmod(zk, z, work_mod);
    const int e = nt::valuation(k, p);
    fact_val += e;
    unit_fact = nt::mulmod(unit_fact, (k / nt::ipow(p, e)) % out_mod, out_mod);
    const u64 t = (zk / nt::ipow(p, fact_val)) % out_mod;
    sum = nt::addmod(sum, nt::mulmod(t, nt::invmod(unit_fact, out_mod), out_mod), out_mod);
  }
  return sum;
}

}  // namespace kernel

PadicElement log_p(const PadicElement& u, int guard) {
  const u64 p = u.prime();
  if (u.is_zero() || u.valuation() != 0 || u.unit() % p != 1)
    throw std::domain_error("log_p: argument must lie in 1 + pZ_p");
  const int a = u.absolute_precision();
  const u64 z = nt::submod(u.unit(), 1, nt::ipow(p, a));
  return PadicElement::from_residue(p, a, kernel::log_one_plus(z, p, a, guard));
}

PadicElement log_iwasawa(const PadicElement& x, int guard) {
  if (x.is_zero()) throw std::domain_error("log_iwasawa: argument has no known nonzero digit");
  const u64 p = x.prime();
  const int r = x.relative_precision();
  // unit^{p-1} is a principal unit; dividing its log by p-1 removes the
  // root-of-unity part.
  auto u = PadicElement::from_residue(p, r, x.unit());
  auto w = u.pow(static_cast<i64>(p - 1));
  return log_p(w, guard) / PadicElement::from_int(p, r, static_cast<i64>(p - 1));
}

PadicElement exp_p(const PadicElement& z, int guard) {
  const u64 p = z.prime();
  if (z.is_exact_zero()) return PadicElement::from_int(p, nt::max_digits(p), 1);
  if (z.valuation() < 1) throw std::domain_error("exp_p: argument must have positive valuation");
  const int a = z.absolute_precision();
  if (z.is_zero()) return PadicElement::from_residue(p, std::min(a, nt::max_digits(p)), 1);
  return PadicElement::from_residue(p, a, kernel::exp_residue(z.residue(a), p, a, guard));
}

PadicElement pow_angle(i64 a, const PadicElement& s, u64 p, int prec, int guard) {
  if (s.prime() != p) throw std::invalid_argument("pow_angle: mismatched primes");
  if (s.is_exact_zero()) return PadicElement::from_int(p, prec, 1);
  if (s.valuation() < 0) throw std::domain_error("pow_angle: exponent must lie in Z_p");
  // <a>^{O(p^k)} = 1 + O(p^{k+1}).
  if (s.is_zero()) return PadicElement::from_residue(p, std::min(prec, s.absolute_precision() + 1), 1);
  return exp_p(s * log_p(angle(a, p, prec), guard), guard).truncate(prec);
}

PadicElement pow_principal_unit(const PadicElement& u, const PadicElement& y) {
  const u64 p = u.prime();
  if (y.prime() != p) throw std::invalid_argument("pow_principal_unit: mismatched primes");
  if (u.is_zero() || u.valuation() != 0 || u.unit() % p != 1)
    throw std::domain_error("pow_principal_unit: base must lie in 1 + pZ_p");
  if (!y.is_exact_zero() && y.valuation() < 0)
    throw std::domain_error("pow_principal_unit: exponent must lie in Z_p");
  const int ua = u.absolute_precision();
  const int k = y.is_exact_zero() ? ua : std::min(ua, y.absolute_precision() + 1);
  // u^{p^{k-1}} = 1 mod p^k, so y only matters modulo p^{k-1}.
  const u64 exponent = y.residue(std::min(k - 1, y.absolute_precision()));
  const u64 mod = nt::ipow(p, k);
  return PadicElement::from_residue(p, k, nt::powmod(u.unit() % mod, exponent, mod));
}

PadicElement binom_padic(const PadicElement& y, int k) {
  if (k < 0) throw std::invalid_argument("binom_padic: k must be >= 0");
  const u64 p = y.prime();
  const int cap = nt::max_digits(p);
  PadicElement num = PadicElement::from_int(p, cap, 1);
  for (int j = 0; j < k; ++j) num *= y - PadicElement::from_int(p, cap, j);
  return num / PadicElement::from_bigint(p, cap, factorial(static_cast<unsigned long>(k)));
}

PadicElement binom_padic(i64 y, int k, u64 p, int prec) {
  if (k < 0) throw std::invalid_argument("binom_padic: k must be >= 0");
  BigInt num = 1;
  for (int j = 0; j < k; ++j) num *= BigInt(static_cast<long>(y - j));
  BigInt value = num / factorial(static_cast<unsigned long>(k));
  return PadicElement::from_bigint(p, prec, value);
}

}  // namespace padic_ell
