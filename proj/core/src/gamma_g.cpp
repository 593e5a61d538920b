#include "padic_ell/gamma_g.hpp"

#include <stdexcept>

#include "padic_ell/euler.hpp"

namespace padic_ell {

namespace {

int require_pole(const PadicElement& x) {
  if (x.is_zero() || x.valuation() > -1) throw std::domain_error("G_{p,E}: argument must satisfy v_p(x) <= -1");
  return -x.valuation();
}

int floor_log(u64 k, u64 p) {
  int e = 0;
  for (; k >= p; k /= p) ++e;
  return e;
}

PadicElement constant(u64 p, const BigRational& q) {
  return PadicElement::from_rational(p, nt::max_digits(p), q);
}

}  // namespace

PadicElement G(const PadicElement& x, int guard) {
  const int w = require_pole(x);
  const u64 p = x.prime();
  const int target = x.absolute_precision() + guard;
  // v(E_{n+1} / (n (n+1) x^n)) >= n w - floor(log_p(n+1)), nondecreasing in n
  int n_max = 1;
  while (static_cast<i64>(n_max) * w - floor_log(static_cast<u64>(n_max) + 1, p) < target) ++n_max;
  auto table = default_euler_cache().get(n_max + 1);

  PadicElement result = (x - constant(p, BigRational(1, 2))) * log_iwasawa(x, guard) - x;
  const PadicElement inv = constant(p, 1) / x;
  PadicElement inv_pow = inv;
  for (int n = 1; n < n_max; ++n) {
    const BigRational& e = (*table)[n + 1];
    if (!e.is_zero()) {
      BigRational c = e / BigRational(static_cast<long>(n) * (n + 1));
      result -= constant(p, c) * inv_pow;
    }
    inv_pow *= inv;
  }
  return result;
}

PadicElement G_limit_oracle(const PadicElement& x, int level, int guard) {
  require_pole(x);
  const u64 p = x.prime();
  if (level < 0) throw std::invalid_argument("G_limit_oracle: level must be >= 0");
  const u64 count = nt::ipow(p, level);
  PadicElement sum = PadicElement::zero(p);
  for (u64 a = 0; a < count; ++a) {
    PadicElement y = x + PadicElement::from_int(p, nt::max_digits(p), static_cast<i64>(a));
    PadicElement term = y * log_iwasawa(y, guard) - y;
    sum = (a % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

PadicElement G_deriv(int m, const PadicElement& x, int guard) {
  if (m < 2) throw std::invalid_argument("G_deriv: order must be >= 2");
  const int w = require_pole(x);
  const u64 p = x.prime();
  const int cap = nt::max_digits(p);
  // leading term has valuation (m-1) w; term k has valuation >= (m+k-1) w
  const int target = (m - 1) * w + x.relative_precision() + guard;
  int k_max = 0;
  while (static_cast<i64>(m + k_max - 1) * w < target) ++k_max;
  auto table = default_euler_cache().get(k_max);

  const PadicElement inv = constant(p, 1) / x;
  PadicElement inv_pow = inv.pow(m - 1);
  PadicElement sum = PadicElement::zero(p);
  for (int k = 0; k < k_max; ++k) {
    const BigRational& e = (*table)[k];
    if (!e.is_zero()) sum += binom_padic(1 - m, k, p, cap) * constant(p, e) * inv_pow;
    inv_pow *= inv;
  }
  BigRational pre(factorial(static_cast<unsigned long>(m - 2)));
  if (m % 2 == 1) pre = -pre;
  return constant(p, pre) * sum;
}

PadicElement G_deriv_limit_oracle(int m, const PadicElement& x, int level) {
  if (m < 2) throw std::invalid_argument("G_deriv_limit_oracle: order must be >= 2");
  require_pole(x);
  const u64 p = x.prime();
  const u64 count = nt::ipow(p, level);
  const PadicElement one = constant(p, 1);
  PadicElement sum = PadicElement::zero(p);
  for (u64 a = 0; a < count; ++a) {
    PadicElement y = x + PadicElement::from_int(p, nt::max_digits(p), static_cast<i64>(a));
    PadicElement term = (one / y).pow(m - 1);
    sum = (a % 2 == 0) ? sum + term : sum - term;
  }
  BigRational pre(factorial(static_cast<unsigned long>(m - 2)));
  if (m % 2 == 1) pre = -pre;
  return constant(p, pre) * sum;
}

}  // namespace padic_ell
