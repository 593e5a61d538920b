#include "padic_ell/exact.hpp"

namespace padic_ell {

namespace {

void check_character(const DirichletChar& chi) {
  if (!chi.is_primitive()) throw std::invalid_argument("generalized Euler number: character must be primitive");
  if (chi.conductor() % 2 == 0) throw std::invalid_argument("generalized Euler number: conductor must be odd");
}

CycRational alternating_sum(int n, const DirichletChar& chi, u64 modulus) {
  if (n < 0) throw std::invalid_argument("generalized Euler number: n must be >= 0");
  auto table = default_euler_cache().get(n);
  const auto poly = euler_polynomial(n, *table);
  // F^n E_n(a/F) = sum_i c_i a^i F^{n-i}
  std::vector<BigRational> fpow(static_cast<size_t>(n) + 1);
  fpow[0] = 1;
  for (int i = 1; i <= n; ++i) fpow[i] = fpow[i - 1] * BigRational(static_cast<unsigned long>(modulus));
  std::vector<BigRational> weights(chi.order());
  for (u64 a = 1; a <= modulus; ++a) {
    auto e = chi.evaluate(static_cast<i64>(a));
    if (!e) continue;
    BigRational value;
    BigRational apow(1);
    for (int i = 0; i <= n; ++i) {
      if (!poly[i].is_zero()) value += poly[i] * apow * fpow[n - i];
      apow *= BigRational(static_cast<unsigned long>(a));
    }
    if (a % 2 == 1) value = -value;
    weights[*e] += value;
  }
  return CycRational::from_exponent_sums(static_cast<int>(chi.order()), weights);
}

}  // namespace

CycRational generalized_euler_number(int n, const DirichletChar& chi) {
  check_character(chi);
  return alternating_sum(n, chi, chi.conductor());
}

CycRational generalized_euler_number_at_modulus(int n, const DirichletChar& chi, u64 modulus) {
  check_character(chi);
  if (modulus == 0 || modulus % 2 == 0 || modulus % chi.conductor() != 0)
    throw std::invalid_argument("generalized Euler number: modulus must be an odd multiple of the conductor");
  return alternating_sum(n, chi, modulus);
}

}  // namespace padic_ell
