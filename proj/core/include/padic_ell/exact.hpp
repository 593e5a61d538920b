#pragma once

// Generalized Euler numbers E_{n,chi} in Q(zeta_L) and iterated forward
// differences.

#include <stdexcept>

#include "padic_ell/cyclotomic.hpp"
#include "padic_ell/dirichlet.hpp"
#include "padic_ell/euler.hpp"

namespace padic_ell {

/// E_{n,chi} = f^n sum_{a=1}^f (-1)^a chi(a) E_n(a/f) for primitive chi of
/// odd conductor f. For the trivial character this gives E_{0} = -1 and E_n
/// for n >= 1. Throws std::invalid_argument for even conductor, imprimitive
/// chi or n < 0.
CycRational generalized_euler_number(int n, const DirichletChar& chi);

/// The same sum taken over a = 1..F for an odd multiple F of f.
CycRational generalized_euler_number_at_modulus(int n, const DirichletChar& chi, u64 modulus);

/// Delta_c^k a_n = sum_j C(k,j) (-1)^{k-j} a_{n+jc}, where seq(m) returns a_m.
/// T needs + and multiplication by BigRational.
template <class T, class Seq>
T delta_power(int k, int c, const Seq& seq, int n) {
  if (k < 1 || c < 1) throw std::invalid_argument("delta_power: k and c must be >= 1");
  T acc = seq(n) * BigRational((k % 2 == 0) ? 1 : -1);
  for (int j = 1; j <= k; ++j) {
    BigRational w(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
    if ((k - j) % 2 == 1) w = -w;
    acc = acc + seq(n + j * c) * w;
  }
  return acc;
}

}  // namespace padic_ell
