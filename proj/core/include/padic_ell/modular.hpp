#pragma once

// Word-size modular arithmetic and elementary number theory used by every
// other module: modular powers and inverses, factorization, primitive roots,
// and a Montgomery ring for the hot summation kernels.

#include <cstdint>
#include <utility>
#include <vector>

namespace padic_ell {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using u128 = unsigned __int128;

namespace nt {

// Largest modulus accepted by the residue code. Keeps a + b below 2^63 and
// leaves head-room for lazy additions in the Montgomery kernel.
inline constexpr u64 kMaxModulus = u64{1} << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}
inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

u64 powmod(u64 a, u64 e, u64 m);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);

// Reduces a signed value into [0, m).
u64 reduce_signed(i64 a, u64 m);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

// p^k; throws std::overflow_error if the result would exceed kMaxModulus.
u64 ipow(u64 p, int k);

// Largest k with p^k <= kMaxModulus.
int max_digits(u64 p);

// Exponent of p in n (n != 0).
int valuation(u64 n, u64 p);

bool is_prime(u64 n);

// Ascending list of (prime, exponent).
std::vector<std::pair<u64, int>> factorize(u64 n);

std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

// Multiplicative order of a modulo m (gcd(a, m) = 1).
u64 multiplicative_order(u64 a, u64 m);

// Smallest positive generator of (Z/p^k)^x for an odd prime p.
u64 primitive_root(u64 p, int k = 1);

// Sum of base-p digits of n.
u64 digit_sum(u64 n, u64 p);

// v_p(n!) = (n - s_p(n)) / (p - 1).
u64 factorial_valuation(u64 n, u64 p);

// Montgomery arithmetic modulo an odd n < 2^62 with R = 2^64. Elements are
// kept in Montgomery form; use to_mont / from_mont at the boundary.
class MontgomeryRing {
 public:
  explicit MontgomeryRing(u64 modulus);

  u64 modulus() const { return n_; }

  u64 reduce(u128 t) const {
    u64 m = static_cast<u64>(t) * n_inv_neg_;
    u128 u = (t + static_cast<u128>(m) * n_) >> 64;
    u64 r = static_cast<u64>(u);
    return r >= n_ ? r - n_ : r;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const { return addmod(a, b, n_); }
  u64 sub(u64 a, u64 b) const { return submod(a, b, n_); }
  u64 to_mont(u64 a) const { return mul(a % n_, r2_); }
  u64 from_mont(u64 a) const { return reduce(a); }
  u64 one() const { return one_; }
  u64 pow(u64 base_mont, u64 e) const;

 private:
  u64 n_;
  u64 n_inv_neg_;  // -n^{-1} mod 2^64
  u64 r2_;         // R^2 mod n
  u64 one_;        // R mod n
};

}  // namespace nt
}  // namespace padic_ell
