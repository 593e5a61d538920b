#include "padic_ell/modular.hpp"

#include <stdexcept>

namespace padic_ell::nt {

u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 m) {
  if (m == 1) return 0;
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: element is not invertible");
  return reduce_signed(t, m);
}

u64 reduce_signed(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  u64 r = static_cast<u64>(-(a + 1)) % m;  // avoids overflow at INT64_MIN
  return m - 1 - r;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

u64 ipow(u64 p, int k) {
  if (k < 0) throw std::invalid_argument("ipow: negative exponent");
  u64 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > kMaxModulus / p) throw std::overflow_error("ipow: p^k exceeds the residue range");
    r *= p;
  }
  return r;
}

int max_digits(u64 p) {
  int k = 0;
  u64 r = 1;
  while (r <= kMaxModulus / p) {
    r *= p;
    ++k;
  }
  return k;
}

int valuation(u64 n, u64 p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (auto [q, e] : factorize(n)) phi = phi / q * (q - 1);
  return phi;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (gcd(a, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  u64 order = euler_phi(m);
  for (auto [q, e] : factorize(order)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(a, order / q, m) == 1)
        order /= q;
      else
        break;
    }
  }
  return order;
}

u64 primitive_root(u64 p, int k) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("primitive_root: odd prime required");
  u64 m = ipow(p, k);
  u64 phi = m / p * (p - 1);
  auto factors = factorize(phi);
  for (u64 g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto [q, e] : factors) {
      if (powmod(g, phi / q, m) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

u64 digit_sum(u64 n, u64 p) {
  u64 s = 0;
  while (n > 0) {
    s += n % p;
    n /= p;
  }
  return s;
}

u64 factorial_valuation(u64 n, u64 p) { return (n - digit_sum(n, p)) / (p - 1); }

MontgomeryRing::MontgomeryRing(u64 modulus) : n_(modulus) {
  if (modulus % 2 == 0 || modulus >= kMaxModulus)
    throw std::invalid_argument("MontgomeryRing: modulus must be odd and below 2^62");
  // Newton iteration for n^{-1} mod 2^64.
  u64 inv = modulus;
  for (int i = 0; i < 6; ++i) inv *= 2 - modulus * inv;
  n_inv_neg_ = ~inv + 1;
  u128 r = (static_cast<u128>(1) << 64) % modulus;
  one_ = static_cast<u64>(r);
  r2_ = static_cast<u64>(r * r % modulus);
}

u64 MontgomeryRing::pow(u64 base_mont, u64 e) const {
  u64 result = one_;
  while (e > 0) {
    if (e & 1) result = mul(result, base_mont);
    base_mont = mul(base_mont, base_mont);
    e >>= 1;
  }
  return result;
}

}  // namespace padic_ell::nt
