#include "padic_ell/dirichlet.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace padic_ell {

namespace {

u64 crt_lift(u64 residue, u64 prime_power, u64 modulus) {
  // x = residue mod prime_power, x = 1 mod modulus / prime_power
  u64 rest = modulus / prime_power;
  if (rest == 1) return residue % modulus;
  u64 inv = nt::invmod(rest % prime_power, prime_power);
  // x = 1 + rest * t with rest * t = residue - 1 mod prime_power
  u64 t = nt::mulmod(nt::submod(residue % prime_power, 1 % prime_power, prime_power), inv,
                     prime_power);
  return (1 + rest * t) % modulus;
}

}  // namespace

CharGroup::CharGroup(u64 modulus) : modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("CharGroup: modulus must be >= 1");
  for (auto [q, e] : nt::factorize(modulus)) {
    u64 qk = 1;
    for (int i = 0; i < e; ++i) qk *= q;
    if (q != 2) {
      u64 g = nt::primitive_root(q, e);
      factors_.push_back({q, qk, qk / q * (q - 1), crt_lift(g, qk, modulus)});
    } else if (e == 2) {
      factors_.push_back({2, qk, 2, crt_lift(3, qk, modulus)});
    } else if (e >= 3) {
      factors_.push_back({2, qk, 2, crt_lift(qk - 1, qk, modulus)});
      factors_.push_back({2, qk, qk / 4, crt_lift(5, qk, modulus)});
    }
  }
  for (const auto& f : factors_) exponent_ = nt::lcm(exponent_, f.order);

  coords_.assign(modulus, {});
  std::vector<u64> k(factors_.size(), 0);
  for (;;) {
    u64 x = 1 % modulus;
    for (size_t i = 0; i < factors_.size(); ++i)
      x = nt::mulmod(x, nt::powmod(factors_[i].generator, k[i], modulus), modulus);
    coords_[x] = k;
    size_t i = 0;
    for (; i < k.size(); ++i) {
      if (++k[i] < factors_[i].order) break;
      k[i] = 0;
    }
    if (i == k.size()) break;
  }
}

u64 CharGroup::size() const {
  u64 s = 1;
  for (const auto& f : factors_) s *= f.order;
  return s;
}

std::optional<std::vector<u64>> CharGroup::coordinates(i64 a) const {
  u64 r = nt::reduce_signed(a, modulus_);
  if (nt::gcd(r, modulus_) != 1) return std::nullopt;
  return coords_[r];
}

DirichletChar DirichletChar::from_exponents(u64 modulus, const std::vector<i64>& exponents) {
  CharGroup group(modulus);
  const auto& factors = group.factors();
  if (exponents.size() != factors.size())
    throw std::invalid_argument("DirichletChar: modulus " + std::to_string(modulus) + " needs " +
                                std::to_string(factors.size()) + " exponents");
  const u64 lam = group.exponent();
  std::vector<int> table(modulus, kZero);
  for (u64 a = 0; a < modulus; ++a) {
    auto k = group.coordinates(static_cast<i64>(a));
    if (!k) continue;
    u64 v = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      u64 e = nt::reduce_signed(exponents[i], factors[i].order);
      v = (v + nt::mulmod(e * (lam / factors[i].order) % lam, (*k)[i], lam)) % lam;
    }
    table[a] = static_cast<int>(v);
  }
  return from_table(modulus, lam, std::move(table));
}

DirichletChar DirichletChar::from_table(u64 modulus, u64 order, std::vector<int> table) {
  if (modulus == 0 || order == 0 || table.size() != modulus)
    throw std::invalid_argument("DirichletChar::from_table: inconsistent sizes");
  u64 g = order;
  for (int v : table)
    if (v != kZero) g = nt::gcd(g, static_cast<u64>(v));
  DirichletChar chi;
  chi.modulus_ = modulus;
  chi.order_ = order / g;
  for (int& v : table)
    if (v != kZero) v = static_cast<int>(static_cast<u64>(v) / g);
  chi.table_ = std::move(table);

  CharGroup group(modulus);
  for (const auto& f : group.factors()) {
    u64 x = static_cast<u64>(chi.table_[f.generator]);
    // chi(g) = zeta_L^x = zeta_{n}^{x n / L}
    if ((x * f.order) % chi.order_ != 0)
      throw std::invalid_argument("DirichletChar::from_table: not a homomorphism");
    chi.exponents_.push_back(static_cast<i64>(x * f.order / chi.order_ % f.order));
  }

  chi.conductor_ = modulus;
  for (u64 d : nt::divisors(modulus)) {
    bool trivial_on_kernel = true;
    for (u64 a = 1 % d; a < modulus; a += d) {
      if (nt::gcd(a, modulus) == 1 && chi.table_[a] != 0) {
        trivial_on_kernel = false;
        break;
      }
    }
    if (trivial_on_kernel) {
      chi.conductor_ = d;
      break;
    }
  }
  int minus_one = chi.table_[(modulus - 1) % modulus];
  chi.parity_ = minus_one == 0 ? 1 : 0;
  return chi;
}

DirichletChar DirichletChar::trivial() { return from_table(1, 1, {0}); }

DirichletChar DirichletChar::teichmuller(u64 p) {
  if (p < 3 || !nt::is_prime(p)) throw std::invalid_argument("teichmuller: odd prime required");
  return from_exponents(p, {1});
}

DirichletChar DirichletChar::parse(std::string_view text) {
  auto fail = [&] {
    return std::invalid_argument("malformed character spec '" + std::string(text) +
                                 "' (expected e.g. \"M=15;e=[1,2]\")");
  };
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.rfind("M=", 0) != 0) throw fail();
  auto semi = s.find(';');
  if (semi == std::string::npos) throw fail();
  u64 modulus = 0;
  auto mres = std::from_chars(s.data() + 2, s.data() + semi, modulus);
  if (mres.ec != std::errc() || mres.ptr != s.data() + semi || modulus == 0) throw fail();
  std::string rest = s.substr(semi + 1);
  if (rest.rfind("e=[", 0) != 0 || rest.back() != ']') throw fail();
  std::string body = rest.substr(3, rest.size() - 4);
  std::vector<i64> exps;
  size_t pos = 0;
  while (pos < body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    i64 v = 0;
    auto r = std::from_chars(body.data() + pos, body.data() + comma, v);
    if (r.ec != std::errc() || r.ptr != body.data() + comma) throw fail();
    exps.push_back(v);
    pos = comma + 1;
  }
  return from_exponents(modulus, exps);
}

std::optional<u64> DirichletChar::evaluate(i64 a) const {
  int v = table_[nt::reduce_signed(a, modulus_)];
  if (v == kZero) return std::nullopt;
  return static_cast<u64>(v);
}

DirichletChar DirichletChar::primitivize() const {
  const u64 d = conductor_;
  std::vector<int> table(d, kZero);
  for (u64 b = 0; b < d; ++b) {
    if (nt::gcd(b, d) != 1) continue;
    for (u64 a = b; a < modulus_ + d; a += d) {
      if (nt::gcd(a % modulus_, modulus_) == 1) {
        table[b] = table_[a % modulus_];
        break;
      }
    }
  }
  return from_table(d, order_, std::move(table));
}

DirichletChar DirichletChar::lift(u64 new_modulus) const {
  if (new_modulus % modulus_ != 0)
    throw std::invalid_argument("DirichletChar::lift: modulus must divide the new modulus");
  std::vector<int> table(new_modulus, kZero);
  for (u64 a = 0; a < new_modulus; ++a)
    if (nt::gcd(a, new_modulus) == 1) table[a] = table_[a % modulus_];
  return from_table(new_modulus, order_, std::move(table));
}

DirichletChar DirichletChar::pow(i64 k) const {
  std::vector<int> table = table_;
  u64 kk = nt::reduce_signed(k, order_);
  for (int& v : table)
    if (v != kZero) v = static_cast<int>(static_cast<u64>(v) * kk % order_);
  return from_table(modulus_, order_, std::move(table));
}

DirichletChar operator*(const DirichletChar& a, const DirichletChar& b) {
  const u64 m = nt::lcm(a.modulus_, b.modulus_);
  const u64 lam = nt::lcm(a.order_, b.order_);
  std::vector<int> table(m, DirichletChar::kZero);
  for (u64 x = 0; x < m; ++x) {
    int va = a.table_[x % a.modulus_];
    int vb = b.table_[x % b.modulus_];
    if (va == DirichletChar::kZero || vb == DirichletChar::kZero) continue;
    table[x] = static_cast<int>((static_cast<u64>(va) * (lam / a.order_) +
                                 static_cast<u64>(vb) * (lam / b.order_)) %
                                lam);
  }
  return DirichletChar::from_table(m, lam, std::move(table));
}

bool operator==(const DirichletChar& a, const DirichletChar& b) {
  return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.table_ == b.table_;
}

std::string DirichletChar::to_string() const {
  std::string out = "M=" + std::to_string(modulus_) + ";e=[";
  for (size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents_[i]);
  }
  return out + "]";
}

std::vector<DirichletChar> enumerate_characters(u64 modulus) {
  CharGroup group(modulus);
  std::vector<DirichletChar> out;
  std::vector<i64> e(group.factors().size(), 0);
  for (;;) {
    out.push_back(DirichletChar::from_exponents(modulus, e));
    // lexicographic: last coordinate varies fastest
    size_t i = e.size();
    while (i > 0) {
      --i;
      if (++e[i] < static_cast<i64>(group.factors()[i].order)) break;
      e[i] = 0;
      if (i == 0) return out;
    }
    if (e.empty()) return out;
  }
}

std::vector<DirichletChar> primitive_characters(u64 modulus) {
  std::vector<DirichletChar> out;
  for (auto& chi : enumerate_characters(modulus))
    if (chi.is_primitive()) out.push_back(std::move(chi));
  return out;
}

DirichletChar twist_teichmuller(const DirichletChar& chi, i64 n, u64 p) {
  if (chi.conductor() % 2 == 0)
    throw std::invalid_argument("twist_teichmuller: character conductor must be odd");
  auto omega_inv_n = DirichletChar::teichmuller(p).pow(-n);
  const u64 m = nt::lcm(chi.conductor(), p);
  return (chi.primitivize().lift(m) * omega_inv_n.lift(m)).primitivize();
}

}  // namespace padic_ell
