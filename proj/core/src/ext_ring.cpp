#include "padic_ell/ext_ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace padic_ell {

namespace {

using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial f, coefficients mod m.
Poly poly_rem(Poly a, const Poly& f, u64 m) {
  const size_t d = f.size() - 1;
  for (size_t i = a.size(); i-- > d;) {
    u64 c = a[i] % m;
    if (c == 0) continue;
    for (size_t j = 0; j <= d; ++j) a[i - d + j] = nt::submod(a[i - d + j] % m, nt::mulmod(c, f[j], m), m);
  }
  a.resize(d, 0);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 m) {
  if (a.empty() || b.empty()) return Poly(f.size() - 1, 0);
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = nt::addmod(prod[i + j], nt::mulmod(a[i], b[j], m), m);
  }
  return poly_rem(std::move(prod), f, m);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 m) {
  Poly r(f.size() - 1, 0);
  r[0] = 1 % m;
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, m);
    base = poly_mulmod(base, base, f, m);
    e >>= 1;
  }
  return r;
}

// x^{p^k} mod f over F_p by repeated Frobenius.
Poly frobenius_power_of_x(const Poly& f, u64 p, int k) {
  Poly x(f.size() - 1, 0);
  if (x.size() > 1) {
    x[1] = 1;
  } else {
    x = poly_rem({0, 1}, f, p);
  }
  for (int i = 0; i < k; ++i) x = poly_powmod(x, p, f, p);
  return x;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic
    u64 inv = nt::invmod(b.back(), p);
    Poly bm = b;
    for (auto& c : bm) c = nt::mulmod(c, inv, p);
    Poly r = a.size() >= bm.size() ? poly_rem(a, bm, p) : a;
    trim(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (auto [q, e] : nt::factorize(n)) out.push_back(q);
  return out;
}

// Element of F_q = F_p[x]/f with index i = sum c_j p^j.
Poly element_from_index(u64 index, u64 p, size_t d) {
  Poly c(d, 0);
  for (size_t j = 0; j < d; ++j) {
    c[j] = index % p;
    index /= p;
  }
  return c;
}

Poly monic_lift_h(u64 p, int prec, u64 order) {
  const int d = static_cast<int>(nt::multiplicative_order(p % order, order));
  const u64 q = nt::ipow(p, d);
  const Poly f = ffield::smallest_irreducible(p, d);

  // Smallest generator of F_q^x.
  Poly one(static_cast<size_t>(d), 0);
  one[0] = 1;
  const auto qf = prime_factors(q - 1);
  Poly gamma;
  for (u64 idx = 1; idx < q; ++idx) {
    Poly g = element_from_index(idx, p, static_cast<size_t>(d));
    bool generator = true;
    for (u64 r : qf) {
      if (poly_powmod(g, (q - 1) / r, f, p) == one) {
        generator = false;
        break;
      }
    }
    if (generator) {
      gamma = std::move(g);
      break;
    }
  }

  // Primitive U-th root compatible with the smallest primitive root mod p.
  const Poly base = poly_powmod(gamma, (q - 1) / order, f, p);
  const u64 g = nt::gcd(order, p - 1);
  Poly target(static_cast<size_t>(d), 0);
  target[0] = nt::powmod(nt::primitive_root(p), (p - 1) / g, p);
  Poly zeta0;
  for (u64 r = 1; r <= order; ++r) {
    if (nt::gcd(r, order) != 1) continue;
    Poly cand = poly_powmod(base, r, f, p);
    if (poly_powmod(cand, order / g, f, p) == target) {
      zeta0 = std::move(cand);
      break;
    }
  }
  if (zeta0.empty()) throw std::logic_error("ExtRing: no compatible root of unity found");

  // Minimal polynomial of zeta0 over F_p: prod (X - zeta0^{p^i}).
  std::vector<Poly> minpoly{one};  // coefficients in F_q, lowest degree first
  Poly conj = zeta0;
  for (int i = 0; i < d; ++i) {
    std::vector<Poly> next(minpoly.size() + 1, Poly(static_cast<size_t>(d), 0));
    for (size_t j = 0; j < minpoly.size(); ++j) {
      for (int c = 0; c < d; ++c) next[j + 1][c] = nt::addmod(next[j + 1][c], minpoly[j][c], p);
      Poly prod = poly_mulmod(minpoly[j], conj, f, p);
      for (int c = 0; c < d; ++c) next[j][c] = nt::submod(next[j][c], prod[c], p);
    }
    minpoly = std::move(next);
    conj = poly_powmod(conj, p, f, p);
  }
  Poly m(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    for (int c = 1; c < d; ++c)
      if (minpoly[j][c] != 0) throw std::logic_error("ExtRing: minimal polynomial not over F_p");
    m[j] = minpoly[j][0];
  }
  if (d == 1) {
    // Z/p^N directly: the Teichmuller lift of the root.
    const u64 mod = nt::ipow(p, prec);
    const u64 root = nt::reduce_signed(-static_cast<i64>(m[0]), p);
    const u64 lift = nt::powmod(root, nt::ipow(p, prec - 1), mod);
    return {nt::submod(0, lift, mod), 1};
  }

  // Galois ring GR(p^N, d) = (Z/p^N)[t]/m; the Teichmuller lift of t is
  // t^{q^{N-1}}, and its Frobenius conjugates give h.
  const u64 mod = nt::ipow(p, prec);
  Poly t(static_cast<size_t>(d), 0);
  t[1] = 1;
  Poly tl = t;
  for (int i = 0; i < d * (prec - 1); ++i) tl = poly_powmod(tl, p, m, mod);
  Poly ring_one(static_cast<size_t>(d), 0);
  ring_one[0] = 1 % mod;
  std::vector<Poly> h{ring_one};
  Poly c = tl;
  for (int i = 0; i < d; ++i) {
    std::vector<Poly> next(h.size() + 1, Poly(static_cast<size_t>(d), 0));
    for (size_t j = 0; j < h.size(); ++j) {
      for (int k = 0; k < d; ++k) next[j + 1][k] = nt::addmod(next[j + 1][k], h[j][k], mod);
      Poly prod = poly_mulmod(h[j], c, m, mod);
      for (int k = 0; k < d; ++k) next[j][k] = nt::submod(next[j][k], prod[k], mod);
    }
    h = std::move(next);
    c = poly_powmod(c, p, m, mod);
  }
  Poly out(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    for (int k = 1; k < d; ++k)
      if (h[j][k] != 0) throw std::logic_error("ExtRing: lifted factor has non-constant coefficients");
    out[j] = h[j][0];
  }
  return out;
}

}  // namespace

namespace ffield {

bool is_irreducible(const std::vector<u64>& f, u64 p) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1 || f.back() != 1) return false;
  if (d == 1) return true;
  Poly x(static_cast<size_t>(d), 0);
  x[1] = 1;
  if (frobenius_power_of_x(f, p, d) != x) return false;
  for (u64 r : prime_factors(static_cast<u64>(d))) {
    Poly y = frobenius_power_of_x(f, p, d / static_cast<int>(r));
    y[1] = nt::submod(y[1], 1, p);
    // coprime iff the gcd is a nonzero constant
    if (poly_gcd(f, y, p).size() != 1) return false;
  }
  return true;
}

std::vector<u64> smallest_irreducible(u64 p, int d) {
  if (d < 1) throw std::invalid_argument("smallest_irreducible: degree must be >= 1");
  const u64 count = nt::ipow(p, d);
  for (u64 idx = 0; idx < count; ++idx) {
    Poly f = element_from_index(idx, p, static_cast<size_t>(d));
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("smallest_irreducible: none found");
}

}  // namespace ffield

ExtRing::ExtRing(u64 p, int prec, u64 root_order) : p_(p), prec_(prec), order_(root_order) {
  if (p < 3 || !nt::is_prime(p)) throw std::invalid_argument("ExtRing: p must be an odd prime");
  if (root_order == 0 || root_order % p == 0)
    throw std::invalid_argument("ExtRing: root order must be prime to p (ramified values unsupported)");
  if (prec < 1 || prec > nt::max_digits(p)) throw std::invalid_argument("ExtRing: precision out of range");
  h_ = monic_lift_h(p, prec, root_order);
}

std::shared_ptr<const ExtRing> ExtRing::make(u64 p, int prec, u64 root_order) {
  static std::mutex mutex;
  static std::map<std::tuple<u64, int, u64>, std::shared_ptr<const ExtRing>> cache;
  const auto key = std::make_tuple(p, prec, root_order);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto ring = std::make_shared<const ExtRing>(p, prec, root_order);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(ring)).first->second;
}

std::vector<u64> ExtRing::mul(const std::vector<u64>& a, const std::vector<u64>& b, int k) const {
  const u64 mod = nt::ipow(p_, k);
  Poly h = h_;
  for (auto& c : h) c %= mod;
  return poly_mulmod(a, b, h, mod);
}

std::vector<u64> ExtRing::root_power_coeffs(i64 e, int k) const {
  const u64 mod = nt::ipow(p_, k);
  Poly h = h_;
  for (auto& c : h) c %= mod;
  const size_t d = h.size() - 1;
  Poly t(d, 0);
  if (d == 1) {
    t[0] = nt::submod(0, h[0], mod);  // root of X - c
  } else {
    t[1] = 1;
  }
  return poly_powmod(t, nt::reduce_signed(e, order_), h, mod);
}

u64 ring_order_for(const DirichletChar& chi, u64 p) { return nt::lcm(chi.order(), p - 1); }

namespace {

void require_same_ring(const ExtElement& a, const ExtElement& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ExtElement: mismatched rings");
}

}  // namespace

ExtElement ExtElement::zero(ExtRingPtr ring) {
  const size_t d = static_cast<size_t>(ring->degree());
  return ExtElement(std::move(ring), kInfinity, 0, std::vector<u64>(d, 0));
}

ExtElement ExtElement::big_oh(ExtRingPtr ring, int abs_prec) {
  const size_t d = static_cast<size_t>(ring->degree());
  return ExtElement(std::move(ring), abs_prec, 0, std::vector<u64>(d, 0));
}

ExtElement ExtElement::from_coeffs(ExtRingPtr ring, int digits, std::vector<u64> coeffs, int shift) {
  const u64 p = ring->prime();
  if (digits > ring->precision()) throw std::invalid_argument("ExtElement: precision exceeds the ring");
  const u64 mod = nt::ipow(p, digits);
  coeffs.resize(static_cast<size_t>(ring->degree()), 0);
  int t = digits;
  for (auto& c : coeffs) {
    c %= mod;
    if (c != 0) t = std::min(t, nt::valuation(c, p));
  }
  if (t == digits) return big_oh(std::move(ring), shift + digits);
  const u64 pt = nt::ipow(p, t);
  for (auto& c : coeffs) c /= pt;
  return ExtElement(std::move(ring), shift + t, digits - t, std::move(coeffs));
}

ExtElement ExtElement::from_scalar(ExtRingPtr ring, const PadicElement& x) {
  if (x.prime() != ring->prime()) throw std::invalid_argument("ExtElement: mismatched primes");
  if (x.is_exact_zero()) return zero(std::move(ring));
  if (x.is_zero()) return big_oh(std::move(ring), x.valuation());
  const int r = std::min(x.relative_precision(), ring->precision());
  std::vector<u64> c(static_cast<size_t>(ring->degree()), 0);
  c[0] = x.unit() % nt::ipow(x.prime(), r);
  return ExtElement(std::move(ring), x.valuation(), r, std::move(c));
}

ExtElement ExtElement::from_int(ExtRingPtr ring, i64 v) {
  const u64 p = ring->prime();
  const int n = ring->precision();
  return from_scalar(std::move(ring), PadicElement::from_int(p, n, v));
}

ExtElement ExtElement::from_rational(ExtRingPtr ring, const BigRational& q) {
  const u64 p = ring->prime();
  const int n = ring->precision();
  return from_scalar(std::move(ring), PadicElement::from_rational(p, n, q));
}

ExtElement ExtElement::root_power(ExtRingPtr ring, u64 order, i64 exponent) {
  if (order == 0 || ring->root_order() % order != 0)
    throw std::invalid_argument("ExtElement::root_power: order must divide the ring's root order");
  const i64 step = static_cast<i64>(ring->root_order() / order);
  const i64 e = static_cast<i64>(nt::reduce_signed(exponent, order)) * step;
  const int n = ring->precision();
  auto c = ring->root_power_coeffs(e, n);
  return ExtElement(std::move(ring), 0, n, std::move(c));
}

ExtElement ExtElement::embed(ExtRingPtr ring, const CycRational& x) {
  const u64 order = static_cast<u64>(x.order());
  if (ring->root_order() % order != 0)
    throw std::invalid_argument("ExtElement::embed: field order must divide the ring's root order");
  if (x.is_zero()) return zero(std::move(ring));
  const u64 p = ring->prime();
  const int n = ring->precision();
  int v0 = kInfinity;
  for (const auto& c : x.coeffs())
    if (!c.is_zero()) v0 = std::min(v0, c.valuation(p));
  const u64 mod = nt::ipow(p, n);
  const BigRational shift = v0 >= 0 ? BigRational(1) / padic_ell::pow(BigRational(static_cast<unsigned long>(p)), static_cast<unsigned>(v0))
                                    : padic_ell::pow(BigRational(static_cast<unsigned long>(p)), static_cast<unsigned>(-v0));
  const i64 step = static_cast<i64>(ring->root_order() / order);
  std::vector<u64> acc(static_cast<size_t>(ring->degree()), 0);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    const u64 c = (x.coeffs()[i] * shift).residue(mod);
    auto t = ring->root_power_coeffs(static_cast<i64>(i) * step, n);
    for (size_t j = 0; j < acc.size(); ++j) acc[j] = nt::addmod(acc[j], nt::mulmod(c, t[j], mod), mod);
  }
  return from_coeffs(std::move(ring), n, std::move(acc), v0);
}

std::vector<u64> ExtElement::residue(int k) const {
  if (k > absolute_precision()) throw std::domain_error("ExtElement::residue: not known to the requested precision");
  std::vector<u64> out(coeffs_.size(), 0);
  if (is_exact_zero() || val_ >= k) return out;
  if (val_ < 0) throw std::domain_error("ExtElement::residue: value is not integral");
  const u64 m = nt::ipow(ring_->prime(), k - val_);
  const u64 pv = nt::ipow(ring_->prime(), val_);
  for (size_t i = 0; i < out.size(); ++i) out[i] = (coeffs_[i] % m) * pv;
  return out;
}

bool ExtElement::is_scalar() const {
  return std::all_of(coeffs_.begin() + (coeffs_.empty() ? 0 : 1), coeffs_.end(), [](u64 c) { return c == 0; });
}

PadicElement ExtElement::scalar() const {
  if (!is_scalar()) throw std::logic_error("ExtElement::scalar: value is not in Z_p");
  const u64 p = ring_->prime();
  if (is_exact_zero()) return PadicElement::zero(p);
  if (is_zero()) return PadicElement::big_oh(p, val_);
  return PadicElement::from_residue(p, prec_, coeffs_[0], val_);
}

ExtElement ExtElement::truncate(int abs_prec) const {
  if (abs_prec >= absolute_precision()) return *this;
  if (abs_prec <= val_) return big_oh(ring_, abs_prec);
  const int r = abs_prec - val_;
  return from_coeffs(ring_, r, coeffs_, val_);
}

ExtElement ExtElement::operator-() const {
  if (prec_ == 0) return *this;
  const u64 mod = nt::ipow(ring_->prime(), prec_);
  std::vector<u64> c = coeffs_;
  for (auto& x : c) x = nt::submod(0, x, mod);
  return ExtElement(ring_, val_, prec_, std::move(c));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  require_same_ring(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const u64 p = a.ring_->prime();
  const int abs = std::min(a.absolute_precision(), b.absolute_precision());
  const int m = std::min(a.val_, b.val_);
  if (abs <= m) return ExtElement::big_oh(a.ring_, abs);
  const int k = abs - m;
  const u64 mod = nt::ipow(p, k);
  std::vector<u64> x(a.coeffs_.size(), 0);
  for (const ExtElement* e : {&a, &b}) {
    if (e->prec_ == 0 || e->val_ >= abs) continue;
    const u64 part_mod = nt::ipow(p, abs - e->val_);
    const u64 scale = nt::ipow(p, e->val_ - m);
    for (size_t i = 0; i < x.size(); ++i)
      x[i] = nt::addmod(x[i], nt::mulmod(e->coeffs_[i] % part_mod, scale, mod), mod);
  }
  return ExtElement::from_coeffs(a.ring_, k, std::move(x), m);
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  require_same_ring(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return ExtElement::zero(a.ring_);
  if (a.prec_ == 0 || b.prec_ == 0) return ExtElement::big_oh(a.ring_, a.val_ + b.val_);
  // The residue ring is a field, so the product of two units is a unit.
  const int r = std::min(a.prec_, b.prec_);
  return ExtElement(a.ring_, a.val_ + b.val_, r, a.ring_->mul(a.coeffs_, b.coeffs_, r));
}

ExtElement operator*(const ExtElement& a, const PadicElement& s) {
  return a * ExtElement::from_scalar(a.ring_, s);
}

ExtElement operator/(const ExtElement& a, const PadicElement& s) {
  if (s.is_zero()) throw std::domain_error("ExtElement: division by a value with no known digit");
  if (a.is_exact_zero()) return a;
  if (a.prec_ == 0) return ExtElement::big_oh(a.ring_, a.val_ - s.valuation());
  const int r = std::min(a.prec_, s.relative_precision());
  const u64 mod = nt::ipow(a.ring_->prime(), r);
  const u64 inv = nt::invmod(s.unit() % mod, mod);
  std::vector<u64> c = a.coeffs_;
  for (auto& x : c) x = nt::mulmod(x % mod, inv, mod);
  return ExtElement(a.ring_, a.val_ - s.valuation(), r, std::move(c));
}

ExtElement ExtElement::pow(u64 e) const {
  ExtElement result = from_int(ring_, 1);
  ExtElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

int congruence_depth(const ExtElement& a, const ExtElement& b) { return (a - b).valuation(); }

std::string ExtElement::to_string() const {
  const std::string ps = std::to_string(ring_->prime());
  if (is_exact_zero()) return "0";
  if (prec_ == 0) return "O(" + ps + "^" + std::to_string(val_) + ")";
  std::string out = ps + "^" + std::to_string(val_) + " * [";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(coeffs_[i]);
  }
  return out + "]";
}

ExtElement embed_char_value(const ExtRingPtr& ring, const DirichletChar& chi, i64 a) {
  auto e = chi.evaluate(a);
  if (!e) return ExtElement::zero(ring);
  return ExtElement::root_power(ring, chi.order(), static_cast<i64>(*e));
}

}  // namespace padic_ell
