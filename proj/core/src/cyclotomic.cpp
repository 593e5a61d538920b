#include "padic_ell/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace padic_ell {

namespace {

std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& den) {
  // den is monic
  const size_t dn = den.size() - 1;
  std::vector<i64> q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    i64 c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<i64> compute_cyclotomic(int order) {
  std::vector<i64> poly(static_cast<size_t>(order) + 1, 0);
  poly[0] = -1;
  poly[static_cast<size_t>(order)] = 1;
  for (u64 d : nt::divisors(static_cast<u64>(order))) {
    if (d == static_cast<u64>(order)) continue;
    poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(static_cast<int>(d)));
  }
  return poly;
}

}  // namespace

std::vector<i64> cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::vector<i64>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(order);
  std::lock_guard lock(mutex);
  return cache.emplace(order, std::move(poly)).first->second;
}

CycRational::CycRational(int order, std::vector<BigRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CycRational CycRational::reduce(int order, std::vector<BigRational> poly) {
  const auto phi = cyclotomic_polynomial(order);
  const size_t deg = phi.size() - 1;
  for (size_t i = poly.size(); i-- > deg;) {
    if (poly[i].is_zero()) continue;
    BigRational c = poly[i];
    for (size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * BigRational(static_cast<long>(phi[j]));
    }
  }
  poly.resize(deg);
  return CycRational(order, std::move(poly));
}

CycRational CycRational::zero(int order) {
  if (order < 1) throw std::invalid_argument("CycRational: order must be >= 1");
  return CycRational(order, std::vector<BigRational>(cyclotomic_polynomial(order).size() - 1));
}

CycRational CycRational::from_rational(int order, const BigRational& q) {
  auto r = zero(order);
  r.coeffs_[0] = q;
  return r;
}

CycRational CycRational::root_power(int order, i64 exponent) {
  if (order < 1) throw std::invalid_argument("CycRational: order must be >= 1");
  u64 e = nt::reduce_signed(exponent, static_cast<u64>(order));
  std::vector<BigRational> poly(e + 1);
  poly[e] = BigRational(1);
  return reduce(order, std::move(poly));
}

CycRational CycRational::from_exponent_sums(int order, const std::vector<BigRational>& weights) {
  if (order < 1) throw std::invalid_argument("CycRational: order must be >= 1");
  std::vector<BigRational> poly(static_cast<size_t>(order));
  for (size_t e = 0; e < weights.size(); ++e) poly[e % static_cast<size_t>(order)] += weights[e];
  return reduce(order, std::move(poly));
}

bool CycRational::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycRational::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

BigRational CycRational::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycRational: value is not rational");
  return coeffs_[0];
}

CycRational CycRational::lift(int new_order) const {
  if (new_order % order_ != 0)
    throw std::invalid_argument("CycRational::lift: order must divide the new order");
  if (new_order == order_) return *this;
  const size_t step = static_cast<size_t>(new_order / order_);
  std::vector<BigRational> poly(coeffs_.size() * step + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return reduce(new_order, std::move(poly));
}

CycRational& CycRational::operator+=(const CycRational& o) {
  if (o.order_ != order_) throw std::invalid_argument("CycRational: order mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycRational& CycRational::operator-=(const CycRational& o) {
  if (o.order_ != order_) throw std::invalid_argument("CycRational: order mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycRational& CycRational::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycRational operator*(const CycRational& a, const CycRational& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("CycRational: order mismatch");
  std::vector<BigRational> poly(a.coeffs_.size() + b.coeffs_.size());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycRational::reduce(a.order_, std::move(poly));
}

CycRational CycRational::operator-() const {
  CycRational r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycRational& a, const CycRational& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string CycRational::to_string() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::string c = coeffs_[i].to_string();
    if (!out.empty()) {
      const bool neg = c[0] == '-';
      out += neg ? " - " : " + ";
      if (neg) c.erase(0, 1);
    }
    out += c;
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace padic_ell
