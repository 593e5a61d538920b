#pragma once

// Euler numbers E_n and Euler polynomials E_n(x), defined by
//   2 e^{xt} / (e^t + 1) = sum_n E_n(x) t^n / n!,   E_n = E_n(0).

#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

#include "padic_ell/bigrational.hpp"

namespace padic_ell {

/// Exact E_0 .. E_{max_n}. Immutable once built.
class EulerTable {
 public:
  explicit EulerTable(std::vector<BigRational> values);

  int max_n() const { return static_cast<int>(values_.size()) - 1; }
  const BigRational& operator[](int n) const;
  const std::vector<BigRational>& values() const { return values_; }

 private:
  std::vector<BigRational> values_;
};

/// E_0 .. E_{n_max} from E_n = [n = 0] - (1/2) sum_{k<n} C(n,k) E_k.
/// Throws std::invalid_argument for n_max < 0.
EulerTable euler_numbers(int n_max);

/// Coefficients c[0..n] with E_n(x) = sum_i c[i] x^i.
std::vector<BigRational> euler_polynomial(int n, const EulerTable& table);
std::vector<BigRational> euler_polynomial(int n);

BigRational eval_euler_poly(int n, const BigRational& x, const EulerTable& table);
BigRational eval_euler_poly(int n, const BigRational& x);

/// Text persistence: one "n num/den" line per entry, ascending n.
void save_euler_table(std::ostream& os, const EulerTable& table);
/// Throws std::runtime_error on malformed input or a non-contiguous index.
EulerTable load_euler_table(std::istream& is);

/// Thread-safe growable cache. `get(n)` returns a table covering at least
/// E_0..E_n; previously returned tables stay valid.
class EulerCache {
 public:
  std::shared_ptr<const EulerTable> get(int n);
  /// Installs a precomputed table if it covers more indices than the current one.
  void seed(EulerTable table);

 private:
  std::mutex mutex_;
  std::shared_ptr<const EulerTable> table_;
};

/// Process-wide cache.
EulerCache& default_euler_cache();

}  // namespace padic_ell
