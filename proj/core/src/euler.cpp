#include "padic_ell/euler.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace padic_ell {

EulerTable::EulerTable(std::vector<BigRational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("EulerTable: empty");
}

const BigRational& EulerTable::operator[](int n) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("EulerTable: index " + std::to_string(n));
  return values_[static_cast<size_t>(n)];
}

EulerTable euler_numbers(int n_max) {
  if (n_max < 0) throw std::invalid_argument("euler_numbers: n_max must be >= 0");
  std::vector<BigRational> e;
  e.reserve(static_cast<size_t>(n_max) + 1);
  e.emplace_back(1);
  const BigRational half(BigInt(1), BigInt(2));
  for (int n = 1; n <= n_max; ++n) {
    BigRational s;
    for (int k = 0; k < n; ++k) {
      if (e[k].is_zero()) continue;
      s += BigRational(binomial(n, k)) * e[k];
    }
    e.push_back(-(half * s));
  }
  return EulerTable(std::move(e));
}

std::vector<BigRational> euler_polynomial(int n, const EulerTable& table) {
  if (n < 0) throw std::invalid_argument("euler_polynomial: n must be >= 0");
  // E_n(x) = sum_k C(n,k) x^{n-k} E_k
  std::vector<BigRational> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[n - k] = BigRational(binomial(n, k)) * table[k];
  return c;
}

std::vector<BigRational> euler_polynomial(int n) {
  return euler_polynomial(n, *default_euler_cache().get(n));
}

BigRational eval_euler_poly(int n, const BigRational& x, const EulerTable& table) {
  auto c = euler_polynomial(n, table);
  BigRational acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational eval_euler_poly(int n, const BigRational& x) {
  return eval_euler_poly(n, x, *default_euler_cache().get(n));
}

void save_euler_table(std::ostream& os, const EulerTable& table) {
  for (int n = 0; n <= table.max_n(); ++n) os << n << ' ' << table[n].to_string() << '\n';
}

EulerTable load_euler_table(std::istream& is) {
  std::vector<BigRational> values;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    long index = -1;
    std::string value;
    if (!(ls >> index >> value) || index != static_cast<long>(values.size()))
      throw std::runtime_error("load_euler_table: malformed line '" + line + "'");
    values.push_back(BigRational::parse(value));
  }
  if (values.empty()) throw std::runtime_error("load_euler_table: empty table");
  return EulerTable(std::move(values));
}

std::shared_ptr<const EulerTable> EulerCache::get(int n) {
  std::lock_guard lock(mutex_);
  if (!table_ || table_->max_n() < n) {
    int target = std::max(n, table_ ? 2 * table_->max_n() : 64);
    table_ = std::make_shared<const EulerTable>(euler_numbers(target));
  }
  return table_;
}

void EulerCache::seed(EulerTable table) {
  std::lock_guard lock(mutex_);
  if (!table_ || table_->max_n() < table.max_n()) table_ = std::make_shared<const EulerTable>(std::move(table));
}

EulerCache& default_euler_cache() {
  static EulerCache cache;
  return cache;
}

}  // namespace padic_ell
