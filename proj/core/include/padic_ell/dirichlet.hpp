#pragma once

// Dirichlet characters in index representation: chi(a) = zeta_L^{e(a)} with
// e(a) in Z/L, or zero when gcd(a, M) > 1.
//
// Generators: for each odd prime power q || M, the smallest primitive root
// mod q, CRT-lifted to be 1 modulo the other prime-power factors; factors are
// ordered by ascending prime. 2-power parts use -1 and 5. The character with
// exponent vector e sends generator g_i of order n_i to zeta_{n_i}^{e_i}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padic_ell/modular.hpp"

namespace padic_ell {

struct CyclicFactor {
  u64 prime;
  u64 prime_power;
  u64 order;
  u64 generator;  // element of (Z/M)^x
};

/// Cyclic decomposition of (Z/M)^x.
class CharGroup {
 public:
  explicit CharGroup(u64 modulus);

  u64 modulus() const { return modulus_; }
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  /// Least common multiple of the factor orders (1 for the trivial group).
  u64 exponent() const { return exponent_; }
  u64 size() const;

  /// Discrete-log coordinates of a w.r.t. the generators, nullopt for non-units.
  std::optional<std::vector<u64>> coordinates(i64 a) const;

 private:
  u64 modulus_;
  u64 exponent_ = 1;
  std::vector<CyclicFactor> factors_;
  std::vector<std::vector<u64>> coords_;  // indexed by residue; empty for non-units
};

class DirichletChar {
 public:
  static constexpr int kZero = -1;

  /// Character mod M with chi(g_i) = zeta_{n_i}^{e_i}.
  static DirichletChar from_exponents(u64 modulus, const std::vector<i64>& exponents);
  /// Character given by a full residue table of exponents of zeta_order.
  static DirichletChar from_table(u64 modulus, u64 order, std::vector<int> table);
  /// The trivial character of conductor 1.
  static DirichletChar trivial();
  /// omega mod p: omega(g) = zeta_{p-1} for the smallest primitive root g mod p.
  static DirichletChar teichmuller(u64 p);
  /// Parses "M=15;e=[1,2]"; throws std::invalid_argument on malformed text.
  static DirichletChar parse(std::string_view text);

  u64 modulus() const { return modulus_; }
  u64 order() const { return order_; }
  u64 conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus_; }
  bool is_trivial() const { return order_ == 1; }
  /// delta_chi: 1 if chi(-1) = 1, 0 if chi(-1) = -1.
  int parity() const { return parity_; }
  const std::vector<i64>& exponents() const { return exponents_; }

  /// Exponent e with chi(a) = zeta_L^e, or nullopt when gcd(a, M) > 1.
  std::optional<u64> evaluate(i64 a) const;
  /// Raw residue table (kZero marks non-units), for bulk summation.
  std::span<const int> table() const { return table_; }

  DirichletChar primitivize() const;
  /// Induced character on a multiple of the modulus.
  DirichletChar lift(u64 new_modulus) const;
  DirichletChar pow(i64 k) const;
  DirichletChar conj() const { return pow(-1); }
  /// Product on lcm of the moduli (not primitivized).
  friend DirichletChar operator*(const DirichletChar& a, const DirichletChar& b);
  /// Same modulus and identical values.
  friend bool operator==(const DirichletChar& a, const DirichletChar& b);

  /// "M=15;e=[1,2]".
  std::string to_string() const;

 private:
  DirichletChar() = default;
  u64 modulus_ = 1;
  u64 order_ = 1;
  u64 conductor_ = 1;
  int parity_ = 1;
  std::vector<int> table_;
  std::vector<i64> exponents_;
};

/// All characters mod M, lexicographic in the exponent vector.
std::vector<DirichletChar> enumerate_characters(u64 modulus);
/// The primitive characters among them.
std::vector<DirichletChar> primitive_characters(u64 modulus);

/// chi_n: the primitive character associated with chi * omega^{-n} on
/// lcm(f, p). Requires p odd prime and chi of odd conductor.
DirichletChar twist_teichmuller(const DirichletChar& chi, i64 n, u64 p);

}  // namespace padic_ell
