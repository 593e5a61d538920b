#include <doctest.h>

#include <map>
#include <numeric>
#include <stdexcept>

#include "padic_ell/dirichlet.hpp"
#include "padic_ell/modular.hpp"

using namespace padic_ell;

namespace {

u64 brute_order(u64 a, u64 m) {
  u64 x = a % m, k = 1;
  while (x != 1) x = x * a % m, ++k;
  return k;
}

// delta_chi read off chi(-1).
int parity_by_evaluation(const DirichletChar& chi) {
  const u64 e = *chi.evaluate(-1);
  return e == 0 ? 1 : 0;
}

}  // namespace

TEST_CASE("character group structure") {
  CharGroup g3(3);
  REQUIRE(g3.factors().size() == 1);
  CHECK(g3.factors()[0].order == 2);
  CharGroup g9(9);
  REQUIRE(g9.factors().size() == 1);
  CHECK(g9.factors()[0].order == 6);
  CharGroup g15(15);
  REQUIRE(g15.factors().size() == 2);
  CHECK(g15.factors()[0].order == 2);
  CHECK(g15.factors()[1].order == 4);
  CHECK(g15.size() == 8);
  CHECK(g15.exponent() == 4);
  // Generators have the stated order and are 1 modulo the other prime powers.
  for (u64 m : {15u, 21u, 45u, 63u, 105u, 175u}) {
    CharGroup g(m);
    u64 prod = 1;
    for (const auto& f : g.factors()) {
      CHECK(brute_order(f.generator, m) == f.order);
      CHECK(f.generator % f.prime_power != 1);
      CHECK((f.generator - 1) % (m / f.prime_power) == 0);
      prod *= f.order;
    }
    CHECK(prod == nt::euler_phi(m));
  }
  CHECK_FALSE(g15.coordinates(6).has_value());
  CHECK(g15.coordinates(1) == std::vector<u64>{0, 0});
}

TEST_CASE("evaluate") {
  auto quad3 = DirichletChar::from_exponents(3, {1});
  CHECK(quad3.order() == 2);
  CHECK(quad3.evaluate(2) == 1u);
  CHECK(quad3.evaluate(1) == 0u);
  CHECK_FALSE(quad3.evaluate(6).has_value());
  CHECK(quad3.evaluate(-1) == 1u);
  CHECK(quad3.evaluate(-4) == 1u);
  for (u64 m : {5u, 9u, 15u, 35u})
    for (const auto& chi : enumerate_characters(m)) {
      CHECK(chi.evaluate(1) == 0u);
      CHECK(chi.evaluate(static_cast<i64>(m) + 1) == 0u);
    }
}

TEST_CASE("conductor and primitivize") {
  auto triv15 = DirichletChar::from_exponents(15, {0, 0});
  CHECK(triv15.conductor() == 1);
  CHECK(triv15.primitivize() == DirichletChar::trivial());
  auto quad3 = DirichletChar::from_exponents(3, {1});
  auto lifted = quad3.lift(15);
  CHECK(lifted.modulus() == 15);
  CHECK(lifted.conductor() == 3);
  CHECK(lifted.primitivize() == quad3);
  CHECK_FALSE(lifted.evaluate(5).has_value());
  for (u64 m : {5u, 9u, 15u, 21u, 45u}) {
    for (const auto& chi : enumerate_characters(m)) {
      CHECK((chi * chi.conj()).primitivize() == DirichletChar::trivial());
      // Brute-force conductor: the least d | m such that chi is 1 on units = 1 mod d.
      u64 cond = m;
      for (u64 d : nt::divisors(m)) {
        bool ok = true;
        for (u64 a = 1; a < m && ok; a += d)
          if (std::gcd(a, m) == 1 && *chi.evaluate(static_cast<i64>(a)) != 0) ok = false;
        if (ok) {
          cond = d;
          break;
        }
      }
      CHECK_MESSAGE(chi.conductor() == cond, chi.to_string());
    }
    for (const auto& chi : primitive_characters(m)) {
      CHECK(chi.is_primitive());
      CHECK(chi.lift(3 * m).primitivize() == chi);
      CHECK(chi.lift(7 * m).primitivize() == chi);
    }
  }
  CHECK(primitive_characters(15).size() == 3);
  CHECK(primitive_characters(9).size() == 4);
}

TEST_CASE("parse and print") {
  auto chi = DirichletChar::parse("M=15;e=[1,2]");
  CHECK(chi.modulus() == 15);
  CHECK(chi.exponents() == std::vector<i64>{1, 2});
  CHECK(chi.to_string() == "M=15;e=[1,2]");
  CHECK(DirichletChar::parse(chi.to_string()) == chi);
  CHECK(DirichletChar::parse("M=1;e=[]") == DirichletChar::trivial());
  for (const char* bad : {"", "M=15", "M=15;e=[1]", "M=0;e=[]", "M=5;e=[x]", "M=5;e=[1", "N=5;e=[1]", "M=5;e=[1];"})
    CHECK_THROWS_AS(DirichletChar::parse(bad), std::invalid_argument);
}

TEST_CASE("twist by the Teichmuller character") {
  auto triv = DirichletChar::trivial();
  auto t = twist_teichmuller(triv, 1, 5);
  CHECK(t.conductor() == 5);
  CHECK(t == DirichletChar::teichmuller(5).conj());
  CHECK(t.order() == 4);
  for (u64 p : {3u, 5u, 7u})
    for (u64 m : {1u, 3u, 5u, 7u, 9u, 15u})
      for (const auto& chi : primitive_characters(m)) {
        const auto base = chi.primitivize();
        CHECK(twist_teichmuller(chi, 0, p) == base);
        CHECK(twist_teichmuller(chi, static_cast<i64>(p - 1), p) == base);
        CHECK(twist_teichmuller(chi, -2 * static_cast<i64>(p - 1), p) == base);
        for (i64 n = -3; n <= 6; ++n) {
          auto tn = twist_teichmuller(chi, n, p);
          CHECK(tn.is_primitive());
          CHECK(parity_by_evaluation(tn) == tn.parity());
          const int expected = (n % 2 == 0) ? chi.parity() : 1 - chi.parity();
          CHECK_MESSAGE(tn.parity() == expected, chi.to_string() << " n=" << n << " p=" << p);
          CHECK(std::lcm(chi.order(), p - 1) % tn.order() == 0);
          for (i64 k = -2; k <= 3; ++k)
            CHECK(twist_teichmuller(tn, k, p) == twist_teichmuller(chi, n + k, p));
        }
      }
}

TEST_CASE("Teichmuller character values are congruent to a mod p") {
  for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
    auto w = DirichletChar::teichmuller(p);
    CHECK(w.order() == p - 1);
    const u64 g = nt::primitive_root(p);
    // omega(g^k) = zeta^k, so the exponent of omega(a) is the discrete log of a.
    u64 x = 1;
    for (u64 k = 0; k < p - 1; ++k, x = x * g % p) CHECK(w.evaluate(static_cast<i64>(x)) == k);
  }
}

TEST_CASE("homomorphism: exhaustive for moduli up to 200") {
  for (u64 m = 2; m <= 200; ++m) {
    CharGroup g(m);
    std::vector<DirichletChar> chars;
    std::vector<i64> ones(g.factors().size(), 1);
    chars.push_back(DirichletChar::from_exponents(m, ones));
    for (size_t i = 0; i < g.factors().size(); ++i) {
      std::vector<i64> e(g.factors().size(), 0);
      e[i] = 1;
      chars.push_back(DirichletChar::from_exponents(m, e));
    }
    for (const auto& chi : chars) {
      const u64 L = chi.order();
      for (u64 a = 1; a < m; ++a) {
        auto ea = chi.evaluate(static_cast<i64>(a));
        if (std::gcd(a, m) != 1) {
          CHECK_FALSE(ea.has_value());
          continue;
        }
        for (u64 b = a; b < m; ++b) {
          if (std::gcd(b, m) != 1) continue;
          auto eab = chi.evaluate(static_cast<i64>(a * b % m));
          if (*eab != (*ea + *chi.evaluate(static_cast<i64>(b))) % L) FAIL_CHECK("M=" << m << " a=" << a << " b=" << b);
        }
      }
    }
  }
}

TEST_CASE("orthogonality") {
  for (u64 m = 3; m <= 60; m += 2)
    for (const auto& chi : enumerate_characters(m)) {
      if (chi.is_trivial()) continue;
      // Sum of zeta_L^e over units vanishes iff each exponent class is hit equally often.
      std::map<u64, u64> hist;
      for (u64 a = 1; a < m; ++a)
        if (auto e = chi.evaluate(static_cast<i64>(a))) ++hist[*e];
      REQUIRE(hist.size() == chi.order());
      for (const auto& [e, c] : hist) CHECK(c == nt::euler_phi(m) / chi.order());
    }
}

TEST_CASE("order is minimal") {
  for (u64 m : {9u, 15u, 21u, 45u})
    for (const auto& chi : enumerate_characters(m)) {
      const u64 L = chi.order();
      u64 g = 0;
      for (u64 a = 1; a < m; ++a)
        if (auto e = chi.evaluate(static_cast<i64>(a))) g = std::gcd(g, *e);
      CHECK(std::gcd(g, L) == 1);
      CHECK(chi.pow(static_cast<i64>(L)).is_trivial());
    }
}
