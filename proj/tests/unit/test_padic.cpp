#include <doctest.h>

#include <stdexcept>

#include "padic_ell/cyclotomic.hpp"
#include "padic_ell/ext_ring.hpp"
#include "padic_ell/padic.hpp"

using namespace padic_ell;

namespace {

// log(1 + z) and exp(z) as rational partial sums, long enough that the
// omitted tail vanishes modulo p^digits.
BigRational log_series(const BigRational& z, int digits) {
  BigRational acc, zk = 1;
  for (int k = 1; k <= 3 * digits + 20; ++k) {
    zk *= z;
    acc += (k % 2 ? zk : -zk) / BigRational(k);
  }
  return acc;
}

BigRational exp_series(const BigRational& z, int digits) {
  BigRational acc = 1, term = 1;
  for (int k = 1; k <= 4 * digits + 20; ++k) {
    term = term * z / BigRational(k);
    acc += term;
  }
  return acc;
}

u64 upow(u64 p, int k) {
  u64 r = 1;
  while (k-- > 0) r *= p;
  return r;
}

// The root of x^{p-1} = 1 lifting a mod p, by exhaustive search mod p^k.
u64 teichmuller_search(u64 a, u64 p, int k) {
  const u64 mod = upow(p, k);
  for (u64 x = a % p; x < mod; x += p) {
    u64 y = 1;
    for (u64 i = 0; i + 1 < p; ++i) y = y * x % mod;
    if (y == 1) return x;
  }
  return 0;
}

}  // namespace

TEST_CASE("arithmetic in the capped-relative model") {
  auto a = PadicElement::from_int(5, 6, 10);
  CHECK(a.valuation() == 1);
  CHECK(a.relative_precision() == 6);
  CHECK(a.unit() == 2);
  auto b = PadicElement::from_int(5, 6, 15);
  auto d = a - b;
  CHECK(d.valuation() == 1);
  CHECK(d.residue(7) == (upow(5, 7) - 5) % upow(5, 7));
  // Cancellation loses relative digits.
  auto c = PadicElement::from_int(5, 4, 1) - PadicElement::from_int(5, 4, 26);
  CHECK(c.valuation() == 2);
  CHECK(c.absolute_precision() == 4);
  CHECK(c.relative_precision() == 2);
  auto z = PadicElement::from_int(5, 4, 7) - PadicElement::from_int(5, 4, 7);
  CHECK(z.is_zero());
  CHECK(z.absolute_precision() == 4);
  // Products keep min relative precision.
  auto pr = PadicElement::from_int(3, 5, 6) * PadicElement::from_int(3, 3, 2);
  CHECK(pr.valuation() == 1);
  CHECK(pr.relative_precision() == 3);
  auto q = PadicElement::from_int(3, 6, 1) / PadicElement::from_int(3, 6, 2);
  CHECK((q * PadicElement::from_int(3, 6, 2)).residue(6) == 1);
  CHECK_THROWS_AS(PadicElement::from_int(3, 6, 1) / PadicElement::big_oh(3, 4), std::domain_error);
  CHECK_THROWS_AS(PadicElement::zero(4), std::invalid_argument);
  auto r = PadicElement::from_rational(7, 5, BigRational::parse("-3/49"));
  CHECK(r.valuation() == -2);
  CHECK((r * PadicElement::from_int(7, 5, 49)).unit() == upow(7, 5) - 3);
}

TEST_CASE("to_string formats") {
  CHECK(PadicElement::zero(3).to_string() == "0");
  CHECK(PadicElement::big_oh(3, 5).to_string() == "O(3^5)");
  CHECK(PadicElement::from_int(3, 3, 3 * 16).to_string() == "3^1 * (1 + 2*3 + 1*3^2)");
  CHECK(PadicElement::from_int(5, 2, 7).unit_digits() == std::vector<u64>{2, 1});
}

TEST_CASE("Teichmuller representatives") {
  CHECK(teichmuller(1, 5, 4).residue(4) == 1);
  CHECK(teichmuller(2, 5, 2).residue(2) == 7);
  CHECK(teichmuller(-1, 7, 5).residue(5) == upow(7, 5) - 1);
  for (u64 p : {3u, 5u, 7u})
    for (u64 a = 1; a < 3 * p; ++a) {
      if (a % p == 0) continue;
      const int k = p == 7 ? 3 : 4;
      auto w = teichmuller(static_cast<i64>(a), p, k);
      CHECK(w.residue(k) == teichmuller_search(a, p, k));
      CHECK(w.pow(static_cast<i64>(p - 1)).residue(k) == 1);
      // omega(a)^p = omega(a): the representative is stable under Frobenius.
      CHECK(w.pow(static_cast<i64>(p)).residue(k) == w.residue(k));
      auto ang = angle(static_cast<i64>(a), p, k);
      CHECK(ang.residue(1) == 1);
      CHECK((w * ang).residue(k) == a % upow(p, k));
    }
  CHECK(angle(2, 5, 2).residue(2) == 11);
  CHECK_THROWS_AS(teichmuller(10, 5, 3), std::domain_error);
}

TEST_CASE("log_p against the rational series") {
  for (u64 p : {3u, 5u, 7u}) {
    const int N = p == 7 ? 12 : 14;
    for (i64 z : {i64(p), i64(2 * p), i64(p * p), -i64(p), i64(5 * p + p * p)}) {
      auto u = PadicElement::from_int(p, N, 1 + z);
      auto got = log_p(u);
      auto want = PadicElement::from_rational(p, N + 4, log_series(BigRational(z), N));
      CHECK_MESSAGE(congruence_depth(got, want) >= N, "p=" << p << " z=" << z);
    }
  }
  CHECK_THROWS_AS(log_p(PadicElement::from_int(5, 6, 2)), std::domain_error);
}

TEST_CASE("exp_p against the rational series and as inverse of log") {
  for (u64 p : {3u, 5u, 7u}) {
    const int N = 10;
    for (i64 z : {i64(p), i64(2 * p), i64(p * p), -i64(4 * p)}) {
      auto e = exp_p(PadicElement::from_int(p, N, z));
      auto want = PadicElement::from_rational(p, N + 4, exp_series(BigRational(z), N));
      CHECK_MESSAGE(congruence_depth(e, want) >= N - 1, "p=" << p << " z=" << z);
      CHECK(congruence_depth(log_p(e), PadicElement::from_int(p, N, z)) >= N - 1);
    }
  }
  CHECK_THROWS_AS(exp_p(PadicElement::from_int(5, 6, 1)), std::domain_error);
}

TEST_CASE("log_p is a homomorphism on principal units") {
  for (u64 p : {3u, 5u}) {
    const int N = 12;
    for (i64 x : {1 + i64(p), 1 + 2 * i64(p), 1 - i64(p * p)})
      for (i64 y : {1 + 4 * i64(p), 1 + i64(p * p * p)}) {
        auto u = PadicElement::from_int(p, N, x), v = PadicElement::from_int(p, N, y);
        CHECK(congruence_depth(log_p(u * v), log_p(u) + log_p(v)) >= N);
      }
    // The Iwasawa log kills p and roots of unity.
    CHECK(log_iwasawa(PadicElement::from_int(p, N, static_cast<i64>(p))).is_zero());
    CHECK(log_iwasawa(teichmuller(2, p, N)).is_zero());
    auto x = PadicElement::from_int(p, N, 2 * static_cast<i64>(p));
    CHECK(congruence_depth(log_iwasawa(x), log_p(angle(2, p, N))) >= N - 1);
  }
}

TEST_CASE("pow_angle") {
  for (u64 p : {3u, 5u, 7u}) {
    const int N = 10;
    for (i64 a : {2, 4, -1, 11}) {
      auto ang = angle(a, p, N);
      CHECK(congruence_depth(pow_angle(a, PadicElement::from_int(p, N, 3), p, N), ang.pow(3)) >= N);
      CHECK(congruence_depth(pow_angle(a, PadicElement::from_int(p, N, -2), p, N), ang.pow(-2)) >= N);
      CHECK(pow_angle(a, PadicElement::zero(p), p, N).residue(N) == 1);
      // Additivity in s.
      auto s = PadicElement::from_rational(p, N, BigRational::parse("1/2"));
      auto t = PadicElement::from_rational(p, N, BigRational::parse("-7/4"));
      CHECK(congruence_depth(pow_angle(a, s + t, p, N), pow_angle(a, s, p, N) * pow_angle(a, t, p, N)) >= N - 1);
      // Agreement with the exact integer-exponent path.
      auto y = PadicElement::from_rational(p, N, BigRational::parse("5/8"));
      CHECK(congruence_depth(pow_angle(a, y, p, N), pow_principal_unit(ang, y)) >= N - 1);
    }
  }
}

TEST_CASE("binomial coefficients") {
  for (u64 p : {3u, 5u}) {
    const int N = 8;
    for (i64 y : {0, 1, 7, 20, -1, -5})
      for (int k = 0; k <= 10; ++k) {
        BigRational want = 1;
        for (int i = 0; i < k; ++i) want = want * BigRational(y - i) / BigRational(i + 1);
        auto exact = binom_padic(y, k, p, N);
        auto series = binom_padic(PadicElement::from_int(p, N, y), k);
        auto w = PadicElement::from_rational(p, N, want);
        if (want.is_zero()) {
          CHECK(exact.is_zero());
          CHECK(series.absolute_precision() >= N - 2);
        } else {
          CHECK(congruence_depth(exact, w) >= N);
          CHECK_MESSAGE(congruence_depth(series, w) >= N - nt::factorial_valuation(k, p), "y=" << y << " k=" << k);
        }
      }
  }
  CHECK(binom_padic(-1, 9, 3, 6).residue(6) == upow(3, 6) - 1);
}

TEST_CASE("precision soundness: claimed digits agree with a higher-precision run") {
  for (u64 p : {3u, 5u, 7u}) {
    const int N = 8;
    for (i64 a : {2, 4, 13}) {
      auto lo = log_p(angle(a, p, N));
      auto hi = log_p(angle(a, p, N + 4));
      CHECK(congruence_depth(lo, hi) >= lo.absolute_precision());
      auto s = PadicElement::from_rational(p, N, BigRational::parse("3/4"));
      auto s_hi = PadicElement::from_rational(p, N + 4, BigRational::parse("3/4"));
      auto x = pow_angle(a, s, p, N), x_hi = pow_angle(a, s_hi, p, N + 4);
      CHECK(congruence_depth(x, x_hi) >= x.absolute_precision());
      auto b = binom_padic(s, 5), b_hi = binom_padic(s_hi, 5);
      CHECK(congruence_depth(b, b_hi) >= b.absolute_precision());
    }
  }
}

TEST_CASE("extension rings") {
  auto r12 = ExtRing::make(3, 6, 1);
  CHECK(r12->degree() == 1);
  CHECK(ExtRing::make(3, 6, 2)->degree() == 1);
  auto r4 = ExtRing::make(3, 6, 4);
  CHECK(r4->degree() == 2);
  CHECK(ExtRing::make(3, 6, 4) == r4);
  CHECK(ffield::is_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(ffield::is_irreducible({1, 0, 1}, 5));
  CHECK_THROWS_AS(ExtRing::make(3, 6, 6), std::invalid_argument);
  for (auto [p, U] : {std::pair<u64, u64>{3, 4}, {5, 4}, {5, 12}, {7, 6}, {7, 30}, {3, 10}}) {
    auto ring = ExtRing::make(p, 8, U);
    // Phi_U(zeta) = 0 and zeta has exact order U.
    auto phi = cyclotomic_polynomial(static_cast<int>(U));
    auto acc = ExtElement::zero(ring);
    for (size_t i = 0; i < phi.size(); ++i)
      acc += ExtElement::from_int(ring, phi[i]) * ExtElement::root_power(ring, U, static_cast<i64>(i));
    CHECK(acc.absolute_precision() >= 8);
    CHECK(acc.is_zero());
    CHECK(ExtElement::root_power(ring, U, static_cast<i64>(U)).residue(8) == ExtElement::from_int(ring, 1).residue(8));
    for (u64 d = 1; d < U; ++d)
      if (U % d == 0) CHECK_FALSE(ExtElement::root_power(ring, U, static_cast<i64>(d)).residue(8) ==
                                  ExtElement::from_int(ring, 1).residue(8));
    // omega(g^k) = zeta_{p-1}^k with g the smallest primitive root.
    if (U % (p - 1) == 0) {
      const u64 g = nt::primitive_root(p);
      u64 x = 1;
      for (u64 k = 0; k < p - 1; ++k, x = x * g % p) {
        auto lhs = ExtElement::root_power(ring, p - 1, static_cast<i64>(k));
        auto rhs = ExtElement::from_scalar(ring, teichmuller(static_cast<i64>(x), p, 8));
        CHECK(congruence_depth(lhs, rhs) >= 8);
        CHECK(embed_char_value(ring, DirichletChar::teichmuller(p), static_cast<i64>(x)).residue(8) == lhs.residue(8));
      }
    }
  }
}

TEST_CASE("extension ring arithmetic") {
  auto ring = ExtRing::make(5, 6, 12);
  auto z = ExtElement::root_power(ring, 12, 1);
  auto x = ExtElement::from_int(ring, 10) + z;
  CHECK(x.valuation() == 0);
  auto y = x * x - x * x;
  CHECK(y.is_zero());
  CHECK(ExtElement::from_int(ring, 25).valuation() == 2);
  auto half = ExtElement::from_rational(ring, BigRational::parse("1/2"));
  CHECK((half * ExtElement::from_int(ring, 2)).residue(6) == ExtElement::from_int(ring, 1).residue(6));
  CHECK(ExtElement::from_int(ring, 7).is_scalar());
  CHECK_FALSE(z.is_scalar());
  CHECK(ExtElement::from_int(ring, 7).scalar().residue(6) == 7);
  // Embedding respects the cyclotomic relation zeta_12^6 = -1.
  CHECK(ExtElement::embed(ring, CycRational::root_power(12, 6)).residue(6) == ExtElement::from_int(ring, -1).residue(6));
  CHECK(ring_order_for(DirichletChar::parse("M=7;e=[1]"), 5) == 12);
}
