#include <doctest.h>

#include <stdexcept>

#include "padic_ell/euler.hpp"
#include "padic_ell/measures.hpp"
#include "test_matrix.hpp"

using namespace padic_ell;
using testing::test_matrix;

namespace {

constexpr int kN = 10;
constexpr int kGuard = 2;

BigRational p_pow(u64 p, int k) { return pow(BigRational(static_cast<unsigned long>(p)), static_cast<unsigned>(k)); }

ExtRingPtr ring_for(u64 p, u64 order = 1) { return ExtRing::make(p, kN, order == 1 ? p - 1 : order); }

ExtElement exact(const ExtRingPtr& ring, const BigRational& q) { return ExtElement::from_rational(ring, q); }

CycRational at_order(const CycRational& x, int L) { return x.order() == L ? x : x.lift(L); }

}  // namespace

TEST_CASE("Euler measure: total mass, pZ_p and additivity") {
  for (u64 p : {3u, 5u, 7u}) {
    auto e = euler_numbers(8);
    for (int n = 1; n <= 6; ++n) {
      CHECK(euler_measure(n, CompactOpen::make(p, 1, 0, 0)) == e[n]);
      for (int M = 1; M <= 3; ++M) {
        const u64 pm = nt::ipow(p, M);
        BigRational all, multiples;
        for (u64 a = 0; a < pm; ++a) {
          auto m = euler_measure(n, CompactOpen::make(p, 1, M, a));
          all += m;
          if (a % p == 0) multiples += m;
          // Distribution relation: a cell is the sum of its p children.
          if (M < 3) {
            BigRational children;
            for (u64 j = 0; j < p; ++j) children += euler_measure(n, CompactOpen::make(p, 1, M + 1, a + j * pm));
            CHECK(children == m);
          }
        }
        CHECK(all == e[n]);
        CHECK(multiples == p_pow(p, n) * e[n]);
      }
    }
  }
  CHECK_THROWS_AS(CompactOpen::make(3, 1, 2, 9), std::invalid_argument);
  CHECK_THROWS(euler_measure(0, CompactOpen::make(3, 1, 1, 0)));
  CHECK_THROWS(euler_measure(1, CompactOpen::make(3, 5, 1, 0)));
}

TEST_CASE("fermionic integrals of monomials") {
  for (u64 p : {3u, 5u, 7u}) {
    auto ring = ring_for(p);
    auto e = euler_numbers(8);
    for (int n = 0; n <= 6; ++n) {
      auto f = monomial(n, p, kN);
      for (int M = 3; M <= 5; ++M) {
        auto whole = fermionic_integral(f, ring, M, Domain::X);
        auto units = fermionic_integral(f, ring, M, Domain::Xstar);
        auto mult = fermionic_integral(f, ring, M, Domain::pX);
        CHECK(congruence_depth(whole, exact(ring, e[n])) >= M - kGuard);
        CHECK(congruence_depth(units, exact(ring, (1 - p_pow(p, n)) * e[n])) >= M - kGuard);
        CHECK(congruence_depth(whole, mult + units) >= kN);
      }
    }
    for (const char* xs : {"1/2", "-3/4", "2"})
      for (int n = 1; n <= 5; ++n) {
        const BigRational x = BigRational::parse(xs);
        auto v = fermionic_integral(shifted_monomial(n, x, p, kN), ring, 5, Domain::X);
        CHECK_MESSAGE(congruence_depth(v, exact(ring, eval_euler_poly(n, x))) >= 5 - kGuard,
                      "p=" << p << " x=" << xs << " n=" << n);
      }
  }
}

TEST_CASE("character integrals") {
  for (const auto& [p, chi] : test_matrix()) {
    if (chi.conductor() > 9) continue;
    auto ring = ExtRing::make(p, kN, ring_order_for(chi, p));
    const int L = static_cast<int>(chi.order());
    constexpr int M = 4;
    for (int n = 1; n <= 4; ++n) {
      CycRational en = at_order(generalized_euler_number(n, chi), L);
      CycRational units = en;
      if (auto cp = chi.evaluate(static_cast<i64>(p)))
        units -= CycRational::root_power(L, static_cast<i64>(*cp)) * CycRational::from_rational(L, p_pow(p, n)) * en;
      auto x = char_integral(n, chi, ring, M, Domain::X);
      auto xs = char_integral(n, chi, ring, M, Domain::Xstar);
      auto px = char_integral(n, chi, ring, M, Domain::pX);
      CHECK_MESSAGE(congruence_depth(x, ExtElement::embed(ring, en)) >= M - kGuard, chi.to_string() << " n=" << n);
      CHECK(congruence_depth(xs, ExtElement::embed(ring, units)) >= M - kGuard);
      CHECK(congruence_depth(x, px + xs) >= kN);
      // The same integral through the generic locally defined function.
      CHECK(congruence_depth(x, fermionic_integral(char_monomial(chi, n, p, kN), ring, M, Domain::X, chi.conductor())) >=
            kN);
    }
  }
}

TEST_CASE("l_p as an integral over X*") {
  for (const auto& [p, chi] : test_matrix()) {
    if (chi.conductor() > 7) continue;
    EllContext ctx(p, chi, kN, kGuard);
    for (const char* s : {"0", "-1/2", "3"}) {
      auto sv = ctx.scalar(BigRational::parse(s));
      for (int M = 2; M <= 4; ++M)
        CHECK(congruence_depth(ell_p_measure(sv, ctx, M), ell_p_witt(sv, ctx, M)) >= kN);
    }
    constexpr int M = 5;
    for (int n = 1; n <= 3; ++n) {
      auto v = ell_p_measure(ctx.scalar(1 - n), ctx, M);
      CHECK(congruence_depth(v, ExtElement::embed(ctx.ring(), epsilon(n, chi, p))) >= M - kGuard);
    }
    auto f = char_angle_power(ctx.chi(), ctx.scalar(0), kN);
    CHECK_FALSE(f.rule(p).has_value());
  }
}

TEST_CASE("domains") {
  CHECK(parse_domain("X") == Domain::X);
  CHECK(parse_domain("pX") == Domain::pX);
  CHECK(parse_domain("X*") == Domain::Xstar);
  for (Domain d : {Domain::X, Domain::pX, Domain::Xstar}) CHECK(parse_domain(to_string(d)) == d);
  CHECK_THROWS_AS(parse_domain("Y"), std::invalid_argument);
  CHECK(CompactOpen::make(5, 3, 1, 7).in_units());
  CHECK_FALSE(CompactOpen::make(5, 3, 1, 10).in_units());
}
