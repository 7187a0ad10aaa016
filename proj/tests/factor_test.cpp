#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "dcf/error.hpp"
#include "dcf/subfield.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dcf;
using namespace dcf::testing;

TEST(Factor, Examples) {
  auto q = Q();
  auto f = factor(P("x^4-1", q));
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0].first.to_string(), "x-1");
  EXPECT_EQ(f.factors[1].first.to_string(), "x+1");
  EXPECT_EQ(f.factors[2].first.to_string(), "x^2+1");

  auto f5 = Fp(5);
  auto g = factor(P("x^2+1", f5));
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].first, P("x-3", f5));
  EXPECT_EQ(g.factors[1].first, P("x-2", f5));
}

TEST(Factor, QuarticOverSqrt2) {
  auto A = ext(Q(), "x^2-2", "a");
  auto f = factor(P("x^4-10*x^2+1", A));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, P("x^2-2*a*x-1", A));
  EXPECT_EQ(f.factors[1].first, P("x^2+2*a*x-1", A));
  // Oracle: the product expands back, and the roots a +- sqrt3 of the
  // quadratics would put sqrt3 in Q(sqrt2), which it is not.
  EXPECT_EQ(P("x^2-2*a*x-1", A) * P("x^2+2*a*x-1", A), P("x^4-10*x^2+1", A));
  auto F = ext(A, "x^2-3", "b");
  EXPECT_FALSE(subfield_member(gen(F, 2), {gen(F, 1)}).has_value());
  auto root = gen(F, 1) + gen(F, 2);
  EXPECT_TRUE(P("x^2-2*a*x-1", A).lift_to(F).eval(root).is_zero());
}

TEST(Factor, Reducibility) {
  auto q = Q();
  auto A = ext(q, "x^2-2", "a");
  EXPECT_FALSE(is_reducible(P("x^2-2", q), q));
  EXPECT_TRUE(is_reducible(P("x^2-2", q), A));
  EXPECT_FALSE(is_reducible(P("x^2+x+1", Fp(2)), Fp(2)));
}

TEST(Factor, Separability) {
  auto B = FpT(2);
  EXPECT_FALSE(is_separable(P("x^2-t", B)));
  EXPECT_TRUE(is_separable(P("x^2-2", Q())));
  auto U = extend_tower(B, P("x^2-t", B), "u", 1u);
  auto u = gen(U, 1);
  EXPECT_FALSE(is_separable_element(u, {}));

  auto A = ext(Q(), "x^2-2", "a");
  EXPECT_TRUE(sep_closure_member(gen(A, 1), Q()));
  EXPECT_FALSE(sep_closure_member(u, B));
  EXPECT_TRUE(sep_closure_member(TowerElement(U, U.from_scalar(B.base().t())), B));
}

TEST(Factor, Errors) {
  auto q = Q();
  try {
    factor(Polynomial(q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
  try {
    factor(P("x^25+1", q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  ::setenv("DCF_MAX_BASE_DEGREE", "30", 1);
  EXPECT_EQ(factor(P("x^25+1", q)).factors.size(), 3u);
  ::unsetenv("DCF_MAX_BASE_DEGREE");
}

TEST(Factor, CharacteristicPInseparable) {
  auto B = FpT(3);
  auto f = factor(P("x^3-t", B));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].second, 1u);
  auto F3 = Fp(3);
  auto g = factor(P("x^6+2*x^3+1", F3));  // (x+1)^6
  ASSERT_EQ(g.factors.size(), 1u);
  EXPECT_EQ(g.factors[0].first, P("x+1", F3));
  EXPECT_EQ(g.factors[0].second, 6u);
}

namespace {

void check_factorization(const Polynomial& f, const TowerField& F) {
  auto r = factor(f, F);
  EXPECT_EQ(r.expand(), f.lift_to(F)) << f.to_string();
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    EXPECT_TRUE(r.factors[i].first.is_monic());
    if (i > 0) { EXPECT_TRUE(canonical_less(r.factors[i - 1].first, r.factors[i].first)); }
  }
}

}  // namespace

TEST(FactorProperty, ReconstructionOverQAgreesWithOracle) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    auto f = oracle::random_q_product(rng, 8);
    auto r = factor(f);
    EXPECT_EQ(r.expand(), f);
    for (const auto& [g, m] : r.factors)
      if (*g.degree() <= 4) {
        EXPECT_TRUE(oracle::irreducible_over_q(oracle::q_coeffs(g))) << g.to_string();
        ++checked;
      }
  }
  EXPECT_GT(checked, 60);
}

TEST(FactorProperty, ReconstructionOverFpAgreesWithOracle) {
  std::mt19937_64 rng(99);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (int k = 0; k < 10; ++k) {
      auto f = oracle::random_fp_poly(rng, p, 1 + rng() % 12);
      auto r = factor(f);
      EXPECT_EQ(r.expand(), f);
      for (const auto& [g, m] : r.factors)
        if (*g.degree() <= 4) { EXPECT_TRUE(oracle::irreducible_over_fp(oracle::fp_coeffs(g), p)) << g.to_string(); }
    }
  }
}

TEST(FactorProperty, ReconstructionOverTowersAndFunctionFields) {
  auto A = ext(Q(), "x^2-2", "a");
  auto F9 = ext(Fp(3), "x^2+1", "i");
  auto B = FpT(2);
  for (const auto& s : {"x^4-10*x^2+1", "x^3-2", "x^4+1", "x^2-2*a*x+2", "x^6-8"}) check_factorization(P(s, A), A);
  for (const auto& s : {"x^2+1", "x^3+2*x+1", "x^4-1", "x^8+2", "x^8-1"}) check_factorization(P(s, F9), F9);
  for (const auto& s : {"x^2-t", "x^2+x+t", "x^3+t^3", "x^2+(t+1)*x+t", "(t^2+t)*x^2+x"}) check_factorization(P(s, B), B);
  auto F = q23();
  for (const auto& s : {"x^4-10*x^2+1", "x^2-6", "x^4-4*x^2+1", "x^3-2"}) check_factorization(P(s, F), F);
}

TEST(FactorProperty, IrreducibleFactorsDoNotSplitFurther) {
  auto A = ext(Q(), "x^2-2", "a");
  for (const auto& s : {"x^4+1", "x^6-2", "x^4-2"}) {
    auto r = factor(P(s, A), A);
    for (const auto& [g, m] : r.factors) EXPECT_EQ(factor(g, A).factors.size(), 1u);
  }
}
