#include <gtest/gtest.h>

#include <random>

#include "dcf/error.hpp"
#include "dcf/subfield.hpp"
#include "support.hpp"

using namespace dcf;
using namespace dcf::testing;

namespace {

TowerElement random_element(const TowerField& F, std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Residue r;
  for (std::size_t i = 0; i < F.degree(); ++i) {
    const BaseField& b = F.base();
    Scalar s = b.from_int(d(rng));
    if (b.kind() == BaseField::Kind::Rationals) s = b.mul(s, b.inv(b.from_int(1 + (rng() % 4))));
    if (b.kind() == BaseField::Kind::RationalFunctions && rng() % 2) s = b.add(s, b.mul(b.from_int(d(rng)), b.t()));
    r.push_back(s);
  }
  return TowerElement(F, r);
}

Polynomial random_poly(const TowerField& F, std::mt19937_64& rng, std::size_t deg) {
  std::vector<TowerElement> c;
  for (std::size_t i = 0; i <= deg; ++i) c.push_back(random_element(F, rng));
  while (c.back().is_zero()) c.back() = TowerElement::from_int(F, 1);
  return Polynomial::from_elements(F, c);
}

}  // namespace

TEST(PolyArith, Examples) {
  auto q = Q();
  EXPECT_EQ(gcd(P("x^2-1", q), P("x-1", q)), P("x-1", q));
  auto [quo, rem] = divrem(P("x^3", q), P("x^2", q));
  EXPECT_EQ(quo, P("x", q));
  EXPECT_TRUE(rem.is_zero());
  auto f2 = Fp(2);
  EXPECT_EQ(P("x+1", f2) * P("x+1", f2), P("x^2+1", f2));
  auto r = poly_arith(P("x^3+2", q), P("x-1", q), PolyOp::Divrem);
  ASSERT_TRUE(r.remainder.has_value());
  EXPECT_EQ(r.remainder->to_string(), "3");
}

TEST(PolyArith, Errors) {
  auto q = Q();
  try {
    divrem(P("x", q), Polynomial(q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDivision);
  }
  try {
    (void)(P("x", q) + P("x", Fp(5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(PolyEval, Examples) {
  auto q = Q();
  EXPECT_EQ(poly_eval(P("x^2-2", q), TowerElement::from_int(q, 0)).to_string(), "-2");
  auto a2 = ext(q, "x^2-2", "a");
  EXPECT_TRUE(poly_eval(P("x^2-2", q), gen(a2, 1)).is_zero());
  auto f2 = Fp(2);
  EXPECT_EQ(poly_eval(P("x^3+x+1", f2), TowerElement::from_int(f2, 1)).to_string(), "1");
}

TEST(Scalars, CanonicalForms) {
  auto b = BaseField::rationals();
  const Scalar s = b.from_mpq(mpq_class(6, -4));
  EXPECT_EQ(b.to_string(s), "-3/2");
  auto f7 = BaseField::prime_field(7);
  EXPECT_EQ(std::get<std::uint64_t>(f7.from_int(-1)), 6u);
  auto ft = BaseField::rational_functions(3);
  // (2t+2)/(2t) = (t+1)/t with monic denominator
  const Scalar r = ft.ratfunc({2, 2}, {0, 2});
  const auto& rf = std::get<RatFunc>(r);
  EXPECT_EQ(rf.den, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(rf.num, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_THROW(BaseField::prime_field(6), Error);
}

TEST(Tower, ExtendExamples) {
  auto a2 = ext(Q(), "x^2-2", "a");
  EXPECT_EQ(a2.degree(), 2u);
  try {
    ext(a2, "x^2-2", "b");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Reducible);
  }
  auto B = FpT(2);
  auto U = extend_tower(B, P("x^2-t", B), "u", 1u);
  EXPECT_EQ(U.degree(), 2u);
  EXPECT_EQ(U.generator(1).insep_exp, 1u);
  try {
    ext(Q(), "2*x^2-1", "c");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMonic);
  }
}

TEST(Tower, ArithmeticExamples) {
  auto a2 = ext(Q(), "x^2-2", "a");
  auto a = gen(a2, 1);
  EXPECT_EQ((a * a).to_string(), "2");
  EXPECT_EQ(E("1+a", a2).inv(), E("-1+a", a2));
  auto F = q23();
  auto s6 = gen(F, 1) * gen(F, 2);
  EXPECT_EQ((s6 * s6).to_string(), "6");
  EXPECT_THROW(TowerElement::from_int(F, 0).inv(), Error);
}

TEST(Tower, MinpolyExamples) {
  auto F = q23();
  auto y = gen(F, 1) + gen(F, 2);
  auto m = minpoly(y, {});
  EXPECT_EQ(m.to_string(), "x^4-10*x^2+1");
  // Oracle: the powers 1, y, ..., y^4 computed by repeated multiplication
  // satisfy y^4 - 10 y^2 + 1 = 0, and 1, y, y^2, y^3 are independent because
  // y^2 = 5 + 2ab, y^3 = 11a + 9b have disjoint supports.
  auto y2 = y * y;
  auto y3 = y2 * y;
  auto y4 = y3 * y;
  EXPECT_TRUE((y4 - TowerElement::from_int(F, 10) * y2 + TowerElement::from_int(F, 1)).is_zero());
  EXPECT_EQ(y2.to_string(), "2*a*b+5");
  EXPECT_EQ(y3.to_string(), "9*b+11*a");

  auto a = gen(F, 1);
  EXPECT_EQ(minpoly(a, {a}).to_string(), "x-a");
  auto F4 = ext(Fp(2), "x^2+x+1", "u");
  EXPECT_EQ(minpoly(gen(F4, 1), {}).to_string(), "x^2+x+1");
}

TEST(Tower, SubfieldMemberExamples) {
  auto F = q23();
  auto a = gen(F, 1), b = gen(F, 2);
  auto s6 = a * b;
  auto e = subfield_member(s6, {a, b});
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->evaluate(F, {a, b}), s6);
  EXPECT_EQ(e->to_string(F.base(), {"a", "b"}), "a*b");

  auto F5 = ext(F, "x^2-5", "d");
  EXPECT_FALSE(subfield_member(gen(F5, 3), {gen(F5, 1), gen(F5, 2)}).has_value());

  auto a2 = ext(Q(), "x^2-2", "a");
  auto c = subfield_member(E("3/4", a2), {});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->to_string(a2.base(), {}), "3/4");
}

TEST(TowerProperty, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  std::vector<TowerField> fields{q23(), ext(Fp(3), "x^2+1", "i"), ext(ext(Fp(2), "x^2+x+1", "u"), "x^2+x+u", "v"),
                                 extend_tower(FpT(2), P("x^2-t", FpT(2)), "u", 1u)};
  for (const auto& F : fields) {
    for (int k = 0; k < 40; ++k) {
      auto x = random_element(F, rng), y = random_element(F, rng), z = random_element(F, rng);
      EXPECT_EQ((x + y) * z, x * z + y * z);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * y, y * x);
      if (!x.is_zero()) { EXPECT_EQ(x * x.inv(), TowerElement::from_int(F, 1)); }
    }
  }
}

TEST(TowerProperty, DivremAndGcd) {
  std::mt19937_64 rng(11);
  std::vector<TowerField> fields{Q(), Fp(5), ext(Q(), "x^2-2", "a"), FpT(3)};
  for (const auto& F : fields) {
    for (int k = 0; k < 25; ++k) {
      auto f = random_poly(F, rng, 1 + rng() % 5);
      auto g = random_poly(F, rng, 1 + rng() % 3);
      auto [q, r] = divrem(f, g);
      EXPECT_EQ(q * g + r, f);
      EXPECT_TRUE(r.is_zero() || *r.degree() < *g.degree());
      auto h = random_poly(F, rng, 1);
      auto d = gcd(f * h, g * h);
      EXPECT_TRUE(d.is_monic());
      EXPECT_TRUE(divrem(f * h, d).second.is_zero());
      EXPECT_TRUE(divrem(g * h, d).second.is_zero());
      EXPECT_TRUE(divrem(d, h.monic()).second.is_zero());
    }
  }
}

TEST(TowerProperty, LiftIsCanonical) {
  auto F = q23();
  auto F5 = ext(F, "x^2-5", "d");
  auto x = E("1/2+3*a*b-b", F);
  auto y = x.lift_to(F5);
  EXPECT_EQ(y.to_string(), x.to_string());
  EXPECT_EQ(F5.level_of(y.value()), 2u);
  EXPECT_EQ(y * y, (x * x).lift_to(F5));
}

TEST(Text, ParseRoundTrip) {
  auto F = q23();
  for (const char* s : {"a*b-3/2", "2*a+b", "a", "-1"}) EXPECT_EQ(E(s, F).to_string(), E(E(s, F).to_string(), F).to_string());
  auto B = FpT(3);
  EXPECT_EQ(P("x^3-(t+1)/t", B).to_string(), P(P("x^3-(t+1)/t", B).to_string(), B).to_string());
  try {
    E("a+", F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}
