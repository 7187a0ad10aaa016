#include <gtest/gtest.h>

#include <random>

#include "dcf/embed.hpp"
#include "dcf/error.hpp"
#include "dcf/subfield.hpp"
#include "support.hpp"

using namespace dcf;
using namespace dcf::testing;

namespace {

TowerElement random_element(const TowerField& F, std::mt19937_64& rng) {
  Residue r;
  for (std::size_t i = 0; i < F.degree(); ++i) r.push_back(F.base().from_int(static_cast<long>(rng() % 7) - 3));
  return TowerElement(F, r);
}

}  // namespace

TEST(Embed, ConjugationOfSqrt2ExtendsToFourthRoot) {
  auto F = ext(Q(), "x^2-2", "a");
  auto K = std::make_shared<ClosurePresentation>(BaseField::rationals());
  auto s2 = K->adjoin_root(P("x^2-2", Q()));
  auto m = extend_embedding(F, {-s2}, K);
  auto r = m.source().adjoin_root(P("x^4-2", Q()));
  auto img = m.image(r);
  // Oracle: r^2 is +-a in the source, so img^2 must be the logged image of
  // r^2, that is -+s2.
  auto r2 = r * r;
  auto a = gen(r.field(), 1);
  ASSERT_TRUE(r2 == a || r2 == -a);
  const TowerElement logged = m.log()[0].image.lift_to(img.field());
  EXPECT_EQ(img * img, r2 == a ? logged : -logged);
  EXPECT_EQ(m.log()[0].stage, "given");
  EXPECT_EQ(m.log()[1].stage, "separable");

  auto again = m.image(r);
  EXPECT_EQ(again.to_string(), img.to_string());
  EXPECT_EQ(m.log().size(), 2u);
}

TEST(Embed, TrivialAlphaIsInclusion) {
  auto K = std::make_shared<ClosurePresentation>(BaseField::rationals());
  auto m = extend_embedding(Q(), {}, K);
  EXPECT_EQ(m.image(E("3/7", Q())).to_string(), "3/7");
  EXPECT_TRUE(m.image(TowerElement::from_int(Q(), 0)).is_zero());
  EXPECT_EQ(m.image(TowerElement::from_int(Q(), 1)).to_string(), "1");
}

TEST(Embed, PurelyInseparableImageIsForced) {
  auto B = FpT(2);
  auto U = extend_tower(B, P("x^2-t", B), "u", 1u);
  auto K = std::make_shared<ClosurePresentation>(BaseField::rational_functions(2));
  auto src = std::make_shared<ClosurePresentation>(U);
  LazyFieldMap m(src, K);
  auto img = m.image(gen(U, 1));
  EXPECT_EQ((img * img).to_string(), "t");
  ASSERT_EQ(m.log().size(), 1u);
  EXPECT_TRUE(m.log()[0].forced);
  EXPECT_EQ(m.log()[0].stage, "inseparable");
}

TEST(Embed, AutomorphismExamples) {
  auto F = q23();
  auto a = gen(F, 1), b = gen(F, 2);
  auto C = std::make_shared<ClosurePresentation>(BaseField::rationals());
  auto m = extend_automorphism(F, {-a, b}, C);
  auto Cf = C->field();
  EXPECT_EQ(m.image(a.lift_to(Cf)), -a.lift_to(Cf));
  EXPECT_EQ(m.image((a * b).lift_to(Cf)), -(a * b).lift_to(Cf));

  auto C2 = std::make_shared<ClosurePresentation>(BaseField::rationals());
  auto id = extend_automorphism(F, {a, b}, C2);
  for (const char* s : {"a", "b", "a*b+1/2", "3-a"}) {
    auto x = E(s, F).lift_to(C2->field());
    EXPECT_EQ(id.image(x), x);
  }
}

TEST(Embed, FrobeniusExtendsToF16) {
  auto F4 = ext(Fp(2), "x^2+x+1", "u");
  auto u = gen(F4, 1);
  auto C = std::make_shared<ClosurePresentation>(F4);
  auto m = extend_automorphism(F4, {u * u}, C);
  EXPECT_EQ(m.image(u.lift_to(C->field())), (u * u).lift_to(C->field()));
  auto v = C->adjoin_root(P("x^2+x+u", F4));
  EXPECT_EQ(v.field().degree(), 4u);
  for (const auto& c : {v, v + u.lift_to(v.field()), v * v * u.lift_to(v.field())}) {
    auto img = m.image(c);
    EXPECT_EQ(minpoly(img, {}), minpoly(c, {}));
  }
}

TEST(Embed, Errors) {
  auto F = ext(Q(), "x^2-2", "a");
  auto K = std::make_shared<ClosurePresentation>(BaseField::rationals());
  try {
    extend_embedding(F, {TowerElement::from_int(Q(), 1)}, K);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAutomorphism);
  }
  auto K2 = std::make_shared<ClosurePresentation>(BaseField::prime_field(2));
  EXPECT_THROW(extend_embedding(F, {gen(F, 1)}, K2), Error);
  auto C = std::make_shared<ClosurePresentation>(BaseField::rationals());
  auto R = ext(Q(), "x^3-2", "r");
  EXPECT_THROW(extend_automorphism(R, {gen(R, 1)}, C), Error);
}

TEST(EmbedProperty, HomomorphismOnRandomElements) {
  std::mt19937_64 rng(3);
  auto F = q23();
  auto a = gen(F, 1), b = gen(F, 2);
  auto C = std::make_shared<ClosurePresentation>(BaseField::rationals());
  auto m = extend_automorphism(F, {-a, -b}, C);
  auto r = C->adjoin_root(P("x^3-2", Q()));
  const TowerField G = r.field();
  for (int k = 0; k < 30; ++k) {
    auto x = random_element(G, rng), y = random_element(G, rng);
    EXPECT_EQ(m.image(x + y), m.image(x) + m.image(y));
    EXPECT_EQ(m.image(x * y).lift_to(C->field()), (m.image(x) * m.image(y)).lift_to(C->field()));
  }
  for (const auto& asg : m.log()) {
    const Polynomial mp(C->field().at_level(asg.level - 1), C->field().generator(asg.level).minpoly);
    std::vector<TowerElement> prev;
    for (std::size_t i = 0; i + 1 < asg.level; ++i) prev.push_back(m.log()[i].image);
    EXPECT_TRUE(map_coefficients(mp, prev, C->field()).eval(asg.image.lift_to(C->field())).is_zero());
  }
}

TEST(EmbedProperty, FiniteFieldMapsAreAdditive) {
  auto C = std::make_shared<ClosurePresentation>(BaseField::prime_field(2));
  auto u = C->adjoin_root(P("x^3+x+1", Fp(2)));
  auto F8 = u.field();
  auto m = extend_automorphism(F8, {u * u}, C);
  auto w = C->adjoin_root(P("x^2+x+1", Fp(2)));
  const TowerField G = w.field();
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    Residue rx, ry;
    for (std::size_t i = 0; i < G.degree(); ++i) {
      rx.push_back(G.base().from_int(static_cast<long>(rng() % 2)));
      ry.push_back(G.base().from_int(static_cast<long>(rng() % 2)));
    }
    TowerElement x(G, rx), y(G, ry);
    EXPECT_EQ(m.image(x + y), m.image(x) + m.image(y));
  }
}
