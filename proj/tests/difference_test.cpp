#include <gtest/gtest.h>

#include <random>

#include "dcf/difference.hpp"
#include "dcf/error.hpp"
#include "dcf/galois.hpp"
#include "dcf/subfield.hpp"
#include "support.hpp"

using namespace dcf;
using namespace dcf::testing;

TEST(Difference, CheckAutomorphismExamples) {
  auto A = ext(Q(), "x^2-2", "a");
  auto a = gen(A, 1);
  EXPECT_TRUE(check_automorphism(A, {-a}));
  EXPECT_FALSE(check_automorphism(A, {E("1+a", A)}));
  auto F4 = ext(Fp(2), "x^2+x+1", "u");
  EXPECT_TRUE(check_automorphism(F4, {gen(F4, 1) * gen(F4, 1)}));
  auto F = q23();
  EXPECT_THROW(check_automorphism(A, {gen(F, 2)}), Error);
  EXPECT_THROW(check_automorphism(F, {gen(F, 1)}), Error);
}

TEST(Difference, EmbedsExamples) {
  auto F = q23();
  auto a = gen(F, 1), b = gen(F, 2);
  auto K3 = ext(Q(), "x^2-3", "c");
  auto c = gen(K3, 1);
  DifferenceField K{K3, {c}};
  // Oracle: the only field embeddings send c to b or -b; both are moved by
  // the swap of both signs, so neither commutes.
  EXPECT_EQ(all_difference_embeddings(K, {F, {-a, -b}}).size(), 0u);
  EXPECT_FALSE(difference_embeds(K, {F, {-a, -b}}).has_value());
  auto e = difference_embeds(K, {F, {-a, b}});
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->images.size(), 1u);
  EXPECT_TRUE(e->images[0] == b || e->images[0] == -b);
  EXPECT_EQ(all_difference_embeddings(K, {F, {-a, b}}).size(), 2u);

  DifferenceField D{F, {-a, b}};
  auto self = difference_embeds(D, D);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->images[0], a);
  EXPECT_EQ(self->images[1], b);
}

TEST(Difference, CriterionOnF4) {
  auto F4 = ext(Fp(2), "x^2+x+1", "u");
  auto u = gen(F4, 1);
  auto C = std::make_shared<ClosurePresentation>(BaseField::prime_field(2));
  auto tau = dcf_embedding_criterion({F4, {u * u}}, C);
  auto uc = u.lift_to(C->field());
  auto img = tau.image(uc);
  EXPECT_EQ(img, uc * uc);
}

TEST(Difference, CriterionOnRationals) {
  auto C = std::make_shared<ClosurePresentation>(BaseField::rationals());
  auto tau = dcf_embedding_criterion({Q(), {}}, C);
  auto r = C->adjoin_root(P("x^3-2", Q()));
  auto s = C->adjoin_root(P("x^2+1", Q()));
  EXPECT_EQ(tau.image(E("5/3", Q())).to_string(), "5/3");
  auto tr = tau.image(r), ts = tau.image(s);
  EXPECT_EQ(tr * tr * tr, TowerElement::from_int(tr.field(), 2));
  EXPECT_FALSE(tr == ts);
}

TEST(Difference, SeparationShadow) {
  auto F = ext(q23(), "x^2-5", "d");
  auto a = gen(F, 1), b = gen(F, 2), d = gen(F, 3);
  auto C = std::make_shared<ClosurePresentation>(BaseField::rationals());
  auto tau = dcf_embedding_criterion({F, {a, -b, -d}}, C);
  std::vector<std::string> fixed;
  const char* names[] = {"sqrt2", "sqrt3", "sqrt5"};
  std::size_t i = 0;
  for (const auto& g : {a, b, d}) {
    auto x = g.lift_to(C->field());
    if (tau.image(x) == x) fixed.push_back(names[i]);
    ++i;
  }
  EXPECT_EQ(fixed, std::vector<std::string>{"sqrt2"});
}

TEST(Difference, CriterionRejectsNonAutomorphisms) {
  auto A = ext(Q(), "x^2-2", "a");
  auto C = std::make_shared<ClosurePresentation>(BaseField::rationals());
  try {
    dcf_embedding_criterion({A, {E("1+a", A)}}, C);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAutomorphism);
  }
}

TEST(DifferenceProperty, CriterionCommutesWithSigma) {
  std::mt19937_64 rng(21);
  auto F = q23();
  auto a = gen(F, 1), b = gen(F, 2);
  for (const auto& sigma : std::vector<std::vector<TowerElement>>{{a, b}, {-a, b}, {a, -b}, {-a, -b}}) {
    auto C = std::make_shared<ClosurePresentation>(BaseField::rationals());
    DifferenceField D{F, sigma};
    auto tau = dcf_embedding_criterion(D, C);
    for (int k = 0; k < 10; ++k) {
      Residue r;
      for (std::size_t i = 0; i < F.degree(); ++i) r.push_back(F.base().from_int(static_cast<long>(rng() % 9) - 4));
      TowerElement x(F, r);
      EXPECT_EQ(tau.image(x.lift_to(C->field())), D.apply(x).lift_to(C->field()));
    }
  }
}

TEST(DifferenceProperty, EmbeddingsCommute) {
  auto F = q23();
  auto a = gen(F, 1), b = gen(F, 2);
  auto K2 = ext(Q(), "x^2-2", "z");
  auto z = gen(K2, 1);
  for (const auto& alpha : std::vector<std::vector<TowerElement>>{{a, b}, {-a, b}, {a, -b}, {-a, -b}})
    for (const auto& s : std::vector<TowerElement>{z, -z}) {
      DifferenceField K{K2, {s}};
      DifferenceField Ed{F, alpha};
      for (const auto& e : all_difference_embeddings(K, Ed)) {
        auto iota = [&](const TowerElement& x) { return substitute_generators(x, e.images, F); };
        EXPECT_EQ(Ed.apply(iota(z)), iota(K.apply(z)));
      }
    }
}
