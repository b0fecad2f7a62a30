#include <gtest/gtest.h>

#include "commakit/catalog.hpp"
#include "commakit/liftings.hpp"

using namespace commakit;

namespace {

std::vector<ColaxDCoalgebra> fixtures() {
  return {identity_coalgebra(cat_one()), identity_coalgebra(cat_square()), int_coalg(),
          embed_normal(gal_normal())};
}

// Identity and composition preserved, by direct enumeration of composable pairs.
std::size_t expect_functorial(const Functor& F) {
  const auto& S = *F.source;
  const auto& T = *F.target;
  std::size_t pairs = 0;
  for (int o = 0; o < static_cast<int>(S.num_objects()); ++o)
    EXPECT_EQ(F.mor(S.identity(o)), T.identity(F.ob(o))) << F.name;
  for (int f = 0; f < static_cast<int>(S.num_morphisms()); ++f)
    for (int g = 0; g < static_cast<int>(S.num_morphisms()); ++g) {
      if (S.src(g) != S.tgt(f)) continue;
      EXPECT_EQ(F.mor(S.compose(g, f)), T.compose(F.mor(g), F.mor(f))) << F.name;
      ++pairs;
    }
  return pairs;
}

}  // namespace

TEST(KleisliLift, IdentityCoalgebraLiftsToK) {
  const auto c = identity_coalgebra(cat_square());
  const auto d = derive_comonads(c);
  const auto klC = kleisli_category(d.onX), klQ = kleisli_category(d.onA);
  const Functor Kt = kleisli_lift_K(c, klC, klQ);
  const Functor Ht = kleisli_lift_H(c, klQ, klC);
  EXPECT_EQ(Kt.obj_map, c.K.obj_map);
  EXPECT_EQ(Ht.obj_map, c.H.obj_map);
  for (int f = 0; f < static_cast<int>(klC.cat->num_morphisms()); ++f) {
    EXPECT_EQ(klQ.under[Kt.mor(f)], c.K.mor(klC.under[f]));
    EXPECT_EQ(klC.under[Ht.mor(f)], c.H.mor(klQ.under[f]));
  }
}

TEST(KleisliLift, IntCoalgExhaustive) {
  const auto c = int_coalg();
  const auto d = derive_comonads(c);
  const auto klC = kleisli_category(d.onX), klQ = kleisli_category(d.onA);
  ASSERT_EQ(klC.cat->num_morphisms(), 7u);
  const Functor Kt = kleisli_lift_K(c, klC, klQ);
  const Functor Ht = kleisli_lift_H(c, klQ, klC);
  EXPECT_EQ(Kt.obj_map, (ObjMap{0, 0, 2}));
  EXPECT_EQ(Kt.ob(1), 0);
  EXPECT_EQ(Ht.obj_map, (ObjMap{0, 0, 2}));
  for (int f = 0; f < 7; ++f) {
    EXPECT_NE(Kt.mor(f), kNone);
    EXPECT_NE(Ht.mor(f), kNone);
  }
  EXPECT_GT(expect_functorial(Kt), 7u);
  expect_functorial(Ht);
  EXPECT_TRUE(check_kleisli_lifts(c).ok());
}

TEST(KleisliLift, FixturesAndCorpus) {
  auto all = fixtures();
  for (std::uint64_t seed = 0; seed < 60; ++seed) all.push_back(random_poset_coalgebra(seed, 4));
  for (const auto& c : all) {
    const auto r = check_kleisli_lifts(c);
    EXPECT_TRUE(r.ok()) << c.name;
    for (const char* l : {"K-lift-forgetful", "H-lift-forgetful", "K-lift-free", "H-lift-free"})
      EXPECT_NE(r.find(l), nullptr);
    expect_functorial(kleisli_lift_K(c));
    expect_functorial(kleisli_lift_H(c));
  }
}

TEST(Split, FixturesAndCorpusAreSplit) {
  for (const auto& c : fixtures()) {
    EXPECT_TRUE(is_split(c).ok()) << c.name;
    EXPECT_TRUE(split_factorizations(c).ok()) << c.name;
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = random_poset_coalgebra(seed, 4);
    EXPECT_TRUE(is_split(c).ok()) << seed;
    EXPECT_TRUE(split_factorizations(c).ok()) << seed;
  }
}

TEST(Split, BrokenSplitRhoIsReportedAndBlocksKappa) {
  auto c = int_coalg();
  // θ100 at 2 retyped to 0 -> 2
  c.theta100.comp[2] = c.catX()->find_morphism("0<2");
  EXPECT_FALSE(is_split(c).ok());
  EXPECT_FALSE(split_factorizations(c).ok());
  try {
    dist_law_kappa(c);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("precondition violated"), std::string::npos);
  }
  EXPECT_FALSE(check_em_liftings(c).passed("split"));
}

TEST(Kappa, Values) {
  const auto id = dist_law_kappa(identity_coalgebra(cat_square()));
  EXPECT_TRUE(all_identities(id.kappa));
  EXPECT_TRUE(check_distributive_law(id).ok());

  const auto c = int_coalg();
  const auto k = dist_law_kappa(c);
  const auto& A = *c.catA();
  for (int x = 0; x < 3; ++x) {
    const int want = unique_arrow(A, c.K.ob(c.C.ob(x)), c.Q.ob(c.K.ob(x)));
    EXPECT_EQ(k.kappa.at(x), want);
  }
  const auto r = check_distributive_law(k);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.find("gendist1")->sites, 0u);
  EXPECT_GT(r.find("gendist2")->sites, 0u);

  // κ_X = ε_{KX} ∘ K(η_X) is the identity by the triangle identity
  const auto g = dist_law_kappa(embed_normal(gal_normal()));
  EXPECT_TRUE(all_identities(g.kappa));
}

TEST(Kappa, WrongBoundaryIsStructural) {
  auto law = dist_law_kappa(int_coalg());
  law.kappa.tgt = identity_functor(law.target.carrier());
  const auto r = check_distributive_law(law);
  EXPECT_FALSE(r.passed("boundary"));
  EXPECT_TRUE(r.find("boundary")->structural);
}

TEST(EMLift, Values) {
  {
    const auto c = identity_coalgebra(cat_square());
    const auto d = derive_comonads(c);
    const auto emC = em_category(d.onX), emQ = em_category(d.onA);
    const Functor L = em_lift_K(c, emC, emQ);
    for (int e = 0; e < static_cast<int>(emC.cat->num_objects()); ++e) {
      EXPECT_EQ(emQ.coalgs[L.ob(e)].first, c.K.ob(emC.coalgs[e].first));
      EXPECT_TRUE(c.catA()->is_identity(emQ.coalgs[L.ob(e)].second));
    }
  }
  {
    const auto c = int_coalg();
    const auto d = derive_comonads(c);
    const auto emC = em_category(d.onX), emQ = em_category(d.onA);
    const Functor L = em_lift_K(c, emC, emQ);
    ASSERT_EQ(emC.cat->num_objects(), 2u);
    for (int e = 0; e < 2; ++e) {
      const auto [x, s] = emC.coalgs[e];
      EXPECT_EQ(emQ.coalgs[L.ob(e)].first, x);  // fixed points 0 and 2 go to themselves
      EXPECT_TRUE(c.catA()->is_identity(emQ.coalgs[L.ob(e)].second));
    }
  }
  {
    const auto c = embed_normal(gal_normal());
    const auto d = derive_comonads(c);
    const auto emC = em_category(d.onX), emQ = em_category(d.onA);
    const Functor L = em_lift_K(c, emC, emQ);
    for (int e = 0; e < static_cast<int>(emC.cat->num_objects()); ++e)
      EXPECT_TRUE(c.catA()->is_identity(emQ.coalgs[L.ob(e)].second));
  }
}

TEST(EMLift, AgreesWithDistributiveLawOnCorpus) {
  auto all = fixtures();
  for (std::uint64_t seed = 0; seed < 100; ++seed) all.push_back(random_poset_coalgebra(seed, 4));
  for (const auto& c : all) {
    const auto r = check_em_liftings(c);
    EXPECT_TRUE(r.ok()) << c.name;
    const auto d = derive_comonads(c);
    const auto emC = em_category(d.onX), emQ = em_category(d.onA);
    const Functor a = em_lift_K(c, emC, emQ);
    const Functor b = lift_from_distlaw(dist_law_kappa(c), emC, emQ);
    EXPECT_EQ(a.obj_map, b.obj_map);
    EXPECT_EQ(a.mor_map, b.mor_map);
  }
}

TEST(AdjointSquare, IdentityComonad) {
  const auto T = identity_comonad(cat_square());
  const auto s = adjoint_square(T, SquareVariant::Identity);
  EXPECT_TRUE(check_adjoint_square(T, s).ok());
  EXPECT_TRUE(all_identities(s.t11));
  EXPECT_TRUE(all_identities(s.t12));
  EXPECT_TRUE(all_identities(s.t21));
  EXPECT_TRUE(all_identities(s.t22));
}

TEST(AdjointSquare, Int2) {
  const auto T = int2_comonad();
  const auto& X = *T.carrier();
  const auto s = adjoint_square(T, SquareVariant::Identity);
  EXPECT_TRUE(check_adjoint_square(T, s).ok());
  EXPECT_EQ(s.t12.at(1), X.find_morphism("0<1"));
  const auto c = adjoint_square(T, SquareVariant::C);
  EXPECT_TRUE(check_adjoint_square(T, c).ok());
  EXPECT_EQ(c.t11.comp, T.comult.comp);
}

TEST(AdjointSquare, DerivedComonadsOfCorpus) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto d = derive_comonads(random_poset_coalgebra(seed, 4));
    for (const Comonad* T : {&d.onX, &d.onA})
      for (auto v : {SquareVariant::Identity, SquareVariant::C})
        EXPECT_TRUE(check_adjoint_square(*T, adjoint_square(*T, v)).ok()) << seed;
  }
}
