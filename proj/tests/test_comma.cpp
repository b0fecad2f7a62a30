#include <gtest/gtest.h>

#include <cstdlib>

#include "commakit/catalog.hpp"
#include "commakit/comma.hpp"
#include "oracles.hpp"

using namespace commakit;

namespace {

Functor pick(const CatPtr& target, const std::string& obj) {
  return make_functor("pick" + obj, cat_one(), target, {{"*", obj}}, {});
}

// A cell G -> G over gal: bottom GK, top identity, fill the forced ≤-witnesses.
ColaxCell gal_cell() {
  const auto adj = gal_adjunction();
  const Functor& G = adj.right;
  ColaxCell c;
  c.domain = G;
  c.codomain = G;
  c.top = identity_functor(G.source);
  c.bottom = compose_functors(G, adj.left);
  c.fill = thin_nat("beta", compose_functors(c.bottom, G), compose_functors(G, c.top));
  return c;
}

}  // namespace

TEST(Comma, PickZeroAndPickOne) {
  const auto two = cat_two();
  const auto b0 = comma(pick(two, "0"));
  EXPECT_EQ(b0.total->num_objects(), 1u);
  EXPECT_EQ(b0.total->num_morphisms(), 1u);
  const auto b1 = comma(pick(two, "1"));
  EXPECT_EQ(b1.total->num_objects(), 2u);
  EXPECT_EQ(b1.total->num_morphisms(), 3u);
  EXPECT_TRUE(validate_category(*b1.total).ok());
  // isomorphic to 2: one arrow between the two objects, in one direction only
  EXPECT_EQ(b1.total->hom(0, 1).size() + b1.total->hom(1, 0).size(), 1u);
  for (const auto* b : {&b0, &b1}) {
    EXPECT_EQ(b->total->num_objects(), oracle::comma_objects(b->base));
    EXPECT_EQ(b->total->num_morphisms(), oracle::comma_morphisms(b->base));
  }
}

TEST(Comma, IdentityOnTwoIsTheArrowCategory) {
  const auto b = comma(identity_functor(cat_two()));
  EXPECT_EQ(b.total->num_objects(), 3u);
  EXPECT_EQ(b.total->num_morphisms(), 6u);
  EXPECT_EQ(oracle::comma_morphisms(b.base), 6u);
}

TEST(Comma, BundleInvariants) {
  const auto adj = gal_adjunction();
  for (const Functor& G : {adj.right, adj.left, int2_comonad().endo}) {
    const auto b = comma(G);
    const auto& X = *G.target;
    ASSERT_TRUE(validate_category(*b.total).ok());
    EXPECT_TRUE(validate_functor(b.d0).ok());
    EXPECT_TRUE(validate_functor(b.d1).ok());
    EXPECT_TRUE(validate_nat_trans(b.delta).ok());
    for (int o = 0; o < static_cast<int>(b.total->num_objects()); ++o) {
      const auto& ob = b.objs[o];
      EXPECT_EQ(b.d0.ob(o), ob.a);
      EXPECT_EQ(b.d1.ob(o), ob.x);
      EXPECT_EQ(b.delta.at(o), ob.f);
      EXPECT_EQ(X.src(ob.f), ob.x);
      EXPECT_EQ(X.tgt(ob.f), G.ob(ob.a));
      EXPECT_EQ(b.total->object(o), "(" + X.object(ob.x) + "|" + X.mor_id(ob.f) + "|" +
                                        G.source->object(ob.a) + ")");
    }
    for (int m = 0; m < static_cast<int>(b.total->num_morphisms()); ++m) {
      const auto& s = b.objs[b.total->src(m)];
      const auto& t = b.objs[b.total->tgt(m)];
      const auto [x, a] = b.mors[m];
      EXPECT_EQ(X.compose(G.mor(a), s.f), X.compose(t.f, x));
    }
    EXPECT_EQ(b.total->num_objects(), oracle::comma_objects(G));
    EXPECT_EQ(b.total->num_morphisms(), oracle::comma_morphisms(G));
  }
}

TEST(Comma, ArrowCategoryCounts) {
  EXPECT_EQ(arrow_category(cat_one()).total->num_objects(), 1u);
  EXPECT_EQ(arrow_category(cat_one()).total->num_morphisms(), 1u);
  EXPECT_EQ(arrow_category(cat_two()).total->num_objects(), 3u);
  EXPECT_EQ(arrow_category(cat_chain(2)).total->num_objects(), 6u);  // pairs x ≤ y
  EXPECT_EQ(arrow_category(cat_two()).total->name, "2^2");
}

TEST(Comma, RandomCountsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto A = random_poset_category(seed, 1 + static_cast<int>(seed % 5));
    const auto X = random_poset_category(seed + 77, 1 + static_cast<int>((seed / 5) % 5));
    std::mt19937_64 rng(seed);
    const auto g = random_monotone_map(rng, poset_of(*A), poset_of(*X));
    const Functor G = thin_functor("G", A, X, g);
    ASSERT_TRUE(validate_functor(G).ok());
    const auto b = comma(G);
    EXPECT_EQ(b.total->num_objects(), oracle::comma_objects(G)) << seed;
    EXPECT_EQ(b.total->num_morphisms(), oracle::comma_morphisms(G)) << seed;
    EXPECT_TRUE(validate_category(*b.total).ok());
  }
}

TEST(Comma, NonPosetFixtures) {
  for (const auto& c : {cat_monoid_z2(), cat_walking_iso(), cat_parallel_pair(), cat_square()}) {
    const auto b = arrow_category(c);
    EXPECT_TRUE(validate_category(*b.total).ok()) << c->name;
    EXPECT_EQ(b.total->num_objects(), oracle::comma_objects(b.base)) << c->name;
    EXPECT_EQ(b.total->num_morphisms(), oracle::comma_morphisms(b.base)) << c->name;
  }
}

TEST(Comma, BudgetGuard) {
  EXPECT_THROW(comma(identity_functor(cat_chain(5)), 10), BudgetExceeded);
  try {
    arrow_category(cat_chain(4), 5);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("size budget exceeded"), std::string::npos);
  }
  setenv("COMMA_KIT_BUDGET", "123", 1);
  EXPECT_EQ(default_budget(), 123u);
  unsetenv("COMMA_KIT_BUDGET");
  EXPECT_EQ(default_budget(), 20000u);
}

TEST(UnitNu, ObjectsAndMorphisms) {
  const auto one = cat_one();
  const auto a1 = arrow_category(one);
  const Functor n1 = unit_nu(one, a1);
  EXPECT_EQ(a1.total->object(n1.ob(0)), "(*|id_*|*)");
  const auto two = cat_two();
  const auto a2 = arrow_category(two);
  const Functor n2 = unit_nu(two, a2);
  EXPECT_TRUE(validate_functor(n2).ok());
  EXPECT_EQ(a2.total->object(n2.ob(0)), "(0|id_0|0)");
  const int u = two->find_morphism("u");
  const int image = n2.mor(u);
  ASSERT_NE(image, kNone);
  EXPECT_EQ(a2.mors[image], std::make_pair(u, u));
  EXPECT_EQ(a2.total->object(a2.total->src(image)), "(0|id_0|0)");
  EXPECT_EQ(a2.total->object(a2.total->tgt(image)), "(1|id_1|1)");
}

TEST(Factor, IdentityFromTheBundle) {
  const auto b = comma(gal_adjunction().right);
  const Functor h = factor_through_comma(b.d1, b.delta, b.d0, b);
  EXPECT_TRUE(functor_equal(h, identity_functor(b.total)));
}

TEST(Factor, PointOfTheComma) {
  const auto two = cat_two();
  const auto one = cat_one();
  const auto b = comma(pick(two, "1"));
  const Functor U = pick(two, "0");
  const Functor F = identity_functor(one);
  const NatTrans beta = make_nat("beta", U, compose_functors(b.base, F), {{"*", "u"}});
  const Functor h = factor_through_comma(U, beta, F, b);
  EXPECT_EQ(b.total->object(h.ob(0)), "(0|u|*)");
}

TEST(Factor, RecoversItsInputsOnGal) {
  const auto adj = gal_adjunction();
  const Functor& G = adj.right;
  const auto b = comma(G);
  const Functor U = identity_functor(adj.left.source);
  const Functor& F = adj.left;
  const Functor h = factor_through_comma(U, adj.unit, F, b);
  ASSERT_TRUE(validate_functor(h).ok());
  EXPECT_TRUE(functor_equal(compose_functors(b.d0, h), F));
  EXPECT_TRUE(functor_equal(compose_functors(b.d1, h), U));
  for (int e = 0; e < static_cast<int>(U.source->num_objects()); ++e)
    EXPECT_EQ(b.delta.at(h.ob(e)), adj.unit.at(e));

  // The counit cell pasted after (h, 1, h) gives back (U, β, F).
  ColaxCell hc;
  hc.domain = identity_functor(U.source);
  hc.codomain = identity_functor(b.total);
  hc.top = h;
  hc.bottom = h;
  hc.fill = identity_nat(h);
  hc.fill.src = compose_functors(hc.bottom, hc.domain);
  hc.fill.tgt = compose_functors(hc.codomain, hc.top);
  const ColaxCell back = compose_colax_cells(counit_cell(b), hc);
  EXPECT_TRUE(functor_equal(back.top, F));
  EXPECT_TRUE(functor_equal(back.bottom, U));
  EXPECT_EQ(back.fill.comp, adj.unit.comp);
}

TEST(DOneCell, IdentityCellGivesIdentity) {
  const Functor G = gal_adjunction().right;
  const auto b = comma(G);
  EXPECT_TRUE(functor_equal(d_on_onecell(identity_cell(G), b, b), identity_functor(b.total)));
}

TEST(DOneCell, ObjectAndMorphismFormula) {
  const ColaxCell c = gal_cell();
  ASSERT_TRUE(validate_cell(c).ok());
  const auto from = comma(c.domain), to = comma(c.codomain);
  const Functor h = d_on_onecell(c, from, to);
  ASSERT_TRUE(validate_functor(h).ok());
  const auto& X = *c.codomain.target;
  for (int o = 0; o < static_cast<int>(from.total->num_objects()); ++o) {
    const auto& s = from.objs[o];
    const auto& t = to.objs[h.ob(o)];
    EXPECT_EQ(t.x, c.bottom.ob(s.x));
    EXPECT_EQ(t.f, X.compose(c.fill.at(s.a), c.bottom.mor(s.f)));
    EXPECT_EQ(t.a, c.top.ob(s.a));
  }
  for (int m = 0; m < static_cast<int>(from.total->num_morphisms()); ++m) {
    const auto [u, e] = from.mors[m];
    EXPECT_EQ(to.mors[h.mor(m)], std::make_pair(c.bottom.mor(u), c.top.mor(e)));
  }
}

TEST(DOneCell, RespectsCompositionAndCounit) {
  const ColaxCell c = gal_cell();
  const ColaxCell cc = compose_colax_cells(c, c);
  const ColaxCell ci = compose_colax_cells(identity_cell(c.codomain), c);
  const auto b = comma(c.domain);
  for (const ColaxCell* x : {&c, &cc, &ci}) {
    EXPECT_TRUE(check_counit_naturality(*x, b, b).ok());
    EXPECT_TRUE(functor_equal(d_on_onecell(compose_colax_cells(*x, c), b, b),
                              compose_functors(d_on_onecell(*x, b, b), d_on_onecell(c, b, b))));
  }
}

TEST(DTwoCell, IdentityAndComponentFormula) {
  const ColaxCell c = gal_cell();
  const auto b = comma(c.domain);
  const SquareTwoCell id{c, c, identity_nat(c.top), identity_nat(c.bottom)};
  const SquareTwoCell did = d_on_twocell(id, b, b);
  EXPECT_TRUE(check_two_cell(did).ok());
  for (int o = 0; o < static_cast<int>(b.total->num_objects()); ++o)
    EXPECT_TRUE(b.total->is_identity(did.top.at(o)));

  // (ϱ-whiskered θ, identity τ) from the identity cell into c
  const auto adj = gal_adjunction();
  const ColaxCell i = identity_cell(c.domain);
  const SquareTwoCell t{i, c, identity_nat(i.top), adj.unit};
  ASSERT_TRUE(check_two_cell(t).ok());
  const SquareTwoCell dt = d_on_twocell(t, b, b);
  EXPECT_TRUE(check_two_cell(dt).ok());
  EXPECT_TRUE(validate_nat_trans(dt.top).ok());
  for (int o = 0; o < static_cast<int>(b.total->num_objects()); ++o) {
    const auto& ob = b.objs[o];
    EXPECT_EQ(b.mors[dt.top.at(o)], std::make_pair(t.bottom.at(ob.x), t.top.at(ob.a)));
  }
}

TEST(Xi, PicksIdentityArrows) {
  const auto b = comma(pick(cat_two(), "1"));
  const auto sq = arrow_category(b.total);
  const Functor xi = comultiplication_xi(b, sq);
  ASSERT_TRUE(validate_functor(xi).ok());
  std::set<int> image;
  for (int o = 0; o < static_cast<int>(b.total->num_objects()); ++o) {
    EXPECT_TRUE(b.total->is_identity(sq.objs[xi.ob(o)].f));
    image.insert(xi.ob(o));
  }
  EXPECT_EQ(image.size(), b.total->num_objects());
  EXPECT_TRUE(functor_equal(compose_functors(sq.d0, xi), identity_functor(b.total)));
  EXPECT_TRUE(functor_equal(compose_functors(sq.d1, xi), identity_functor(b.total)));
}

TEST(Ddelta, ObjectAndMorphismFormula) {
  const auto adj = gal_adjunction();
  for (const Functor& G : {pick(cat_two(), "1"), adj.right, adj.left}) {
    const auto b = comma(G);
    const auto sq = arrow_category(b.total);
    const Functor m = multiplication_Ddelta(b, sq);
    ASSERT_TRUE(validate_functor(m).ok());
    const auto& X = *G.target;
    for (int s = 0; s < static_cast<int>(sq.total->num_objects()); ++s) {
      const auto& S = b.objs[sq.objs[s].x];
      const auto& T = b.objs[sq.objs[s].a];
      const int x = b.mors[sq.objs[s].f].first;
      const auto& img = b.objs[m.ob(s)];
      EXPECT_EQ(img.x, S.x);
      EXPECT_EQ(img.f, X.compose(T.f, x));
      EXPECT_EQ(img.a, T.a);
    }
    for (int k = 0; k < static_cast<int>(sq.total->num_morphisms()); ++k) {
      const auto [hm, kn] = sq.mors[k];
      EXPECT_EQ(b.mors[m.mor(k)], std::make_pair(b.mors[hm].first, b.mors[kn].second));
    }
  }
}

TEST(Ddelta, ArrowOfPickOneCollapsesToItsSource) {
  const auto b = comma(pick(cat_two(), "1"));
  const auto sq = arrow_category(b.total);
  const Functor m = multiplication_Ddelta(b, sq);
  int arrow = kNone;
  for (int s = 0; s < static_cast<int>(sq.total->num_objects()); ++s)
    if (!b.total->is_identity(sq.objs[s].f)) arrow = s;
  ASSERT_NE(arrow, kNone);
  EXPECT_EQ(b.total->object(m.ob(arrow)), "(0|u|*)");
}

TEST(ComonadLaws, Fixtures) {
  const auto two = cat_two();
  const auto surj = thin_functor("s", cat_chain(2), cat_chain(1), {0, 0, 1});
  for (const Functor& G : {identity_functor(cat_one()), pick(two, "1"), pick(two, "0"), surj,
                           gal_adjunction().right, identity_functor(cat_chain(2)),
                           identity_functor(arrow_category(two).total)}) {
    const auto r = check_comonad_laws(G);
    EXPECT_TRUE(r.ok()) << G.name;
    for (const char* l : {"Ddelta-after-xi", "counit-d0-after-xi", "counit-d1-after-xi",
                          "counit-fill-after-xi", "coassociativity"})
      EXPECT_NE(r.find(l), nullptr) << l;
  }
}

TEST(ComonadLaws, RandomPosetFunctors) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Functor G = random_monotone_functor(seed, 2 + static_cast<int>(seed % 3));
    EXPECT_TRUE(check_comonad_laws(G).ok()) << seed;
  }
}
