#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "category.hpp"

namespace commakit {

struct Comonad {
  std::string name;
  Functor endo;     // T: X -> X
  NatTrans comult;  // τ: T ⇒ TT
  NatTrans counit;  // ζ: T ⇒ Id

  const CatPtr& carrier() const { return endo.source; }
};

struct Adjunction {
  std::string name;
  Functor left;     // L: X -> A
  Functor right;    // R: A -> X
  NatTrans unit;    // Id_X ⇒ RL
  NatTrans counit;  // LR ⇒ Id_A
};

inline std::string show(const FinCategory& c, int m) {
  return c.valid_morphism(m) ? c.mor_id(m) : std::string("<undefined>");
}

inline std::string eq_witness(const FinCategory& c, const std::string& where, int lhs, int rhs) {
  return where + ": " + show(c, lhs) + " vs " + show(c, rhs);
}

// Records lhs == rhs at one site; undefined composites count as failures.
inline void equate(CheckReport& r, const std::string& label, const FinCategory& c,
                   const std::string& where, int lhs, int rhs) {
  r.site(label, lhs != kNone && lhs == rhs, eq_witness(c, where, lhs, rhs));
}

inline bool boundary_is(const NatTrans& a, const Functor& s, const Functor& t) {
  return functor_equal(a.src, s) && functor_equal(a.tgt, t);
}

inline CheckReport validate_comonad(const Comonad& T) {
  CheckReport r("comonad " + T.name);
  r.merge(validate_functor(T.endo), "T.");
  r.merge(validate_nat_trans(T.comult), "comult.");
  r.merge(validate_nat_trans(T.counit), "counit.");
  r.touch("boundaries", true);
  for (const char* l : {"counit-left", "counit-right", "coassociativity"}) r.touch(l);
  if (!r.ok()) return r;
  const Functor TT = compose_functors(T.endo, T.endo);
  const Functor id = identity_functor(T.carrier());
  if (!boundary_is(T.comult, T.endo, TT) || !boundary_is(T.counit, T.endo, id)) {
    r.fail("boundaries", "comultiplication must be T => TT and counit T => Id", true);
    return r;
  }
  const auto& X = *T.carrier();
  const auto& F = T.endo;
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const int tau = T.comult.at(x);
    const std::string at = "at " + X.object(x);
    equate(r, "counit-left", X, at, X.compose(F.mor(T.counit.at(x)), tau), X.identity(F.ob(x)));
    equate(r, "counit-right", X, at, X.compose(T.counit.at(F.ob(x)), tau), X.identity(F.ob(x)));
    equate(r, "coassociativity", X, at, X.compose(F.mor(tau), tau),
           X.compose(T.comult.at(F.ob(x)), tau));
  }
  return r;
}

inline Comonad identity_comonad(const CatPtr& X) {
  Comonad T;
  T.name = "Id_" + X->name;
  T.endo = identity_functor(X);
  T.comult = identity_nat(T.endo, "1");
  T.counit = identity_nat(T.endo, "1");
  return T;
}

// Coalgebra laws for (X, x) over T.
inline CheckReport check_coalgebra_over(const Comonad& T, int X, int x) {
  const auto& C = *T.carrier();
  CheckReport r("coalgebra (" + C.object(X) + "," + show(C, x) + ")");
  r.site("typing", C.src(x) == X && C.tgt(x) == T.endo.ob(X), "structure map " + show(C, x), true);
  r.touch("coalgebra-counit");
  r.touch("coalgebra-coassociativity");
  if (!r.ok()) return r;
  equate(r, "coalgebra-counit", C, "at " + C.object(X), C.compose(T.counit.at(X), x),
         C.identity(X));
  equate(r, "coalgebra-coassociativity", C, "at " + C.object(X), C.compose(T.comult.at(X), x),
         C.compose(T.endo.mor(x), x));
  return r;
}

// f: (X,x) -> (Y,y) is a coalgebra morphism when T(f)∘x = y∘f.
inline bool is_coalgebra_morphism(const Comonad& T, int x, int y, int f) {
  const auto& C = *T.carrier();
  const int lhs = C.compose(T.endo.mor(f), x);
  return lhs != kNone && lhs == C.compose(y, f);
}

struct EMCategory {
  CatPtr cat;
  std::vector<std::pair<int, int>> coalgs;  // (carrier object, structure map)
  std::vector<int> under;                   // underlying morphism of each EM morphism
  Functor forget;                           // U^T
  Functor cofree;                           // X ↦ (TX, τ_X)
  Adjunction adj;                           // forget ⊣ cofree

  int find(int x) const {  // by structure map
    auto it = by_map_.find(x);
    return it == by_map_.end() ? kNone : it->second;
  }
  int morphism(int s, int t, int f) const {
    if (s == kNone || t == kNone) return kNone;
    for (int m : cat->hom(s, t))
      if (under[m] == f) return m;
    return kNone;
  }
  std::unordered_map<int, int> by_map_;
};

inline EMCategory em_category(const Comonad& T) {
  const auto& X = *T.carrier();
  const auto& F = T.endo;
  auto E = std::make_shared<FinCategory>(X.name + "^" + T.name);
  EMCategory em;
  em.cat = E;
  for (int o = 0; o < static_cast<int>(X.num_objects()); ++o)
    for (int x : X.hom(o, F.ob(o))) {
      if (!check_coalgebra_over(T, o, x).ok()) continue;
      const int e = E->add_object("(" + X.object(o) + "|" + X.mor_id(x) + ")");
      em.coalgs.emplace_back(o, x);
      em.by_map_.emplace(x, e);
      em.under.push_back(X.identity(o));
    }
  const int n = static_cast<int>(em.coalgs.size());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const auto [xo, x] = em.coalgs[s];
      const auto [yo, y] = em.coalgs[t];
      for (int f : X.hom(xo, yo)) {
        if (s == t && f == X.identity(xo)) continue;
        if (!is_coalgebra_morphism(T, x, y, f)) continue;
        E->add_morphism(X.mor_id(f) + ":" + E->object(s) + "->" + E->object(t), s, t);
        em.under.push_back(f);
      }
    }
  const int m = static_cast<int>(E->num_morphisms());
  for (int f = 0; f < m; ++f)
    for (int g : E->out(E->tgt(f))) {
      if (E->has_compose(g, f)) continue;
      E->set_compose(g, f, em.morphism(E->src(f), E->tgt(g), X.compose(em.under[g], em.under[f])));
    }

  em.forget = Functor{"U_EM", E, T.carrier(), {}, {}};
  for (int o = 0; o < n; ++o) em.forget.obj_map.push_back(em.coalgs[o].first);
  em.forget.mor_map = em.under;

  em.cofree = Functor{"F_cofree", T.carrier(), E, {}, {}};
  for (int o = 0; o < static_cast<int>(X.num_objects()); ++o)
    em.cofree.obj_map.push_back(em.find(T.comult.at(o)));
  for (int f = 0; f < static_cast<int>(X.num_morphisms()); ++f)
    em.cofree.mor_map.push_back(em.morphism(em.cofree.ob(X.src(f)), em.cofree.ob(X.tgt(f)), F.mor(f)));

  auto& a = em.adj;
  a.name = "U_EM-|F_cofree";
  a.left = em.forget;
  a.right = em.cofree;
  a.unit.name = "unit";
  a.unit.src = identity_functor(E);
  a.unit.tgt = compose_functors(a.right, a.left);
  for (int o = 0; o < n; ++o)
    a.unit.comp.push_back(em.morphism(o, a.unit.tgt.ob(o), em.coalgs[o].second));
  a.counit = T.counit;
  a.counit.name = "counit";
  a.counit.src = compose_functors(a.left, a.right);
  return em;
}

struct KleisliCategory {
  CatPtr cat;
  std::vector<int> under;  // underlying T(X) -> Y of each Kleisli arrow
  Functor free;            // F_kl: X -> X_T, f ↦ f∘ζ
  Functor forget;          // U_kl: X_T -> X, f ↦ T(f)∘τ
  Adjunction adj;          // forget ⊣ free

  int arrow(int s, int t, int f) const {
    for (int m : cat->hom(s, t))
      if (under[m] == f) return m;
    return kNone;
  }
};

inline KleisliCategory kleisli_category(const Comonad& T) {
  const auto& X = *T.carrier();
  const auto& F = T.endo;
  auto K = std::make_shared<FinCategory>(X.name + "_" + T.name);
  KleisliCategory kl;
  kl.cat = K;
  const int n = static_cast<int>(X.num_objects());
  for (int o = 0; o < n; ++o) {
    K->add_object(X.object(o));
    kl.under.push_back(T.counit.at(o));
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int f : X.hom(F.ob(s), t)) {
        if (s == t && f == T.counit.at(s)) continue;
        K->add_morphism("(" + X.object(s) + "," + X.mor_id(f) + ")", s, t);
        kl.under.push_back(f);
      }
  const int m = static_cast<int>(K->num_morphisms());
  for (int f = 0; f < m; ++f)
    for (int g : K->out(K->tgt(f))) {
      if (K->has_compose(g, f)) continue;
      const int s = K->src(f);
      const int u = comp(X, {kl.under[g], F.mor(kl.under[f]), T.comult.at(s)});
      K->set_compose(g, f, kl.arrow(s, K->tgt(g), u));
    }

  kl.free = Functor{"F_kl", T.carrier(), K, {}, {}};
  for (int o = 0; o < n; ++o) kl.free.obj_map.push_back(o);
  for (int f = 0; f < static_cast<int>(X.num_morphisms()); ++f) {
    const int s = X.src(f);
    kl.free.mor_map.push_back(kl.arrow(s, X.tgt(f), X.compose(f, T.counit.at(s))));
  }
  kl.forget = Functor{"U_kl", K, T.carrier(), {}, {}};
  for (int o = 0; o < n; ++o) kl.forget.obj_map.push_back(F.ob(o));
  for (int f = 0; f < m; ++f)
    kl.forget.mor_map.push_back(X.compose(F.mor(kl.under[f]), T.comult.at(K->src(f))));

  auto& a = kl.adj;
  a.name = "U_kl-|F_kl";
  a.left = kl.forget;
  a.right = kl.free;
  a.unit.name = "unit";
  a.unit.src = identity_functor(K);
  a.unit.tgt = compose_functors(a.right, a.left);
  for (int o = 0; o < n; ++o) a.unit.comp.push_back(kl.arrow(o, F.ob(o), X.identity(F.ob(o))));
  a.counit = T.counit;
  a.counit.name = "counit";
  a.counit.src = compose_functors(a.left, a.right);
  return kl;
}

inline CheckReport check_adjunction(const Adjunction& adj) {
  CheckReport r("adjunction " + adj.name);
  r.merge(validate_functor(adj.left), "left.");
  r.merge(validate_functor(adj.right), "right.");
  r.touch("boundaries", true);
  r.touch("triangle-left");
  r.touch("triangle-right");
  if (!r.ok()) return r;
  if (!same_category(adj.left.source, adj.right.target) ||
      !same_category(adj.left.target, adj.right.source)) {
    r.fail("boundaries", "left and right functors are not opposed", true);
    return r;
  }
  const Functor RL = compose_functors(adj.right, adj.left);
  const Functor LR = compose_functors(adj.left, adj.right);
  if (!boundary_is(adj.unit, identity_functor(adj.left.source), RL) ||
      !boundary_is(adj.counit, LR, identity_functor(adj.left.target))) {
    r.fail("boundaries", "unit must be Id => RL and counit LR => Id", true);
    return r;
  }
  r.merge(validate_nat_trans(adj.unit), "unit.");
  r.merge(validate_nat_trans(adj.counit), "counit.");
  if (!r.ok()) return r;
  const auto& X = *adj.left.source;
  const auto& A = *adj.left.target;
  const auto& L = adj.left;
  const auto& R = adj.right;
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x)
    equate(r, "triangle-left", A, "at " + X.object(x),
           A.compose(adj.counit.at(L.ob(x)), L.mor(adj.unit.at(x))), A.identity(L.ob(x)));
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a)
    equate(r, "triangle-right", X, "at " + A.object(a),
           X.compose(R.mor(adj.counit.at(a)), adj.unit.at(R.ob(a))), X.identity(R.ob(a)));
  return r;
}

inline bool adjunction_equal(const Adjunction& a, const Adjunction& b) {
  return functor_equal(a.left, b.left) && functor_equal(a.right, b.right) &&
         nat_equal(a.unit, b.unit) && nat_equal(a.counit, b.counit);
}

// J: X_T -> X^T, X ↦ (TX, τ_X), f̃ ↦ T(f̃)∘τ_X.
inline Functor comparison_functor(const Comonad& T, const KleisliCategory& kl, const EMCategory& em) {
  const auto& X = *T.carrier();
  const auto& K = *kl.cat;
  Functor J{"J", kl.cat, em.cat, {}, {}};
  for (int o = 0; o < static_cast<int>(K.num_objects()); ++o) J.obj_map.push_back(em.find(T.comult.at(o)));
  for (int f = 0; f < static_cast<int>(K.num_morphisms()); ++f) {
    const int u = X.compose(T.endo.mor(kl.under[f]), T.comult.at(K.src(f)));
    J.mor_map.push_back(em.morphism(J.ob(K.src(f)), J.ob(K.tgt(f)), u));
  }
  return J;
}

}  // namespace commakit
