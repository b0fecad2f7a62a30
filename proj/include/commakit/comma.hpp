#pragma once

#include <cstdlib>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "category.hpp"

namespace commakit {

// Morphism budget for materialized comma categories. COMMA_KIT_BUDGET overrides.
inline std::size_t default_budget() {
  if (const char* e = std::getenv("COMMA_KIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(e, &end, 10);
    if (end != e && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

struct CommaObject {
  int x;  // object of X
  int f;  // morphism x -> G(a) of X
  int a;  // object of A
};

struct CommaBundle {
  Functor base;  // G: A -> X
  CatPtr total;  // (X,G)
  Functor d0;    // (X,G) -> A
  Functor d1;    // (X,G) -> X
  NatTrans delta;  // d1 ⇒ G∘d0
  std::vector<CommaObject> objs;
  std::vector<std::pair<int, int>> mors;  // (x, a) for every morphism of total

  // The comma object (src f, f, a), or kNone.
  int object_of(int f, int a) const {
    auto it = lookup_.find(pair_key(f, a));
    return it == lookup_.end() ? kNone : it->second;
  }

  // The morphism (x, a): s -> t, or kNone.
  int morphism_of(int s, int t, int x, int a) const {
    if (s == kNone || t == kNone) return kNone;
    for (int m : total->hom(s, t))
      if (mors[m].first == x && mors[m].second == a) return m;
    return kNone;
  }

  std::unordered_map<std::uint64_t, int> lookup_;
};

inline std::string comma_object_id(const FinCategory& X, const FinCategory& A, int x, int f,
                                   int a) {
  return "(" + X.object(x) + "|" + X.mor_id(f) + "|" + A.object(a) + ")";
}

inline CommaBundle comma(const Functor& G, std::size_t budget = default_budget()) {
  const auto& A = *G.source;
  const auto& X = *G.target;
  auto T = std::make_shared<FinCategory>("(" + X.name + "," + G.name + ")");
  CommaBundle b;
  b.base = G;
  b.total = T;

  auto over = [&](std::size_t n) {
    if (n > budget)
      throw BudgetExceeded("comma of " + G.name + " needs more than " + std::to_string(budget) +
                           " morphisms");
  };

  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x)
    for (int a = 0; a < static_cast<int>(A.num_objects()); ++a)
      for (int f : X.hom(x, G.ob(a))) {
        const int o = T->add_object(comma_object_id(X, A, x, f, a));
        b.objs.push_back({x, f, a});
        b.lookup_.emplace(pair_key(f, a), o);
        b.mors.emplace_back(X.identity(x), A.identity(a));
        over(T->num_morphisms());
      }

  const int n = static_cast<int>(b.objs.size());
  for (int s = 0; s < n; ++s) {
    const auto& so = b.objs[s];
    for (int xm : X.out(so.x))
      for (int am : A.out(so.a)) {
        const int lhs = X.compose(G.mor(am), so.f);
        const int xt = X.tgt(xm), at = A.tgt(am);
        for (int f2 : X.hom(xt, G.ob(at))) {
          if (X.compose(f2, xm) != lhs) continue;
          const int t = b.object_of(f2, at);
          if (s == t && xm == X.identity(so.x) && am == A.identity(so.a)) continue;
          T->add_morphism("(" + X.mor_id(xm) + "," + A.mor_id(am) + "):" + T->object(s) + "->" +
                              T->object(t),
                          s, t);
          b.mors.emplace_back(xm, am);
          over(T->num_morphisms());
        }
      }
  }

  const int m = static_cast<int>(T->num_morphisms());
  for (int f = 0; f < m; ++f) {
    const int s = T->src(f), t = T->tgt(f);
    for (int g : T->out(t)) {
      if (T->has_compose(g, f)) continue;
      const int u = T->tgt(g);
      const int x = X.compose(b.mors[g].first, b.mors[f].first);
      const int a = A.compose(b.mors[g].second, b.mors[f].second);
      T->set_compose(g, f, b.morphism_of(s, u, x, a));
    }
  }

  b.d0 = Functor{"d0", T, G.source, {}, {}};
  b.d1 = Functor{"d1", T, G.target, {}, {}};
  b.d0.obj_map.resize(n);
  b.d1.obj_map.resize(n);
  b.d0.mor_map.resize(m);
  b.d1.mor_map.resize(m);
  for (int o = 0; o < n; ++o) {
    b.d0.obj_map[o] = b.objs[o].a;
    b.d1.obj_map[o] = b.objs[o].x;
  }
  for (int f = 0; f < m; ++f) {
    b.d0.mor_map[f] = b.mors[f].second;
    b.d1.mor_map[f] = b.mors[f].first;
  }
  b.delta.name = "delta";
  b.delta.src = b.d1;
  b.delta.tgt = compose_functors(G, b.d0);
  b.delta.comp.resize(n);
  for (int o = 0; o < n; ++o) b.delta.comp[o] = b.objs[o].f;
  return b;
}

inline CommaBundle arrow_category(const CatPtr& E, std::size_t budget = default_budget()) {
  CommaBundle b = comma(identity_functor(E), budget);
  std::const_pointer_cast<FinCategory>(b.total)->name = E->name + "^2";
  return b;
}

// ν: E -> E², E ↦ (E|1|E), f ↦ (f,f). `arrows` must be arrow_category(E).
inline Functor unit_nu(const CatPtr& E, const CommaBundle& arrows) {
  Functor f;
  f.name = "nu";
  f.source = E;
  f.target = arrows.total;
  f.obj_map.resize(E->num_objects());
  f.mor_map.resize(E->num_morphisms());
  for (int o = 0; o < static_cast<int>(E->num_objects()); ++o)
    f.obj_map[o] = arrows.object_of(E->identity(o), o);
  for (int m = 0; m < static_cast<int>(E->num_morphisms()); ++m)
    f.mor_map[m] = arrows.morphism_of(f.ob(E->src(m)), f.ob(E->tgt(m)), m, m);
  return f;
}

// The unique functor E -> (X,G) with d1 = U, d0 = F and δ = β.
inline Functor factor_through_comma(const Functor& U, const NatTrans& beta, const Functor& F,
                                    const CommaBundle& b) {
  if (!same_category(U.source, F.source) || !functor_equal(beta.src, U) ||
      !functor_equal(beta.tgt, compose_functors(b.base, F)))
    throw InputError("boundary mismatch factoring through the comma category");
  const auto& E = *U.source;
  Functor h;
  h.name = "<" + U.name + "," + beta.name + "," + F.name + ">";
  h.source = U.source;
  h.target = b.total;
  h.obj_map.resize(E.num_objects());
  h.mor_map.resize(E.num_morphisms());
  for (int e = 0; e < static_cast<int>(E.num_objects()); ++e)
    h.obj_map[e] = b.object_of(beta.at(e), F.ob(e));
  for (int m = 0; m < static_cast<int>(E.num_morphisms()); ++m)
    h.mor_map[m] = b.morphism_of(h.ob(E.src(m)), h.ob(E.tgt(m)), U.mor(m), F.mor(m));
  return h;
}

// The counit 1-cell (d1, δ_G, d0): Id_(X,G) -> G.
inline ColaxCell counit_cell(const CommaBundle& b) {
  ColaxCell c;
  c.domain = identity_functor(b.total);
  c.codomain = b.base;
  c.top = b.d0;
  c.bottom = b.d1;
  c.fill = b.delta;
  c.fill.src = compose_functors(c.bottom, c.domain);
  return c;
}

// D(U,β,F): (B,P) -> (X,G), (B,p,E) ↦ (U B, β_E∘U(p), F E), (u,e) ↦ (U u, F e).
inline Functor d_on_onecell(const ColaxCell& cell, const CommaBundle& from, const CommaBundle& to) {
  if (!functor_equal(from.base, cell.domain) || !functor_equal(to.base, cell.codomain))
    throw InputError("boundary mismatch applying D to a cell");
  const auto& S = *from.total;
  const auto& X = *cell.codomain.target;
  Functor h;
  h.name = "D(" + cell.fill.name + ")";
  h.source = from.total;
  h.target = to.total;
  h.obj_map.resize(S.num_objects());
  h.mor_map.resize(S.num_morphisms());
  for (int o = 0; o < static_cast<int>(S.num_objects()); ++o) {
    const auto& ob = from.objs[o];
    const int f = X.compose(cell.fill.at(ob.a), cell.bottom.mor(ob.f));
    h.obj_map[o] = to.object_of(f, cell.top.ob(ob.a));
  }
  for (int m = 0; m < static_cast<int>(S.num_morphisms()); ++m) {
    const auto& [u, e] = from.mors[m];
    h.mor_map[m] =
        to.morphism_of(h.ob(S.src(m)), h.ob(S.tgt(m)), cell.bottom.mor(u), cell.top.mor(e));
  }
  return h;
}

// D as a 1-cell Id_(B,P) -> Id_(X,G) with identity fill.
inline ColaxCell d_cell(const ColaxCell& cell, const CommaBundle& from, const CommaBundle& to) {
  const Functor h = d_on_onecell(cell, from, to);
  ColaxCell c;
  c.domain = identity_functor(from.total);
  c.codomain = identity_functor(to.total);
  c.top = h;
  c.bottom = h;
  c.fill = identity_nat(h);
  c.fill.src = compose_functors(c.bottom, c.domain);
  c.fill.tgt = compose_functors(c.codomain, c.top);
  return c;
}

// D(θ,τ) as a transformation D(U,β,F) ⇒ D(V,γ,K) with component (θ_B, τ_E).
inline NatTrans d_on_twocell_nat(const SquareTwoCell& t, const CommaBundle& from,
                                 const CommaBundle& to) {
  NatTrans a;
  a.name = "D(" + t.bottom.name + "," + t.top.name + ")";
  a.src = d_on_onecell(t.source, from, to);
  a.tgt = d_on_onecell(t.target, from, to);
  const auto& S = *from.total;
  a.comp.resize(S.num_objects());
  for (int o = 0; o < static_cast<int>(S.num_objects()); ++o) {
    const auto& ob = from.objs[o];
    a.comp[o] = to.morphism_of(a.src.ob(o), a.tgt.ob(o), t.bottom.at(ob.x), t.top.at(ob.a));
  }
  return a;
}

inline SquareTwoCell d_on_twocell(const SquareTwoCell& t, const CommaBundle& from,
                                  const CommaBundle& to) {
  SquareTwoCell r;
  r.source = d_cell(t.source, from, to);
  r.target = d_cell(t.target, from, to);
  r.top = d_on_twocell_nat(t, from, to);
  r.bottom = r.top;
  return r;
}

// ξ: (X,G) -> (X,G)², the identity arrow on each comma object.
inline Functor comultiplication_xi(const CommaBundle& b, const CommaBundle& squares) {
  Functor f = unit_nu(b.total, squares);
  f.name = "xi";
  return f;
}

// D(δ): (X,G)² -> (X,G), [S,(x,a),T] ↦ (X, f'∘x, A'), [(h,m),(k,n)] ↦ (h,n).
inline Functor multiplication_Ddelta(const CommaBundle& b, const CommaBundle& squares) {
  Functor f = d_on_onecell(counit_cell(b), squares, b);
  f.name = "D(delta)";
  return f;
}

inline void compare_functors(CheckReport& r, const std::string& label, const Functor& lhs,
                             const Functor& rhs) {
  r.touch(label);
  const auto& S = *lhs.source;
  for (int o = 0; o < static_cast<int>(S.num_objects()); ++o)
    r.site(label, lhs.ob(o) != kNone && lhs.ob(o) == rhs.ob(o), "object " + S.object(o));
  for (int m = 0; m < static_cast<int>(S.num_morphisms()); ++m)
    r.site(label, lhs.mor(m) != kNone && lhs.mor(m) == rhs.mor(m), "morphism " + S.mor_id(m));
}

inline CheckReport check_comonad_laws(const Functor& G, std::size_t budget = default_budget()) {
  CheckReport r("2-comonad laws at " + G.name);
  const CommaBundle b = comma(G, budget);
  const CommaBundle sq = arrow_category(b.total, budget);
  const CommaBundle cube = arrow_category(sq.total, budget);
  const auto& T = *b.total;

  const Functor xi = comultiplication_xi(b, sq);
  const Functor mult = multiplication_Ddelta(b, sq);
  const Functor id = identity_functor(b.total);

  r.merge(validate_functor(xi), "xi.");
  r.merge(validate_functor(mult), "Ddelta.");

  compare_functors(r, "Ddelta-after-xi", compose_functors(mult, xi), id);

  // δ_{D(G)} after ξ: both projections and the fill are identities.
  compare_functors(r, "counit-d0-after-xi", compose_functors(sq.d0, xi), id);
  compare_functors(r, "counit-d1-after-xi", compose_functors(sq.d1, xi), id);
  r.touch("counit-fill-after-xi");
  for (int o = 0; o < static_cast<int>(T.num_objects()); ++o)
    r.site("counit-fill-after-xi", sq.delta.at(xi.ob(o)) == T.identity(o), "object " + T.object(o));

  // Coassociativity: D(ξ)∘ξ = ξ_{D(G)}∘ξ.
  ColaxCell xi_cell;
  xi_cell.domain = id;
  xi_cell.codomain = identity_functor(sq.total);
  xi_cell.top = xi;
  xi_cell.bottom = xi;
  xi_cell.fill = identity_nat(xi);
  xi_cell.fill.src = compose_functors(xi_cell.bottom, xi_cell.domain);
  xi_cell.fill.tgt = compose_functors(xi_cell.codomain, xi_cell.top);
  const Functor dxi = d_on_onecell(xi_cell, sq, cube);
  const Functor xi2 = comultiplication_xi(sq, cube);
  compare_functors(r, "coassociativity", compose_functors(dxi, xi), compose_functors(xi2, xi));
  return r;
}

// δ_G ∘ D(c) = c ∘ δ_P as cells Id_(B,P) -> G.
inline CheckReport check_counit_naturality(const ColaxCell& c, const CommaBundle& from,
                                           const CommaBundle& to) {
  CheckReport r("counit naturality");
  const ColaxCell lhs = compose_colax_cells(counit_cell(to), d_cell(c, from, to));
  const ColaxCell rhs = compose_colax_cells(c, counit_cell(from));
  compare_functors(r, "counit-naturality-top", lhs.top, rhs.top);
  compare_functors(r, "counit-naturality-bottom", lhs.bottom, rhs.bottom);
  r.touch("counit-naturality-fill");
  for (std::size_t o = 0; o < lhs.fill.comp.size(); ++o)
    r.site("counit-naturality-fill", lhs.fill.comp[o] == rhs.fill.comp[o],
           "object " + from.total->object(static_cast<int>(o)));
  return r;
}

}  // namespace commakit
