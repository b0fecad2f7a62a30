#pragma once

#include <string>
#include <utility>

#include "coalgebra.hpp"
#include "comonad.hpp"

namespace commakit {

// K̃: X_C -> A_Q, f: CX -> Y  ↦  ζ⁰_{KY} ∘ QK(f) ∘ Q(θ110_X).
inline Functor kleisli_lift_K(const ColaxDCoalgebra& c, const KleisliCategory& klC,
                              const KleisliCategory& klQ) {
  const auto& A = *c.catA();
  const auto& KC = *klC.cat;
  Functor F{"K~", klC.cat, klQ.cat, {}, {}};
  for (int x = 0; x < static_cast<int>(KC.num_objects()); ++x) F.obj_map.push_back(c.K.ob(x));
  for (int f = 0; f < static_cast<int>(KC.num_morphisms()); ++f) {
    const int x = KC.src(f), y = KC.tgt(f);
    const int u = comp(A, {c.zeta0.at(c.K.ob(y)), c.Q.mor(c.K.mor(klC.under[f])),
                           c.Q.mor(c.theta110.at(x))});
    F.mor_map.push_back(klQ.arrow(c.K.ob(x), c.K.ob(y), u));
  }
  return F;
}

// H̃: A_Q -> X_C, a: QA -> B  ↦  ζ¹_{HB} ∘ CH(a) ∘ C(θ001_A).
inline Functor kleisli_lift_H(const ColaxDCoalgebra& c, const KleisliCategory& klQ,
                              const KleisliCategory& klC) {
  const auto& X = *c.catX();
  const auto& KQ = *klQ.cat;
  Functor F{"H~", klQ.cat, klC.cat, {}, {}};
  for (int a = 0; a < static_cast<int>(KQ.num_objects()); ++a) F.obj_map.push_back(c.H.ob(a));
  for (int f = 0; f < static_cast<int>(KQ.num_morphisms()); ++f) {
    const int a = KQ.src(f), b = KQ.tgt(f);
    const int u = comp(X, {c.zeta1.at(c.H.ob(b)), c.C.mor(c.H.mor(klQ.under[f])),
                           c.C.mor(c.theta001.at(a))});
    F.mor_map.push_back(klC.arrow(c.H.ob(a), c.H.ob(b), u));
  }
  return F;
}

inline Functor kleisli_lift_K(const ColaxDCoalgebra& c) {
  const auto d = derive_comonads(c);
  return kleisli_lift_K(c, kleisli_category(d.onX), kleisli_category(d.onA));
}

inline Functor kleisli_lift_H(const ColaxDCoalgebra& c) {
  const auto d = derive_comonads(c);
  return kleisli_lift_H(c, kleisli_category(d.onA), kleisli_category(d.onX));
}

// Functor equality as a pointwise check on objects and morphisms.
inline void compare_pointwise(CheckReport& r, const std::string& label, const Functor& lhs,
                              const Functor& rhs) {
  if (!same_category(lhs.source, rhs.source) || !same_category(lhs.target, rhs.target)) {
    r.fail(label, lhs.name + " and " + rhs.name + " are not parallel");
    return;
  }
  const auto& S = *lhs.source;
  const auto& T = *lhs.target;
  for (int o = 0; o < static_cast<int>(S.num_objects()); ++o)
    r.site(label, lhs.ob(o) != kNone && lhs.ob(o) == rhs.ob(o),
           "object " + S.object(o) + ": " +
               (T.valid_object(lhs.ob(o)) ? T.object(lhs.ob(o)) : "<undefined>") + " vs " +
               (T.valid_object(rhs.ob(o)) ? T.object(rhs.ob(o)) : "<undefined>"));
  for (int m = 0; m < static_cast<int>(S.num_morphisms()); ++m)
    r.site(label, lhs.mor(m) != kNone && lhs.mor(m) == rhs.mor(m),
           eq_witness(T, "morphism " + S.mor_id(m), lhs.mor(m), rhs.mor(m)));
}

// Functoriality of both Kleisli liftings plus the squares with the forgetful
// functors (U_Q K̃ = K U_C, U_C H̃ = H U_Q) and the free functors.
inline CheckReport check_kleisli_lifts(const ColaxDCoalgebra& c) {
  CheckReport r("Kleisli liftings of " + c.name);
  const auto d = derive_comonads(c);
  const auto klC = kleisli_category(d.onX);
  const auto klQ = kleisli_category(d.onA);
  const Functor Kt = kleisli_lift_K(c, klC, klQ);
  const Functor Ht = kleisli_lift_H(c, klQ, klC);
  r.merge(validate_functor(Kt), "K-lift.");
  r.merge(validate_functor(Ht), "H-lift.");
  compare_pointwise(r, "K-lift-forgetful", compose_functors(klQ.forget, Kt),
                    compose_functors(c.K, klC.forget));
  compare_pointwise(r, "H-lift-forgetful", compose_functors(klC.forget, Ht),
                    compose_functors(c.H, klQ.forget));
  compare_pointwise(r, "K-lift-free", compose_functors(Kt, klC.free),
                    compose_functors(klQ.free, c.K));
  compare_pointwise(r, "H-lift-free", compose_functors(Ht, klQ.free),
                    compose_functors(klC.free, c.H));
  return r;
}

// ---------------------------------------------------------------------------
// Split coalgebras

inline CheckReport is_split(const ColaxDCoalgebra& c) {
  CheckReport r("split " + c.name);
  r.touch("splitrho");
  r.touch("splitzeta");
  if (!coalgebra_shape_ok(c)) {
    r.fail("splitrho", "coalgebra has the wrong shape", true);
    return r;
  }
  const auto& X = *c.catX();
  const auto& A = *c.catA();
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const std::string at = "at X=" + X.object(x);
    const int Kx = c.K.ob(x);
    equate(r, "splitrho", A, at, c.K.mor(c.theta100.at(x)), c.theta110.at(c.C.ob(x)));
    equate(r, "splitzeta", A, at,
           comp(A, {c.zeta0.at(Kx), c.eps.at(Kx), c.K.mor(c.eta.at(x))}),
           c.K.mor(c.zeta1.at(x)));
  }
  return r;
}

inline CheckReport split_factorizations(const ColaxDCoalgebra& c) {
  CheckReport r("split factorizations of " + c.name);
  r.touch("precondition", true);
  r.touch("splitrhofact");
  r.touch("splitchifact");
  const auto s = is_split(c);
  if (!s.ok()) {
    r.fail("precondition", "not split: " + s.failed_labels().front(), true);
    return r;
  }
  const auto& X = *c.catX();
  const auto& A = *c.catA();
  const auto& G = c.G;
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const int Kx = c.K.ob(x);
    equate(r, "splitrhofact", X, "at X=" + X.object(x),
           comp(X, {G.mor(c.zeta0.at(Kx)), c.chi.at(Kx), c.theta101.at(x)}), c.eta.at(x));
  }
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const int Qa = c.Q.ob(a);
    equate(r, "splitchifact", X, "at A=" + A.object(a),
           comp(X, {G.mor(c.zeta0.at(Qa)), c.chi.at(Qa), c.theta001.at(a)}), c.chi.at(a));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Generalized distributive laws

struct DistributiveLaw {
  Comonad source;  // C on X
  Comonad target;  // Q on A
  Functor along;   // K: X -> A
  NatTrans kappa;  // KC ⇒ QK
};

inline CheckReport check_distributive_law(const DistributiveLaw& d) {
  CheckReport r("distributive law " + d.kappa.name);
  r.touch("boundary", true);
  r.touch("gendist1");
  r.touch("gendist2");
  const auto& K = d.along;
  const auto& C = d.source;
  const auto& Q = d.target;
  if (!same_category(K.source, C.carrier()) || !same_category(K.target, Q.carrier()) ||
      !boundary_is(d.kappa, compose_functors(K, C.endo), compose_functors(Q.endo, K))) {
    r.fail("boundary", "kappa must be KC => QK", true);
    return r;
  }
  r.merge(validate_nat_trans(d.kappa), "kappa.");
  if (!r.ok()) return r;
  const auto& X = *C.carrier();
  const auto& A = *Q.carrier();
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const std::string at = "at X=" + X.object(x);
    const int Kx = K.ob(x), kx = d.kappa.at(x);
    equate(r, "gendist1", A, at, A.compose(Q.counit.at(Kx), kx), K.mor(C.counit.at(x)));
    equate(r, "gendist2", A, at, A.compose(Q.comult.at(Kx), kx),
           comp(A, {Q.endo.mor(kx), d.kappa.at(C.endo.ob(x)), K.mor(C.comult.at(x))}));
  }
  return r;
}

// κ_X = ε_{KX} ∘ K(η_X). Throws when the coalgebra is not split.
inline DistributiveLaw dist_law_kappa(const ColaxDCoalgebra& c) {
  const auto s = is_split(c);
  if (!s.ok())
    throw InputError("precondition violated: " + c.name + " is not split (" +
                     s.failed_labels().front() + ")");
  const auto d = derive_comonads(c);
  DistributiveLaw law{d.onX, d.onA, c.K, {}};
  law.kappa.name = "kappa";
  law.kappa.src = compose_functors(c.K, c.C);
  law.kappa.tgt = compose_functors(c.Q, c.K);
  const auto& A = *c.catA();
  for (int x = 0; x < static_cast<int>(c.catX()->num_objects()); ++x)
    law.kappa.comp.push_back(A.compose(c.eps.at(c.K.ob(x)), c.K.mor(c.eta.at(x))));
  return law;
}

// ---------------------------------------------------------------------------
// Eilenberg-Moore liftings

// (X,x) ↦ (KX, s(X) ∘ K(x)) and f ↦ K(f) for a family s: KC ⇒ QK.
inline Functor em_lift_along(const std::string& name, const Functor& K, const NatTrans& s,
                             const EMCategory& emC, const EMCategory& emQ) {
  const auto& A = *K.target;
  const auto& E = *emC.cat;
  Functor F{name, emC.cat, emQ.cat, {}, {}};
  for (int e = 0; e < static_cast<int>(E.num_objects()); ++e) {
    const auto [x, m] = emC.coalgs[e];
    F.obj_map.push_back(emQ.find(A.compose(s.at(x), K.mor(m))));
  }
  for (int f = 0; f < static_cast<int>(E.num_morphisms()); ++f)
    F.mor_map.push_back(emQ.morphism(F.ob(E.src(f)), F.ob(E.tgt(f)), K.mor(emC.under[f])));
  return F;
}

// K̃^G: X^C -> A^Q, (X,x) ↦ (KX, ε_{KX} ∘ K(η_X) ∘ K(x)).
inline Functor em_lift_K(const ColaxDCoalgebra& c, const EMCategory& emC, const EMCategory& emQ) {
  const auto s = is_split(c);
  if (!s.ok())
    throw InputError("precondition violated: " + c.name + " is not split (" +
                     s.failed_labels().front() + ")");
  NatTrans k;
  k.src = compose_functors(c.K, c.C);
  k.tgt = compose_functors(c.Q, c.K);
  const auto& A = *c.catA();
  for (int x = 0; x < static_cast<int>(c.catX()->num_objects()); ++x)
    k.comp.push_back(A.compose(c.eps.at(c.K.ob(x)), c.K.mor(c.eta.at(x))));
  return em_lift_along("K~G", c.K, k, emC, emQ);
}

inline Functor lift_from_distlaw(const DistributiveLaw& d, const EMCategory& emC,
                                 const EMCategory& emQ) {
  const auto v = check_distributive_law(d);
  if (!v.ok())
    throw InputError("distributive law fails " + v.failed_labels().front());
  return em_lift_along("K~kappa", d.along, d.kappa, emC, emQ);
}

// Images are Q-coalgebras, the lift is a functor, and U^Q K̃ = K U^C.
inline CheckReport check_em_lift(const Functor& lift, const Functor& K, const Comonad& Q,
                                 const EMCategory& emC, const EMCategory& emQ) {
  CheckReport r("EM lifting " + lift.name);
  r.touch("images-are-coalgebras");
  const auto& E = *emC.cat;
  for (int e = 0; e < static_cast<int>(E.num_objects()); ++e)
    r.site("images-are-coalgebras", lift.ob(e) != kNone,
           "image of " + E.object(e) + " is not a " + Q.name + "-coalgebra");
  if (!r.ok()) return r;
  for (int e = 0; e < static_cast<int>(E.num_objects()); ++e) {
    const auto [o, m] = emQ.coalgs[lift.ob(e)];
    r.site("images-are-coalgebras", check_coalgebra_over(Q, o, m).ok(), E.object(e));
  }
  r.merge(validate_functor(lift), "functor.");
  compare_pointwise(r, "forgetful", compose_functors(emQ.forget, lift),
                    compose_functors(K, emC.forget));
  return r;
}

// All of the EM-side checks for a split coalgebra: κ axioms, both lifts and their agreement.
inline CheckReport check_em_liftings(const ColaxDCoalgebra& c) {
  CheckReport r("EM liftings of " + c.name);
  r.touch("split", true);
  const auto s = is_split(c);
  if (!s.ok()) {
    r.fail("split", "not split: " + s.failed_labels().front(), true);
    return r;
  }
  const auto d = derive_comonads(c);
  const auto emC = em_category(d.onX);
  const auto emQ = em_category(d.onA);
  const auto law = dist_law_kappa(c);
  r.merge(check_distributive_law(law), "kappa.");
  const Functor a = em_lift_K(c, emC, emQ);
  r.merge(check_em_lift(a, c.K, d.onA, emC, emQ), "em-lift.");
  r.touch("distlaw-agrees");
  if (!r.ok()) return r;
  const Functor b = lift_from_distlaw(law, emC, emQ);
  r.merge(check_em_lift(b, c.K, d.onA, emC, emQ), "distlaw-lift.");
  compare_pointwise(r, "distlaw-agrees", a, b);
  return r;
}

// ---------------------------------------------------------------------------
// Adjoint squares over the comparison functor

enum class SquareVariant { Identity, C };

struct AdjointSquare {
  SquareVariant variant = SquareVariant::Identity;
  NatTrans t11;  // U^C J ⇒ B U_C
  NatTrans t12;  // U^C J F_C ⇒ B
  NatTrans t21;  // J ⇒ F^C B U_C
  NatTrans t22;  // J F_C ⇒ F^C B
};

// B is the identity or C according to the variant.
inline AdjointSquare adjoint_square(const Comonad& T, SquareVariant variant) {
  const auto kl = kleisli_category(T);
  const auto em = em_category(T);
  const Functor J = comparison_functor(T, kl, em);
  const Functor B = variant == SquareVariant::Identity ? identity_functor(T.carrier()) : T.endo;
  auto o = [](const Functor& g, const Functor& f) { return compose_functors(g, f); };
  const auto& X = *T.carrier();
  const int n = static_cast<int>(X.num_objects());
  AdjointSquare s;
  s.variant = variant;
  s.t11 = NatTrans{"theta11", o(em.forget, J), o(B, kl.forget), {}};
  s.t12 = NatTrans{"theta12", o(o(em.forget, J), kl.free), B, {}};
  s.t21 = NatTrans{"theta21", J, o(o(em.cofree, B), kl.forget), {}};
  s.t22 = NatTrans{"theta22", o(J, kl.free), o(em.cofree, B), {}};
  for (int x = 0; x < n; ++x) {
    const int Cx = T.endo.ob(x);
    const int tau = T.comult.at(x);
    if (variant == SquareVariant::Identity) {
      s.t11.comp.push_back(X.identity(Cx));
      s.t12.comp.push_back(T.counit.at(x));
      s.t21.comp.push_back(em.morphism(J.ob(x), s.t21.tgt.ob(x), tau));
      s.t22.comp.push_back(em.morphism(J.ob(x), s.t22.tgt.ob(x), X.identity(Cx)));
    } else {
      s.t11.comp.push_back(tau);
      s.t12.comp.push_back(X.identity(Cx));
      s.t21.comp.push_back(
          em.morphism(J.ob(x), s.t21.tgt.ob(x), X.compose(T.comult.at(Cx), tau)));
      s.t22.comp.push_back(em.morphism(J.ob(x), s.t22.tgt.ob(x), tau));
    }
  }
  return s;
}

inline CheckReport check_adjoint_square(const Comonad& T, const AdjointSquare& s) {
  CheckReport r("adjoint square");
  r.merge(validate_nat_trans(s.t11), "theta11.");
  r.merge(validate_nat_trans(s.t12), "theta12.");
  r.merge(validate_nat_trans(s.t21), "theta21.");
  r.merge(validate_nat_trans(s.t22), "theta22.");
  if (s.variant == SquareVariant::C) {
    // Both listed readings of the ϑ21 component must agree.
    const auto& X = *T.carrier();
    for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
      const int tau = T.comult.at(x);
      equate(r, "theta21-readings", X, "at " + X.object(x),
             X.compose(T.comult.at(T.endo.ob(x)), tau), X.compose(T.endo.mor(tau), tau));
    }
  }
  return r;
}

}  // namespace commakit
