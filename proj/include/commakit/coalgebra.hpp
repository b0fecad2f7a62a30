#pragma once

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "comma.hpp"
#include "comonad.hpp"

namespace commakit {

// Colax D-coalgebra structure on G: A -> X. The unit-side transformation
// η: C ⇒ GK is also written ϱ.
struct ColaxDCoalgebra {
  std::string name;
  Functor G, H, Q, C, K;
  NatTrans chi;    // H ⇒ GQ
  NatTrans eta;    // C ⇒ GK
  NatTrans omega;  // CG ⇒ H
  NatTrans eps;    // KG ⇒ Q
  NatTrans zeta0;  // Q ⇒ Id_A
  NatTrans zeta1;  // C ⇒ Id_X
  NatTrans theta100, theta110, theta101, theta111;  // indexed by X
  NatTrans theta000, theta010, theta001, theta011;  // indexed by A

  const NatTrans& rho() const { return eta; }
  const CatPtr& catX() const { return G.target; }
  const CatPtr& catA() const { return G.source; }

  std::vector<std::pair<std::string, NatTrans*>> transformations() {
    return {{"chi", &chi},           {"eta", &eta},           {"omega", &omega},
            {"eps", &eps},           {"zeta0", &zeta0},       {"zeta1", &zeta1},
            {"theta100", &theta100}, {"theta110", &theta110}, {"theta101", &theta101},
            {"theta111", &theta111}, {"theta000", &theta000}, {"theta010", &theta010},
            {"theta001", &theta001}, {"theta011", &theta011}};
  }
  std::vector<std::pair<std::string, const NatTrans*>> transformations() const {
    auto v = const_cast<ColaxDCoalgebra*>(this)->transformations();
    return {v.begin(), v.end()};
  }
  std::vector<std::pair<std::string, Functor*>> functors() {
    return {{"G", &G}, {"H", &H}, {"Q", &Q}, {"C", &C}, {"K", &K}};
  }
  std::vector<std::pair<std::string, const Functor*>> functors() const {
    return {{"G", &G}, {"H", &H}, {"Q", &Q}, {"C", &C}, {"K", &K}};
  }
};

// Every equation label checked by validate_coalgebra, in report order.
inline const std::vector<std::string>& ledger_labels() {
  static const std::vector<std::string> labels = {
      "colaxcoh",      "colaxcoh2",     "zetacomp",      "theta1eq1",     "theta1eq2",
      "theta1eq3",     "theta1eq4",     "theta0eq1",     "theta0eq2",     "theta0eq3",
      "theta0eq4",     "thetaAcompeq1", "thetaAcompeq2", "thetaAcompeq3", "thetaAcompeq4",
      "leftuniteqX1",  "leftuniteqX2",  "leftuniteqA1",  "leftuniteqA2",  "rightuniteqX1",
      "rightuniteqX2", "rightuniteqA1", "rightuniteqA2", "thetaX000",     "thetaX001",
      "thetaX010",     "thetaX011",     "thetaX100",     "thetaX101",     "thetaX110",
      "thetaX111",     "thetaA000",     "thetaA001",     "thetaA010",     "thetaA011",
      "thetaA100",     "thetaA101",     "thetaA110",     "thetaA111"};
  return labels;
}

// Expected (source, target) functors of each structure transformation.
inline std::vector<std::pair<std::string, std::pair<Functor, Functor>>> expected_boundaries(
    const ColaxDCoalgebra& c) {
  const Functor idA = identity_functor(c.catA());
  const Functor idX = identity_functor(c.catX());
  auto o = [](const Functor& g, const Functor& f) { return compose_functors(g, f); };
  return {{"chi", {c.H, o(c.G, c.Q)}},      {"eta", {c.C, o(c.G, c.K)}},
          {"omega", {o(c.C, c.G), c.H}},    {"eps", {o(c.K, c.G), c.Q}},
          {"zeta0", {c.Q, idA}},            {"zeta1", {c.C, idX}},
          {"theta100", {c.C, o(c.C, c.C)}}, {"theta110", {c.K, o(c.K, c.C)}},
          {"theta101", {c.C, o(c.H, c.K)}}, {"theta111", {c.K, o(c.Q, c.K)}},
          {"theta000", {c.H, o(c.C, c.H)}}, {"theta010", {c.Q, o(c.K, c.H)}},
          {"theta001", {c.H, o(c.H, c.Q)}}, {"theta011", {c.Q, o(c.Q, c.Q)}}};
}

inline bool coalgebra_shape_ok(const ColaxDCoalgebra& c) {
  const CatPtr& A = c.catA();
  const CatPtr& X = c.catX();
  auto is = [](const Functor& f, const CatPtr& s, const CatPtr& t) {
    return f.source && f.target && same_category(f.source, s) && same_category(f.target, t);
  };
  return A && X && is(c.H, A, X) && is(c.Q, A, A) && is(c.C, X, X) && is(c.K, X, A);
}

// Structural part shared by the validators: functor shapes, boundaries, typing, naturality.
inline CheckReport check_coalgebra_structure(const ColaxDCoalgebra& c) {
  CheckReport r("coalgebra " + c.name);
  r.touch("shape", true);
  if (!coalgebra_shape_ok(c)) {
    r.fail("shape", "expected G,H: A -> X, Q: A -> A, C: X -> X, K: X -> A", true);
    return r;
  }
  for (const auto& [name, f] : c.functors())
    r.merge(validate_functor(*f), name + ".");
  const auto expected = expected_boundaries(c);
  const auto nats = c.transformations();
  for (std::size_t i = 0; i < nats.size(); ++i) {
    const auto& [name, nat] = nats[i];
    const auto& [s, t] = expected[i].second;
    r.site("boundary." + name, boundary_is(*nat, s, t), name + " has the wrong source or target",
           true);
    r.merge(validate_nat_trans(*nat), name + ".");
  }
  return r;
}

// The pointwise equation ledger. Labels are touched even when no site exists.
inline void check_ledger(const ColaxDCoalgebra& c, CheckReport& r) {
  for (const auto& l : ledger_labels()) r.touch(l);
  if (!coalgebra_shape_ok(c)) return;
  const auto& X = *c.catX();
  const auto& A = *c.catA();
  const auto &G = c.G, &H = c.H, &Q = c.Q, &C = c.C, &K = c.K;
  const auto &chi = c.chi, &eta = c.eta, &om = c.omega, &eps = c.eps;
  const auto &z0 = c.zeta0, &z1 = c.zeta1;
  const auto &t100 = c.theta100, &t110 = c.theta110, &t101 = c.theta101, &t111 = c.theta111;
  const auto &t000 = c.theta000, &t010 = c.theta010, &t001 = c.theta001, &t011 = c.theta011;

  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const std::string at = "at A=" + A.object(a);
    auto ex = [&](const std::string& l, int lhs, int rhs) { equate(r, l, X, at, lhs, rhs); };
    auto ea = [&](const std::string& l, int lhs, int rhs) { equate(r, l, A, at, lhs, rhs); };
    const int Ga = G.ob(a), Ha = H.ob(a), Qa = Q.ob(a);

    ex("colaxcoh", X.compose(chi.at(a), om.at(a)), X.compose(G.mor(eps.at(a)), eta.at(Ga)));
    ex("colaxcoh2", comp(X, {G.mor(z0.at(a)), chi.at(a), om.at(a)}), z1.at(Ga));
    ex("zetacomp", X.compose(G.mor(A.compose(z0.at(a), eps.at(a))), eta.at(Ga)), z1.at(Ga));

    ex("theta0eq1", X.compose(eta.at(Ha), t000.at(a)), X.compose(G.mor(t010.at(a)), chi.at(a)));
    ex("theta0eq2", X.compose(chi.at(Qa), t001.at(a)), X.compose(G.mor(t011.at(a)), chi.at(a)));
    ex("theta0eq3", comp(X, {om.at(Qa), C.mor(chi.at(a)), t000.at(a)}), t001.at(a));
    ea("theta0eq4", comp(A, {eps.at(Qa), K.mor(chi.at(a)), t010.at(a)}), t011.at(a));

    ex("thetaAcompeq1", X.compose(C.mor(om.at(a)), t100.at(Ga)), X.compose(t000.at(a), om.at(a)));
    ea("thetaAcompeq2", A.compose(K.mor(om.at(a)), t110.at(Ga)), A.compose(t010.at(a), eps.at(a)));
    ex("thetaAcompeq3", X.compose(H.mor(eps.at(a)), t101.at(Ga)), X.compose(t001.at(a), om.at(a)));
    ea("thetaAcompeq4", A.compose(Q.mor(eps.at(a)), t111.at(Ga)), A.compose(t011.at(a), eps.at(a)));

    ex("leftuniteqA1", X.compose(H.mor(z0.at(a)), t001.at(a)), X.identity(Ha));
    ea("leftuniteqA2", A.compose(Q.mor(z0.at(a)), t011.at(a)), A.identity(Qa));
    ex("rightuniteqA1", X.compose(z1.at(Ha), t000.at(a)), X.identity(Ha));
    ea("rightuniteqA2", A.compose(z0.at(Qa), t011.at(a)), A.identity(Qa));

    ex("thetaA000", X.compose(C.mor(t000.at(a)), t000.at(a)), X.compose(t100.at(Ha), t000.at(a)));
    ex("thetaA001", X.compose(C.mor(t001.at(a)), t000.at(a)), X.compose(t000.at(Qa), t001.at(a)));
    ex("thetaA010", X.compose(H.mor(t010.at(a)), t001.at(a)), X.compose(t101.at(Ha), t000.at(a)));
    ex("thetaA011", X.compose(H.mor(t011.at(a)), t001.at(a)), X.compose(t001.at(Qa), t001.at(a)));
    ea("thetaA100", A.compose(Q.mor(t010.at(a)), t011.at(a)), A.compose(t111.at(Ha), t010.at(a)));
    ea("thetaA101", A.compose(Q.mor(t011.at(a)), t011.at(a)), A.compose(t011.at(Qa), t011.at(a)));
    ea("thetaA110", A.compose(K.mor(t000.at(a)), t010.at(a)), A.compose(t110.at(Ha), t010.at(a)));
    ea("thetaA111", A.compose(K.mor(t001.at(a)), t010.at(a)), A.compose(t010.at(Qa), t011.at(a)));
  }

  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const std::string at = "at X=" + X.object(x);
    auto ex = [&](const std::string& l, int lhs, int rhs) { equate(r, l, X, at, lhs, rhs); };
    auto ea = [&](const std::string& l, int lhs, int rhs) { equate(r, l, A, at, lhs, rhs); };
    const int Cx = C.ob(x), Kx = K.ob(x);

    ex("theta1eq1", X.compose(eta.at(Cx), t100.at(x)), X.compose(G.mor(t110.at(x)), eta.at(x)));
    ex("theta1eq2", X.compose(chi.at(Kx), t101.at(x)), X.compose(G.mor(t111.at(x)), eta.at(x)));
    ex("theta1eq3", comp(X, {om.at(Kx), C.mor(eta.at(x)), t100.at(x)}), t101.at(x));
    ea("theta1eq4", comp(A, {eps.at(Kx), K.mor(eta.at(x)), t110.at(x)}), t111.at(x));

    ex("leftuniteqX1", X.compose(C.mor(z1.at(x)), t100.at(x)), X.identity(Cx));
    ea("leftuniteqX2", A.compose(K.mor(z1.at(x)), t110.at(x)), A.identity(Kx));
    ex("rightuniteqX1", X.compose(z1.at(Cx), t100.at(x)), X.identity(Cx));
    ea("rightuniteqX2", A.compose(z0.at(Kx), t111.at(x)), A.identity(Kx));

    ex("thetaX000", X.compose(C.mor(t100.at(x)), t100.at(x)), X.compose(t100.at(Cx), t100.at(x)));
    ex("thetaX001", X.compose(C.mor(t101.at(x)), t100.at(x)), X.compose(t000.at(Kx), t101.at(x)));
    ex("thetaX010", X.compose(H.mor(t110.at(x)), t101.at(x)), X.compose(t101.at(Cx), t100.at(x)));
    ex("thetaX011", X.compose(H.mor(t111.at(x)), t101.at(x)), X.compose(t001.at(Kx), t101.at(x)));
    ea("thetaX100", A.compose(Q.mor(t110.at(x)), t111.at(x)), A.compose(t111.at(Cx), t110.at(x)));
    ea("thetaX101", A.compose(Q.mor(t111.at(x)), t111.at(x)), A.compose(t011.at(Kx), t111.at(x)));
    ea("thetaX110", A.compose(K.mor(t100.at(x)), t110.at(x)), A.compose(t110.at(Cx), t110.at(x)));
    ea("thetaX111", A.compose(K.mor(t101.at(x)), t110.at(x)), A.compose(t010.at(Kx), t111.at(x)));
  }
}

inline CheckReport validate_coalgebra(const ColaxDCoalgebra& c) {
  CheckReport r = check_coalgebra_structure(c);
  check_ledger(c, r);
  return r;
}

// ---------------------------------------------------------------------------
// Classification

inline bool is_iso(const FinCategory& c, int m) {
  if (!c.valid_morphism(m)) return false;
  for (int n : c.hom(c.tgt(m), c.src(m)))
    if (c.compose(n, m) == c.identity(c.src(m)) && c.compose(m, n) == c.identity(c.tgt(m)))
      return true;
  return false;
}

inline bool all_identities(const NatTrans& a) {
  const auto& T = *a.src.target;
  for (int m : a.comp)
    if (!T.is_identity(m)) return false;
  return true;
}

inline bool all_isos(const NatTrans& a) {
  for (int m : a.comp)
    if (!is_iso(*a.src.target, m)) return false;
  return true;
}

struct Classification {
  bool normal = false;
  bool strict = false;
  bool pseudo = false;
  // Most specific of strict, normal, pseudo, colax.
  std::string verdict;
};

inline Classification classify(const ColaxDCoalgebra& c) {
  Classification k;
  const std::array<const NatTrans*, 8> thetas = {&c.theta100, &c.theta110, &c.theta101,
                                                 &c.theta111, &c.theta000, &c.theta010,
                                                 &c.theta001, &c.theta011};
  k.normal = all_identities(c.zeta0) && all_identities(c.zeta1);
  k.strict = k.normal;
  k.pseudo = all_isos(c.zeta0) && all_isos(c.zeta1);
  for (const NatTrans* t : thetas) {
    k.strict = k.strict && all_identities(*t);
    k.pseudo = k.pseudo && all_isos(*t);
  }
  k.verdict = k.strict ? "strict" : k.normal ? "normal" : k.pseudo ? "pseudo" : "colax";
  return k;
}

// ---------------------------------------------------------------------------
// Derived structure

struct DerivedComonads {
  Comonad onX;  // (C, θ100, ζ¹)
  Comonad onA;  // (Q, θ011, ζ⁰)
};

inline DerivedComonads derive_comonads(const ColaxDCoalgebra& c) {
  DerivedComonads d;
  d.onX = Comonad{"C", c.C, c.theta100, c.zeta1};
  d.onA = Comonad{"Q", c.Q, c.theta011, c.zeta0};
  return d;
}

inline CheckReport derive_coalgebras(const ColaxDCoalgebra& c) {
  CheckReport r("derived coalgebras of " + c.name);
  const auto d = derive_comonads(c);
  const auto& X = *c.catX();
  const auto& A = *c.catA();
  for (const char* l : {"K-Q-coalgebra", "H-C-coalgebra", "theta101-C-morphism",
                        "theta001-C-morphism", "theta110-Q-morphism", "theta010-Q-morphism"})
    r.touch(l);
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const std::string at = "at X=" + X.object(x);
    const int Cx = c.C.ob(x), Kx = c.K.ob(x);
    const auto k = check_coalgebra_over(d.onA, Kx, c.theta111.at(x));
    r.site("K-Q-coalgebra", k.ok(), at);
    // θ101_X: (CX, θ100_X) -> (HKX, θ000_{KX})
    r.site("theta101-C-morphism",
           is_coalgebra_morphism(d.onX, c.theta100.at(x), c.theta000.at(Kx), c.theta101.at(x)), at);
    // θ110_X: (KX, θ111_X) -> (KCX, θ111_{CX})
    r.site("theta110-Q-morphism",
           is_coalgebra_morphism(d.onA, c.theta111.at(x), c.theta111.at(Cx), c.theta110.at(x)), at);
  }
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const std::string at = "at A=" + A.object(a);
    const int Ha = c.H.ob(a), Qa = c.Q.ob(a);
    const auto h = check_coalgebra_over(d.onX, Ha, c.theta000.at(a));
    r.site("H-C-coalgebra", h.ok(), at);
    // θ001_A: (HA, θ000_A) -> (HQA, θ000_{QA})
    r.site("theta001-C-morphism",
           is_coalgebra_morphism(d.onX, c.theta000.at(a), c.theta000.at(Qa), c.theta001.at(a)), at);
    // θ010_A: (QA, θ011_A) -> (KHA, θ111_{HA})
    r.site("theta010-Q-morphism",
           is_coalgebra_morphism(d.onA, c.theta011.at(a), c.theta111.at(Ha), c.theta010.at(a)), at);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Morphisms and transformations of coalgebras

// (K1, κ, K0): G -> G' with 2-cell components β0 = (b0, c0) and β1 = (b1, c1).
struct CoalgebraMorphism {
  std::string name;
  ColaxDCoalgebra source;
  ColaxDCoalgebra target;
  Functor K0;      // A -> A'
  Functor K1;      // X -> X'
  NatTrans kappa;  // K1 G ⇒ G' K0
  NatTrans b0;     // K1 H ⇒ H' K0
  NatTrans c0;     // K0 Q ⇒ Q' K0
  NatTrans b1;     // K1 C ⇒ C' K1
  NatTrans c1;     // K0 K ⇒ K' K1

  ColaxCell cell() const {
    return ColaxCell{source.G, target.G, K0, K1, kappa};
  }
};

inline CoalgebraMorphism identity_morphism(const ColaxDCoalgebra& c) {
  CoalgebraMorphism m;
  m.name = "1_" + c.name;
  m.source = c;
  m.target = c;
  m.K0 = identity_functor(c.catA());
  m.K1 = identity_functor(c.catX());
  m.kappa = identity_nat(c.G, "1");
  m.b0 = identity_nat(c.H, "1");
  m.c0 = identity_nat(c.Q, "1");
  m.b1 = identity_nat(c.C, "1");
  m.c1 = identity_nat(c.K, "1");
  return m;
}

inline CheckReport check_coalgebra_morphism(const CoalgebraMorphism& m) {
  CheckReport r("coalgebra morphism " + m.name);
  const auto& s = m.source;
  const auto& t = m.target;
  static const std::vector<std::string> labels = {
      "comma-condition-A", "comma-condition-X", "exchange-H",          "exchange-Q",
      "colaxlaxmor1-A",    "colaxlaxmor1-X",    "colaxlaxmor2-X-100", "colaxlaxmor2-X-110",
      "colaxlaxmor2-X-101", "colaxlaxmor2-X-111", "colaxlaxmor2-A-000", "colaxlaxmor2-A-010",
      "colaxlaxmor2-A-001", "colaxlaxmor2-A-011"};
  r.touch("shape", true);
  for (const auto& l : labels) r.touch(l);
  if (!coalgebra_shape_ok(s) || !coalgebra_shape_ok(t) ||
      !same_category(m.K0.source, s.catA()) || !same_category(m.K0.target, t.catA()) ||
      !same_category(m.K1.source, s.catX()) || !same_category(m.K1.target, t.catX())) {
    r.fail("shape", "K0: A -> A' and K1: X -> X' required", true);
    return r;
  }
  r.merge(validate_functor(m.K0), "K0.");
  r.merge(validate_functor(m.K1), "K1.");
  auto o = [](const Functor& g, const Functor& f) { return compose_functors(g, f); };
  const std::vector<std::tuple<std::string, const NatTrans*, Functor, Functor>> bounds = {
      {"kappa", &m.kappa, o(m.K1, s.G), o(t.G, m.K0)},
      {"b0", &m.b0, o(m.K1, s.H), o(t.H, m.K0)},
      {"c0", &m.c0, o(m.K0, s.Q), o(t.Q, m.K0)},
      {"b1", &m.b1, o(m.K1, s.C), o(t.C, m.K1)},
      {"c1", &m.c1, o(m.K0, s.K), o(t.K, m.K1)}};
  for (const auto& [name, nat, src, tgt] : bounds) {
    r.site("boundary." + name, boundary_is(*nat, src, tgt), name + " has the wrong source or target",
           true);
    r.merge(validate_nat_trans(*nat), name + ".");
  }

  const auto& A = *s.catA();
  const auto& X = *s.catX();
  const auto& A2 = *t.catA();
  const auto& X2 = *t.catX();
  const auto &K0 = m.K0, &K1 = m.K1;
  const auto &ka = m.kappa, &b0 = m.b0, &c0 = m.c0, &b1 = m.b1, &c1 = m.c1;
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const std::string at = "at A=" + A.object(a);
    auto ey = [&](const std::string& l, int lhs, int rhs) { equate(r, l, X2, at, lhs, rhs); };
    auto eb = [&](const std::string& l, int lhs, int rhs) { equate(r, l, A2, at, lhs, rhs); };
    const int Ka = K0.ob(a), Ga = s.G.ob(a), Ha = s.H.ob(a), Qa = s.Q.ob(a);
    ey("comma-condition-A", comp(X2, {t.G.mor(c0.at(a)), ka.at(Qa), K1.mor(s.chi.at(a))}),
       X2.compose(t.chi.at(Ka), b0.at(a)));
    ey("exchange-H", X2.compose(b0.at(a), K1.mor(s.omega.at(a))),
       comp(X2, {t.omega.at(Ka), t.C.mor(ka.at(a)), b1.at(Ga)}));
    eb("exchange-Q", A2.compose(c0.at(a), K0.mor(s.eps.at(a))),
       comp(A2, {t.eps.at(Ka), t.K.mor(ka.at(a)), c1.at(Ga)}));
    eb("colaxlaxmor1-A", A2.compose(t.zeta0.at(Ka), c0.at(a)), K0.mor(s.zeta0.at(a)));
    ey("colaxlaxmor2-A-000", X2.compose(t.theta000.at(Ka), b0.at(a)),
       comp(X2, {t.C.mor(b0.at(a)), b1.at(Ha), K1.mor(s.theta000.at(a))}));
    eb("colaxlaxmor2-A-010", A2.compose(t.theta010.at(Ka), c0.at(a)),
       comp(A2, {t.K.mor(b0.at(a)), c1.at(Ha), K0.mor(s.theta010.at(a))}));
    ey("colaxlaxmor2-A-001", X2.compose(t.theta001.at(Ka), b0.at(a)),
       comp(X2, {t.H.mor(c0.at(a)), b0.at(Qa), K1.mor(s.theta001.at(a))}));
    eb("colaxlaxmor2-A-011", A2.compose(t.theta011.at(Ka), c0.at(a)),
       comp(A2, {t.Q.mor(c0.at(a)), c0.at(Qa), K0.mor(s.theta011.at(a))}));
  }
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const std::string at = "at X=" + X.object(x);
    auto ey = [&](const std::string& l, int lhs, int rhs) { equate(r, l, X2, at, lhs, rhs); };
    auto eb = [&](const std::string& l, int lhs, int rhs) { equate(r, l, A2, at, lhs, rhs); };
    const int Kx = s.K.ob(x), Cx = s.C.ob(x), K1x = K1.ob(x);
    ey("comma-condition-X", comp(X2, {t.G.mor(c1.at(x)), ka.at(Kx), K1.mor(s.eta.at(x))}),
       X2.compose(t.eta.at(K1x), b1.at(x)));
    ey("colaxlaxmor1-X", X2.compose(t.zeta1.at(K1x), b1.at(x)), K1.mor(s.zeta1.at(x)));
    ey("colaxlaxmor2-X-100", X2.compose(t.theta100.at(K1x), b1.at(x)),
       comp(X2, {t.C.mor(b1.at(x)), b1.at(Cx), K1.mor(s.theta100.at(x))}));
    eb("colaxlaxmor2-X-110", A2.compose(t.theta110.at(K1x), c1.at(x)),
       comp(A2, {t.K.mor(b1.at(x)), c1.at(Cx), K0.mor(s.theta110.at(x))}));
    ey("colaxlaxmor2-X-101", X2.compose(t.theta101.at(K1x), b1.at(x)),
       comp(X2, {t.H.mor(c1.at(x)), b0.at(Kx), K1.mor(s.theta101.at(x))}));
    eb("colaxlaxmor2-X-111", A2.compose(t.theta111.at(K1x), c1.at(x)),
       comp(A2, {t.Q.mor(c1.at(x)), c0.at(Kx), K0.mor(s.theta111.at(x))}));
  }
  return r;
}

// τ = (τ0: K0 ⇒ L0, τ1: K1 ⇒ L1) between parallel coalgebra morphisms.
struct CoalgebraTransformation {
  std::string name;
  CoalgebraMorphism source;
  CoalgebraMorphism target;
  SquareTwoCell tau;  // top τ0, bottom τ1
};

inline CoalgebraTransformation identity_transformation(const CoalgebraMorphism& m) {
  CoalgebraTransformation t;
  t.name = "1_" + m.name;
  t.source = m;
  t.target = m;
  t.tau.source = m.cell();
  t.tau.target = m.cell();
  t.tau.top = identity_nat(m.K0, "1");
  t.tau.bottom = identity_nat(m.K1, "1");
  return t;
}

inline CheckReport check_coalgebra_transformation(const CoalgebraTransformation& t) {
  CheckReport r("coalgebra transformation " + t.name);
  for (const char* l : {"transformation-X-C", "transformation-X-K", "transformation-A-H",
                        "transformation-A-Q"})
    r.touch(l);
  r.merge(check_two_cell(t.tau), "two-cell.");
  const auto& m = t.source;
  const auto& n = t.target;
  r.site("cells", cells_parallel(t.tau.source, m.cell()) && cells_parallel(t.tau.target, n.cell()) &&
                      functor_equal(t.tau.source.top, m.K0) && functor_equal(t.tau.source.bottom, m.K1) &&
                      functor_equal(t.tau.target.top, n.K0) && functor_equal(t.tau.target.bottom, n.K1),
         "2-cell does not sit between the two morphisms", true);
  if (!r.ok()) return r;
  const auto& s = m.source;
  const auto& tg = m.target;
  const auto& A = *s.catA();
  const auto& X = *s.catX();
  const auto& A2 = *tg.catA();
  const auto& X2 = *tg.catX();
  const auto& t0 = t.tau.top;
  const auto& t1 = t.tau.bottom;
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const std::string at = "at X=" + X.object(x);
    equate(r, "transformation-X-C", X2, at, X2.compose(tg.C.mor(t1.at(x)), m.b1.at(x)),
           X2.compose(n.b1.at(x), t1.at(s.C.ob(x))));
    equate(r, "transformation-X-K", A2, at, A2.compose(tg.K.mor(t1.at(x)), m.c1.at(x)),
           A2.compose(n.c1.at(x), t0.at(s.K.ob(x))));
  }
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const std::string at = "at A=" + A.object(a);
    equate(r, "transformation-A-H", X2, at, X2.compose(tg.H.mor(t0.at(a)), m.b0.at(a)),
           X2.compose(n.b0.at(a), t1.at(s.H.ob(a))));
    equate(r, "transformation-A-Q", A2, at, A2.compose(tg.Q.mor(t0.at(a)), m.c0.at(a)),
           A2.compose(n.c0.at(a), t0.at(s.Q.ob(a))));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Derived cubes

// ex[j][k]: v0jk -> v1jk, ey[i][k]: vi0k -> vi1k, ez[i][j]: vij0 -> vij1.
struct Cube {
  int ex[2][2];
  int ey[2][2];
  int ez[2][2];
};

// All six paths v000 -> v111 agree.
inline bool cube_commutes(const FinCategory& c, const Cube& q, std::string* witness = nullptr) {
  const int paths[6] = {
      comp(c, {q.ez[1][1], q.ey[1][0], q.ex[0][0]}), comp(c, {q.ey[1][1], q.ez[1][0], q.ex[0][0]}),
      comp(c, {q.ez[1][1], q.ex[1][0], q.ey[0][0]}), comp(c, {q.ex[1][1], q.ez[0][1], q.ey[0][0]}),
      comp(c, {q.ey[1][1], q.ex[0][1], q.ez[0][0]}), comp(c, {q.ex[1][1], q.ey[0][1], q.ez[0][0]})};
  static const char* names[6] = {"xyz", "xzy", "yxz", "yzx", "zxy", "zyx"};
  for (int i = 0; i < 6; ++i)
    if (paths[i] == kNone || paths[i] != paths[0]) {
      if (witness) *witness = std::string("path ") + names[i] + " gives " + show(c, paths[i]) +
                              ", path xyz gives " + show(c, paths[0]);
      return false;
    }
  return true;
}

inline CheckReport verify_derived_cubes(const ColaxDCoalgebra& c) {
  CheckReport r("derived cubes of " + c.name);
  for (int i = 1; i <= 6; ++i) {
    r.touch("Xprop-cube" + std::to_string(i));
    r.touch("Aprop-cube" + std::to_string(i));
  }
  if (!coalgebra_shape_ok(c)) return r;
  const auto& X = *c.catX();
  const auto& G = c.G;
  const auto& H = c.H;
  const auto& C = c.C;
  const auto& K = c.K;
  const auto& Q = c.Q;
  auto GQ = [&](int m) { return G.mor(Q.mor(m)); };
  auto GK = [&](int m) { return G.mor(K.mor(m)); };
  auto HK = [&](int m) { return H.mor(K.mor(m)); };
  auto GQK = [&](int m) { return G.mor(Q.mor(K.mor(m))); };
  const auto &rho = c.eta, &chi = c.chi, &om = c.omega, &eps = c.eps;
  const auto &t100 = c.theta100, &t110 = c.theta110, &t101 = c.theta101, &t111 = c.theta111;
  const auto &t000 = c.theta000, &t010 = c.theta010, &t001 = c.theta001, &t011 = c.theta011;

  auto record = [&](const std::string& label, const std::string& at, const Cube& q) {
    std::string w;
    const bool ok = cube_commutes(X, q, &w);
    r.site(label, ok, at + ": " + w);
  };

  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const std::string at = "at X=" + X.object(x);
    const int Cx = C.ob(x), Kx = K.ob(x), GKx = G.ob(Kx), QKx = Q.ob(Kx), HKx = H.ob(Kx);
    const int KCx = K.ob(Cx), KGKx = K.ob(GKx);
    record("Xprop-cube1", at,
           Cube{{{t100.at(x), G.mor(t110.at(x))}, {H.mor(t110.at(x)), GQ(t110.at(x))}},
                {{t101.at(x), G.mor(t111.at(x))}, {t101.at(Cx), G.mor(t111.at(Cx))}},
                {{rho.at(x), chi.at(Kx)}, {rho.at(Cx), chi.at(KCx)}}});
    record("Xprop-cube2", at,
           Cube{{{C.mor(rho.at(x)), GK(rho.at(x))}, {HK(rho.at(x)), GQK(rho.at(x))}},
                {{t101.at(Cx), G.mor(t111.at(Cx))}, {t101.at(GKx), G.mor(t111.at(GKx))}},
                {{rho.at(Cx), chi.at(KCx)}, {rho.at(GKx), chi.at(KGKx)}}});
    record("Xprop-cube3", at,
           Cube{{{om.at(Kx), G.mor(eps.at(Kx))}, {H.mor(eps.at(Kx)), GQ(eps.at(Kx))}},
                {{t101.at(GKx), G.mor(t111.at(GKx))}, {t001.at(Kx), G.mor(t011.at(Kx))}},
                {{rho.at(GKx), chi.at(KGKx)}, {chi.at(Kx), chi.at(QKx)}}});
    record("Xprop-cube4", at,
           Cube{{{t101.at(x), G.mor(t111.at(x))}, {C.mor(t101.at(x)), GK(t101.at(x))}},
                {{t100.at(x), G.mor(t110.at(x))}, {t000.at(Kx), G.mor(t010.at(Kx))}},
                {{rho.at(x), rho.at(Cx)}, {chi.at(Kx), rho.at(HKx)}}});
    record("Xprop-cube5", at,
           Cube{{{t101.at(x), G.mor(t111.at(x))}, {H.mor(t111.at(x)), GQ(t111.at(x))}},
                {{t101.at(x), G.mor(t111.at(x))}, {t001.at(Kx), G.mor(t011.at(Kx))}},
                {{rho.at(x), chi.at(Kx)}, {chi.at(Kx), chi.at(QKx)}}});
    const int row_front = comp(X, {om.at(Kx), C.mor(rho.at(x)), t100.at(x)});
    const int row_back = comp(X, {om.at(QKx), C.mor(chi.at(Kx)), t000.at(Kx)});
    const int row_front_low = comp(X, {G.mor(eps.at(Kx)), GK(rho.at(x)), G.mor(t110.at(x))});
    const int row_back_low = comp(X, {G.mor(eps.at(QKx)), GK(chi.at(Kx)), G.mor(t010.at(Kx))});
    record("Xprop-cube6", at,
           Cube{{{t101.at(x), G.mor(t111.at(x))}, {H.mor(t111.at(x)), GQ(t111.at(x))}},
                {{row_front, row_front_low}, {row_back, row_back_low}},
                {{rho.at(x), chi.at(Kx)}, {chi.at(Kx), chi.at(QKx)}}});
  }
  const auto& A = *c.catA();
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const std::string at = "at A=" + A.object(a);
    const int Ha = H.ob(a), Qa = Q.ob(a), GQa = G.ob(Qa), QQa = Q.ob(Qa), HQa = H.ob(Qa);
    const int KHa = K.ob(Ha), KGQa = K.ob(GQa);
    record("Aprop-cube1", at,
           Cube{{{t000.at(a), G.mor(t010.at(a))}, {H.mor(t010.at(a)), GQ(t010.at(a))}},
                {{t001.at(a), G.mor(t011.at(a))}, {t101.at(Ha), G.mor(t111.at(Ha))}},
                {{chi.at(a), chi.at(Qa)}, {rho.at(Ha), chi.at(KHa)}}});
    record("Aprop-cube2", at,
           Cube{{{C.mor(chi.at(a)), GK(chi.at(a))}, {HK(chi.at(a)), GQK(chi.at(a))}},
                {{t101.at(Ha), G.mor(t111.at(Ha))}, {t101.at(GQa), G.mor(t111.at(GQa))}},
                {{rho.at(Ha), chi.at(KHa)}, {rho.at(GQa), chi.at(KGQa)}}});
    record("Aprop-cube3", at,
           Cube{{{om.at(Qa), G.mor(eps.at(Qa))}, {H.mor(eps.at(Qa)), GQ(eps.at(Qa))}},
                {{t101.at(GQa), G.mor(t111.at(GQa))}, {t001.at(Qa), G.mor(t011.at(Qa))}},
                {{rho.at(GQa), chi.at(KGQa)}, {chi.at(Qa), chi.at(QQa)}}});
    record("Aprop-cube4", at,
           Cube{{{t001.at(a), G.mor(t011.at(a))}, {C.mor(t001.at(a)), GK(t001.at(a))}},
                {{t000.at(a), G.mor(t010.at(a))}, {t000.at(Qa), G.mor(t010.at(Qa))}},
                {{chi.at(a), rho.at(Ha)}, {chi.at(Qa), rho.at(HQa)}}});
    record("Aprop-cube5", at,
           Cube{{{t001.at(a), G.mor(t011.at(a))}, {H.mor(t011.at(a)), GQ(t011.at(a))}},
                {{t001.at(a), G.mor(t011.at(a))}, {t001.at(Qa), G.mor(t011.at(Qa))}},
                {{chi.at(a), chi.at(Qa)}, {chi.at(Qa), chi.at(QQa)}}});
    const int row_front = comp(X, {om.at(Qa), C.mor(chi.at(a)), t000.at(a)});
    const int row_back = comp(X, {om.at(QQa), C.mor(chi.at(Qa)), t000.at(Qa)});
    const int row_front_low = comp(X, {G.mor(eps.at(Qa)), GK(chi.at(a)), G.mor(t010.at(a))});
    const int row_back_low = comp(X, {G.mor(eps.at(QQa)), GK(chi.at(Qa)), G.mor(t010.at(Qa))});
    record("Aprop-cube6", at,
           Cube{{{t001.at(a), G.mor(t011.at(a))}, {H.mor(t011.at(a)), GQ(t011.at(a))}},
                {{row_front, row_front_low}, {row_back, row_back_low}},
                {{chi.at(a), chi.at(Qa)}, {chi.at(Qa), chi.at(QQa)}}});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Assembled cross-check: builds F_G = (F1, φ, F0), D(F_G) and θ inside the
// comma categories and re-checks the three coalgebra axioms there.

inline CheckReport check_assembled(const ColaxDCoalgebra& c, std::size_t budget = default_budget()) {
  CheckReport r("assembled structure of " + c.name);
  for (const char* l : {"assembled-F0", "assembled-F1", "assembled-phi", "assembled-theta1",
                        "assembled-theta0", "assembled-theta-exchange", "assembled-leftidentity",
                        "assembled-rightidentity", "assembled-coassociativity"})
    r.touch(l);
  if (!coalgebra_shape_ok(c)) {
    r.fail("assembled-F0", "coalgebra has the wrong shape", true);
    return r;
  }
  const auto& X = *c.catX();
  const auto& A = *c.catA();
  const CommaBundle b = comma(c.G, budget);
  const CommaBundle sq = arrow_category(b.total, budget);
  const CommaBundle cube = arrow_category(sq.total, budget);
  const auto& T = *b.total;

  const Functor F0 = factor_through_comma(c.H, c.chi, c.Q, b);
  const Functor F1 = factor_through_comma(c.C, c.eta, c.K, b);
  r.site("assembled-F0", validate_functor(F0).ok(), "F0 = (H, chi, Q) is not a functor");
  r.site("assembled-F1", validate_functor(F1).ok(), "F1 = (C, eta, K) is not a functor");

  ColaxCell FG;
  FG.domain = c.G;
  FG.codomain = identity_functor(b.total);
  FG.top = F0;
  FG.bottom = F1;
  FG.fill.name = "phi";
  FG.fill.src = compose_functors(F1, c.G);
  FG.fill.tgt = compose_functors(FG.codomain, F0);
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a)
    FG.fill.comp.push_back(
        b.morphism_of(F1.ob(c.G.ob(a)), F0.ob(a), c.omega.at(a), c.eps.at(a)));
  r.site("assembled-phi", validate_cell(FG).ok(), "phi = (omega, eps) is not a transformation");
  if (!r.ok()) return r;

  const Functor xi = comultiplication_xi(b, sq);
  const Functor DFG = d_on_onecell(FG, b, sq);

  NatTrans th1{"theta1", compose_functors(xi, F1), compose_functors(DFG, F1), {}};
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const int Cx = c.C.ob(x), Kx = c.K.ob(x);
    const int s = b.morphism_of(F1.ob(x), F1.ob(Cx), c.theta100.at(x), c.theta110.at(x));
    const int t = b.morphism_of(F1.ob(x), F0.ob(Kx), c.theta101.at(x), c.theta111.at(x));
    th1.comp.push_back(sq.morphism_of(th1.src.ob(x), th1.tgt.ob(x), s, t));
  }
  NatTrans th0{"theta0", compose_functors(xi, F0), compose_functors(DFG, F0), {}};
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const int Ha = c.H.ob(a), Qa = c.Q.ob(a);
    const int s = b.morphism_of(F0.ob(a), F1.ob(Ha), c.theta000.at(a), c.theta010.at(a));
    const int t = b.morphism_of(F0.ob(a), F0.ob(Qa), c.theta001.at(a), c.theta011.at(a));
    th0.comp.push_back(sq.morphism_of(th0.src.ob(a), th0.tgt.ob(a), s, t));
  }
  {
    const auto v1 = validate_nat_trans(th1);
    r.site("assembled-theta1", v1.ok(), "theta1 fails typing or naturality in (X,G)^2");
    const auto v0 = validate_nat_trans(th0);
    r.site("assembled-theta0", v0.ok(), "theta0 fails typing or naturality in (X,G)^2");
  }
  if (!r.ok()) return r;

  // θ as a 2-cell ξ∘F_G ⇒ D(F_G)∘F_G between cells G -> Id_(X,G)².
  auto whiskered = [&](const Functor& F) {
    ColaxCell k;
    k.domain = c.G;
    k.codomain = identity_functor(sq.total);
    k.top = compose_functors(F, F0);
    k.bottom = compose_functors(F, F1);
    k.fill = whisker(Side::Left, F, FG.fill);
    k.fill.tgt = compose_functors(k.codomain, k.top);
    return k;
  };
  SquareTwoCell theta;
  theta.source = whiskered(xi);
  theta.target = whiskered(DFG);
  theta.top = th0;
  theta.bottom = th1;
  {
    const auto e = check_two_cell(theta);
    const Check* ex = e.find("exchange");
    r.site("assembled-theta-exchange", e.ok() && ex && ex->pass,
           e.ok() ? "" : e.failed_labels().front());
  }

  // Left identity: F_G ζ · δ_{D(G)} θ = 1.
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const int s = sq.d1.mor(th1.at(x));
    const int z = b.morphism_of(F1.ob(c.C.ob(x)), F1.ob(x), c.C.mor(c.zeta1.at(x)),
                                c.K.mor(c.zeta1.at(x)));
    equate(r, "assembled-leftidentity", T, "at X=" + X.object(x), T.compose(z, s),
           T.identity(F1.ob(x)));
  }
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const int t = sq.d0.mor(th0.at(a));
    const int z = b.morphism_of(F0.ob(c.Q.ob(a)), F0.ob(a), c.H.mor(c.zeta0.at(a)),
                                c.Q.mor(c.zeta0.at(a)));
    equate(r, "assembled-leftidentity", T, "at A=" + A.object(a), T.compose(z, t),
           T.identity(F0.ob(a)));
  }

  // Right identity: ζ after the diagonal D(δ)θ.
  const Functor Dd = multiplication_Ddelta(b, sq);
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) {
    const auto [h, n] = b.mors[Dd.mor(th1.at(x))];
    const int Cx = c.C.ob(x), Kx = c.K.ob(x);
    r.site("assembled-rightidentity",
           X.compose(c.zeta1.at(Cx), h) == X.identity(Cx) &&
               A.compose(c.zeta0.at(Kx), n) == A.identity(Kx),
           "at X=" + X.object(x));
  }
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const auto [h, n] = b.mors[Dd.mor(th0.at(a))];
    const int Ha = c.H.ob(a), Qa = c.Q.ob(a);
    r.site("assembled-rightidentity",
           X.compose(c.zeta1.at(Ha), h) == X.identity(Ha) &&
               A.compose(c.zeta0.at(Qa), n) == A.identity(Qa),
           "at A=" + A.object(a));
  }

  // Coassociativity: D²(F_G)θ · ξ_{D(G)}θ = D(θ)F_G · D(ξ)θ in (X,G)³.
  auto id_cell = [](const Functor& f, const CatPtr& from, const CatPtr& to) {
    ColaxCell k;
    k.domain = identity_functor(from);
    k.codomain = identity_functor(to);
    k.top = f;
    k.bottom = f;
    k.fill = identity_nat(f, "1");
    k.fill.src = compose_functors(k.bottom, k.domain);
    k.fill.tgt = compose_functors(k.codomain, k.top);
    return k;
  };
  const Functor xi2 = comultiplication_xi(sq, cube);
  const Functor D2FG = d_on_onecell(id_cell(DFG, b.total, sq.total), sq, cube);
  const Functor Dxi = d_on_onecell(id_cell(xi, b.total, sq.total), sq, cube);
  SquareTwoCell th_cells;
  th_cells.source = compose_colax_cells(id_cell(xi, b.total, sq.total), FG);
  th_cells.target = compose_colax_cells(id_cell(DFG, b.total, sq.total), FG);
  th_cells.top = th0;
  th_cells.bottom = th1;
  const NatTrans Dtheta = d_on_twocell_nat(th_cells, b, cube);
  const auto& Cu = *cube.total;
  auto coassoc = [&](const std::string& at, int m, int obj) {
    const int lhs = Cu.compose(D2FG.mor(m), xi2.mor(m));
    const int rhs = Cu.compose(Dtheta.at(obj), Dxi.mor(m));
    equate(r, "assembled-coassociativity", Cu, at, lhs, rhs);
  };
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x)
    coassoc("at X=" + X.object(x), th1.at(x), F1.ob(x));
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a)
    coassoc("at A=" + A.object(a), th0.at(a), F0.ob(a));
  return r;
}

}  // namespace commakit
