#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalgebra.hpp"
#include "comonad.hpp"
#include "enumerate.hpp"

namespace commakit {

// Strictly normal colax coalgebra: C = Id, Q = Id and ζ = 1, so the structure
// reduces to K ⊣ G with unit ϱ, counit ε, an isomorphism ω: G ≅ H with inverse χ,
// and the two remaining θ families.
struct NormalColaxCoalgebra {
  std::string name;
  Functor G;          // A -> X
  Functor H;          // A -> X
  Functor K;          // X -> A
  NatTrans rho;       // Id_X ⇒ GK
  NatTrans chi;       // H ⇒ G
  NatTrans omega;     // G ⇒ H
  NatTrans eps;       // KG ⇒ Id_A
  NatTrans theta101;  // Id_X ⇒ HK
  NatTrans theta010;  // Id_A ⇒ KH

  const CatPtr& catX() const { return G.target; }
  const CatPtr& catA() const { return G.source; }
};

inline const std::vector<std::string>& normal_labels() {
  static const std::vector<std::string> labels = {
      "normalcoh",        "normalcoh2",         "normalthetaeq2A",    "normalthetaeq3X",
      "normalthetaeq1X",  "normalthetaeq2X",    "normalthetaeq1A",    "normalthetaeq4A",
      "normalthetacompeq1", "normalthetacompeq2", "normalthetaX111",    "normalthetaA010"};
  return labels;
}

// The general coalgebra with C = Q = Id and every other θ an identity.
inline ColaxDCoalgebra embed_normal(const NormalColaxCoalgebra& n) {
  ColaxDCoalgebra c;
  c.name = n.name;
  c.G = n.G;
  c.H = n.H;
  c.K = n.K;
  c.C = identity_functor(n.catX());
  c.Q = identity_functor(n.catA());
  c.chi = n.chi;
  c.chi.tgt = compose_functors(c.G, c.Q);
  c.eta = n.rho;
  c.eta.src = c.C;
  c.omega = n.omega;
  c.omega.src = compose_functors(c.C, c.G);
  c.eps = n.eps;
  c.eps.tgt = c.Q;
  c.zeta0 = identity_nat(c.Q, "zeta0");
  c.zeta1 = identity_nat(c.C, "zeta1");
  auto ident = [](const std::string& name, const Functor& f, const Functor& src,
                  const Functor& tgt) {
    NatTrans a = identity_nat(f, name);
    a.src = src;
    a.tgt = tgt;
    return a;
  };
  auto o = [](const Functor& g, const Functor& f) { return compose_functors(g, f); };
  c.theta100 = ident("theta100", c.C, c.C, o(c.C, c.C));
  c.theta110 = ident("theta110", c.K, c.K, o(c.K, c.C));
  c.theta111 = ident("theta111", c.K, c.K, o(c.Q, c.K));
  c.theta000 = ident("theta000", c.H, c.H, o(c.C, c.H));
  c.theta001 = ident("theta001", c.H, c.H, o(c.H, c.Q));
  c.theta011 = ident("theta011", c.Q, c.Q, o(c.Q, c.Q));
  c.theta101 = n.theta101;
  c.theta101.src = c.C;
  c.theta010 = n.theta010;
  c.theta010.src = c.Q;
  return c;
}

inline CheckReport validate_normal(const NormalColaxCoalgebra& n) {
  CheckReport r("normal coalgebra " + n.name);
  r.touch("shape", true);
  for (const auto& l : normal_labels()) r.touch(l);
  const CatPtr& X = n.catX();
  const CatPtr& A = n.catA();
  auto is = [](const Functor& f, const CatPtr& s, const CatPtr& t) {
    return f.source && f.target && same_category(f.source, s) && same_category(f.target, t);
  };
  if (!X || !A || !is(n.H, A, X) || !is(n.K, X, A)) {
    r.fail("shape", "expected G,H: A -> X and K: X -> A", true);
    return r;
  }
  r.merge(validate_functor(n.G), "G.");
  r.merge(validate_functor(n.H), "H.");
  r.merge(validate_functor(n.K), "K.");
  auto o = [](const Functor& g, const Functor& f) { return compose_functors(g, f); };
  const Functor idX = identity_functor(X);
  const Functor idA = identity_functor(A);
  const std::vector<std::tuple<std::string, const NatTrans*, Functor, Functor>> bounds = {
      {"rho", &n.rho, idX, o(n.G, n.K)},      {"chi", &n.chi, n.H, n.G},
      {"omega", &n.omega, n.G, n.H},          {"eps", &n.eps, o(n.K, n.G), idA},
      {"theta101", &n.theta101, idX, o(n.H, n.K)}, {"theta010", &n.theta010, idA, o(n.K, n.H)}};
  for (const auto& [name, nat, s, t] : bounds) {
    r.site("boundary." + name, boundary_is(*nat, s, t), name + " has the wrong source or target",
           true);
    r.merge(validate_nat_trans(*nat), name + ".");
  }
  if (!r.ok()) return r;

  const auto& x = *X;
  const auto& a = *A;
  const auto &G = n.G, &H = n.H, &K = n.K;
  for (int i = 0; i < static_cast<int>(a.num_objects()); ++i) {
    const std::string at = "at A=" + a.object(i);
    auto ex = [&](const char* l, int lhs, int rhs) { equate(r, l, x, at, lhs, rhs); };
    auto ea = [&](const char* l, int lhs, int rhs) { equate(r, l, a, at, lhs, rhs); };
    const int Ga = G.ob(i), Ha = H.ob(i);
    ex("normalcoh", x.compose(G.mor(n.eps.at(i)), n.rho.at(Ga)), x.identity(Ga));
    ex("normalcoh2", x.compose(n.chi.at(i), n.omega.at(i)), x.identity(Ga));
    ex("normalthetaeq2A", x.compose(n.omega.at(i), n.chi.at(i)), x.identity(Ha));
    ex("normalthetaeq1A", n.rho.at(Ha), x.compose(G.mor(n.theta010.at(i)), n.chi.at(i)));
    ea("normalthetaeq4A", comp(a, {n.eps.at(i), K.mor(n.chi.at(i)), n.theta010.at(i)}),
       a.identity(i));
    ea("normalthetacompeq1", K.mor(n.omega.at(i)), a.compose(n.theta010.at(i), n.eps.at(i)));
    ex("normalthetacompeq2", x.compose(H.mor(n.eps.at(i)), n.theta101.at(Ga)), n.omega.at(i));
    ex("normalthetaA010", H.mor(n.theta010.at(i)), n.theta101.at(Ha));
  }
  for (int i = 0; i < static_cast<int>(x.num_objects()); ++i) {
    const std::string at = "at X=" + x.object(i);
    auto ex = [&](const char* l, int lhs, int rhs) { equate(r, l, x, at, lhs, rhs); };
    auto ea = [&](const char* l, int lhs, int rhs) { equate(r, l, a, at, lhs, rhs); };
    const int Kx = K.ob(i);
    ea("normalthetaeq3X", a.compose(n.eps.at(Kx), K.mor(n.rho.at(i))), a.identity(Kx));
    ex("normalthetaeq1X", x.compose(n.chi.at(Kx), n.theta101.at(i)), n.rho.at(i));
    ex("normalthetaeq2X", n.theta101.at(i), x.compose(n.omega.at(Kx), n.rho.at(i)));
    ea("normalthetaX111", K.mor(n.theta101.at(i)), n.theta010.at(Kx));
  }
  r.merge(validate_coalgebra(embed_normal(n)), "embedded.");
  return r;
}

// The inverse of m, or kNone.
inline int inverse_of(const FinCategory& c, int m) {
  if (!c.valid_morphism(m)) return kNone;
  for (int n : c.hom(c.tgt(m), c.src(m)))
    if (c.compose(n, m) == c.identity(c.src(m)) && c.compose(m, n) == c.identity(c.tgt(m)))
      return n;
  return kNone;
}

// Normal data from K ⊣ G and an isomorphism ω: G ≅ H with inverse χ.
// θ101_X = ω_{KX} ∘ ϱ_X and θ010_A = K(ω_A) ∘ ε_A⁻¹; the counit must be invertible.
inline NormalColaxCoalgebra from_adjunction(const Adjunction& adj, const Functor& H,
                                            const NatTrans& omega, const NatTrans& chi) {
  const auto v = check_adjunction(adj);
  if (!v.ok()) throw InputError("not an adjunction: " + v.failed_labels().front());
  const Functor& K = adj.left;
  const Functor& G = adj.right;
  const auto& X = *G.target;
  const auto& A = *G.source;
  if (!boundary_is(omega, G, H) || !boundary_is(chi, H, G) ||
      !validate_nat_trans(omega).ok() || !validate_nat_trans(chi).ok())
    throw InputError("omega must be G => H and chi H => G");
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a)
    if (X.compose(chi.at(a), omega.at(a)) != X.identity(G.ob(a)) ||
        X.compose(omega.at(a), chi.at(a)) != X.identity(H.ob(a)))
      throw InputError("omega and chi are not inverse at " + A.object(a));

  NormalColaxCoalgebra n;
  n.name = adj.name;
  n.G = G;
  n.H = H;
  n.K = K;
  n.rho = adj.unit;
  n.rho.name = "rho";
  n.eps = adj.counit;
  n.eps.name = "eps";
  n.omega = omega;
  n.chi = chi;
  n.theta101 = NatTrans{"theta101", identity_functor(G.target), compose_functors(H, K), {}};
  for (int x = 0; x < static_cast<int>(X.num_objects()); ++x)
    n.theta101.comp.push_back(X.compose(omega.at(K.ob(x)), adj.unit.at(x)));
  n.theta010 = NatTrans{"theta010", identity_functor(G.source), compose_functors(K, H), {}};
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a) {
    const int inv = inverse_of(A, adj.counit.at(a));
    if (inv == kNone)
      throw InputError("counit is not invertible at " + A.object(a) +
                       "; no strictly normal structure exists");
    n.theta010.comp.push_back(A.compose(K.mor(omega.at(a)), inv));
  }
  return n;
}

inline NormalColaxCoalgebra from_adjunction(const Adjunction& adj) {
  const Functor& G = adj.right;
  return from_adjunction(adj, G, identity_nat(G, "omega"), identity_nat(G, "chi"));
}

inline Adjunction to_adjunction(const NormalColaxCoalgebra& n) {
  Adjunction adj;
  adj.name = n.K.name + "-|" + n.G.name;
  adj.left = n.K;
  adj.right = n.G;
  adj.unit = n.rho;
  adj.unit.name = "unit";
  adj.counit = n.eps;
  adj.counit.name = "counit";
  return adj;
}

// ---------------------------------------------------------------------------
// Adjunction search

// Limits for the exhaustive searches: category sizes and candidate functors.
struct SearchBudget {
  std::size_t max_objects = 5;
  std::size_t max_morphisms = 20;
  std::size_t max_candidates = 1000000;
};

inline void require_within(const FinCategory& c, const SearchBudget& b) {
  if (c.num_objects() > b.max_objects || c.num_morphisms() > b.max_morphisms)
    throw BudgetExceeded(c.name + " has " + std::to_string(c.num_objects()) + " objects and " +
                         std::to_string(c.num_morphisms()) + " morphisms (limit " +
                         std::to_string(b.max_objects) + "/" + std::to_string(b.max_morphisms) +
                         ")");
}

// First unit/counit pair making L ⊣ R an adjunction, in enumeration order.
inline std::optional<Adjunction> find_adjunction(const Functor& L, const Functor& R,
                                                 std::size_t limit = 1000000) {
  if (!same_category(L.source, R.target) || !same_category(L.target, R.source)) return {};
  const Functor RL = compose_functors(R, L);
  const Functor LR = compose_functors(L, R);
  const auto units = enumerate_nats(identity_functor(L.source), RL, limit);
  if (units.empty()) return {};
  const auto counits = enumerate_nats(LR, identity_functor(L.target), limit);
  for (const auto& u : units)
    for (const auto& e : counits) {
      Adjunction adj{L.name + "-|" + R.name, L, R, u, e};
      adj.unit.name = "unit";
      adj.counit.name = "counit";
      if (check_adjunction(adj).ok()) return adj;
    }
  return {};
}

// Searches all K: X -> A for a left adjoint of G: A -> X.
inline std::optional<Adjunction> brute_force_left_adjoint(const Functor& G,
                                                          const SearchBudget& budget = {}) {
  require_within(*G.source, budget);
  require_within(*G.target, budget);
  std::optional<Adjunction> found;
  for_each_functor(G.target, G.source, [&](const Functor& K) {
    found = find_adjunction(K, G, budget.max_candidates);
    return !found;
  }, budget.max_candidates, "K");
  return found;
}

// G ⊣ K and K ⊣ G. With `iso`: H ⇒ G a natural isomorphism, adjLR may have
// left adjoint H instead of G, which makes the pair ambidextrous.
inline CheckReport check_frobenius(const Functor& G, const Functor& K,
                                   const std::optional<Adjunction>& adjLR,
                                   const std::optional<Adjunction>& adjRL,
                                   const std::optional<NatTrans>& iso = std::nullopt) {
  CheckReport r("Frobenius pair " + G.name + ", " + K.name);
  r.touch("left-adjunction");
  r.touch("right-adjunction");
  r.touch("same-functor");
  if (!adjLR) r.fail("left-adjunction", "no adjunction with " + K.name + " on the right");
  else r.merge(check_adjunction(*adjLR), "left-adjunction.");
  if (!adjRL) r.fail("right-adjunction", "no adjunction with " + K.name + " on the left");
  else r.merge(check_adjunction(*adjRL), "right-adjunction.");
  if (adjLR && !functor_equal(adjLR->right, K))
    r.fail("left-adjunction", "right adjoint is not " + K.name, true);
  if (adjRL && (!functor_equal(adjRL->left, K) || !functor_equal(adjRL->right, G)))
    r.fail("right-adjunction", "expected " + K.name + " -| " + G.name, true);
  if (!r.ok()) {
    r.verdict = "not Frobenius";
    return r;
  }
  if (functor_equal(adjLR->left, G)) {
    r.site("same-functor", true);
    r.verdict = "Frobenius";
    return r;
  }
  const bool ambi = iso && boundary_is(*iso, adjLR->left, G) && validate_nat_trans(*iso).ok() &&
                    all_isos(*iso);
  r.site("same-functor", ambi, "left adjoint of " + K.name + " differs from " + G.name);
  r.verdict = ambi ? "ambidextrous (" + adjLR->left.name + " -| " + K.name + " -| " + G.name + ")"
                   : "not Frobenius";
  return r;
}

// Searches for both adjunctions and reports the verdict.
inline CheckReport frobenius_search(const Functor& G, const Functor& K) {
  return check_frobenius(G, K, find_adjunction(G, K), find_adjunction(K, G));
}

// ---------------------------------------------------------------------------
// Ar(X,Y) = (X, X+Y)

// A morphism of pairs: first component on X, second on the sum.
struct ArMap {
  Functor first;
  Functor second;
};

struct ArBundle {
  CatPtr X, Y;
  Coproduct xy;    // X + Y, second component of Ar
  Coproduct xxy;   // X + (X + Y), second component of Ar²
  Coproduct xxxy;  // X + (X + (X + Y)), second component of Ar³
  Coproduct xx;    // X + X
  Functor inj;     // ι_Y: Y -> X+Y
  Functor codiag;  // ∇_X: X+X -> X
  ArMap M;         // Ar² -> Ar
  ArMap N;         // (X,Y) -> Ar
  ArMap ArN;       // Ar -> Ar², Ar applied to N
  ArMap NAr;       // Ar -> Ar², N at Ar(X,Y)
  ArMap ArM;       // Ar³ -> Ar²
  ArMap MAr;       // Ar³ -> Ar², M at Ar(X,Y)
  ArMap Phi;       // Ar² -> Ar², swaps the two copies of X
};

// M_{(X,Z)}: X + (X + Z) -> X + Z is (∇_X + I_Z) up to reassociation.
inline Functor ar_mult(const Coproduct& xz, const Coproduct& xxz, const std::string& name) {
  return copair(xxz, xz.inl, identity_functor(xz.sum), name);
}

inline ArBundle ar_bundle(const CatPtr& X, const CatPtr& Y) {
  ArBundle b;
  b.X = X;
  b.Y = Y;
  b.xy = coproduct(X, Y);
  b.xxy = coproduct(X, b.xy.sum);
  b.xxxy = coproduct(X, b.xxy.sum);
  b.xx = coproduct(X, X);
  const Functor idX = identity_functor(X);
  b.inj = b.xy.inr;
  b.inj.name = "iota_" + Y->name;
  b.codiag = copair(b.xx, idX, idX, "nabla_" + X->name);
  b.M = {idX, ar_mult(b.xy, b.xxy, "M")};
  b.N = {idX, b.inj};
  b.N.second.name = "N";
  b.ArN = {idX, coproduct_functor(b.xy, b.xxy, idX, b.inj, "Ar(N)")};
  b.NAr = {idX, b.xxy.inr};
  b.NAr.second.name = "N_Ar";
  b.ArM = {idX, coproduct_functor(b.xxxy, b.xxy, idX, b.M.second, "Ar(M)")};
  b.MAr = {idX, ar_mult(b.xxy, b.xxxy, "M_Ar")};
  // (1,x) <-> (2,(1,x)), (2,(2,y)) fixed.
  const Functor to_inner = compose_functors(b.xxy.inr, b.xy.inl);
  const Functor rest = copair(b.xy, b.xxy.inl, compose_functors(b.xxy.inr, b.xy.inr), "");
  b.Phi = {idX, copair(b.xxy, to_inner, rest, "Phi")};
  return b;
}

inline CheckReport check_ar_monad_laws(const CatPtr& X, const CatPtr& Y,
                                       std::size_t samples = 6) {
  CheckReport r("Ar(" + X->name + "," + Y->name + ")");
  const ArBundle b = ar_bundle(X, Y);
  for (const auto* f : {&b.M.second, &b.N.second, &b.ArN.second, &b.NAr.second, &b.ArM.second,
                        &b.MAr.second, &b.Phi.second, &b.codiag})
    r.merge(validate_functor(*f), "functor.");
  auto eq = [&](const std::string& label, const Functor& lhs, const Functor& rhs) {
    const auto& T = *lhs.target;
    const auto& S = *lhs.source;
    for (int m = 0; m < static_cast<int>(S.num_morphisms()); ++m)
      r.site(label, lhs.mor(m) != kNone && lhs.mor(m) == rhs.mor(m),
             eq_witness(T, "at " + S.mor_id(m), lhs.mor(m), rhs.mor(m)));
    for (int o = 0; o < static_cast<int>(S.num_objects()); ++o)
      r.site(label, lhs.ob(o) == rhs.ob(o), "object " + S.object(o));
  };
  const Functor id_xy = identity_functor(b.xy.sum);
  const Functor id_xxy = identity_functor(b.xxy.sum);
  for (const char* l : {"associativity", "left-unit", "right-unit", "M-naturality",
                        "N-naturality", "Phi-involution"})
    r.touch(l);
  eq("associativity", compose_functors(b.M.second, b.ArM.second),
     compose_functors(b.M.second, b.MAr.second));
  eq("left-unit", compose_functors(b.M.second, b.ArN.second), id_xy);
  eq("right-unit", compose_functors(b.M.second, b.NAr.second), id_xy);
  eq("Phi-involution", compose_functors(b.Phi.second, b.Phi.second), id_xxy);

  std::vector<Functor> fs, gs;
  for_each_functor(X, X, [&](const Functor& f) {
    fs.push_back(f);
    return fs.size() < samples;
  });
  for_each_functor(Y, Y, [&](const Functor& g) {
    gs.push_back(g);
    return gs.size() < samples;
  });
  for (const auto& F : fs)
    for (const auto& G : gs) {
      const Functor FG = coproduct_functor(b.xy, b.xy, F, G, "F+G");
      const Functor FFG = coproduct_functor(b.xxy, b.xxy, F, FG, "F+(F+G)");
      eq("M-naturality", compose_functors(b.M.second, FFG), compose_functors(FG, b.M.second));
      eq("N-naturality", compose_functors(b.N.second, G), compose_functors(FG, b.N.second));
    }
  return r;
}

}  // namespace commakit
