#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "coalgebra.hpp"
#include "comonad.hpp"
#include "enumerate.hpp"
#include "normal_ar.hpp"

namespace commakit {

using Payload = std::variant<CatPtr, Functor, Comonad, Adjunction, ColaxDCoalgebra,
                             NormalColaxCoalgebra>;

struct Fixture {
  std::string name;
  Payload payload;
  std::string note;
};

// ---------------------------------------------------------------------------
// Posets

struct Poset {
  int n = 0;
  std::vector<std::vector<char>> leq;  // reflexive, transitive, antisymmetric

  bool le(int a, int b) const { return leq[a][b] != 0; }
};

inline Poset chain_poset(int n) {
  Poset p{n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[i][j] = 1;
  return p;
}

// Objects "<prefix>i", morphisms "<prefix>i<<prefix>j"; composites forced by thinness.
inline CatPtr poset_category(const std::string& name, const Poset& p,
                             const std::string& prefix = "p") {
  auto c = std::make_shared<FinCategory>(name);
  for (int i = 0; i < p.n; ++i) c->add_object(prefix + std::to_string(i));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && p.le(i, j))
        c->add_morphism(prefix + std::to_string(i) + "<" + prefix + std::to_string(j), i, j);
  for (int f = 0; f < static_cast<int>(c->num_morphisms()); ++f)
    for (int g : c->out(c->tgt(f)))
      if (!c->has_compose(g, f)) c->set_compose(g, f, unique_arrow(*c, c->src(f), c->tgt(g)));
  return c;
}

// Reflexive-transitive closure of a random DAG on 0..n-1 (edges only go up).
inline Poset random_poset(std::mt19937_64& rng, int n, double density = 0.4) {
  Poset p{n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
  std::bernoulli_distribution edge(density);
  for (int i = 0; i < n; ++i) p.leq[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) p.leq[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq[i][k] && p.leq[k][j]) p.leq[i][j] = 1;
  return p;
}

inline CatPtr random_poset_category(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  return poset_category("poset(seed=" + std::to_string(seed) + ",n=" + std::to_string(n) + ")",
                        random_poset(rng, n));
}

// Recovers the order of a thin category with no nontrivial isomorphisms.
inline Poset poset_of(const FinCategory& c) {
  const int n = static_cast<int>(c.num_objects());
  Poset p{n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.leq[i][j] = !c.hom(i, j).empty();
  return p;
}

using ObjMap = std::vector<int>;

// A random monotone map from the subposet `dom` of P into the subposet `cod` of Q,
// assigning in index order (a linear extension). Empty result on a dead end.
inline std::optional<ObjMap> random_monotone(std::mt19937_64& rng, const Poset& P,
                                             const std::vector<int>& dom, const Poset& Q,
                                             const std::vector<int>& cod) {
  ObjMap f(P.n, kNone);
  for (int d : dom) {
    std::vector<int> options;
    for (int z : cod) {
      bool ok = true;
      for (int e : dom) {
        if (f[e] == kNone || e == d) continue;
        if (P.le(e, d) && !Q.le(f[e], z)) ok = false;
        if (P.le(d, e) && !Q.le(z, f[e])) ok = false;
      }
      if (ok) options.push_back(z);
    }
    if (options.empty()) return std::nullopt;
    f[d] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
  }
  return f;
}

inline std::vector<int> all_of(const Poset& p) {
  std::vector<int> v(p.n);
  for (int i = 0; i < p.n; ++i) v[i] = i;
  return v;
}

// A monotone map P -> Q; constant maps are always available as a fallback.
inline ObjMap random_monotone_map(std::mt19937_64& rng, const Poset& P, const Poset& Q,
                                  int tries = 32) {
  for (int t = 0; t < tries; ++t)
    if (auto f = random_monotone(rng, P, all_of(P), Q, all_of(Q))) return *f;
  return ObjMap(P.n, Q.n > 0 ? 0 : kNone);
}

// Interior operator (c ≤ id, idempotent, monotone) from a random set of fixed
// points, or the identity when no sampled set works.
inline ObjMap random_interior(std::mt19937_64& rng, const Poset& P, int tries = 32) {
  std::bernoulli_distribution keep(0.6);
  for (int t = 0; t < tries; ++t) {
    std::vector<char> fixed(P.n);
    for (int i = 0; i < P.n; ++i) fixed[i] = keep(rng);
    ObjMap c(P.n, kNone);
    bool ok = true;
    for (int x = 0; x < P.n && ok; ++x) {
      for (int s = 0; s < P.n; ++s)
        if (fixed[s] && P.le(s, x) && (c[x] == kNone || P.le(c[x], s))) c[x] = s;
      if (c[x] == kNone) {
        ok = false;
        break;
      }
      for (int s = 0; s < P.n; ++s)
        if (fixed[s] && P.le(s, x) && !P.le(s, c[x])) ok = false;
    }
    if (ok) return c;
  }
  return all_of(P);
}

// The fourteen inequalities that make thin data a colax coalgebra.
inline bool poset_coalgebra_inequalities(const Poset& X, const Poset& A, const ObjMap& g,
                                         const ObjMap& h, const ObjMap& q, const ObjMap& c,
                                         const ObjMap& k) {
  for (int x = 0; x < X.n; ++x) {
    if (!X.le(c[x], x) || !X.le(c[x], c[c[x]]) || !X.le(c[x], h[k[x]])) return false;
    if (!A.le(k[x], k[c[x]]) || !A.le(k[x], q[k[x]]) || !X.le(c[x], g[k[x]])) return false;
  }
  for (int a = 0; a < A.n; ++a) {
    if (!A.le(q[a], a) || !X.le(h[a], c[h[a]]) || !X.le(h[a], h[q[a]])) return false;
    if (!A.le(q[a], k[h[a]]) || !A.le(q[a], q[q[a]]) || !X.le(c[g[a]], h[a])) return false;
    if (!A.le(k[g[a]], q[a]) || !X.le(h[a], g[q[a]])) return false;
  }
  return true;
}

inline bool monotone(const Poset& P, const Poset& Q, const ObjMap& f) {
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (P.le(i, j) && !Q.le(f[i], f[j])) return false;
  return true;
}

// Thin data → coalgebra. Components are the unique arrows; a missing arrow
// leaves kNone behind, which validation reports.
inline ColaxDCoalgebra thin_coalgebra(const std::string& name, const CatPtr& X, const CatPtr& A,
                                      const ObjMap& g, const ObjMap& h, const ObjMap& q,
                                      const ObjMap& c, const ObjMap& k) {
  ColaxDCoalgebra co;
  co.name = name;
  co.G = thin_functor("G", A, X, g);
  co.H = thin_functor("H", A, X, h);
  co.Q = thin_functor("Q", A, A, q);
  co.C = thin_functor("C", X, X, c);
  co.K = thin_functor("K", X, A, k);
  for (const auto& [label, st] : expected_boundaries(co)) {
    for (auto& [n, nat] : co.transformations())
      if (n == label) *nat = thin_nat(label, st.first, st.second);
  }
  return co;
}

inline ColaxDCoalgebra identity_coalgebra(const CatPtr& X) {
  ColaxDCoalgebra co;
  co.name = "id_coalg(" + X->name + ")";
  const Functor id = identity_functor(X);
  co.G = co.H = co.Q = co.C = co.K = id;
  co.G.name = "G";
  co.H.name = "H";
  co.Q.name = "Q";
  co.C.name = "C";
  co.K.name = "K";
  for (auto& [n, nat] : co.transformations()) *nat = identity_nat(id, n);
  return co;
}

// Rejection sampler over random posets of 1..n objects. C and Q are interior
// operators, K is built on Fix(C) into Fix(Q) and H on Fix(Q) into Fix(C); the
// remaining inequalities are then tested.
inline ColaxDCoalgebra random_poset_coalgebra(std::uint64_t seed, int n, int attempts = 4000) {
  if (n < 1) throw InputError("random coalgebra size must be at least 1");
  if (n > 8) throw BudgetExceeded("random coalgebra size " + std::to_string(n) + " > 8");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, n);
  const std::string tag = "(seed=" + std::to_string(seed) + ",n=" + std::to_string(n) + ")";
  for (int round = 0; round < attempts / 40; ++round) {
    const Poset X = random_poset(rng, size(rng));
    const Poset A = random_poset(rng, size(rng));
    for (int t = 0; t < 40; ++t) {
      const ObjMap c = random_interior(rng, X);
      const ObjMap q = random_interior(rng, A);
      const ObjMap g = random_monotone_map(rng, A, X);
      std::vector<int> fixC, fixQ;
      for (int i = 0; i < X.n; ++i)
        if (c[i] == i) fixC.push_back(i);
      for (int i = 0; i < A.n; ++i)
        if (q[i] == i) fixQ.push_back(i);
      const auto k0 = random_monotone(rng, X, fixC, A, fixQ);
      const auto h0 = random_monotone(rng, A, fixQ, X, fixC);
      if (!k0 || !h0) continue;
      ObjMap k(X.n), h(A.n);
      for (int i = 0; i < X.n; ++i) k[i] = (*k0)[c[i]];
      for (int i = 0; i < A.n; ++i) h[i] = (*h0)[q[i]];
      if (!poset_coalgebra_inequalities(X, A, g, h, q, c, k)) continue;
      const CatPtr Xc = poset_category("X" + tag, X);
      const CatPtr Ac = poset_category("A" + tag, A);
      return thin_coalgebra("rand_coalg" + tag, Xc, Ac, g, h, q, c, k);
    }
  }
  throw InputError("random coalgebra sampling exhausted for " + tag);
}

// Galois connection K ⊣ G with G the inclusion of a random reflective subposet,
// so the counit is an identity.
inline Adjunction random_galois(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  const Poset X = random_poset(rng, std::uniform_int_distribution<int>(1, n)(rng));
  std::bernoulli_distribution keep(0.6);
  std::vector<int> S, reflect(X.n, kNone);
  for (int t = 0; t < 64; ++t) {
    S.clear();
    for (int i = 0; i < X.n; ++i)
      if (keep(rng)) S.push_back(i);
    bool ok = !S.empty();
    for (int x = 0; x < X.n && ok; ++x) {
      reflect[x] = kNone;
      for (int s : S)
        if (X.le(x, s) && (reflect[x] == kNone || X.le(s, reflect[x]))) reflect[x] = s;
      if (reflect[x] == kNone) ok = false;
      for (int s : S)
        if (ok && X.le(x, s) && !X.le(reflect[x], s)) ok = false;
    }
    if (ok) break;
    S = all_of(X);
    for (int x = 0; x < X.n; ++x) reflect[x] = x;
  }
  Poset A{static_cast<int>(S.size()),
          std::vector<std::vector<char>>(S.size(), std::vector<char>(S.size(), 0))};
  std::vector<int> index(X.n, kNone);
  for (std::size_t i = 0; i < S.size(); ++i) index[S[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j) A.leq[i][j] = X.leq[S[i]][S[j]];
  const std::string tag = "(seed=" + std::to_string(seed) + ",n=" + std::to_string(n) + ")";
  const CatPtr Xc = poset_category("X" + tag, X);
  const CatPtr Ac = poset_category("A" + tag, A);
  ObjMap k(X.n);
  for (int x = 0; x < X.n; ++x) k[x] = index[reflect[x]];
  Adjunction adj;
  adj.name = "gal" + tag;
  adj.left = thin_functor("K", Xc, Ac, k);
  adj.right = thin_functor("G", Ac, Xc, S);
  adj.unit = thin_nat("unit", identity_functor(Xc), compose_functors(adj.right, adj.left));
  adj.counit = thin_nat("counit", compose_functors(adj.left, adj.right), identity_functor(Ac));
  return adj;
}

// A random monotone map between random posets, for left-adjoint existence tests.
inline Functor random_monotone_functor(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, n);
  const Poset P = random_poset(rng, size(rng));
  const Poset Q = random_poset(rng, size(rng));
  const std::string tag = "(seed=" + std::to_string(seed) + ",n=" + std::to_string(n) + ")";
  return thin_functor("G", poset_category("A" + tag, P), poset_category("X" + tag, Q),
                      random_monotone_map(rng, P, Q));
}

// ---------------------------------------------------------------------------
// Builtins

inline CatPtr cat_one() {
  auto c = std::make_shared<FinCategory>("1");
  c->add_object("*");
  return c;
}

inline CatPtr cat_two() {
  auto c = std::make_shared<FinCategory>("2");
  c->add_object("0");
  c->add_object("1");
  c->add_morphism("u", 0, 1);
  return c;
}

inline CatPtr cat_walking_iso() {
  auto c = std::make_shared<FinCategory>("Iso");
  c->add_object("0");
  c->add_object("1");
  const int f = c->add_morphism("f", 0, 1);
  const int g = c->add_morphism("g", 1, 0);
  c->set_compose(g, f, c->identity(0));
  c->set_compose(f, g, c->identity(1));
  return c;
}

inline CatPtr cat_discrete(int n) {
  auto c = std::make_shared<FinCategory>("disc(" + std::to_string(n) + ")");
  for (int i = 0; i < n; ++i) c->add_object(std::to_string(i));
  return c;
}

// Ch(n) = {0 < 1 < ... < n}.
inline CatPtr cat_chain(int n) {
  return poset_category("Ch(" + std::to_string(n) + ")", chain_poset(n + 1), "");
}

inline CatPtr cat_parallel_pair() {
  auto c = std::make_shared<FinCategory>("PP");
  c->add_object("0");
  c->add_object("1");
  c->add_morphism("f", 0, 1);
  c->add_morphism("g", 0, 1);
  return c;
}

inline CatPtr cat_square() {
  auto c = std::make_shared<FinCategory>("Sq");
  for (const char* o : {"a", "b", "c", "d"}) c->add_object(o);
  const int f = c->add_morphism("f", 0, 1);
  const int g = c->add_morphism("g", 0, 2);
  const int h = c->add_morphism("h", 1, 3);
  const int k = c->add_morphism("k", 2, 3);
  const int d = c->add_morphism("hf", 0, 3);
  c->set_compose(h, f, d);
  c->set_compose(k, g, d);
  return c;
}

inline CatPtr cat_monoid_z2() {
  auto c = std::make_shared<FinCategory>("Z2");
  c->add_object("*");
  const int s = c->add_morphism("s", 0, 0);
  c->set_compose(s, s, c->identity(0));
  return c;
}

// Interior operator 0 ↦ 0, 1 ↦ 0, 2 ↦ 2 on Ch(2).
inline Comonad int2_comonad(const CatPtr& ch2 = cat_chain(2)) {
  Comonad T;
  T.name = "int2";
  T.endo = thin_functor("i", ch2, ch2, {0, 0, 2});
  T.comult = thin_nat("tau", T.endo, compose_functors(T.endo, T.endo));
  T.counit = thin_nat("zeta", T.endo, identity_functor(ch2));
  return T;
}

// K ⊣ G with K: Ch(2) -> Ch(1) = (0,1,1) and G: Ch(1) -> Ch(2) = (0,2).
inline Adjunction gal_adjunction() {
  const CatPtr X = cat_chain(2);
  const CatPtr A = cat_chain(1);
  Adjunction adj;
  adj.name = "gal";
  adj.left = thin_functor("K", X, A, {0, 1, 1});
  adj.right = thin_functor("G", A, X, {0, 2});
  adj.unit = thin_nat("unit", identity_functor(X), compose_functors(adj.right, adj.left));
  adj.counit = thin_nat("counit", compose_functors(adj.left, adj.right), identity_functor(A));
  return adj;
}

inline ColaxDCoalgebra int_coalg() {
  const CatPtr X = cat_chain(2);
  const ObjMap t = {0, 0, 2};
  return thin_coalgebra("int_coalg", X, X, {0, 1, 2}, t, t, t, t);
}

inline NormalColaxCoalgebra gal_normal() {
  auto n = from_adjunction(gal_adjunction());
  n.name = "gal_normal";
  return n;
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "one",    "two",       "walking_iso",  "discrete(n)",    "chain(n)", "parallel_pair",
      "square", "monoid_z2", "int2_comonad", "gal_adjunction", "int_coalg", "gal_normal"};
  return names;
}

inline Fixture builtin(const std::string& name) {
  auto sized = [&](const std::string& head) -> std::optional<int> {
    if (name.rfind(head + "(", 0) != 0 || name.back() != ')') return std::nullopt;
    const std::string digits = name.substr(head.size() + 1, name.size() - head.size() - 2);
    if (digits.empty() || digits.size() > 2 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad size in fixture name '" + name + "'");
    return std::stoi(digits);
  };
  if (name == "one") return {name, cat_one(), "terminal category"};
  if (name == "two") return {name, cat_two(), "walking arrow 0 -> 1"};
  if (name == "walking_iso") return {name, cat_walking_iso(), "two objects, inverse pair f, g"};
  if (auto n = sized("discrete")) return {name, cat_discrete(*n), "discrete category"};
  if (auto n = sized("chain")) return {name, cat_chain(*n), "chain 0 < ... < n"};
  if (name == "parallel_pair") return {name, cat_parallel_pair(), "f, g: 0 -> 1"};
  if (name == "square") return {name, cat_square(), "commuting square h.f = k.g"};
  if (name == "monoid_z2") return {name, cat_monoid_z2(), "one object, s.s = id"};
  if (name == "int2_comonad") return {name, int2_comonad(), "interior operator on Ch(2)"};
  if (name == "gal_adjunction") return {name, gal_adjunction(), "Galois connection Ch(2) -> Ch(1)"};
  if (name == "int_coalg") return {name, int_coalg(), "X = A = Ch(2), G = id, the rest int2"};
  if (name == "gal_normal") return {name, gal_normal(), "normal coalgebra of gal_adjunction"};
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace commakit
