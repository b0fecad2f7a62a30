#pragma once

// Brute-force oracles that never call the construction under test.

#include <cstdint>
#include <vector>

#include "commakit/category.hpp"

namespace oracle {

using Rel = std::vector<std::vector<bool>>;

// x R y iff some morphism x -> y exists, found by scanning the morphism list.
inline Rel hom_relation(const commakit::FinCategory& c) {
  const std::size_t n = c.num_objects();
  Rel r(n, std::vector<bool>(n, false));
  for (const auto& m : c.morphisms()) r[m.src][m.tgt] = true;
  return r;
}

inline bool is_partial_order(const Rel& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!r[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && r[a][b] && r[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (r[a][b] && r[b][c] && !r[a][c]) return false;
    }
  }
  return true;
}

// Number of morphisms x -> y, by scanning.
inline std::size_t hom_count(const commakit::FinCategory& c, int x, int y) {
  std::size_t n = 0;
  for (const auto& m : c.morphisms()) n += (m.src == x && m.tgt == y);
  return n;
}

// Σ over (X, A) of |Hom(X, G(A))|.
inline std::size_t comma_objects(const commakit::Functor& G) {
  const auto& X = *G.target;
  std::size_t n = 0;
  for (int a = 0; a < static_cast<int>(G.source->num_objects()); ++a)
    for (int x = 0; x < static_cast<int>(X.num_objects()); ++x) n += hom_count(X, x, G.obj_map[a]);
  return n;
}

// Commuting squares G(a)∘f = f'∘x between all pairs of comma objects.
inline std::size_t comma_morphisms(const commakit::Functor& G) {
  const auto& X = *G.target;
  const auto& A = *G.source;
  struct Obj {
    int x, f, a;
  };
  std::vector<Obj> objs;
  for (int a = 0; a < static_cast<int>(A.num_objects()); ++a)
    for (int x = 0; x < static_cast<int>(X.num_objects()); ++x)
      for (int f = 0; f < static_cast<int>(X.num_morphisms()); ++f)
        if (X.src(f) == x && X.tgt(f) == G.obj_map[a]) objs.push_back({x, f, a});
  std::size_t n = 0;
  for (const auto& s : objs)
    for (const auto& t : objs)
      for (int xm = 0; xm < static_cast<int>(X.num_morphisms()); ++xm) {
        if (X.src(xm) != s.x || X.tgt(xm) != t.x) continue;
        for (int am = 0; am < static_cast<int>(A.num_morphisms()); ++am) {
          if (A.src(am) != s.a || A.tgt(am) != t.a) continue;
          n += X.compose(G.mor_map[am], s.f) == X.compose(t.f, xm);
        }
      }
  return n;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Monotone maps between chains with m+1 and n+1 elements.
inline std::uint64_t monotone_chain_maps(int m, int n) { return binomial(m + n + 1, m + 1); }

inline bool le(const Rel& r, int a, int b) { return r[a][b]; }

// The fourteen pointwise conditions for a colax coalgebra over posets, on object maps.
inline bool coalgebra_inequalities(const Rel& X, const Rel& A, const std::vector<int>& g,
                                   const std::vector<int>& h, const std::vector<int>& q,
                                   const std::vector<int>& c, const std::vector<int>& k) {
  for (std::size_t x = 0; x < X.size(); ++x) {
    const int i = static_cast<int>(x);
    if (!le(X, c[x], i) || !le(X, c[x], c[c[x]]) || !le(X, c[x], h[k[x]]) || !le(X, c[x], g[k[x]]))
      return false;
    if (!le(A, k[x], k[c[x]]) || !le(A, k[x], q[k[x]])) return false;
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    const int i = static_cast<int>(a);
    if (!le(A, q[a], i) || !le(A, q[a], q[q[a]]) || !le(A, q[a], k[h[a]]) || !le(A, k[g[a]], q[a]))
      return false;
    if (!le(X, h[a], c[h[a]]) || !le(X, h[a], h[q[a]]) || !le(X, c[g[a]], h[a]) ||
        !le(X, h[a], g[q[a]]))
      return false;
  }
  return true;
}

// K ⊣ G between posets: K(x) ≤ y iff x ≤ G(y).
inline bool galois(const Rel& X, const Rel& A, const std::vector<int>& k, const std::vector<int>& g) {
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t a = 0; a < A.size(); ++a)
      if (le(A, k[x], static_cast<int>(a)) != le(X, static_cast<int>(x), g[a])) return false;
  return true;
}

// Whether some K makes K ⊣ G, by trying every object map X -> A.
inline bool has_left_adjoint(const Rel& X, const Rel& A, const std::vector<int>& g) {
  const std::size_t nx = X.size(), na = A.size();
  if (na == 0) return nx == 0;
  std::vector<int> k(nx, 0);
  for (;;) {
    if (galois(X, A, k, g)) return true;
    std::size_t i = 0;
    while (i < nx && ++k[i] == static_cast<int>(na)) k[i++] = 0;
    if (i == nx) return false;
  }
}

// Interior operator on a poset: monotone, T ≤ id, T ≤ TT.
inline bool interior(const Rel& P, const std::vector<int>& t) {
  for (std::size_t a = 0; a < P.size(); ++a) {
    if (!le(P, t[a], static_cast<int>(a)) || !le(P, t[a], t[t[a]])) return false;
    for (std::size_t b = 0; b < P.size(); ++b)
      if (P[a][b] && !le(P, t[a], t[b])) return false;
  }
  return true;
}

}  // namespace oracle
