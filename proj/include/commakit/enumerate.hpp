#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "category.hpp"

namespace commakit {

// Visits every functor A -> B by backtracking: objects in index order, then the
// non-identity morphisms in index order. Composition constraints are checked as
// soon as all three morphisms of a table entry are assigned. The visitor returns
// false to stop. Visiting more than `limit` functors throws BudgetExceeded.
inline std::size_t for_each_functor(const CatPtr& A, const CatPtr& B,
                                    const std::function<bool(const Functor&)>& visit,
                                    std::size_t limit = 1000000, const std::string& name = "F") {
  const auto& a = *A;
  const auto& b = *B;
  const int na = static_cast<int>(a.num_objects());
  const int nb = static_cast<int>(b.num_objects());
  std::vector<int> order;  // non-identity morphisms
  std::vector<int> pos(a.num_morphisms(), -1);
  for (int m = 0; m < static_cast<int>(a.num_morphisms()); ++m)
    if (!a.is_identity(m)) {
      pos[m] = static_cast<int>(order.size());
      order.push_back(m);
    }
  struct Entry {
    int g, f, h;
  };
  std::vector<std::vector<Entry>> checks(order.size() + 1);
  for (const auto& [key, h] : a.table()) {
    const int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    const int p = std::max({pos[g], pos[f], pos[h]});
    checks[p + 1].push_back({g, f, h});
  }

  Functor F{name, A, B, std::vector<int>(na, kNone), std::vector<int>(a.num_morphisms(), kNone)};
  std::size_t seen = 0;
  bool stop = false;

  auto entries_hold = [&](int p) {
    for (const auto& e : checks[p + 1])
      if (b.compose(F.mor_map[e.g], F.mor_map[e.f]) != F.mor_map[e.h]) return false;
    return true;
  };

  std::function<void(std::size_t)> assign_mor = [&](std::size_t i) {
    if (stop) return;
    if (i == order.size()) {
      if (++seen > limit) throw BudgetExceeded("more than " + std::to_string(limit) + " functors");
      if (!visit(F)) stop = true;
      return;
    }
    const int m = order[i];
    for (int cand : b.hom(F.obj_map[a.src(m)], F.obj_map[a.tgt(m)])) {
      F.mor_map[m] = cand;
      if (entries_hold(static_cast<int>(i))) assign_mor(i + 1);
      if (stop) return;
    }
    F.mor_map[m] = kNone;
  };

  std::function<void(int)> assign_obj = [&](int o) {
    if (stop) return;
    if (o == na) {
      for (int x = 0; x < na; ++x) F.mor_map[a.identity(x)] = b.identity(F.obj_map[x]);
      if (entries_hold(-1)) assign_mor(0);
      return;
    }
    for (int t = 0; t < nb; ++t) {
      F.obj_map[o] = t;
      bool feasible = true;
      for (int m : order) {
        const int s = a.src(m), d = a.tgt(m);
        if ((s == o && d <= o) || (d == o && s <= o))
          if (b.hom(F.obj_map[s], F.obj_map[d]).empty()) {
            feasible = false;
            break;
          }
      }
      if (feasible) assign_obj(o + 1);
      if (stop) return;
    }
    F.obj_map[o] = kNone;
  };

  assign_obj(0);
  return seen;
}

inline std::vector<Functor> enumerate_functors(const CatPtr& A, const CatPtr& B,
                                               std::size_t limit = 1000000) {
  std::vector<Functor> out;
  for_each_functor(A, B, [&](const Functor& f) {
    out.push_back(f);
    return true;
  }, limit);
  return out;
}

// Every transformation F ⇒ G, by backtracking over components with naturality
// checked as soon as both ends of a morphism are assigned.
inline std::vector<NatTrans> enumerate_nats(const Functor& F, const Functor& G,
                                            std::size_t limit = 1000000) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  const int n = static_cast<int>(A.num_objects());
  std::vector<NatTrans> out;
  NatTrans a{"alpha", F, G, std::vector<int>(n, kNone)};
  std::function<void(int)> go = [&](int o) {
    if (o == n) {
      if (out.size() >= limit) throw BudgetExceeded("more than " + std::to_string(limit) + " transformations");
      out.push_back(a);
      return;
    }
    for (int c : B.hom(F.ob(o), G.ob(o))) {
      a.comp[o] = c;
      bool ok = true;
      for (int m = 0; m < static_cast<int>(A.num_morphisms()) && ok; ++m) {
        const int s = A.src(m), t = A.tgt(m);
        if (s > o || t > o || (s != o && t != o)) continue;
        ok = B.compose(G.mor(m), a.comp[s]) == B.compose(a.comp[t], F.mor(m)) &&
             B.compose(G.mor(m), a.comp[s]) != kNone;
      }
      if (ok) go(o + 1);
    }
    a.comp[o] = kNone;
  };
  go(0);
  return out;
}

}  // namespace commakit
