#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "report.hpp"

namespace commakit {

using Id = std::string;
inline constexpr int kNone = -1;

struct Morphism {
  Id id;
  int src = kNone;
  int tgt = kNone;
};

inline std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// A finite category stored as explicit objects, morphisms and a composition
// table. Adding an object also adds its identity "id_<object>"; adding a
// morphism fills in its composites with identities.
class FinCategory {
 public:
  std::string name;

  explicit FinCategory(std::string n = {}) : name(std::move(n)) {}

  int add_object(const Id& id) {
    if (obj_index_.count(id)) throw InputError("duplicate object id '" + id + "'");
    const int o = static_cast<int>(objects_.size());
    objects_.push_back(id);
    obj_index_.emplace(id, o);
    identity_.push_back(kNone);
    const int i = push_morphism("id_" + id, o, o);
    identity_[o] = i;
    table_[pair_key(i, i)] = i;
    return o;
  }

  int add_morphism(const Id& id, int src, int tgt) {
    const int m = push_morphism(id, src, tgt);
    if (valid_object(src) && identity_[src] != kNone) table_[pair_key(m, identity_[src])] = m;
    if (valid_object(tgt) && identity_[tgt] != kNone) table_[pair_key(identity_[tgt], m)] = m;
    return m;
  }

  void set_compose(int g, int f, int h) { table_[pair_key(g, f)] = h; }
  void erase_compose(int g, int f) { table_.erase(pair_key(g, f)); }
  void set_identity(int o, int m) { identity_.at(o) = m; }

  // Raw edits for building malformed inputs; call reindex() afterwards.
  Morphism& raw_morphism(int m) { return morphisms_.at(m); }
  void reindex() {
    hom_.clear();
    out_.assign(objects_.size(), {});
    for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m) index_morphism(m);
  }

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const std::vector<Id>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const Id& object(int o) const { return objects_.at(o); }
  const Morphism& morphism(int m) const { return morphisms_.at(m); }
  const Id& mor_id(int m) const { return morphisms_.at(m).id; }
  int src(int m) const { return valid_morphism(m) ? morphisms_[m].src : kNone; }
  int tgt(int m) const { return valid_morphism(m) ? morphisms_[m].tgt : kNone; }
  int identity(int o) const { return valid_object(o) ? identity_[o] : kNone; }
  bool is_identity(int m) const {
    const int s = src(m);
    return s != kNone && s == tgt(m) && identity(s) == m;
  }

  bool valid_object(int o) const { return o >= 0 && o < static_cast<int>(objects_.size()); }
  bool valid_morphism(int m) const {
    return m >= 0 && m < static_cast<int>(morphisms_.size());
  }

  // g∘f, or kNone when undefined.
  int compose(int g, int f) const {
    if (g == kNone || f == kNone) return kNone;
    auto it = table_.find(pair_key(g, f));
    return it == table_.end() ? kNone : it->second;
  }

  bool has_compose(int g, int f) const { return table_.count(pair_key(g, f)) != 0; }

  int find_object(const Id& id) const {
    auto it = obj_index_.find(id);
    return it == obj_index_.end() ? kNone : it->second;
  }
  int find_morphism(const Id& id) const {
    auto it = mor_index_.find(id);
    return it == mor_index_.end() ? kNone : it->second;
  }

  const std::vector<int>& hom(int s, int t) const {
    auto it = hom_.find(pair_key(s, t));
    return it == hom_.end() ? empty_ : it->second;
  }
  const std::vector<int>& out(int o) const {
    return valid_object(o) ? out_[o] : empty_;
  }

  const std::unordered_map<std::uint64_t, int>& table() const { return table_; }
  std::size_t table_size() const { return table_.size(); }

  void reserve(std::size_t objects, std::size_t morphisms) {
    objects_.reserve(objects);
    morphisms_.reserve(morphisms);
  }

 private:
  int push_morphism(const Id& id, int src, int tgt) {
    if (mor_index_.count(id)) throw InputError("duplicate morphism id '" + id + "'");
    const int m = static_cast<int>(morphisms_.size());
    morphisms_.push_back(Morphism{id, src, tgt});
    mor_index_.emplace(id, m);
    if (out_.size() < objects_.size()) out_.resize(objects_.size());
    index_morphism(m);
    return m;
  }

  void index_morphism(int m) {
    const auto& mm = morphisms_[m];
    if (!valid_object(mm.src) || !valid_object(mm.tgt)) return;
    hom_[pair_key(mm.src, mm.tgt)].push_back(m);
    if (out_.size() < objects_.size()) out_.resize(objects_.size());
    out_[mm.src].push_back(m);
  }

  std::vector<Id> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;
  std::unordered_map<std::uint64_t, int> table_;
  std::unordered_map<Id, int> obj_index_;
  std::unordered_map<Id, int> mor_index_;
  std::unordered_map<std::uint64_t, std::vector<int>> hom_;
  std::vector<std::vector<int>> out_;
  inline static const std::vector<int> empty_{};
};

using CatPtr = std::shared_ptr<const FinCategory>;

// Composes a chain written right to left: {g, f} is g∘f.
inline int comp(const FinCategory& c, std::initializer_list<int> chain) {
  if (chain.size() == 0) return kNone;
  auto it = chain.end();
  --it;
  int acc = *it;
  while (it != chain.begin()) {
    --it;
    acc = c.compose(*it, acc);
    if (acc == kNone) return kNone;
  }
  return acc;
}

inline bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->objects() != b->objects()) return false;
  if (a->num_morphisms() != b->num_morphisms()) return false;
  for (std::size_t m = 0; m < a->num_morphisms(); ++m) {
    const auto& x = a->morphism(static_cast<int>(m));
    const auto& y = b->morphism(static_cast<int>(m));
    if (x.id != y.id || x.src != y.src || x.tgt != y.tgt) return false;
  }
  for (std::size_t o = 0; o < a->num_objects(); ++o)
    if (a->identity(static_cast<int>(o)) != b->identity(static_cast<int>(o))) return false;
  return a->table() == b->table();
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct Functor {
  std::string name;
  CatPtr source;
  CatPtr target;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  int ob(int o) const {
    return o >= 0 && o < static_cast<int>(obj_map.size()) ? obj_map[o] : kNone;
  }
  int mor(int m) const {
    return m >= 0 && m < static_cast<int>(mor_map.size()) ? mor_map[m] : kNone;
  }
};

struct NatTrans {
  std::string name;
  Functor src;
  Functor tgt;
  std::vector<int> comp;

  int at(int o) const {
    return o >= 0 && o < static_cast<int>(comp.size()) ? comp[o] : kNone;
  }
};

inline bool functor_equal(const Functor& f, const Functor& g) {
  return same_category(f.source, g.source) && same_category(f.target, g.target) &&
         f.obj_map == g.obj_map && f.mor_map == g.mor_map;
}

inline bool nat_equal(const NatTrans& a, const NatTrans& b) {
  return functor_equal(a.src, b.src) && functor_equal(a.tgt, b.tgt) && a.comp == b.comp;
}

inline Functor identity_functor(const CatPtr& c, std::string name = {}) {
  Functor f;
  f.name = name.empty() ? "Id_" + c->name : std::move(name);
  f.source = c;
  f.target = c;
  f.obj_map.resize(c->num_objects());
  f.mor_map.resize(c->num_morphisms());
  for (std::size_t i = 0; i < f.obj_map.size(); ++i) f.obj_map[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < f.mor_map.size(); ++i) f.mor_map[i] = static_cast<int>(i);
  return f;
}

inline NatTrans identity_nat(const Functor& f, std::string name = {}) {
  NatTrans a;
  a.name = name.empty() ? "1_" + f.name : std::move(name);
  a.src = f;
  a.tgt = f;
  a.comp.resize(f.source->num_objects());
  for (std::size_t o = 0; o < a.comp.size(); ++o)
    a.comp[o] = f.target->identity(f.ob(static_cast<int>(o)));
  return a;
}

// Builds a functor from id pairs; identities are mapped automatically.
inline Functor make_functor(std::string name, CatPtr s, CatPtr t,
                            const std::vector<std::pair<Id, Id>>& objs,
                            const std::vector<std::pair<Id, Id>>& mors) {
  Functor f;
  f.name = std::move(name);
  f.source = s;
  f.target = t;
  f.obj_map.assign(s->num_objects(), kNone);
  f.mor_map.assign(s->num_morphisms(), kNone);
  for (const auto& [a, b] : objs) {
    const int x = s->find_object(a), y = t->find_object(b);
    if (x == kNone) throw InputError("functor " + f.name + ": unknown object '" + a + "'");
    if (y == kNone) throw InputError("functor " + f.name + ": unknown object '" + b + "'");
    f.obj_map[x] = y;
  }
  for (std::size_t o = 0; o < s->num_objects(); ++o)
    if (f.obj_map[o] != kNone)
      f.mor_map[s->identity(static_cast<int>(o))] = t->identity(f.obj_map[o]);
  for (const auto& [a, b] : mors) {
    const int x = s->find_morphism(a), y = t->find_morphism(b);
    if (x == kNone) throw InputError("functor " + f.name + ": unknown morphism '" + a + "'");
    if (y == kNone) throw InputError("functor " + f.name + ": unknown morphism '" + b + "'");
    f.mor_map[x] = y;
  }
  return f;
}

inline NatTrans make_nat(std::string name, const Functor& src, const Functor& tgt,
                         const std::vector<std::pair<Id, Id>>& comps) {
  NatTrans a;
  a.name = std::move(name);
  a.src = src;
  a.tgt = tgt;
  a.comp.assign(src.source->num_objects(), kNone);
  for (const auto& [o, m] : comps) {
    const int x = src.source->find_object(o), y = src.target->find_morphism(m);
    if (x == kNone) throw InputError("nat " + a.name + ": unknown object '" + o + "'");
    if (y == kNone) throw InputError("nat " + a.name + ": unknown morphism '" + m + "'");
    a.comp[x] = y;
  }
  return a;
}

// The unique morphism s -> t when the hom-set is a singleton, else kNone.
inline int unique_arrow(const FinCategory& c, int s, int t) {
  const auto& h = c.hom(s, t);
  return h.size() == 1 ? h.front() : kNone;
}

// For thin targets: a functor determined by its object map.
inline Functor thin_functor(std::string name, CatPtr s, CatPtr t, const std::vector<int>& objs) {
  Functor f;
  f.name = std::move(name);
  f.source = s;
  f.target = t;
  f.obj_map = objs;
  f.mor_map.resize(s->num_morphisms());
  for (std::size_t m = 0; m < s->num_morphisms(); ++m) {
    const auto& mm = s->morphism(static_cast<int>(m));
    f.mor_map[m] = unique_arrow(*t, f.ob(mm.src), f.ob(mm.tgt));
  }
  return f;
}

// For thin targets: the transformation whose components are the unique arrows.
inline NatTrans thin_nat(std::string name, const Functor& src, const Functor& tgt) {
  NatTrans a;
  a.name = std::move(name);
  a.src = src;
  a.tgt = tgt;
  a.comp.resize(src.source->num_objects());
  for (std::size_t o = 0; o < a.comp.size(); ++o)
    a.comp[o] = unique_arrow(*src.target, src.ob(static_cast<int>(o)), tgt.ob(static_cast<int>(o)));
  return a;
}

// ---------------------------------------------------------------------------
// Validation

inline CheckReport validate_category(const FinCategory& c) {
  CheckReport r("category " + c.name);
  const int n = static_cast<int>(c.num_objects());
  const int m = static_cast<int>(c.num_morphisms());
  r.touch("structural", true);
  bool broken = false;
  for (int i = 0; i < m; ++i) {
    const auto& mm = c.morphism(i);
    if (!c.valid_object(mm.src) || !c.valid_object(mm.tgt)) {
      r.fail("structural", "morphism " + mm.id + " has an unknown endpoint", true);
      broken = true;
    }
  }
  for (int o = 0; o < n; ++o)
    if (!c.valid_morphism(c.identity(o))) {
      r.fail("structural", "object " + c.object(o) + " has no identity", true);
      broken = true;
    }
  for (const auto& [key, h] : c.table()) {
    const int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    if (!c.valid_morphism(g) || !c.valid_morphism(f) || !c.valid_morphism(h)) {
      r.fail("structural", "composition table refers to an unknown morphism", true);
      broken = true;
    }
  }
  for (const char* l : {"identity-typing", "compose-defined", "compose-domain", "composite-typing",
                        "left-unit", "right-unit", "associativity"})
    r.touch(l);
  if (broken) return r;

  for (int o = 0; o < n; ++o) {
    const int i = c.identity(o);
    r.site("identity-typing", c.src(i) == o && c.tgt(i) == o,
           "identity " + c.mor_id(i) + " of " + c.object(o));
  }
  for (const auto& [key, h] : c.table()) {
    const int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    if (c.tgt(f) != c.src(g))
      r.fail("compose-domain",
             "(" + c.mor_id(g) + "," + c.mor_id(f) + ") is not composable but has a composite");
  }
  for (int f = 0; f < m; ++f) {
    for (int g : c.out(c.tgt(f))) {
      const std::string pair = "(" + c.mor_id(g) + "," + c.mor_id(f) + ")";
      const int h = c.compose(g, f);
      r.site("compose-defined", h != kNone, pair + " has no composite");
      if (h == kNone) continue;
      if (c.src(h) != c.src(f))
        r.fail("composite-typing", pair + ": src mismatch, composite " + c.mor_id(h));
      else if (c.tgt(h) != c.tgt(g))
        r.fail("composite-typing", pair + ": tgt mismatch, composite " + c.mor_id(h));
      else
        r.site("composite-typing", true);
    }
  }
  for (int f = 0; f < m; ++f) {
    const int is = c.identity(c.src(f)), it = c.identity(c.tgt(f));
    r.site("right-unit", c.compose(f, is) == f, "(" + c.mor_id(f) + "," + c.mor_id(is) + ")");
    r.site("left-unit", c.compose(it, f) == f, "(" + c.mor_id(it) + "," + c.mor_id(f) + ")");
  }
  for (int f = 0; f < m; ++f)
    for (int g : c.out(c.tgt(f))) {
      const int gf = c.compose(g, f);
      if (gf == kNone) continue;
      for (int h : c.out(c.tgt(g))) {
        const int hg = c.compose(h, g);
        const int lhs = c.compose(h, gf), rhs = c.compose(hg, f);
        r.site("associativity", lhs != kNone && lhs == rhs,
               "(" + c.mor_id(h) + "," + c.mor_id(g) + "," + c.mor_id(f) + ")");
      }
    }
  return r;
}

inline CheckReport validate_functor(const Functor& F) {
  CheckReport r("functor " + F.name);
  r.touch("structural", true);
  for (const char* l : {"typing", "identity", "composition"}) r.touch(l);
  if (!F.source || !F.target) {
    r.fail("structural", "missing source or target", true);
    return r;
  }
  const auto& S = *F.source;
  const auto& T = *F.target;
  bool broken = false;
  if (F.obj_map.size() != S.num_objects() || F.mor_map.size() != S.num_morphisms()) {
    r.fail("structural", "map sizes do not match the source", true);
    return r;
  }
  for (std::size_t o = 0; o < S.num_objects(); ++o)
    if (!T.valid_object(F.obj_map[o])) {
      r.fail("structural", "object " + S.object(static_cast<int>(o)) + " is unmapped", true);
      broken = true;
    }
  for (std::size_t m = 0; m < S.num_morphisms(); ++m)
    if (!T.valid_morphism(F.mor_map[m])) {
      r.fail("structural", "morphism " + S.mor_id(static_cast<int>(m)) + " is unmapped", true);
      broken = true;
    }
  if (broken) return r;
  for (int m = 0; m < static_cast<int>(S.num_morphisms()); ++m) {
    const int fm = F.mor(m);
    r.site("typing", T.src(fm) == F.ob(S.src(m)) && T.tgt(fm) == F.ob(S.tgt(m)),
           S.mor_id(m) + " |-> " + T.mor_id(fm));
  }
  for (int o = 0; o < static_cast<int>(S.num_objects()); ++o)
    r.site("identity", F.mor(S.identity(o)) == T.identity(F.ob(o)),
           "identity not preserved at " + S.object(o));
  for (const auto& [key, h] : S.table()) {
    const int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    const int lhs = F.mor(h), rhs = T.compose(F.mor(g), F.mor(f));
    r.site("composition", lhs == rhs && lhs != kNone,
           "(" + S.mor_id(g) + "," + S.mor_id(f) + ")");
  }
  return r;
}

inline bool parallel(const Functor& a, const Functor& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target);
}

inline CheckReport validate_nat_trans(const NatTrans& a) {
  CheckReport r("nat " + a.name);
  r.touch("structural", true);
  r.touch("typing");
  r.touch("naturality");
  if (!a.src.source || !a.tgt.source || !parallel(a.src, a.tgt)) {
    r.fail("structural", "functors " + a.src.name + " and " + a.tgt.name + " are not parallel",
           true);
    return r;
  }
  const auto& S = *a.src.source;
  const auto& T = *a.src.target;
  if (a.comp.size() != S.num_objects()) {
    r.fail("structural", "component count does not match the source", true);
    return r;
  }
  for (int o = 0; o < static_cast<int>(S.num_objects()); ++o) {
    const int c = a.at(o);
    const bool ok = T.valid_morphism(c) && T.src(c) == a.src.ob(o) && T.tgt(c) == a.tgt.ob(o);
    r.site("typing", ok, "component at " + S.object(o));
  }
  // Squares are evaluated even next to mistyped components; those fail as undefined.
  for (int m = 0; m < static_cast<int>(S.num_morphisms()); ++m) {
    const int x = S.src(m), y = S.tgt(m);
    const int lhs = T.compose(a.tgt.mor(m), a.at(x));
    const int rhs = T.compose(a.at(y), a.src.mor(m));
    r.site("naturality", lhs != kNone && lhs == rhs, S.mor_id(m));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Composition calculus

inline Functor compose_functors(const Functor& g2, const Functor& g1) {
  if (!same_category(g1.target, g2.source))
    throw InputError("boundary mismatch composing " + g2.name + " after " + g1.name);
  Functor f;
  f.name = g2.name + "." + g1.name;
  f.source = g1.source;
  f.target = g2.target;
  f.obj_map.resize(g1.obj_map.size());
  f.mor_map.resize(g1.mor_map.size());
  for (std::size_t i = 0; i < f.obj_map.size(); ++i) f.obj_map[i] = g2.ob(g1.obj_map[i]);
  for (std::size_t i = 0; i < f.mor_map.size(); ++i) f.mor_map[i] = g2.mor(g1.mor_map[i]);
  return f;
}

inline NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha) {
  if (!functor_equal(alpha.tgt, beta.src))
    throw InputError("boundary mismatch composing " + beta.name + " after " + alpha.name);
  NatTrans c;
  c.name = beta.name + "*" + alpha.name;
  c.src = alpha.src;
  c.tgt = beta.tgt;
  c.comp.resize(alpha.comp.size());
  for (std::size_t o = 0; o < c.comp.size(); ++o)
    c.comp[o] = alpha.src.target->compose(beta.comp[o], alpha.comp[o]);
  return c;
}

enum class Side { Left, Right };

// Left: F∘α with components F(α_X). Right: α∘F with components α_{F(X)}.
inline NatTrans whisker(Side side, const Functor& F, const NatTrans& a) {
  NatTrans w;
  if (side == Side::Left) {
    if (!same_category(a.src.target, F.source))
      throw InputError("boundary mismatch whiskering " + F.name + " after " + a.name);
    w.name = F.name + a.name;
    w.src = compose_functors(F, a.src);
    w.tgt = compose_functors(F, a.tgt);
    w.comp.resize(a.comp.size());
    for (std::size_t o = 0; o < w.comp.size(); ++o) w.comp[o] = F.mor(a.comp[o]);
  } else {
    if (!same_category(F.target, a.src.source))
      throw InputError("boundary mismatch whiskering " + a.name + " after " + F.name);
    w.name = a.name + F.name;
    w.src = compose_functors(a.src, F);
    w.tgt = compose_functors(a.tgt, F);
    w.comp.resize(F.obj_map.size());
    for (std::size_t o = 0; o < w.comp.size(); ++o) w.comp[o] = a.at(F.obj_map[o]);
  }
  return w;
}

// A 1-cell (U, β, F): P -> G of the 2-category of colax squares.
//   E --F--> A
//   P        G      β: U∘P ⇒ G∘F
//   B --U--> X
struct ColaxCell {
  Functor domain;    // P: E -> B
  Functor codomain;  // G: A -> X
  Functor top;       // F: E -> A
  Functor bottom;    // U: B -> X
  NatTrans fill;     // β
};

// A 2-cell (θ, τ): (U,β,F) ⇒ (V,γ,K).
struct SquareTwoCell {
  ColaxCell source;
  ColaxCell target;
  NatTrans top;     // τ: F ⇒ K
  NatTrans bottom;  // θ: U ⇒ V
};

inline CheckReport validate_cell(const ColaxCell& c) {
  CheckReport r("cell");
  r.touch("shape", true);
  const bool shape = same_category(c.domain.source, c.top.source) &&
                     same_category(c.domain.target, c.bottom.source) &&
                     same_category(c.top.target, c.codomain.source) &&
                     same_category(c.bottom.target, c.codomain.target);
  if (!shape) {
    r.fail("shape", "functors do not form a square", true);
    return r;
  }
  const Functor up = compose_functors(c.bottom, c.domain);
  const Functor gf = compose_functors(c.codomain, c.top);
  r.site("fill-boundary", functor_equal(c.fill.src, up) && functor_equal(c.fill.tgt, gf),
         "fill must go from U.P to G.F", true);
  r.merge(validate_nat_trans(c.fill), "fill.");
  return r;
}

inline ColaxCell identity_cell(const Functor& G) {
  ColaxCell c;
  c.domain = G;
  c.codomain = G;
  c.top = identity_functor(G.source);
  c.bottom = identity_functor(G.target);
  c.fill.name = "1";
  c.fill.src = compose_functors(c.bottom, G);
  c.fill.tgt = compose_functors(G, c.top);
  c.fill.comp.resize(G.source->num_objects());
  for (std::size_t o = 0; o < c.fill.comp.size(); ++o)
    c.fill.comp[o] = G.target->identity(G.ob(static_cast<int>(o)));
  return c;
}

inline ColaxCell compose_colax_cells(const ColaxCell& c2, const ColaxCell& c1) {
  if (!functor_equal(c1.codomain, c2.domain))
    throw InputError("boundary mismatch composing colax cells");
  ColaxCell c;
  c.domain = c1.domain;
  c.codomain = c2.codomain;
  c.top = compose_functors(c2.top, c1.top);
  c.bottom = compose_functors(c2.bottom, c1.bottom);
  c.fill.name = c2.fill.name + "#" + c1.fill.name;
  c.fill.src = compose_functors(c.bottom, c.domain);
  c.fill.tgt = compose_functors(c.codomain, c.top);
  const auto& X2 = *c2.codomain.target;
  c.fill.comp.resize(c1.domain.source->num_objects());
  for (std::size_t e = 0; e < c.fill.comp.size(); ++e) {
    const int b1 = c1.fill.at(static_cast<int>(e));
    const int b2 = c2.fill.at(c1.top.ob(static_cast<int>(e)));
    c.fill.comp[e] = X2.compose(b2, c2.bottom.mor(b1));
  }
  return c;
}

inline bool cells_parallel(const ColaxCell& a, const ColaxCell& b) {
  return functor_equal(a.domain, b.domain) && functor_equal(a.codomain, b.codomain);
}

inline CheckReport check_two_cell(const SquareTwoCell& t) {
  CheckReport r("2-cell");
  r.touch("parallel", true);
  if (!cells_parallel(t.source, t.target)) {
    r.fail("parallel", "source and target cells are not parallel", true);
    return r;
  }
  r.site("top-boundary",
         functor_equal(t.top.src, t.source.top) && functor_equal(t.top.tgt, t.target.top),
         "top must go from F to K", true);
  r.site("bottom-boundary",
         functor_equal(t.bottom.src, t.source.bottom) &&
             functor_equal(t.bottom.tgt, t.target.bottom),
         "bottom must go from U to V", true);
  r.merge(validate_nat_trans(t.top), "top.");
  r.merge(validate_nat_trans(t.bottom), "bottom.");
  r.touch("exchange");
  if (!r.ok()) return r;
  const auto& P = t.source.domain;
  const auto& G = t.source.codomain;
  const auto& X = *G.target;
  for (int e = 0; e < static_cast<int>(P.source->num_objects()); ++e) {
    const int lhs = X.compose(G.mor(t.top.at(e)), t.source.fill.at(e));
    const int rhs = X.compose(t.target.fill.at(e), t.bottom.at(P.ob(e)));
    r.site("exchange", lhs != kNone && lhs == rhs, "at " + P.source->object(e));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Coproducts

struct Coproduct {
  CatPtr sum;
  Functor inl;
  Functor inr;
};

inline std::string tag(int side, const Id& id) {
  return "(" + std::to_string(side) + "," + id + ")";
}

inline Coproduct coproduct(const CatPtr& a, const CatPtr& b) {
  auto s = std::make_shared<FinCategory>(a->name + "+" + b->name);
  std::vector<int> ao(a->num_objects()), bo(b->num_objects());
  std::vector<int> am(a->num_morphisms()), bm(b->num_morphisms());
  auto add_side = [&](const FinCategory& c, int side, std::vector<int>& om, std::vector<int>& mm) {
    for (int o = 0; o < static_cast<int>(c.num_objects()); ++o) {
      om[o] = s->add_object(tag(side, c.object(o)));
      mm[c.identity(o)] = s->identity(om[o]);
    }
    for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m)
      if (!c.is_identity(m)) mm[m] = s->add_morphism(tag(side, c.mor_id(m)), om[c.src(m)], om[c.tgt(m)]);
    for (const auto& [key, h] : c.table()) {
      const int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
      s->set_compose(mm[g], mm[f], mm[h]);
    }
  };
  add_side(*a, 1, ao, am);
  add_side(*b, 2, bo, bm);
  Coproduct c;
  c.sum = s;
  c.inl = Functor{"inl", a, s, ao, am};
  c.inr = Functor{"inr", b, s, bo, bm};
  return c;
}

// [F, G]: A + B -> C.
inline Functor copair(const Coproduct& s, const Functor& f, const Functor& g, std::string name) {
  Functor h;
  h.name = std::move(name);
  h.source = s.sum;
  h.target = f.target;
  h.obj_map.assign(s.sum->num_objects(), kNone);
  h.mor_map.assign(s.sum->num_morphisms(), kNone);
  for (std::size_t o = 0; o < s.inl.obj_map.size(); ++o) h.obj_map[s.inl.obj_map[o]] = f.obj_map[o];
  for (std::size_t m = 0; m < s.inl.mor_map.size(); ++m) h.mor_map[s.inl.mor_map[m]] = f.mor_map[m];
  for (std::size_t o = 0; o < s.inr.obj_map.size(); ++o) h.obj_map[s.inr.obj_map[o]] = g.obj_map[o];
  for (std::size_t m = 0; m < s.inr.mor_map.size(); ++m) h.mor_map[s.inr.mor_map[m]] = g.mor_map[m];
  return h;
}

// F + G: A + B -> A' + B'.
inline Functor coproduct_functor(const Coproduct& from, const Coproduct& to, const Functor& f,
                                 const Functor& g, std::string name) {
  return copair(from, compose_functors(to.inl, f), compose_functors(to.inr, g), std::move(name));
}

}  // namespace commakit
