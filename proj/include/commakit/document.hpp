#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "catalog.hpp"
#include "coalgebra.hpp"
#include "comonad.hpp"
#include "normal_ar.hpp"

namespace commakit {

struct ParseError : InputError {
  ParseError(int line, const std::string& msg)
      : InputError("line " + std::to_string(line) + ": " + msg) {}
};

enum class Kind { Category, Functor, Nat, Cell, Comonad, Adjunction, Coalgebra, Normal };

inline const char* kind_keyword(Kind k) {
  switch (k) {
    case Kind::Category: return "category";
    case Kind::Functor: return "functor";
    case Kind::Nat: return "nat";
    case Kind::Cell: return "cell";
    case Kind::Comonad: return "comonad";
    case Kind::Adjunction: return "adjunction";
    case Kind::Coalgebra: return "coalgebra";
    case Kind::Normal: return "normal";
  }
  return "?";
}

// Named declarations in order. Names are unique across all kinds.
class Document {
 public:
  struct Entry {
    Kind kind;
    std::string name;
  };

  std::vector<Entry> entries;
  std::map<std::string, CatPtr> categories;
  std::map<std::string, Functor> functors;
  std::map<std::string, NatTrans> nats;
  std::map<std::string, ColaxCell> cells;
  std::map<std::string, Comonad> comonads;
  std::map<std::string, Adjunction> adjunctions;
  std::map<std::string, ColaxDCoalgebra> coalgebras;
  std::map<std::string, NormalColaxCoalgebra> normals;

  bool has(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return true;
    return false;
  }

  const CatPtr& category(const std::string& name) const { return get(categories, name, "category"); }
  const Functor& functor(const std::string& name) const { return get(functors, name, "functor"); }
  const NatTrans& nat(const std::string& name) const { return get(nats, name, "nat"); }
  const Comonad& comonad(const std::string& name) const { return get(comonads, name, "comonad"); }
  const Adjunction& adjunction(const std::string& name) const {
    return get(adjunctions, name, "adjunction");
  }
  const ColaxDCoalgebra& coalgebra(const std::string& name) const {
    return get(coalgebras, name, "coalgebra");
  }
  const NormalColaxCoalgebra& normal(const std::string& name) const {
    return get(normals, name, "normal");
  }

  // A functor name, "Id_<category>", or a composite "F.G.H" of those.
  std::optional<Functor> try_functor(const std::string& expr) const {
    if (auto it = functors.find(expr); it != functors.end()) return it->second;
    if (expr.rfind("Id_", 0) == 0)
      if (auto it = categories.find(expr.substr(3)); it != categories.end())
        return identity_functor(it->second);
    for (std::size_t dot = expr.find('.'); dot != std::string::npos; dot = expr.find('.', dot + 1)) {
      auto g = try_functor(expr.substr(0, dot));
      auto f = g ? try_functor(expr.substr(dot + 1)) : std::nullopt;
      if (g && f && same_category(g->source, f->target)) {
        Functor h = compose_functors(*g, *f);
        h.name = expr;
        return h;
      }
    }
    return std::nullopt;
  }

  Functor resolve_functor(const std::string& expr) const {
    auto f = try_functor(expr);
    if (!f) throw InputError("unknown functor '" + expr + "'");
    return *f;
  }

  // Registration. Each add returns the name under which the item is stored;
  // an equal item already present under that name is reused.
  std::string add(const CatPtr& c) {
    std::string name = c->name;
    for (int i = 2;; ++i) {
      auto it = categories.find(name);
      if (it != categories.end() && same_category(it->second, c)) return name;
      if (it == categories.end() && !has(name)) break;
      name = c->name + "_" + std::to_string(i);
    }
    if (name != c->name) {
      auto copy = std::make_shared<FinCategory>(*c);
      copy->name = name;
      categories[name] = copy;
    } else {
      categories[name] = c;
    }
    entries.push_back({Kind::Category, name});
    return name;
  }

  // Registers source and target; returns the functor renamed to a resolvable expression.
  Functor add(Functor f) {
    f.source = categories.at(add(f.source));
    f.target = categories.at(add(f.target));
    if (auto g = try_functor(f.name); g && functor_equal(*g, f)) return f;
    if (same_category(f.source, f.target) && functor_equal(f, identity_functor(f.source))) {
      f.name = "Id_" + f.source->name;
      return f;
    }
    const std::string base = f.name.empty() ? std::string("F") : f.name;
    std::string name = base;
    for (int i = 2; has(name) || try_functor(name); ++i) {
      if (auto it = functors.find(name); it != functors.end() && functor_equal(it->second, f)) {
        f.name = name;
        return f;
      }
      name = base + "_" + std::to_string(i);
    }
    f.name = name;
    functors[name] = f;
    entries.push_back({Kind::Functor, name});
    return f;
  }

  NatTrans add(NatTrans a) {
    a.src = add(a.src);
    a.tgt = add(a.tgt);
    a.name = fresh(a.name.empty() ? "alpha" : a.name);
    nats[a.name] = a;
    entries.push_back({Kind::Nat, a.name});
    return a;
  }

  void add(const std::string& name, ColaxCell c) {
    c.domain = add(c.domain);
    c.codomain = add(c.codomain);
    c.top = add(c.top);
    c.bottom = add(c.bottom);
    const std::string n = fresh(name);
    cells[n] = c;
    entries.push_back({Kind::Cell, n});
  }

  void add(Comonad T) {
    T.endo = add(T.endo);
    T.name = fresh(T.name);
    comonads[T.name] = T;
    entries.push_back({Kind::Comonad, T.name});
  }

  void add(Adjunction a) {
    a.left = add(a.left);
    a.right = add(a.right);
    a.name = fresh(a.name);
    adjunctions[a.name] = a;
    entries.push_back({Kind::Adjunction, a.name});
  }

  void add(ColaxDCoalgebra c) {
    for (auto& [n, f] : c.functors()) *f = add(*f);
    c.name = fresh(c.name);
    coalgebras[c.name] = c;
    entries.push_back({Kind::Coalgebra, c.name});
  }

  void add(NormalColaxCoalgebra n) {
    n.G = add(n.G);
    n.H = add(n.H);
    n.K = add(n.K);
    n.name = fresh(n.name);
    normals[n.name] = n;
    entries.push_back({Kind::Normal, n.name});
  }

 private:
  template <class M>
  static const typename M::mapped_type& get(const M& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw InputError(std::string("unknown ") + what + " '" + name + "'");
    return it->second;
  }

  std::string fresh(const std::string& base) const {
    std::string name = base;
    for (int i = 2; has(name); ++i) name = base + "_" + std::to_string(i);
    return name;
  }
};

inline Document fixture_document(const Fixture& fx) {
  Document d;
  std::visit([&](const auto& p) { d.add(p); }, fx.payload);
  return d;
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline std::string at_lines(const std::string& field, const NatTrans& a) {
  std::string out;
  const auto& S = *a.src.source;
  const auto& T = *a.src.target;
  for (int o = 0; o < static_cast<int>(S.num_objects()); ++o)
    if (T.valid_morphism(a.at(o)))
      out += field + " at " + S.object(o) + " = " + T.mor_id(a.at(o)) + "\n";
  return out;
}

}  // namespace detail

inline std::string print_category(const FinCategory& c) {
  std::string out = "category " + c.name + "\n";
  for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m) {
    const auto& mm = c.morphism(m);
    if (c.is_identity(m)) out += "object " + c.object(mm.src) + "\n";
    else
      out += "morphism " + mm.id + " : " + c.object(mm.src) + " -> " + c.object(mm.tgt) + "\n";
  }
  for (int f = 0; f < static_cast<int>(c.num_morphisms()); ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.out(c.tgt(f))) {
      if (c.is_identity(g) || !c.has_compose(g, f)) continue;
      const int h = c.compose(g, f);
      out += "compose " + c.mor_id(g) + " . " + c.mor_id(f) + " = " +
             (c.valid_morphism(h) ? c.mor_id(h) : "?") + "\n";
    }
  }
  return out + "end\n";
}

inline std::string print_document(const Document& d) {
  std::string out;
  for (const auto& e : d.entries) {
    if (!out.empty()) out += "\n";
    switch (e.kind) {
      case Kind::Category: out += print_category(*d.categories.at(e.name)); break;
      case Kind::Functor: {
        const auto& f = d.functors.at(e.name);
        const auto& S = *f.source;
        const auto& T = *f.target;
        out += "functor " + e.name + " : " + S.name + " -> " + T.name + "\n";
        for (int o = 0; o < static_cast<int>(S.num_objects()); ++o)
          if (T.valid_object(f.ob(o))) out += "obj " + S.object(o) + " |-> " + T.object(f.ob(o)) + "\n";
        for (int m = 0; m < static_cast<int>(S.num_morphisms()); ++m)
          if (!S.is_identity(m) && T.valid_morphism(f.mor(m)))
            out += "mor " + S.mor_id(m) + " |-> " + T.mor_id(f.mor(m)) + "\n";
        out += "end\n";
        break;
      }
      case Kind::Nat: {
        const auto& a = d.nats.at(e.name);
        out += "nat " + e.name + " : " + a.src.name + " => " + a.tgt.name + "\n";
        const auto& S = *a.src.source;
        const auto& T = *a.src.target;
        for (int o = 0; o < static_cast<int>(S.num_objects()); ++o)
          if (T.valid_morphism(a.at(o))) out += "at " + S.object(o) + " = " + T.mor_id(a.at(o)) + "\n";
        out += "end\n";
        break;
      }
      case Kind::Cell: {
        const auto& c = d.cells.at(e.name);
        out += "cell " + e.name + " {\n";
        out += "domain=" + c.domain.name + "\ncodomain=" + c.codomain.name + "\ntop=" + c.top.name +
               "\nbottom=" + c.bottom.name + "\n";
        out += detail::at_lines("fill", c.fill) + "} end\n";
        break;
      }
      case Kind::Comonad: {
        const auto& T = d.comonads.at(e.name);
        out += "comonad " + e.name + " {\nfunctor=" + T.endo.name + "\n";
        out += detail::at_lines("comult", T.comult) + detail::at_lines("counit", T.counit) + "} end\n";
        break;
      }
      case Kind::Adjunction: {
        const auto& a = d.adjunctions.at(e.name);
        out += "adjunction " + e.name + " {\nleft=" + a.left.name + "\nright=" + a.right.name + "\n";
        out += detail::at_lines("unit", a.unit) + detail::at_lines("counit", a.counit) + "} end\n";
        break;
      }
      case Kind::Coalgebra: {
        const auto& c = d.coalgebras.at(e.name);
        out += "coalgebra " + e.name + " {\n";
        for (const auto& [n, f] : c.functors()) out += n + "=" + f->name + "\n";
        for (const auto& [n, a] : c.transformations()) out += detail::at_lines(n, *a);
        out += "} end\n";
        break;
      }
      case Kind::Normal: {
        const auto& n = d.normals.at(e.name);
        out += "normal " + e.name + " {\nG=" + n.G.name + "\nH=" + n.H.name + "\nK=" + n.K.name + "\n";
        out += detail::at_lines("rho", n.rho) + detail::at_lines("chi", n.chi) +
               detail::at_lines("omega", n.omega) + detail::at_lines("eps", n.eps) +
               detail::at_lines("theta101", n.theta101) + detail::at_lines("theta010", n.theta010);
        out += "} end\n";
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string t; in >> t;) {
    if (t[0] == '#') break;
    out.push_back(t);
  }
  return out;
}

struct AtLine {
  int line;
  std::string object;
  std::string morphism;
};

// Body of a key=value block: references and inline components per field.
struct Fields {
  std::map<std::string, std::pair<int, std::string>> values;
  std::map<std::string, std::vector<AtLine>> components;
  int header = 0;

  bool has(const std::string& k) const { return values.count(k) || components.count(k); }
};

}  // namespace detail

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) lines_.push_back(l);
  }

  Document run() {
    while (next()) {
      const auto& t = tok_;
      const std::string kw = t[0];
      if (t.size() < 2) throw ParseError(line_, "expected a name after '" + kw + "'");
      const std::string name = t[1];
      if (doc_.has(name)) throw ParseError(line_, "duplicate name '" + name + "'");
      if (kw == "category") category(name);
      else if (kw == "functor") functor(name);
      else if (kw == "nat") nat(name);
      else if (kw == "cell" || kw == "comonad" || kw == "adjunction" || kw == "coalgebra" ||
               kw == "normal")
        structured(kw, name);
      else throw ParseError(line_, "unknown declaration '" + kw + "'");
    }
    return std::move(doc_);
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
  int line_ = 0;
  std::vector<std::string> tok_;
  Document doc_;

  bool next() {
    while (pos_ < lines_.size()) {
      tok_ = detail::tokens(lines_[pos_++]);
      line_ = static_cast<int>(pos_);
      if (!tok_.empty()) return true;
    }
    return false;
  }

  void expect_more(const char* block, int header) {
    if (!next())
      throw ParseError(header, std::string("unterminated ") + block + " block (missing 'end')");
  }

  template <class F>
  auto at_line(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(line_, e.what());
    }
  }

  void category(const std::string& name) {
    if (tok_.size() != 2) throw ParseError(line_, "expected 'category NAME'");
    const int header = line_;
    auto c = std::make_shared<FinCategory>(name);
    for (;;) {
      expect_more("category", header);
      const auto& t = tok_;
      if (t[0] == "end" && t.size() == 1) break;
      if (t[0] == "object" && t.size() == 2) {
        at_line([&] { return c->add_object(t[1]); });
      } else if (t[0] == "morphism" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
        const int s = c->find_object(t[3]), d = c->find_object(t[5]);
        if (s == kNone) throw ParseError(line_, "unknown object '" + t[3] + "'");
        if (d == kNone) throw ParseError(line_, "unknown object '" + t[5] + "'");
        at_line([&] { return c->add_morphism(t[1], s, d); });
      } else if (t[0] == "compose" && t.size() == 6 && t[2] == "." && t[4] == "=") {
        int ids[3];
        const std::string* names[3] = {&t[1], &t[3], &t[5]};
        for (int i = 0; i < 3; ++i) {
          ids[i] = c->find_morphism(*names[i]);
          if (ids[i] == kNone) throw ParseError(line_, "unknown morphism '" + *names[i] + "'");
        }
        c->set_compose(ids[0], ids[1], ids[2]);
      } else {
        throw ParseError(line_, "expected object, morphism, compose or end");
      }
    }
    doc_.categories[name] = c;
    doc_.entries.push_back({Kind::Category, name});
  }

  void functor(const std::string& name) {
    const auto& h = tok_;
    if (h.size() != 6 || h[2] != ":" || h[4] != "->")
      throw ParseError(line_, "expected 'functor NAME : CAT -> CAT'");
    const int header = line_;
    const CatPtr S = at_line([&] { return doc_.category(h[3]); });
    const CatPtr T = at_line([&] { return doc_.category(h[5]); });
    Functor f{name, S, T, std::vector<int>(S->num_objects(), kNone),
              std::vector<int>(S->num_morphisms(), kNone)};
    for (;;) {
      expect_more("functor", header);
      const auto& t = tok_;
      if (t[0] == "end" && t.size() == 1) break;
      if (t.size() != 4 || t[2] != "|->" || (t[0] != "obj" && t[0] != "mor"))
        throw ParseError(line_, "expected 'obj A |-> B', 'mor F |-> G' or end");
      if (t[0] == "obj") {
        const int a = S->find_object(t[1]), b = T->find_object(t[3]);
        if (a == kNone) throw ParseError(line_, "unknown object '" + t[1] + "' in " + S->name);
        if (b == kNone) throw ParseError(line_, "unknown object '" + t[3] + "' in " + T->name);
        f.obj_map[a] = b;
      } else {
        const int a = S->find_morphism(t[1]), b = T->find_morphism(t[3]);
        if (a == kNone) throw ParseError(line_, "unknown morphism '" + t[1] + "' in " + S->name);
        if (b == kNone) throw ParseError(line_, "unknown morphism '" + t[3] + "' in " + T->name);
        f.mor_map[a] = b;
      }
    }
    for (int o = 0; o < static_cast<int>(S->num_objects()); ++o)
      if (f.obj_map[o] != kNone && f.mor_map[S->identity(o)] == kNone)
        f.mor_map[S->identity(o)] = T->identity(f.obj_map[o]);
    doc_.functors[name] = f;
    doc_.entries.push_back({Kind::Functor, name});
  }

  void nat(const std::string& name) {
    const auto& h = tok_;
    if (h.size() != 6 || h[2] != ":" || h[4] != "=>")
      throw ParseError(line_, "expected 'nat NAME : FUNCTOR => FUNCTOR'");
    const int header = line_;
    const Functor F = at_line([&] { return doc_.resolve_functor(h[3]); });
    const Functor G = at_line([&] { return doc_.resolve_functor(h[5]); });
    if (!parallel(F, G)) throw ParseError(line_, "functors " + h[3] + " and " + h[5] + " are not parallel");
    std::vector<detail::AtLine> comps;
    for (;;) {
      expect_more("nat", header);
      const auto& t = tok_;
      if (t[0] == "end" && t.size() == 1) break;
      if (t.size() != 4 || t[0] != "at" || t[2] != "=")
        throw ParseError(line_, "expected 'at OBJ = MOR' or end");
      comps.push_back({line_, t[1], t[3]});
    }
    NatTrans a = build_nat(name, F, G, comps);
    doc_.nats[name] = a;
    doc_.entries.push_back({Kind::Nat, name});
  }

  static NatTrans build_nat(const std::string& name, const Functor& F, const Functor& G,
                            const std::vector<detail::AtLine>& comps) {
    NatTrans a{name, F, G, std::vector<int>(F.source->num_objects(), kNone)};
    for (const auto& c : comps) {
      const int o = F.source->find_object(c.object);
      if (o == kNone) throw ParseError(c.line, "unknown object '" + c.object + "' in " + F.source->name);
      const int m = F.target->find_morphism(c.morphism);
      if (m == kNone)
        throw ParseError(c.line, "unknown morphism '" + c.morphism + "' in " + F.target->name);
      a.comp[o] = m;
    }
    return a;
  }

  // Items are "KEY=VALUE", "KEY = VALUE" or "KEY at OBJ = MOR", separated by
  // line breaks or trailing commas. "{" and "}" are optional; "end" closes.
  detail::Fields fields(const std::string& kw, const std::vector<std::string>& allowed_values,
                        const std::vector<std::string>& allowed_nats) {
    detail::Fields f;
    f.header = line_;
    auto known = [](const std::vector<std::string>& v, const std::string& k) {
      return std::find(v.begin(), v.end(), k) != v.end();
    };
    auto item = [&](std::vector<std::string> t) {
      if (t.size() == 5 && t[1] == "at" && t[3] == "=") {
        if (!known(allowed_nats, t[0]))
          throw ParseError(line_, "'" + t[0] + "' is not a transformation field of " + kw);
        f.components[t[0]].push_back({line_, t[2], t[4]});
        return;
      }
      std::string joined;
      for (const auto& s : t) joined += s;
      const auto eq = joined.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == joined.size())
        throw ParseError(line_, "expected 'KEY=VALUE' or 'FIELD at OBJ = MOR'");
      const std::string key = joined.substr(0, eq), value = joined.substr(eq + 1);
      if (!known(allowed_values, key) && !known(allowed_nats, key))
        throw ParseError(line_, "unknown field '" + key + "' in " + kw);
      if (f.values.count(key)) throw ParseError(line_, "field '" + key + "' given twice");
      f.values[key] = {line_, value};
    };
    std::vector<std::string> t(tok_.begin() + 2, tok_.end());
    bool opened = false;
    for (;;) {
      std::vector<std::string> cur;
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::string w = t[i];
        if (w == "{" && !opened && cur.empty()) {
          opened = true;
          continue;
        }
        if (w == "}") {
          if (!cur.empty()) item(cur);
          cur.clear();
          continue;
        }
        if (w == "end" && cur.empty()) {
          if (i + 1 != t.size()) throw ParseError(line_, "unexpected text after 'end'");
          return f;
        }
        const bool last = w.size() > 1 && w.back() == ',';
        if (last) w.pop_back();
        cur.push_back(w);
        if (last) {
          item(cur);
          cur.clear();
        }
      }
      if (!cur.empty()) item(cur);
      expect_more(kw.c_str(), f.header);
      t = tok_;
    }
  }

  Functor field_functor(const detail::Fields& f, const std::string& key, const std::string& kw) {
    auto it = f.values.find(key);
    if (it == f.values.end()) throw ParseError(f.header, kw + " is missing field '" + key + "'");
    const int line = it->second.first;
    try {
      return doc_.resolve_functor(it->second.second);
    } catch (const InputError& e) {
      throw ParseError(line, e.what());
    }
  }

  // A transformation field: a reference to a nat block or inline components.
  NatTrans field_nat(const detail::Fields& f, const std::string& key, const std::string& kw,
                     const Functor& src, const Functor& tgt) {
    auto v = f.values.find(key);
    auto c = f.components.find(key);
    if (v != f.values.end() && c != f.components.end())
      throw ParseError(v->second.first, "field '" + key + "' is given both by name and inline");
    if (v != f.values.end()) {
      try {
        return doc_.nat(v->second.second);
      } catch (const InputError& e) {
        throw ParseError(v->second.first, e.what());
      }
    }
    if (c == f.components.end()) throw ParseError(f.header, kw + " is missing field '" + key + "'");
    return build_nat(key, src, tgt, c->second);
  }

  void structured(const std::string& kw, const std::string& name) {
    auto o = [](const Functor& g, const Functor& f) { return compose_functors(g, f); };
    auto need_parallel = [&](const Functor& a, const Functor& b, int line) {
      if (!a.source || !b.source || !parallel(a, b))
        throw ParseError(line, "functors " + a.name + " and " + b.name + " are not composable here");
    };
    if (kw == "comonad") {
      auto f = fields(kw, {"functor"}, {"comult", "counit"});
      Comonad T;
      T.name = name;
      T.endo = field_functor(f, "functor", kw);
      if (!same_category(T.endo.source, T.endo.target))
        throw ParseError(f.header, "comonad functor must be an endofunctor");
      T.comult = field_nat(f, "comult", kw, T.endo, o(T.endo, T.endo));
      T.counit = field_nat(f, "counit", kw, T.endo, identity_functor(T.endo.source));
      doc_.comonads[name] = T;
      doc_.entries.push_back({Kind::Comonad, name});
    } else if (kw == "adjunction") {
      auto f = fields(kw, {"left", "right"}, {"unit", "counit"});
      Adjunction a;
      a.name = name;
      a.left = field_functor(f, "left", kw);
      a.right = field_functor(f, "right", kw);
      if (!same_category(a.left.source, a.right.target) || !same_category(a.left.target, a.right.source))
        throw ParseError(f.header, "left and right functors are not opposed");
      a.unit = field_nat(f, "unit", kw, identity_functor(a.left.source), o(a.right, a.left));
      a.counit = field_nat(f, "counit", kw, o(a.left, a.right), identity_functor(a.left.target));
      doc_.adjunctions[name] = a;
      doc_.entries.push_back({Kind::Adjunction, name});
    } else if (kw == "cell") {
      auto f = fields(kw, {"domain", "codomain", "top", "bottom"}, {"fill"});
      ColaxCell c;
      c.domain = field_functor(f, "domain", kw);
      c.codomain = field_functor(f, "codomain", kw);
      c.top = field_functor(f, "top", kw);
      c.bottom = field_functor(f, "bottom", kw);
      if (!same_category(c.bottom.source, c.domain.target) ||
          !same_category(c.codomain.source, c.top.target) ||
          !same_category(c.domain.source, c.top.source))
        throw ParseError(f.header, "cell boundary functors do not form a square");
      const Functor s = o(c.bottom, c.domain), t = o(c.codomain, c.top);
      need_parallel(s, t, f.header);
      c.fill = field_nat(f, "fill", kw, s, t);
      doc_.cells[name] = c;
      doc_.entries.push_back({Kind::Cell, name});
    } else if (kw == "coalgebra") {
      ColaxDCoalgebra c;
      std::vector<std::string> nat_names;
      for (const auto& [n, a] : c.transformations()) nat_names.push_back(n);
      auto f = fields(kw, {"G", "H", "Q", "C", "K"}, nat_names);
      c.name = name;
      for (auto& [n, fp] : c.functors()) *fp = field_functor(f, n, kw);
      if (!coalgebra_shape_ok(c))
        throw ParseError(f.header, "expected G,H: A -> X, Q: A -> A, C: X -> X, K: X -> A");
      const auto bounds = expected_boundaries(c);
      auto nats = c.transformations();
      for (std::size_t i = 0; i < nats.size(); ++i)
        *nats[i].second = field_nat(f, nats[i].first, kw, bounds[i].second.first,
                                    bounds[i].second.second);
      doc_.coalgebras[name] = c;
      doc_.entries.push_back({Kind::Coalgebra, name});
    } else {
      auto f = fields(kw, {"G", "H", "K"}, {"rho", "chi", "omega", "eps", "theta101", "theta010"});
      NormalColaxCoalgebra n;
      n.name = name;
      n.G = field_functor(f, "G", kw);
      n.H = field_functor(f, "H", kw);
      n.K = field_functor(f, "K", kw);
      if (!same_category(n.G.source, n.H.source) || !same_category(n.G.target, n.H.target) ||
          !same_category(n.K.source, n.G.target) || !same_category(n.K.target, n.G.source))
        throw ParseError(f.header, "expected G,H: A -> X and K: X -> A");
      const Functor idX = identity_functor(n.G.target), idA = identity_functor(n.G.source);
      n.rho = field_nat(f, "rho", kw, idX, o(n.G, n.K));
      n.chi = field_nat(f, "chi", kw, n.H, n.G);
      n.omega = field_nat(f, "omega", kw, n.G, n.H);
      n.eps = field_nat(f, "eps", kw, o(n.K, n.G), idA);
      n.theta101 = field_nat(f, "theta101", kw, idX, o(n.H, n.K));
      n.theta010 = field_nat(f, "theta010", kw, idA, o(n.K, n.H));
      doc_.normals[name] = n;
      doc_.entries.push_back({Kind::Normal, name});
    }
  }
};

inline Document parse_document(const std::string& text) { return Parser(text).run(); }

// Runs every block's validator; the report merges them under "<name>: ".
inline CheckReport validate_document(const Document& d, const std::set<std::string>& skip = {}) {
  CheckReport r("document");
  for (const auto& e : d.entries) {
    if (skip.count(e.name)) continue;
    const std::string p = e.name + ": ";
    switch (e.kind) {
      case Kind::Category: r.merge(validate_category(*d.categories.at(e.name)), p); break;
      case Kind::Functor: r.merge(validate_functor(d.functors.at(e.name)), p); break;
      case Kind::Nat: r.merge(validate_nat_trans(d.nats.at(e.name)), p); break;
      case Kind::Cell: r.merge(validate_cell(d.cells.at(e.name)), p); break;
      case Kind::Comonad: r.merge(validate_comonad(d.comonads.at(e.name)), p); break;
      case Kind::Adjunction: r.merge(check_adjunction(d.adjunctions.at(e.name)), p); break;
      case Kind::Coalgebra: r.merge(validate_coalgebra(d.coalgebras.at(e.name)), p); break;
      case Kind::Normal: r.merge(validate_normal(d.normals.at(e.name)), p); break;
    }
  }
  return r;
}

// Same declarations in the same order with extensionally equal contents.
inline bool documents_equal(const Document& a, const Document& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& x = a.entries[i];
    const auto& y = b.entries[i];
    if (x.kind != y.kind || x.name != y.name) return false;
    const std::string& n = x.name;
    switch (x.kind) {
      case Kind::Category: {
        const auto& p = a.categories.at(n);
        const auto& q = b.categories.at(n);
        if (p->name != q->name || !same_category(p, q)) return false;
        break;
      }
      case Kind::Functor:
        if (!functor_equal(a.functors.at(n), b.functors.at(n))) return false;
        break;
      case Kind::Nat:
        if (!nat_equal(a.nats.at(n), b.nats.at(n))) return false;
        break;
      case Kind::Cell: {
        const auto& p = a.cells.at(n);
        const auto& q = b.cells.at(n);
        if (!cells_parallel(p, q) || !functor_equal(p.top, q.top) || !functor_equal(p.bottom, q.bottom) ||
            !nat_equal(p.fill, q.fill))
          return false;
        break;
      }
      case Kind::Comonad: {
        const auto& p = a.comonads.at(n);
        const auto& q = b.comonads.at(n);
        if (!functor_equal(p.endo, q.endo) || !nat_equal(p.comult, q.comult) ||
            !nat_equal(p.counit, q.counit))
          return false;
        break;
      }
      case Kind::Adjunction:
        if (!adjunction_equal(a.adjunctions.at(n), b.adjunctions.at(n))) return false;
        break;
      case Kind::Coalgebra: {
        const auto& p = a.coalgebras.at(n);
        const auto& q = b.coalgebras.at(n);
        const auto pf = p.functors(), qf = q.functors();
        for (std::size_t k = 0; k < pf.size(); ++k)
          if (!functor_equal(*pf[k].second, *qf[k].second)) return false;
        const auto pn = p.transformations(), qn = q.transformations();
        for (std::size_t k = 0; k < pn.size(); ++k)
          if (!nat_equal(*pn[k].second, *qn[k].second)) return false;
        break;
      }
      case Kind::Normal: {
        const auto& p = a.normals.at(n);
        const auto& q = b.normals.at(n);
        if (!functor_equal(p.G, q.G) || !functor_equal(p.H, q.H) || !functor_equal(p.K, q.K) ||
            !nat_equal(p.rho, q.rho) || !nat_equal(p.chi, q.chi) || !nat_equal(p.omega, q.omega) ||
            !nat_equal(p.eps, q.eps) || !nat_equal(p.theta101, q.theta101) ||
            !nat_equal(p.theta010, q.theta010))
          return false;
        break;
      }
    }
  }
  return true;
}

// Graphviz: one node line per object, one "->" line per non-identity morphism.
inline std::string to_dot(const FinCategory& c) {
  auto q = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::string out = "digraph " + q(c.name) + " {\n";
  for (const auto& o : c.objects()) out += "  " + q(o) + ";\n";
  for (int m = 0; m < static_cast<int>(c.num_morphisms()); ++m) {
    if (c.is_identity(m)) continue;
    const auto& mm = c.morphism(m);
    out += "  " + q(c.object(mm.src)) + " -> " + q(c.object(mm.tgt)) + " [label=" + q(mm.id) + "];\n";
  }
  return out + "}\n";
}

}  // namespace commakit
