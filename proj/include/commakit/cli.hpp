#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "coalgebra.hpp"
#include "comma.hpp"
#include "comonad.hpp"
#include "document.hpp"
#include "liftings.hpp"
#include "normal_ar.hpp"

namespace commakit::cli {

using json = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

// What a command produced: facts, check reports, and an optional document.
struct Outcome {
  json info = json::object();
  std::vector<CheckReport> reports;
  std::optional<Document> built;
  std::string text;  // raw payload (dot, emitted documents)
  bool failed = false;

  bool ok() const {
    if (failed) return false;
    for (const auto& r : reports)
      if (!r.ok()) return false;
    return true;
  }
};

inline json report_json(const CheckReport& r) {
  json recs = json::array();
  for (const auto& c : r.checks) {
    std::string w;
    for (const auto& s : c.witnesses) w += (w.empty() ? "" : "; ") + s;
    recs.push_back({{"label", c.label},
                    {"verdict", c.pass ? "pass" : "fail"},
                    {"witness", w},
                    {"sites", c.sites},
                    {"failures", c.failures},
                    {"structural", c.structural}});
  }
  return {{"subject", r.subject}, {"ok", r.ok()}, {"verdict", r.verdict}, {"records", recs}};
}

inline void print_human(std::ostream& os, const Outcome& o) {
  for (const auto& [k, v] : o.info.items())
    os << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& r : o.reports) {
    os << "== " << r.subject << ": " << (r.ok() ? "PASS" : "FAIL");
    if (!r.verdict.empty()) os << " (" << r.verdict << ")";
    os << "\n";
    for (const auto& c : r.checks) {
      os << "  " << (c.pass ? "pass " : "FAIL ") << c.label << " [";
      if (c.pass) os << c.sites << " sites]";
      else os << c.failures << " of " << c.sites << " sites]";
      os << "\n";
      for (const auto& w : c.witnesses) os << "      " << w << "\n";
    }
  }
  if (!o.text.empty()) os << o.text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

struct Options {
  bool as_json = false;
  bool no_validate = false;
  std::string out;
  std::string file;
  std::string name;
  std::string second;
  bool derived_cubes = false;
  std::size_t budget = 1000000;
  std::uint64_t seed = 0;
  int size = 3;
  std::string fixtures_action;
  std::string fixture;
};

// Loads FILE and validates every block except `subjects`, which the command checks itself.
inline Document load(const Options& o, Outcome& res, const std::set<std::string>& subjects = {}) {
  Document d = parse_document(read_file(o.file));
  if (!o.no_validate) {
    CheckReport v = validate_document(d, subjects);
    if (!v.ok()) {
      v.subject = "load validation of " + o.file;
      res.reports.push_back(std::move(v));
    }
  }
  return d;
}

inline json counts(const FinCategory& c) {
  return {{"name", c.name}, {"objects", c.num_objects()}, {"morphisms", c.num_morphisms()}};
}

// Records a failed precondition and reports whether the command may continue.
inline bool require(Outcome& res, const CheckReport& r) {
  if (r.ok()) return true;
  res.reports.push_back(r);
  return false;
}

inline Outcome cmd_validate(const Options& o) {
  Outcome res;
  Options all = o;
  all.no_validate = true;
  Document d = load(all, res);
  CheckReport v = validate_document(d);
  v.subject = o.file;
  res.info["declarations"] = d.entries.size();
  res.reports.push_back(std::move(v));
  return res;
}

inline Outcome cmd_comma(const Options& o, bool arrow) {
  Outcome res;
  Document d = load(o, res);
  if (!res.ok()) return res;
  const CommaBundle b = arrow ? arrow_category(d.category(o.name)) : comma(d.resolve_functor(o.name));
  res.info["category"] = counts(*b.total);
  res.reports.push_back(validate_category(*b.total));
  res.reports.back().subject = b.total->name;
  Document out;
  out.add(b.d0);
  out.add(b.d1);
  out.add(b.delta);
  res.built = std::move(out);
  return res;
}

inline Outcome cmd_comonad_laws(const Options& o) {
  Outcome res;
  Document d = load(o, res);
  if (!res.ok()) return res;
  res.reports.push_back(check_comonad_laws(d.resolve_functor(o.name)));
  return res;
}

inline Outcome cmd_coalgebra_check(const Options& o) {
  Outcome res;
  Document d = load(o, res, {o.name});
  if (!res.ok()) return res;
  const auto& c = d.coalgebra(o.name);
  CheckReport r = validate_coalgebra(c);
  if (r.ok()) r.verdict = classify(c).verdict;
  res.reports.push_back(std::move(r));
  if (o.derived_cubes) res.reports.push_back(verify_derived_cubes(c));
  return res;
}

inline Outcome cmd_coalgebra_derive(const Options& o) {
  Outcome res;
  Document d = load(o, res, {o.name});
  if (!res.ok()) return res;
  const auto& c = d.coalgebra(o.name);
  if (!require(res, validate_coalgebra(c))) return res;
  const auto dc = derive_comonads(c);
  Comonad onX = dc.onX, onA = dc.onA;
  onX.name = c.name + "_C";
  onA.name = c.name + "_Q";
  res.reports.push_back(validate_comonad(onX));
  res.reports.push_back(validate_comonad(onA));
  res.reports.push_back(derive_coalgebras(c));
  Document out;
  out.add(onX);
  out.add(onA);
  res.built = std::move(out);
  return res;
}

inline Outcome cmd_kleisli_em(const Options& o, bool em) {
  Outcome res;
  Document d = load(o, res);
  if (!res.ok()) return res;
  const Comonad& T = d.comonad(o.name);
  if (!require(res, validate_comonad(T))) return res;
  Document out;
  if (em) {
    const auto e = em_category(T);
    res.info["category"] = counts(*e.cat);
    res.reports.push_back(validate_category(*e.cat));
    res.reports.back().subject = e.cat->name;
    res.reports.push_back(check_adjunction(e.adj));
    out.add(e.adj);
  } else {
    const auto k = kleisli_category(T);
    res.info["category"] = counts(*k.cat);
    res.reports.push_back(validate_category(*k.cat));
    res.reports.back().subject = k.cat->name;
    res.reports.push_back(check_adjunction(k.adj));
    out.add(k.adj);
  }
  res.built = std::move(out);
  return res;
}

inline Outcome cmd_lift(const Options& o, bool em) {
  Outcome res;
  Document d = load(o, res, {o.name});
  if (!res.ok()) return res;
  const auto& c = d.coalgebra(o.name);
  if (!require(res, validate_coalgebra(c))) return res;
  if (em) {
    res.reports.push_back(check_em_liftings(c));
  } else {
    res.reports.push_back(check_kleisli_lifts(c));
    Document out;
    out.add(kleisli_lift_K(c));
    out.add(kleisli_lift_H(c));
    res.built = std::move(out);
  }
  return res;
}

inline Outcome cmd_distlaw(const Options& o) {
  Outcome res;
  Document d = load(o, res, {o.name});
  if (!res.ok()) return res;
  const auto& c = d.coalgebra(o.name);
  if (!require(res, validate_coalgebra(c))) return res;
  if (!require(res, is_split(c))) return res;
  const auto law = dist_law_kappa(c);
  res.reports.push_back(check_distributive_law(law));
  Document out;
  out.add(law.kappa);
  res.built = std::move(out);
  return res;
}

inline Outcome cmd_split(const Options& o) {
  Outcome res;
  Document d = load(o, res, {o.name});
  if (!res.ok()) return res;
  const auto& c = d.coalgebra(o.name);
  if (!require(res, validate_coalgebra(c))) return res;
  CheckReport s = is_split(c);
  s.verdict = s.ok() ? "split" : "not split";
  res.reports.push_back(s);
  if (s.ok()) res.reports.push_back(split_factorizations(c));
  return res;
}

inline Outcome cmd_normal_check(const Options& o) {
  Outcome res;
  Document d = load(o, res, {o.name});
  if (!res.ok()) return res;
  res.reports.push_back(validate_normal(d.normal(o.name)));
  return res;
}

inline Outcome cmd_from_adjunction(const Options& o) {
  Outcome res;
  Document d = load(o, res);
  if (!res.ok()) return res;
  const Adjunction& adj = d.adjunction(o.name);
  if (!require(res, check_adjunction(adj))) return res;
  NormalColaxCoalgebra n = from_adjunction(adj);
  n.name = o.name + "_normal";
  res.reports.push_back(validate_normal(n));
  Document out;
  out.add(n);
  res.built = std::move(out);
  return res;
}

inline Outcome cmd_to_adjunction(const Options& o) {
  Outcome res;
  Document d = load(o, res, {o.name});
  if (!res.ok()) return res;
  const auto& n = d.normal(o.name);
  if (!require(res, validate_normal(n))) return res;
  const Adjunction a = to_adjunction(n);
  res.reports.push_back(check_adjunction(a));
  Document out;
  out.add(a);
  res.built = std::move(out);
  return res;
}

inline Outcome cmd_frobenius(const Options& o) {
  Outcome res;
  Document d = load(o, res);
  if (!res.ok()) return res;
  res.reports.push_back(frobenius_search(d.resolve_functor(o.name), d.resolve_functor(o.second)));
  return res;
}

inline Outcome cmd_find_left_adjoint(const Options& o) {
  Outcome res;
  Document d = load(o, res);
  if (!res.ok()) return res;
  const Functor G = d.resolve_functor(o.name);
  SearchBudget b;
  b.max_objects = 8;
  b.max_morphisms = 64;
  b.max_candidates = o.budget;
  const auto found = brute_force_left_adjoint(G, b);
  CheckReport r("left adjoint of " + G.name);
  r.site("left-adjoint", found.has_value(), "no functor K with K -| " + G.name);
  if (found) {
    r.verdict = "found";
    r.merge(check_adjunction(*found), "adjunction.");
    Adjunction a = *found;
    a.left.name = "K";
    a.name = "K-|" + G.name;
    Document out;
    out.add(a);
    res.built = std::move(out);
  } else {
    r.verdict = "none";
  }
  res.reports.push_back(std::move(r));
  return res;
}

inline Outcome cmd_ar(const Options& o) {
  Outcome res;
  Document d = load(o, res);
  if (!res.ok()) return res;
  res.reports.push_back(check_ar_monad_laws(d.category(o.name), d.category(o.second)));
  return res;
}

inline Outcome cmd_fixtures(const Options& o) {
  Outcome res;
  if (o.fixtures_action == "list") {
    json names = json::array();
    for (const auto& n : builtin_names()) {
      names.push_back(n);
      if (!o.as_json) res.text += n + "\n";
    }
    if (o.as_json) res.info["fixtures"] = names;
    return res;
  }
  if (o.fixture.empty()) throw InputError("fixtures emit needs a fixture name");
  const Fixture fx = builtin(o.fixture);
  res.info["fixture"] = fx.name;
  res.info["note"] = fx.note;
  res.built = fixture_document(fx);
  return res;
}

inline Outcome cmd_random_coalgebra(const Options& o) {
  Outcome res;
  Fixture fx{"random", random_poset_coalgebra(o.seed, o.size), ""};
  Document doc = fixture_document(fx);
  res.reports.push_back(validate_coalgebra(std::get<ColaxDCoalgebra>(fx.payload)));
  res.built = std::move(doc);
  return res;
}

inline Outcome cmd_dot(const Options& o) {
  Outcome res;
  Document d = load(o, res);
  if (!res.ok()) return res;
  res.text = to_dot(*d.category(o.name));
  return res;
}

// Emits the outcome and returns the exit status.
inline int finish(const std::string& command, const Options& o, Outcome res, std::ostream& out) {
  const bool ok = res.ok();
  std::string doc_text;
  // Constructed documents are written only when every check passed.
  if (res.built && ok) {
    doc_text = print_document(*res.built);
    if (!o.out.empty()) write_file(o.out, doc_text);
    else if (command == "fixtures" || command == "random-coalgebra") res.text += doc_text;
  }
  if (o.as_json) {
    json j;
    j["command"] = command;
    j["ok"] = ok;
    j["info"] = res.info;
    json reps = json::array();
    for (const auto& r : res.reports) reps.push_back(report_json(r));
    j["reports"] = reps;
    if (!res.text.empty()) j["text"] = res.text;
    out << j.dump(2) << "\n";
  } else {
    print_human(out, res);
  }
  return ok ? kPass : kFail;
}

// Runs one command line. Exit status: 0 pass, 1 check failure, 2 input error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Finite-category engine for comma comonads and colax coalgebras", "commakit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.as_json, "machine-readable report");
  app.add_option("--out", o.out, "write constructed objects to FILE");
  app.add_flag("--no-validate", o.no_validate, "skip block validation on load");

  std::map<std::string, std::function<Outcome()>> actions;
  auto sub = [&](const std::string& name, const std::string& help,
                 std::function<Outcome()> act) {
    CLI::App* s = app.add_subcommand(name, help);
    actions[name] = std::move(act);
    return s;
  };
  auto with_file = [&](CLI::App* s) {
    s->add_option("FILE", o.file, "document")->required();
    return s;
  };

  with_file(sub("validate", "validate every block", [&] { return cmd_validate(o); }));
  with_file(sub("comma", "build the comma category of a functor", [&] { return cmd_comma(o, false); }))
      ->add_option("--functor", o.name)->required();
  with_file(sub("arrow", "build the arrow category", [&] { return cmd_comma(o, true); }))
      ->add_option("--category", o.name)->required();
  with_file(sub("comonad-laws", "check the comonad laws at a functor",
                [&] { return cmd_comonad_laws(o); }))
      ->add_option("--functor", o.name)->required();
  {
    auto* s = with_file(sub("coalgebra-check", "validate a colax coalgebra",
                            [&] { return cmd_coalgebra_check(o); }));
    s->add_option("--name", o.name)->required();
    s->add_flag("--derived-cubes", o.derived_cubes, "also check the derived cubes");
  }
  with_file(sub("coalgebra-derive", "derived comonads and coalgebras",
                [&] { return cmd_coalgebra_derive(o); }))
      ->add_option("--name", o.name)->required();
  with_file(sub("kleisli", "Kleisli category of a comonad", [&] { return cmd_kleisli_em(o, false); }))
      ->add_option("--comonad", o.name)->required();
  with_file(sub("em", "Eilenberg-Moore category of a comonad", [&] { return cmd_kleisli_em(o, true); }))
      ->add_option("--comonad", o.name)->required();
  with_file(sub("lift-kleisli", "Kleisli liftings of K and H", [&] { return cmd_lift(o, false); }))
      ->add_option("--coalgebra", o.name)->required();
  with_file(sub("lift-em", "Eilenberg-Moore lifting of K", [&] { return cmd_lift(o, true); }))
      ->add_option("--coalgebra", o.name)->required();
  with_file(sub("distlaw", "distributive law of a split coalgebra", [&] { return cmd_distlaw(o); }))
      ->add_option("--coalgebra", o.name)->required();
  with_file(sub("split", "split test and factorizations", [&] { return cmd_split(o); }))
      ->add_option("--coalgebra", o.name)->required();
  with_file(sub("normal-check", "validate a normal coalgebra", [&] { return cmd_normal_check(o); }))
      ->add_option("--name", o.name)->required();
  with_file(sub("from-adjunction", "normal coalgebra of an adjunction",
                [&] { return cmd_from_adjunction(o); }))
      ->add_option("--adjunction", o.name)->required();
  with_file(sub("to-adjunction", "adjunction of a normal coalgebra",
                [&] { return cmd_to_adjunction(o); }))
      ->add_option("--name", o.name)->required();
  {
    auto* s = with_file(sub("frobenius", "Frobenius test for G and K", [&] { return cmd_frobenius(o); }));
    s->add_option("--g", o.name)->required();
    s->add_option("--k", o.second)->required();
  }
  {
    auto* s = with_file(sub("find-left-adjoint", "exhaustive left adjoint search",
                            [&] { return cmd_find_left_adjoint(o); }));
    s->add_option("--functor", o.name)->required();
    s->add_option("--budget", o.budget, "maximum candidate functors")->check(CLI::PositiveNumber);
  }
  {
    auto* s = with_file(sub("ar", "Ar monad laws", [&] { return cmd_ar(o); }));
    s->add_option("--x", o.name)->required();
    s->add_option("--y", o.second)->required();
  }
  {
    auto* s = sub("fixtures", "list or emit builtin fixtures", [&] { return cmd_fixtures(o); });
    s->add_option("ACTION", o.fixtures_action)->required()->check(CLI::IsMember({"list", "emit"}));
    s->add_option("NAME", o.fixture);
  }
  {
    auto* s = sub("random-coalgebra", "random poset coalgebra", [&] { return cmd_random_coalgebra(o); });
    s->add_option("--seed", o.seed)->required();
    s->add_option("--size", o.size)->required()->check(CLI::Range(1, 8));
  }
  with_file(sub("dot", "graphviz export of a category", [&] { return cmd_dot(o); }))
      ->add_option("--category", o.name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return finish(command, o, actions.at(command)(), out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace commakit::cli
