#include <gtest/gtest.h>

#include "commakit/catalog.hpp"
#include "commakit/document.hpp"

using namespace commakit;

namespace {

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) n += l.rfind(prefix, 0) == 0;
  return n;
}

std::string parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

void expect_round_trip(const Document& d, const std::string& what) {
  const std::string once = print_document(d);
  const Document back = parse_document(once);
  EXPECT_EQ(print_document(back), once) << what;
  EXPECT_TRUE(documents_equal(d, back)) << what;
  EXPECT_TRUE(validate_document(back).ok()) << what;
}

const char* kTwo = R"(
category two
object 0
object 1
morphism u : 0 -> 1
end
)";

}  // namespace

TEST(Parse, TerminalCategory) {
  const Document d = parse_document("category one\nobject *\nend\n");
  ASSERT_EQ(d.entries.size(), 1u);
  const auto& c = *d.category("one");
  EXPECT_EQ(c.num_objects(), 1u);
  EXPECT_EQ(c.num_morphisms(), 1u);
  EXPECT_TRUE(validate_document(d).ok());
}

TEST(Parse, EmptyDocument) {
  const Document d = parse_document("");
  EXPECT_TRUE(d.entries.empty());
  EXPECT_EQ(print_document(d), "");
  EXPECT_TRUE(parse_document("# only a comment\n\n   \n").entries.empty());
}

TEST(Parse, CommentsAnywhere) {
  const Document d = parse_document(
      "# header\ncategory two  # trailing\nobject 0\n# between\nobject 1\nmorphism u : 0 -> 1 # u\nend\n");
  EXPECT_EQ(d.category("two")->num_morphisms(), 3u);
}

TEST(Print, TwoHasOneMorphismLine) {
  const std::string out = print_document(parse_document(kTwo));
  EXPECT_EQ(count_lines(out, "morphism "), 1u);
  EXPECT_EQ(count_lines(out, "object "), 2u);
  EXPECT_EQ(count_lines(out, "compose "), 0u);
}

TEST(Print, ByteStable) {
  const Document d = fixture_document(builtin("int_coalg"));
  const std::string a = print_document(d);
  EXPECT_EQ(a, print_document(d));
  EXPECT_EQ(a, print_document(fixture_document(builtin("int_coalg"))));
  EXPECT_EQ(a.back(), '\n');
}

TEST(ParseErrors, CarryLineNumbers) {
  EXPECT_EQ(parse_error("category c\nobject a\nmorphism f : a -> a\ncompose f . g = f\nend\n"),
            "line 4: unknown morphism 'g'");
  EXPECT_EQ(parse_error(std::string(kTwo) + "category two\nend\n"), "line 7: duplicate name 'two'");
  EXPECT_EQ(parse_error("\nmonad M\n"), "line 2: unknown declaration 'monad'");
  EXPECT_EQ(parse_error("category c\nobject a\n"), "line 1: unterminated category block (missing 'end')");
  const std::string unresolved = parse_error(std::string(kTwo) + "functor F : two -> three\nend\n");
  EXPECT_EQ(unresolved.rfind("line 7: ", 0), 0u) << unresolved;
  EXPECT_NE(unresolved.find("three"), std::string::npos);
  const std::string nat = parse_error(std::string(kTwo) + "nat a : Id_two => F\nend\n");
  EXPECT_EQ(nat.rfind("line 7: ", 0), 0u) << nat;
  EXPECT_EQ(parse_error("category c\nobject a\nmorphism f : a -> b\nend\n"), "line 3: unknown object 'b'");
  EXPECT_EQ(parse_error("category c\nwidget\nend\n"), "line 2: expected object, morphism, compose or end");
}

TEST(ParseErrors, AreInputErrors) {
  EXPECT_THROW(parse_document("functor\n"), InputError);
}

TEST(RoundTrip, EveryBuiltin) {
  for (std::string name : builtin_names()) {
    if (name == "discrete(n)") name = "discrete(3)";
    if (name == "chain(n)") name = "chain(3)";
    expect_round_trip(fixture_document(builtin(name)), name);
  }
}

TEST(RoundTrip, RandomDocuments) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Document d;
    const int n = 1 + static_cast<int>(seed % 4);
    d.add(random_poset_coalgebra(seed, n));
    if (seed % 3 == 0) d.add(random_galois(seed, 4));
    if (seed % 5 == 0) d.add(random_monotone_functor(seed, 3));
    ASSERT_TRUE(validate_document(d).ok()) << seed;
    expect_round_trip(d, "seed " + std::to_string(seed));
  }
}

TEST(Grammar, SingleLineBracedCoalgebra) {
  const Document base = fixture_document(builtin("int_coalg"));
  std::string text = print_document(base);
  // rewrite the multi-line coalgebra block as one braced, comma separated line
  const auto at = text.find("coalgebra ");
  ASSERT_NE(at, std::string::npos);
  std::istringstream in(text.substr(at));
  std::string header, line;
  std::getline(in, header);
  std::vector<std::string> items;
  while (std::getline(in, line) && line != "} end") items.push_back(line);
  std::string single = header.substr(0, header.find('{')) + "{ ";
  for (std::size_t i = 0; i < items.size(); ++i) single += items[i] + (i + 1 < items.size() ? ", " : " ");
  single += "} end\n";
  const Document d = parse_document(text.substr(0, at) + single);
  EXPECT_TRUE(documents_equal(base, d));
  EXPECT_EQ(print_document(d), text);
}

TEST(Grammar, FieldErrors) {
  const std::string prefix = print_document(fixture_document(builtin("int2_comonad")));
  const auto at = prefix.find("comonad ");
  ASSERT_NE(at, std::string::npos);
  const std::string cats = prefix.substr(0, at);
  const std::string e = parse_error(cats + "comonad T2 {\nwidget=1\n} end\n");
  EXPECT_NE(e.find("unknown field 'widget'"), std::string::npos) << e;
  const std::string m = parse_error(cats + "comonad T2 {\n} end\n");
  EXPECT_NE(m.find("missing field 'functor'"), std::string::npos) << m;
}

TEST(Validate, PrefixesBlockNames) {
  Document d = parse_document(std::string(kTwo) +
                              "functor F : two -> two\nobj 0 |-> 1\nobj 1 |-> 0\nmor u |-> u\nend\n");
  const auto r = validate_document(d);
  EXPECT_FALSE(r.ok());
  bool prefixed = false;
  for (const auto& l : r.failed_labels()) prefixed |= l.rfind("F: ", 0) == 0;
  EXPECT_TRUE(prefixed);
  EXPECT_TRUE(validate_document(d, {"F"}).ok());
  ASSERT_FALSE(r.checks.empty());
  EXPECT_EQ(r.checks.front().label.rfind("two: ", 0), 0u);
}

TEST(Dot, Two) {
  const std::string dot = to_dot(*parse_document(kTwo).category("two"));
  EXPECT_EQ(dot.rfind("digraph \"two\" {", 0), 0u);
  EXPECT_EQ(count_lines(dot, "  \"0\";"), 1u);
  EXPECT_EQ(count_lines(dot, "  \"1\";"), 1u);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  EXPECT_EQ(edges, 1u);
  EXPECT_NE(dot.find("\"0\" -> \"1\" [label=\"u\"]"), std::string::npos);
}
