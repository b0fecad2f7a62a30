#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "commakit/cli.hpp"

using namespace commakit;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "commakit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  fs::path dir;

  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("commakit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir / name).string();
    cli::write_file(p, text);
    return p;
  }

  std::string emit(const std::string& fixture) {
    const auto p = (dir / (fixture + ".cat")).string();
    const auto r = run({"--out", p, "fixtures", "emit", fixture});
    EXPECT_EQ(r.code, 0) << fixture << r.err;
    return p;
  }
};

std::string with_component(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_F(Cli, FixturesListAndEmitRoundTrip) {
  const auto list = run({"fixtures", "list"});
  ASSERT_EQ(list.code, 0);
  for (std::string name : builtin_names()) {
    EXPECT_NE(list.out.find(name + "\n"), std::string::npos);
    if (name == "discrete(n)") name = "discrete(2)";
    if (name == "chain(n)") name = "chain(3)";
    const auto path = emit(name);
    const std::string text = cli::read_file(path);
    EXPECT_EQ(print_document(parse_document(text)), text) << name;
    EXPECT_EQ(run({"validate", path}).code, 0) << name;
    // stdout carries the same document after '#' comment lines
    const auto shown = run({"fixtures", "emit", name});
    EXPECT_EQ(shown.code, 0);
    EXPECT_TRUE(documents_equal(parse_document(shown.out), parse_document(text))) << name;
  }
}

TEST_F(Cli, CoalgebraCheckJsonListsEveryLedgerLabelOnce) {
  const auto path = emit("int_coalg");
  const auto r = run({"--json", "coalgebra-check", path, "--name", "int_coalg"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  ASSERT_EQ(j["reports"].size(), 1u);
  std::map<std::string, int> seen;
  for (const auto& rec : j["reports"][0]["records"]) {
    seen[rec["label"].get<std::string>()] += 1;
    EXPECT_EQ(rec["verdict"], "pass");
    EXPECT_TRUE(rec.contains("witness"));
  }
  for (const auto& l : ledger_labels()) EXPECT_EQ(seen[l], 1) << l;
  EXPECT_EQ(j["reports"][0]["verdict"], "colax");
}

TEST_F(Cli, MutatedCoalgebraFailsWithItsLabel) {
  const std::string text = cli::read_file(emit("int_coalg"));
  const auto bad = write("bad.cat", with_component(text, "theta100 at 2 = id_2", "theta100 at 2 = 0<2"));
  const auto r = run({"coalgebra-check", bad, "--name", "int_coalg"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  const auto j = json::parse(run({"--json", "coalgebra-check", bad, "--name", "int_coalg"}).out);
  bool named = false;
  for (const auto& rec : j["reports"][0]["records"])
    if (rec["verdict"] == "fail") named |= rec["label"].get<std::string>().find("theta100") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST_F(Cli, ExitCodeMatrix) {
  const auto gal = emit("gal_adjunction");
  const auto coal = emit("int_coalg");
  const auto two = emit("two");
  const auto com = emit("int2_comonad");
  const std::string text = cli::read_file(coal);
  const auto nonsplit = write("nonsplit.cat", with_component(text, "theta100 at 2 = id_2", "theta100 at 2 = 0<2"));
  const auto malformed = write("bad.cat", "category c\nobject a\nmorphism f : a -> nowhere\nend\n");
  const auto unterminated = write("open.cat", "category c\nobject a\n");
  const auto badfunctor = write("badf.cat", print_document(parse_document(cli::read_file(two))) +
                                                "functor F : 2 -> 2\nobj 0 |-> 1\nobj 1 |-> 0\nmor u |-> u\nend\n");

  const std::vector<std::pair<std::vector<std::string>, int>> matrix = {
      {{"comonad-laws", gal, "--functor", "G"}, 0},
      {{"comonad-laws", gal, "--functor", "K.G"}, 0},
      {{"coalgebra-check", coal, "--name", "int_coalg"}, 0},
      {{"coalgebra-check", coal, "--name", "int_coalg", "--derived-cubes"}, 0},
      {{"coalgebra-derive", coal, "--name", "int_coalg"}, 0},
      {{"kleisli", com, "--comonad", "int2"}, 0},
      {{"em", com, "--comonad", "int2"}, 0},
      {{"lift-kleisli", coal, "--coalgebra", "int_coalg"}, 0},
      {{"lift-em", coal, "--coalgebra", "int_coalg"}, 0},
      {{"distlaw", coal, "--coalgebra", "int_coalg"}, 0},
      {{"split", coal, "--coalgebra", "int_coalg"}, 0},
      {{"from-adjunction", gal, "--adjunction", "gal"}, 0},
      {{"find-left-adjoint", gal, "--functor", "G"}, 0},
      {{"frobenius", gal, "--g", "G", "--k", "K"}, 1},
      {{"ar", two, "--x", "2", "--y", "2"}, 0},
      {{"arrow", two, "--category", "2"}, 0},
      {{"comma", gal, "--functor", "G"}, 0},
      {{"dot", two, "--category", "2"}, 0},
      {{"validate", coal}, 0},
      {{"random-coalgebra", "--seed", "7", "--size", "3"}, 0},
      {{"coalgebra-check", nonsplit, "--name", "int_coalg"}, 1},
      {{"distlaw", nonsplit, "--coalgebra", "int_coalg"}, 1},
      {{"split", nonsplit, "--coalgebra", "int_coalg"}, 1},
      {{"lift-em", nonsplit, "--coalgebra", "int_coalg"}, 1},
      {{"validate", nonsplit}, 1},
      {{"validate", badfunctor}, 1},
      {{"comonad-laws", badfunctor, "--functor", "F"}, 1},
      {{"validate", malformed}, 2},
      {{"validate", unterminated}, 2},
      {{"validate", (dir / "missing.cat").string()}, 2},
      {{"coalgebra-check", coal, "--name", "nope"}, 2},
      {{"comonad-laws", gal, "--functor", "Nope"}, 2},
      {{"find-left-adjoint", gal, "--functor", "G", "--budget", "1"}, 2},
      {{"random-coalgebra", "--seed", "1", "--size", "9"}, 2},
      {{"fixtures", "emit", "nope"}, 2},
      {{"fixtures", "frobnicate"}, 2},
      {{"no-such-command"}, 2},
      {{}, 2},
  };
  for (const auto& [args, want] : matrix) {
    const auto r = run(args);
    std::string line;
    for (const auto& a : args) line += a + " ";
    EXPECT_EQ(r.code, want) << line << "\n" << r.out << r.err;
    if (want == 2) {
      EXPECT_NE(r.err.find("error: "), std::string::npos) << line;
    }
  }
}

TEST_F(Cli, SizeBudgetIsAnInputError) {
  const auto gal = emit("gal_adjunction");
  setenv("COMMA_KIT_BUDGET", "5", 1);
  const auto r = run({"comonad-laws", gal, "--functor", "G"});
  unsetenv("COMMA_KIT_BUDGET");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("size budget exceeded"), std::string::npos) << r.err;
}

TEST_F(Cli, OutIsWrittenOnlyOnSuccess) {
  const auto coal = emit("int_coalg");
  const auto good = (dir / "derived.cat").string();
  ASSERT_EQ(run({"--out", good, "coalgebra-derive", coal, "--name", "int_coalg"}).code, 0);
  const Document d = parse_document(cli::read_file(good));
  EXPECT_TRUE(validate_document(d).ok());
  EXPECT_TRUE(d.comonads.count("int_coalg_C"));
  EXPECT_TRUE(d.comonads.count("int_coalg_Q"));

  const std::string text = cli::read_file(coal);
  const auto bad = write("bad.cat", with_component(text, "theta100 at 2 = id_2", "theta100 at 2 = 0<2"));
  const auto none = (dir / "none.cat").string();
  EXPECT_EQ(run({"--out", none, "coalgebra-derive", bad, "--name", "int_coalg"}).code, 1);
  EXPECT_FALSE(fs::exists(none));
  EXPECT_EQ(run({"--out", none, "distlaw", bad, "--coalgebra", "int_coalg"}).code, 1);
  EXPECT_FALSE(fs::exists(none));
}

TEST_F(Cli, ConstructedDocumentsRoundTrip) {
  const auto gal = emit("gal_adjunction");
  const auto two = emit("two");
  const auto coal = emit("int_coalg");
  const std::vector<std::vector<std::string>> cmds = {
      {"comma", gal, "--functor", "G"},
      {"arrow", two, "--category", "2"},
      {"from-adjunction", gal, "--adjunction", "gal"},
      {"find-left-adjoint", gal, "--functor", "G"},
      {"lift-kleisli", coal, "--coalgebra", "int_coalg"},
      {"distlaw", coal, "--coalgebra", "int_coalg"},
      {"random-coalgebra", "--seed", "3", "--size", "4"},
  };
  int i = 0;
  for (auto args : cmds) {
    const auto p = (dir / ("built" + std::to_string(i++) + ".cat")).string();
    args.insert(args.begin(), {"--out", p});
    ASSERT_EQ(run(args).code, 0) << args[2];
    const std::string text = cli::read_file(p);
    EXPECT_EQ(print_document(parse_document(text)), text) << args[2];
    EXPECT_EQ(run({"validate", p}).code, 0) << args[2];
  }
}

TEST_F(Cli, FromAndToAdjunction) {
  const auto gal = emit("gal_adjunction");
  const auto n = (dir / "normal.cat").string();
  ASSERT_EQ(run({"--out", n, "from-adjunction", gal, "--adjunction", "gal"}).code, 0);
  EXPECT_EQ(run({"normal-check", n, "--name", "gal_normal"}).code, 0);
  const auto back = (dir / "back.cat").string();
  ASSERT_EQ(run({"--out", back, "to-adjunction", n, "--name", "gal_normal"}).code, 0);
  const Document d = parse_document(cli::read_file(back));
  ASSERT_EQ(d.adjunctions.size(), 1u);
  EXPECT_TRUE(adjunction_equal(d.adjunctions.begin()->second, gal_adjunction()));
}

TEST_F(Cli, DotOnTwo) {
  const auto r = run({"dot", emit("two"), "--category", "2"});
  ASSERT_EQ(r.code, 0);
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(r.out);
  for (std::string l; std::getline(in, l);) {
    if (l.find("->") != std::string::npos) ++edges;
    else if (l.size() > 2 && l.back() == ';') ++nodes;
  }
  EXPECT_EQ(nodes, 2u);
  EXPECT_EQ(edges, 1u);
}

TEST_F(Cli, HumanReportShape) {
  const auto r = run({"coalgebra-check", emit("int_coalg"), "--name", "int_coalg"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("== "), std::string::npos);
  EXPECT_NE(r.out.find(": PASS (colax)"), std::string::npos) << r.out;
  for (const auto& l : ledger_labels()) EXPECT_NE(r.out.find("pass " + l + " ["), std::string::npos) << l;
}

TEST_F(Cli, BinaryMatchesInProcessRun) {
  const auto coal = emit("int_coalg");
  const auto outfile = (dir / "stdout.txt").string();
  const std::string base = std::string(COMMAKIT_BIN) + " ";
  EXPECT_EQ(std::system((base + "coalgebra-check " + coal + " --name int_coalg > " + outfile).c_str()), 0);
  EXPECT_EQ(cli::read_file(outfile), run({"coalgebra-check", coal, "--name", "int_coalg"}).out);
  const int status = std::system((base + "validate " + (dir / "missing.cat").string() + " 2> /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
