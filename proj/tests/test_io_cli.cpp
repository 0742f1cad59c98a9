#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "corpus.hpp"
#include "selfaut/cayley.hpp"
#include "selfaut/cli.hpp"
#include "selfaut/errors.hpp"
#include "selfaut/render.hpp"
#include "selfaut/report.hpp"
#include "selfaut/table_io.hpp"

using namespace selfaut;
namespace fs = std::filesystem;

namespace {
  char const* const ex_sec6 = "# ex6\n"
                              "elements: a b c d\n"
                              "b b b c\n"
                              "b b b b\n"
                              "\n"
                              "c c c c\n"
                              "d d d d\n";

  struct Run {
    int         status;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
  }

  fs::path scratch(std::string const& name) {
    fs::path dir = fs::path(SELFAUT_TEST_TMP) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
  }

  void write(fs::path const& path, std::string const& text) {
    std::ofstream(path, std::ios::binary) << text;
  }
}  // namespace

TEST_CASE("parse_table") {
  auto const S = parse_table(ex_sec6);
  CHECK(S == example_s2_left_zero());
  auto const T = parse_table("elements: e\ne\n");
  CHECK(T.size() == 1);
  try {
    parse_table("elements: a b\na a\na z\n");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse_table(""), ParseError);
  CHECK_THROWS_AS(parse_table("elements: a b\na a\n"), ParseError);
  CHECK_THROWS_AS(parse_table("elements: a b\na a b\nb b\n"), ParseError);
  CHECK_THROWS_AS(parse_table("elements: a\na\na\n"), ParseError);
  CHECK_THROWS_AS(parse_table("elements: p q\nq p\np p\n"), NotAssociative);
  CHECK(write_table(example_s2_left_zero())
        == "elements: a b c d\nb b b c\nb b b b\nc c c c\nd d d d\n");
}

TEST_CASE("table round trip on the corpus") {
  for (auto const& [name, S] : test::corpus()) {
    CAPTURE(name);
    CHECK(parse_table(write_table(S)) == S);
  }
}

TEST_CASE("automaton files") {
  auto const A = example_ab_automaton();
  auto const text = write_automaton(A);
  CHECK(parse_automaton(text) == A);
  CHECK(std::holds_alternative<MealyAutomaton>(parse_any(text)));
  CHECK(std::holds_alternative<FiniteSemigroup>(parse_any(ex_sec6)));
  CHECK_THROWS_AS(parse_automaton("states: a\nalphabet: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("states: a\nalphabet: 0\na 0 a 0\na 0 a 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_automaton("states: a\nalphabet: 0\na 0 b 0\n"), ParseError);
  auto const C = cayley_automaton(steinberg().That);
  CHECK(parse_automaton(write_automaton(C)) == C);
}

TEST_CASE("split_names") {
  CHECK(split_names("a, b ,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_names("(a',a),(1,2)")
        == std::vector<std::string>{"(a',a)", "(1,2)"});
  CHECK(split_names("").empty());
}

TEST_CASE("dot export") {
  auto const trivial = export_dot(cayley_automaton(left_zero(1)));
  CHECK(trivial.find("q0 -> q0 [label=\"x1|x1\"]") != std::string::npos);

  auto const ab = export_dot(example_ab_automaton());
  CHECK(ab.find("q0 [label=\"a\"]") != std::string::npos);
  CHECK(ab.find("q0 -> q1 [label=\"0|0\"]") != std::string::npos);
  CHECK(ab.find("q0 -> q0 [label=\"1|1\"]") != std::string::npos);
  CHECK(ab.find("q1 -> q1 [label=\"0|0\"]") != std::string::npos);
  CHECK(ab.find("q1 -> q0 [label=\"1|0\"]") != std::string::npos);

  auto const l2 = export_dot(cayley_automaton(left_zero(2)));
  CHECK(l2.find("q0 -> q0 [label=\"x1|x1,x2|x1\"]") != std::string::npos);
  CHECK(l2.find("q1 -> q1 [label=\"x1|x2,x2|x2\"]") != std::string::npos);
  CHECK(export_dot(example_ab_automaton()) == ab);
}

TEST_CASE("egg-box rendering") {
  CHECK(render_eggbox(left_zero(1))
        == "D1: 1 x 1 regular\n+----+\n| x1 |\n+----+\n");
  auto const rb = render_eggbox(rectangular_band(2, 3));
  CHECK(rb.rfind("D1: 2 x 3 regular\n", 0) == 0);
  CHECK(rb.find("D2") == std::string::npos);
  auto const that = render_eggbox(steinberg().That);
  auto const d1 = that.find("D1: 1 x 1");
  auto const d2 = that.find("D2: 1 x 1");
  auto const d3 = that.find("D3: 3 x 3");
  CHECK(d1 < d2);
  CHECK(d2 < d3);
  CHECK(d3 != std::string::npos);
}

TEST_CASE("report formats") {
  auto const S = example_s2_left_zero();
  auto const j = report_to_json(S, classify(S));
  for (auto const* key :
       {"band", "aperiodic", "monoid", "relative_identities", "lrr_faithful",
        "s_squared_band", "canonical_injective", "canonical_homomorphism",
        "self_automaton", "self_dual", "c_self_automaton", "sigma_size",
        "kernel_pairs", "homomorphism_counterexample", "period_witness",
        "anti_isomorphism"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["self_automaton"] == true);
  CHECK(j["sigma_size"] == 4);
  auto const c = report_to_json(cyclic_group(2), classify(cyclic_group(2)));
  CHECK(c["sigma_size"] == "infinite");
  CHECK(c["c_self_automaton"] == false);
}

TEST_CASE("census") {
  auto const dir = scratch("census");
  write(dir / "ex_sec6.txt", write_table(example_s2_left_zero()));
  write(dir / "ex_sec8.txt", write_table(example_s2_right_zero()));
  std::ostringstream err;
  auto const r = census(dir, {}, err);
  CHECK(r.rows == 2);
  CHECK(r.failures == 0);
  CHECK(r.csv
        == "file,n,band,aperiodic,monoid,lrr_faithful,s2_band,self_dual,"
           "self_automaton,c_self_automaton,sigma_size\n"
           "ex_sec6.txt,4,false,true,false,true,true,false,true,false,4\n"
           "ex_sec8.txt,4,false,true,false,false,true,false,false,false,2\n");

  auto const empty = scratch("census_empty");
  CHECK(census(empty, {}, err).csv == census_header());

  auto const lz = scratch("census_lz");
  for (std::size_t n = 1; n <= 4; ++n) {
    write(lz / ("L" + std::to_string(n)), write_table(left_zero(n)));
  }
  write(lz / "broken", "elements: a\nb\n");
  std::ostringstream lz_err;
  auto const lr = census(lz, {}, lz_err);
  CHECK(lr.rows == 4);
  CHECK(lr.failures == 1);
  CHECK(lz_err.str().find("broken") != std::string::npos);
  std::istringstream lines(lr.csv);
  std::string        line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::istringstream       cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) {
      fields.push_back(cell);
    }
    REQUIRE(fields.size() == 11);
    CHECK(fields[8] == "true");
  }
}

TEST_CASE("cli") {
  auto const dir = scratch("cli");
  auto const ab  = (dir / "ab.txt").string();
  auto const s6  = (dir / "s6.txt").string();
  auto const c2  = (dir / "c2.txt").string();
  CHECK(run({"gen", "example_ab", "--out", ab}).status == cli::ok);
  CHECK(run({"gen", "example_left_zero_square", "--out", s6}).status == cli::ok);
  CHECK(run({"gen", "cyclic_group", "2", "--out", c2}).status == cli::ok);

  SUBCASE("act and equal") {
    auto r = run({"act", ab, "--word", "a", "--seq", "0,0,1,1"});
    CHECK(r.status == cli::ok);
    CHECK(r.out == "0,0,0,1\n");
    r = run({"equal", ab, "--word1", "a,b", "--word2", "b,b"});
    CHECK(r.status == cli::ok);
    CHECK(r.out == "EQUAL\n");
    r = run({"equal", ab, "--word1", "b,a", "--word2", "b,b"});
    CHECK(r.status == cli::negative);
    // product order: "b,a" applies a first
    auto const A = example_ab_automaton();
    auto const w = words_equal(A, CompositeState({0, 1}), CompositeState({1, 1}));
    CHECK_FALSE(w.equal);
    std::string expected = "DIFFERENT\nwitness: ";
    for (std::size_t i = 0; i < w.witness.size(); ++i) {
      expected += (i ? "," : "") + A.alphabet()[w.witness[i]];
    }
    CHECK(r.out == expected + "\n");
    r = run({"act", ab, "--word", "z", "--seq", "0"});
    CHECK(r.status == cli::usage);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  SUBCASE("classify") {
    auto const st = (dir / "steinberg.txt").string();
    CHECK(run({"gen", "steinberg", "--out", st}).status == cli::ok);
    auto r = run({"classify", st});
    CHECK(r.status == cli::ok);
    CHECK(r.out.find("self_automaton: true\n") != std::string::npos);
    CHECK(r.out.find("band: false\n") != std::string::npos);
    CHECK(r.out.find("c_self_automaton: true\n") != std::string::npos);
    r = run({"classify", c2, "--json"});
    CHECK(r.status == cli::negative);
    CHECK(nlohmann::json::parse(r.out)["sigma_size"] == "infinite");
  }
  SUBCASE("sigma budgets") {
    auto r = run({"sigma", ab});
    CHECK(r.status == cli::exhausted);
    r = run({"sigma", c2});
    CHECK(r.status == cli::negative);
    r = run({"sigma", c2, "--force", "--max-elements", "20"});
    CHECK(r.status == cli::exhausted);
    r = run({"sigma", s6});
    CHECK(r.status == cli::ok);
    CHECK(parse_table(r.out).size() == 4);
    r = run({"pi", s6, "--out", (dir / "pi.txt").string()});
    CHECK(r.status == cli::ok);
    CHECK(r.out == "pi size: 4\n");
  }
  SUBCASE("other commands") {
    CHECK(run({"validate", ab}).out == "ok: automaton with 2 states over 2 symbols\n");
    CHECK(run({"validate", s6}).out == "ok: semigroup of order 4\n");
    CHECK(run({"free", c2, "--max-len", "6"}).out == "ok: 126 words act distinctly\n");
    auto r = run({"analyze", s6, "--json"});
    CHECK(r.status == cli::ok);
    CHECK(nlohmann::json::parse(r.out)["d_classes"] == 2);
    CHECK(run({"eggbox", s6}).out == render_eggbox(example_s2_left_zero()));
    auto const dot = (dir / "ab.dot").string();
    CHECK(run({"automaton", ab, "--dot", dot}).status == cli::ok);
    CHECK(read_file(dot) == export_dot(example_ab_automaton()));
    auto const cdir = scratch("cli_census");
    write(cdir / "s6", read_file(s6));
    r = run({"census", cdir.string()});
    CHECK(r.status == cli::ok);
    CHECK(r.out.rfind(census_header(), 0) == 0);
  }
  SUBCASE("usage errors") {
    CHECK(run({}).status == cli::usage);
    CHECK(run({"frobnicate"}).status == cli::usage);
    CHECK(run({"act", ab}).status == cli::usage);
    CHECK(run({"validate", (dir / "missing").string()}).status == cli::usage);
    CHECK(run({"gen", "left_zero", "x"}).status == cli::usage);
    CHECK(run({"gen", "left_zero", "0"}).status == cli::usage);
    CHECK(run({"--help"}).status == cli::ok);
  }
}
