#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "valext/errors.hpp"
#include "valext/scenario.hpp"

using namespace valext;

namespace {

std::string dir() {
  const char* d = std::getenv("SCENARIO_DIR");
  return d ? d : "scenarios";
}

std::string path(const char* name) { return dir() + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run extend(const char* name, ExtendOptions o = {}) {
  std::ostringstream out, err;
  int c = cmd_extend(path(name), o, out, err);
  return {c, out.str(), err.str()};
}

Run decompose(const char* name) {
  std::ostringstream out, err;
  int c = cmd_decompose(path(name), out, err);
  return {c, out.str(), err.str()};
}

int parse_error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("scenario files parse and print back") {
  auto s = load_scenario(path("char2_general.scn"));
  CHECK(s.base == "F2");
  CHECK(s.base_gens == std::vector<std::string>{"gen a: transcendental"});
  CHECK(s.vars == std::vector<std::string>{"x"});
  CHECK(s.truncation == 1);
  CHECK(parse_scenario(s.print()) == s);
  for (const char* f : {"qi_rank1.scn", "sqrt2_rank2.scn", "transcendental_rank2.scn", "identity.scn", "qi_qi.scn"}) {
    auto t = load_scenario(path(f));
    CHECK(parse_scenario(t.print()) == t);
  }
}

TEST_CASE("parse errors carry the line number") {
  CHECK(parse_error_line("[base]\nbase: Q\n[valuation]\nvars: x\ncolour: blue\n") == 5);
  CHECK(parse_error_line("[base]\nbase: Q\nbase: F2\n") == 3);
  CHECK(parse_error_line("[base\nbase: Q\n") == 1);
  CHECK(parse_error_line("base: Q\n") == 1);
  CHECK(parse_error_line("[base]\nbase: Q\n[options]\npoint-index: two\n") == 4);
  CHECK(parse_error_line("# comment only\n[base]\nbase: Q\n") == -1);
  auto s = parse_scenario("[base]\nbase: Q\n[valuation]\ngens: gen i: algebraic y^2 - 1\nvars: x\n");
  try {
    to_extension(s);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("decompose") {
  auto r = decompose("qi_qi.scn");
  CHECK(r.code == 0);
  CHECK(r.out.find("points: 2") != std::string::npos);
  CHECK(r.out.find("summary: points=2 strictly-maximal=2") != std::string::npos);
  CHECK(decompose("malformed.scn").code == 1);
  auto big = decompose("degree13.scn");
  CHECK(big.code == 2);
  CHECK(big.err.find("factorization bound") != std::string::npos);
  CHECK(decompose("missing-file.scn").code == 1);
}

TEST_CASE("extend") {
  auto r = extend("qi_rank1.scn");
  CHECK(r.code == 0);
  CHECK(r.out.find("Delta: Z lex") != std::string::npos);
  CHECK(r.out.find("residue=\"Q(i)\"") != std::string::npos);
  auto v = extend("qi_rank1.scn", {.verify = true});
  CHECK(v.out.find("weakly-unramified=yes") != std::string::npos);
  CHECK(v.out.find("spec=yes") != std::string::npos);
  auto n = extend("nonstrict.scn");
  CHECK(n.code == 3);
  CHECK(n.err.find("general construction") != std::string::npos);
  auto g = extend("nonstrict.scn", {.truncate = 1});
  CHECK(g.code == 0);
  CHECK(g.out.find("path=general") != std::string::npos);
  CHECK(extend("qi_rank1.scn", {.point = 5}).code == 3);
  CHECK(extend("malformed.scn").code == 1);
}

TEST_CASE("extend is byte-identical across runs") {
  for (const char* f : {"qi_rank1.scn", "sqrt2_rank2.scn", "transcendental_rank2.scn", "char2_general.scn", "identity.scn"}) {
    auto a = extend(f, {.verify = true}), b = extend(f, {.verify = true});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("selftest") {
  std::ostringstream out, err;
  CHECK(cmd_selftest({}, out, err) == 0);
  CHECK(out.str().find("golden cases passed") != std::string::npos);

  std::ostringstream dump, e2;
  CHECK(cmd_selftest({.dump_golden = true}, dump, e2) == 0);
  CHECK(dump.str().find("compositum.Qi_Qi\t2 points") != std::string::npos);

  auto golden = std::filesystem::temp_directory_path() / "valext_mutated_golden.txt";
  {
    std::ofstream f(golden);
    f << "poly.factor_y4p1_F2\t(y + 1)^3\n";
  }
  std::ostringstream o3, e3;
  CHECK(cmd_selftest({.golden_file = golden.string()}, o3, e3) == 4);
  CHECK(o3.str().find("FAIL  poly.factor_y4p1_F2") != std::string::npos);
  std::filesystem::remove(golden);

  // A different seed changes only the randomized part.
  std::ostringstream o4, e4;
  CHECK(cmd_selftest({.seed = 99}, o4, e4) == 0);
  CHECK(o4.str().find("properties (seed 99): ok") != std::string::npos);
}
