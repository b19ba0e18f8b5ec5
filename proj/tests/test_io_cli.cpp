#include "ctri/cli.hpp"
#include "ctri/error.hpp"
#include "ctri/generators.hpp"
#include "ctri/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace ctri;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ctri-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string without_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("timestamp:", 0) != 0) out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("pointset round trip") {
  const auto inst = gen_pascal_ttt(2);
  const std::string text = format_pointset(*inst.sets, "pascal");
  const LabeledSets back = parse_pointset(text);
  CHECK(back.a == inst.sets->a);
  CHECK(back.b == inst.sets->b);
  CHECK(back.c == inst.sets->c);
  CHECK(format_pointset(back, "pascal") == text);

  const auto grid = gen_grid_with_directions(4);
  const LabeledSets g = parse_pointset(format_pointset(*grid));
  CHECK(g.c_at_infinity);
  CHECK(g.c == grid->c);
}

TEST_CASE("pointset parse errors name the line") {
  try {
    parse_pointset("# set A\n1 2\n1 x\n");
    FAIL("expected an input error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInput);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_pointset("1 2\n"), Error);
}

TEST_CASE("pairs parsing") {
  CHECK(parse_pairs("all", 4).size() == 6);
  const auto p = parse_pairs("0 1\n# comment\n2 3\n", 4);
  REQUIRE(p.size() == 2);
  CHECK(p[1] == IndexPair{2, 3});
  CHECK_THROWS_AS(parse_pairs("0 9\n", 4), Error);
}

TEST_CASE("content hash") {
  CHECK(content_hash("") == "cbf29ce484222325");
  CHECK(content_hash("a") == "af63dc4c8601ec8c");
  CHECK(content_hash("a") != content_hash("b"));
}

TEST_CASE("claims verify against the pointset and catch tampering") {
  const auto inst = gen_pascal_ttt(4);
  Report r("test");
  r.claim(claim_tictactoe(inst.expected));
  r.claim(claim_conic(inst.conic));
  std::vector<Index> a{0, 1, 2}, b{0, 1, 2};
  r.claim(claim_on_conic(a, b));
  const std::string text = r.str(false);
  CHECK(text.find("timestamp") == std::string::npos);
  CHECK(verify_claims(text, *inst.sets).ok());

  LabeledSets moved = *inst.sets;
  moved.b[0] = HPoint(moved.b[0].ax() + 1, moved.b[0].ay());
  const auto bad = verify_claims(text, moved);
  CHECK_FALSE(bad.ok());
  std::size_t failed = 0;
  for (const auto& c : bad.claims) failed += !c.ok;
  CHECK(failed >= 2);
}

TEST_CASE("report fields") {
  Report r("demo");
  r.set("count", "7");
  r.note("hello");
  const std::string s = r.str(false);
  CHECK(s.rfind(kReportVersion, 0) == 0);
  CHECK(report_field(s, "count") == "7");
  CHECK(report_field(s, "command") == "demo");
  CHECK(report_field(s, "missing").empty());
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorCode::kNoBranchPair) == kExitNotFound);
  CHECK(exit_code_for(ErrorCode::kDegenerateSimilarTriples) == kExitHypothesis);
  CHECK(exit_code_for(ErrorCode::kNotConvex) == kExitHypothesis);
  CHECK(exit_code_for(ErrorCode::kInput) == kExitInput);
  CHECK(cli({"frobnicate"}).code == kExitInput);
  CHECK(cli({"triples", "--input", "/nonexistent/points.txt"}).code == kExitInput);
}

TEST_CASE("cli: generate, search and verify a k-system") {
  const fs::path dir = scratch("ksystem");
  auto g = cli({"generate", "--kind", "ksystem", "--k", "3", "--out", dir.string()});
  REQUIRE(g.code == 0);
  CHECK(fs::exists(dir / "points.txt"));
  CHECK(fs::exists(dir / "planted.txt"));
  CHECK(cli({"verify", "--input", (dir / "planted.txt").string()}).code == 0);

  const fs::path report = dir / "ks.txt";
  auto s = cli({"search-ksystem", "--input", dir.string(), "--out", report.string()});
  CHECK(s.code == 0);
  auto v = cli({"verify", "--input", report.string()});
  CHECK(v.code == 0);
  CHECK(v.out.find("result: pass") != std::string::npos);

  // Determinism up to the timestamp.
  const fs::path again = dir / "ks2.txt";
  cli({"search-ksystem", "--input", dir.string(), "--out", again.string()});
  CHECK(without_timestamp(read_text(report)) == without_timestamp(read_text(again)));

  // A changed pointset no longer matches the recorded hash.
  write_text(dir / "points.txt", read_text(dir / "points.txt") + "\n");
  CHECK(cli({"verify", "--input", report.string()}).code == kExitInput);
}

TEST_CASE("cli: tampered claims fail verification") {
  const fs::path dir = scratch("tamper");
  REQUIRE(cli({"generate", "--kind", "pascal-ttt", "--seed", "3", "--out", dir.string()}).code == 0);
  const fs::path report = dir / "ttt.txt";
  REQUIRE(cli({"search-ttt", "--input", dir.string(), "--out", report.string()}).code == 0);
  std::string text = read_text(report);
  const auto pos = text.find("claim tictactoe rows=");
  REQUIRE(pos != std::string::npos);
  const auto digit = text.find_first_of("0123456789", pos);
  text[digit] = text[digit] == '0' ? '1' : '0';
  write_text(report, text);
  const auto v = cli({"verify", "--input", report.string()});
  CHECK(v.code == kExitNotFound);
  CHECK(v.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli: degenerate family exits with the hypothesis code") {
  const fs::path dir = scratch("degenerate");
  REQUIRE(cli({"generate", "--kind", "degenerate-family", "--out", dir.string()}).code == 0);
  const auto r = cli({"extract-conic", "--input", dir.string()});
  CHECK(r.code == kExitHypothesis);
  CHECK(r.out.find("(2, 0)") != std::string::npos);
}

TEST_CASE("cli: conic instance extraction and ordering") {
  const fs::path dir = scratch("conic");
  REQUIRE(cli({"generate", "--kind", "conic-instance", "--n", "20", "--seed", "1", "--out", dir.string()}).code == 0);
  const fs::path report = dir / "conic.txt";
  CHECK(cli({"extract-conic", "--input", dir.string(), "--out", report.string()}).code == 0);
  CHECK(cli({"verify", "--input", report.string()}).code == 0);

  const fs::path ma = scratch("avoiding");
  REQUIRE(cli({"generate", "--kind", "mutually-avoiding", "--n", "12", "--out", ma.string()}).code == 0);
  const fs::path ordered = ma / "ordered";
  CHECK(cli({"order", "--input", ma.string(), "--out", ordered.string()}).code == 0);
  CHECK(cli({"verify", "--input", (ordered / "report.txt").string()}).code == 0);
}

TEST_CASE("cli: circle directions and grid triples") {
  const fs::path dir = scratch("circle");
  REQUIRE(cli({"generate", "--kind", "circle", "--n", "16", "--out", dir.string()}).code == 0);
  const auto r = cli({"directions", "--input", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("conic: 1 0 1 0 0 -1") != std::string::npos);

  const fs::path grid = scratch("grid");
  REQUIRE(cli({"generate", "--kind", "grid", "--n", "4", "--out", grid.string()}).code == 0);
  CHECK(cli({"triples", "--input", grid.string()}).code == 0);
}
