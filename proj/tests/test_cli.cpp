#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symdes/cli.hpp"

using namespace symdes;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(json::parse(l));
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("symdes_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("params check") {
    const Run r = run({"params", "check", "11", "5", "2"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(l[0]["command"] == "params check 11 5 2");
    CHECK(l[0]["config_hash"].get<std::string>().size() == 16);
    CHECK(l[1]["verdict"] == "ok");
    CHECK(l[1]["derived"]["order"] == 3);
    CHECK(l[1]["derived"]["order_prime"] == true);
    CHECK(l[1]["derived"]["brc"]["pass"] == true);
    CHECK_FALSE(l[1]["basis"].get<std::string>().empty());
    CHECK(l[2]["claim_violated"] == false);

    CHECK(run({"params", "check", "10", "6", "3"}).code == 0);
    CHECK(lines(run({"params", "check", "10", "6", "3"}).out)[1]["verdict"] == "violated");
  }

  TEST_CASE("searches and table") {
    const Run a = run({"search", "alt-intransitive"});
    CHECK(a.code == 0);
    std::size_t rejected = 0;
    for (const auto& j : lines(a.out))
      if (j.contains("verdict") && j["verdict"] == "rejected") ++rejected;
    CHECK(rejected == 3);

    const Run t = run({"table2"});
    CHECK(t.code == 0);
    std::size_t rows = 0;
    for (const auto& j : lines(t.out))
      if (j.contains("verdict")) ++rows;
    CHECK(rows == 4);
    CHECK(run({"search", "m6"}).code == 0);
    CHECK(run({"search", "alt-imprimitive"}).code == 0);
    CHECK(run({"search", "alt-primitive"}).code == 0);
  }

  TEST_CASE("output is byte-identical across runs and worker counts") {
    CHECK(run({"scan", "omega-even-parabolic"}).out == run({"scan", "omega-even-parabolic"}).out);
    CHECK(run({"--jobs", "1", "scan", "psl-parabolic"}).out == run({"--jobs", "4", "scan", "psl-parabolic"}).out);
    CHECK(run({"report", "all"}).out == run({"report", "all"}).out);
  }

  TEST_CASE("report all succeeds") {
    const Run r = run({"report", "all"});
    CHECK(r.code == 0);
    CHECK(r.err.find("elapsed") != std::string::npos);
    CHECK(r.out.find("elapsed") == std::string::npos);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"params", "check", "11", "5"}).code == 2);
    CHECK(run({"search", "nothing"}).code == 2);
    CHECK(run({"scan", "no-such"}).code == 2);
    CHECK(run({"order", "PSL(2,6)"}).code == 2);
    CHECK(run({"order", "PSL(2,2)"}).code == 2);
    CHECK(run({"--json", "--csv", "table2"}).code == 2);
    CHECK(run({"--grid", "/nonexistent.json", "scan", "psl-parabolic"}).code == 2);
    CHECK(run({"construct", "plane"}).code == 2);
    CHECK(run({"construct", "plane", "4"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("grid files") {
    const auto dir = scratch("grid");
    std::filesystem::create_directories(dir);
    const auto good = dir / "good.json";
    std::ofstream(good) << R"({"predicate":"psl-parabolic","ranges":{"m":[5,6],"q":[2,4]}})";
    const Run r = run({"--grid", good.string(), "scan", "psl-parabolic"});
    CHECK(r.code == 0);
    CHECK(lines(r.out)[1]["inputs"]["ranges"]["m"] == json::array({5, 6}));

    CHECK(run({"--grid", good.string(), "scan", "psu-parabolic"}).code == 2);
    const auto bad = dir / "bad.json";
    std::ofstream(bad) << R"({"predicate":"psl-parabolic","ranges":{"m":[5]}})";
    CHECK(run({"--grid", bad.string(), "scan", "psl-parabolic"}).code == 2);
    const auto broken = dir / "broken.json";
    std::ofstream(broken) << "{not json";
    CHECK(run({"--grid", broken.string(), "scan", "psl-parabolic"}).code == 2);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("csv output") {
    const Run r = run({"--csv", "table2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# command: table2", 0) == 0);
    CHECK(r.out.find("verdict,inputs,derived,reasons,basis") != std::string::npos);
  }

  TEST_CASE("--out writes the report to a file") {
    const auto dir = scratch("out");
    std::filesystem::create_directories(dir);
    const auto file = dir / "report.jsonl";
    const Run r = run({"--out", file.string(), "table2"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(file);
    std::stringstream s;
    s << in.rdbuf();
    CHECK(s.str() == run({"table2"}).out);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("construct writes files that verify-ft accepts") {
    const auto dir = scratch("construct");
    const Run c = run({"construct", "biplane11", "--out", dir.string()});
    CHECK(c.code == 0);
    CHECK(std::filesystem::exists(dir / "biplane11.txt"));
    CHECK(std::filesystem::exists(dir / "biplane11_complement.txt"));
    CHECK(std::filesystem::exists(dir / "biplane11.gens"));
    const Run v = run({"verify-ft", (dir / "biplane11_complement.txt").string(), (dir / "biplane11.gens").string()});
    CHECK(v.code == 0);
    CHECK(lines(v.out)[1]["verdict"] == "flag-transitive");
    CHECK(lines(v.out)[1]["derived"]["group_order"] == 660);

    // A translation alone is an automorphism but not flag-transitive.
    std::ofstream(dir / "cyclic.gens") << "1 2 3 4 5 6 7 8 9 10 0\n";
    const Run t = run({"verify-ft", (dir / "biplane11.txt").string(), (dir / "cyclic.gens").string()});
    CHECK(t.code == 1);
    CHECK(lines(t.out)[1]["verdict"] == "not-flag-transitive");

    std::ofstream(dir / "bad.gens") << "0 2 4 6 8 10 1 3 5 7 9\n";
    CHECK(run({"verify-ft", (dir / "biplane11.txt").string(), (dir / "bad.gens").string()}).code == 2);
    CHECK(run({"verify-ft", (dir / "missing.txt").string(), (dir / "bad.gens").string()}).code == 2);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("order") {
    const Run r = run({"order", "O(7,3)"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l[1]["derived"]["order"] == "2^9*3^9*5*7*13");
    CHECK(l[1]["derived"]["out"] == 2);
  }

  TEST_CASE("brc") {
    CHECK(lines(run({"brc", "43", "7", "1"}).out)[1]["verdict"] == "fail");
    CHECK(lines(run({"brc", "7", "3", "1"}).out)[1]["verdict"] == "pass");
    CHECK(lines(run({"brc", "22", "7", "2"}).out)[1]["verdict"] == "fail");
  }

  TEST_CASE("scan list") {
    const Run r = run({"scan", "list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("psl-parabolic") != std::string::npos);
    CHECK(r.out.find("omega-even-parabolic") != std::string::npos);
  }
}
