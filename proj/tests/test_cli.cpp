#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "vbraid/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "vbraid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status =
      vbraid::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("vbraid_cli_" + name);
}

}  // namespace

TEST_CASE("cli act") {
  auto r = run({"act", "--n", "2", "--vector", "base", "--word", "s1"});
  CHECK(r.status == 0);
  CHECK(r.out == "1,0,0,2\n");
  CHECK(run({"act", "--n", "2", "--vector", "base", "--word", "s1"}).out == r.out);

  CHECK(run({"act", "--vector", "0,1,0,1,0,1", "--word", "s1 s2 s1"}).out == "2,0,1,0,0,3\n");
  CHECK(run({"act", "--vector", "0,2,0,1", "--word", "s1 r1"}).out == "0,3,2,0\n");
  CHECK(run({"act", "--vector", "base", "--word", "s2"}).out == "0,1,1,0,0,2\n");

  CHECK(run({"act", "--n", "2", "--vector", "base", "--word", "s2"}).status == 1);
  CHECK(run({"act", "--n", "3", "--vector", "0,1,0,1", "--word", "s1"}).status == 1);
  CHECK(run({"act", "--vector", "base"}).status == 1);
  CHECK(run({"act", "--n", "2", "--vector", "base", "--word", "q1"}).status == 1);
}

TEST_CASE("cli eq") {
  auto r = run({"eq", "--group", "vbn", "--n", "3", "--w1", "r1 s2 s1", "--w2", "s2 s1 r2"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("Distinct\n", 0) == 0);
  CHECK(r.out.find("w1: 2,0,0,1,0,2") != std::string::npos);
  CHECK(r.out.find("w2: 2,0,0,2,0,1") != std::string::npos);

  CHECK(run({"eq", "--group", "bn", "--n", "3", "--w1", "s1 s2 s1", "--w2", "s2 s1 s2"})
            .out.rfind("Equal\n", 0) == 0);
  CHECK(run({"eq", "--group", "vb2", "--w1", "r1 r1", "--w2", ""}).out.rfind("Equal\n", 0) == 0);
  CHECK(run({"eq", "--group", "vbn", "--n", "3", "--w1", "s1 s2 s1", "--w2", "s2 s1 s2",
             "--battery", "50", "--seed", "1"})
            .out.rfind("Unknown\n", 0) == 0);
  CHECK(run({"eq", "--group", "bn", "--w1", "r1", "--w2", "s1"}).status == 1);
  CHECK(run({"eq", "--group", "xx", "--w1", "s1", "--w2", "s1"}).status == 1);
}

TEST_CASE("cli perm and reduce") {
  CHECK(run({"perm", "--word", "s1 s2 s1"}).out == "3 2 1\n");
  CHECK(run({"perm", "--word", "r1 r1"}).out == "1 2\n");
  CHECK(run({"reduce", "--word", "s1 S1 r2 r2"}).out == "\n");
  CHECK(run({"reduce", "--word", "s1 r1 S2 s2"}).out == "s1 r1\n");
}

TEST_CASE("cli moved-fraction requires a seed") {
  CHECK(run({"moved-fraction", "--word", "r1"}).status == 1);
  auto r = run({"moved-fraction", "--word", "", "--n", "3", "--samples", "100", "--seed", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "0.000000\n");
}

TEST_CASE("cli hunt writes a reproducible report") {
  const auto out1 = temp_path("hunt1.json");
  const auto out2 = temp_path("hunt2.json");
  const auto jl = temp_path("hunt.jsonl");
  std::vector<std::string> base = {"hunt", "--n", "3", "--count", "3000", "--seed", "12",
                                   "--inject", "s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1"};
  auto a = base;
  a.insert(a.end(), {"--out", out1.string(), "--jsonl", jl.string(), "--workers", "1"});
  auto b = base;
  b.insert(b.end(), {"--out", out2.string(), "--workers", "3"});
  REQUIRE(run(a).status == 0);
  REQUIRE(run(b).status == 0);
  auto j1 = nlohmann::json::parse(slurp(out1));
  auto j2 = nlohmann::json::parse(slurp(out2));
  j1.erase("runtime_seconds");
  j2.erase("runtime_seconds");
  CHECK(j1 == j2);
  CHECK(j1["words_tested"] == 3001);
  CHECK_FALSE(slurp(jl).empty());
  CHECK(run({"hunt", "--n", "3", "--count", "10", "--out", out1.string()}).status == 1);
  std::filesystem::remove(out1);
  std::filesystem::remove(out2);
  std::filesystem::remove(jl);
}

TEST_CASE("cli verify-diagram and certify") {
  const auto js = temp_path("diagram.json");
  auto r = run({"verify-diagram", "--samples", "500", "--seed", "3", "--json", js.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS closure") != std::string::npos);
  auto j = nlohmann::json::parse(slurp(js));
  CHECK(j["ok"] == true);
  CHECK(j["arrows"].size() == 19);
  std::filesystem::remove(js);

  auto c = run({"certify", "--word", "s1"});
  CHECK(c.status == 0);
  CHECK(c.out == "nontrivial\nimage: 2,0,0,3\npath: B1 -> B2\nnorms: 3 5\n");
  CHECK(run({"certify", "--word", "s1 S1"}).out.rfind("trivial\n", 0) == 0);
  CHECK(run({"certify", "--word", "s2"}).status == 1);
  CHECK(run({"certify", "--word", "s1", "--start", "0,1,0,1"}).status == 1);
}
