#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace refnc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "refnc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / ("refnc_test_" + name); }

}  // namespace

TEST_CASE("cli group summary") {
  auto r = call({"group", "--catalog", "G(2,1,3)"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["order"] == 48);
  CHECK(j["exponent"] == 12);  // orders 4 and 6 both occur
  CHECK(j["classes"] == 10);
  CHECK(j["mirrors"] == 9);
  CHECK(j["special_subgroup_order"] == 24);
}

TEST_CASE("cli group json round trip through --input") {
  auto r = call({"group", "--catalog", "binary-tetrahedral"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  const auto path = tmp("bt.json");
  Json file = {{"dimension", j["dimension"]}, {"generators", j["generators"]}, {"name", "bt"}};
  {
    std::ofstream f(path);
    f << file.dump();
  }
  auto r2 = call({"group", "--input", path.string()});
  REQUIRE(r2.code == 0);
  auto j2 = Json::parse(r2.out);
  CHECK(j2["order"] == 24);
  CHECK(j2["generators"] == j["generators"]);
  std::filesystem::remove(path);
}

TEST_CASE("cli discriminant of B3") {
  auto r = call({"discriminant", "--catalog", "G(2,1,3)"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  std::vector<MPoly> f;
  for (const auto& s : j["invariants"]) {
    const std::string t = s.get<std::string>();
    f.push_back(MPoly::parse(t.substr(t.find('=') + 1), 3));
  }
  const MPoly delta = MPoly::parse(j["delta_x"].get<std::string>(), 3);
  const MPoly z = MPoly::parse(j["z"].get<std::string>(), 3);
  CHECK(delta == z * z);
  CHECK(MPoly::parse(j["delta_f"].get<std::string>(), 3, "f").substitute(f) == delta);
  CHECK(j["units"]["J"] == "-48");
}

TEST_CASE("cli verify") {
  auto r = call({"verify", "--catalog", "mu2^n:3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  auto s = call({"verify", "--catalog", "binary-dihedral:2"});
  CHECK(s.code == 0);
  CHECK(Json::parse(s.out)["all_pass"] == true);
}

TEST_CASE("cli mckay dot and json") {
  auto r = call({"mckay", "--catalog", "binary-dihedral:2", "--format", "dot"});
  REQUIRE(r.code == 0);
  std::size_t vertices = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (line.find("[label=") != std::string::npos && line.find("->") == std::string::npos) ++vertices;
  }
  CHECK(vertices == 5);
  auto j = Json::parse(call({"mckay", "--catalog", "binary-dihedral-2"}).out);
  CHECK(j["ade"] == "D4");
  CHECK(j["klein_equation"] == "z^2 + x(y^2 + x^2)");
  CHECK(j["vertices"].size() == 5);
}

TEST_CASE("cli fundcycle from a graph file") {
  auto j = Json::parse(call({"mckay", "--catalog", "binary-icosahedral"}).out);
  const auto path = tmp("e8.json");
  {
    std::ofstream f(path);
    f << j["dual_graph"].dump();
  }
  auto r = call({"fundcycle", "--graph", path.string()});
  REQUIRE(r.code == 0);
  auto k = Json::parse(r.out);
  CHECK(k["fundamental_cycle"] == j["fundamental_cycle"]);
  CHECK(graph_from_json(k["graph"]).edges == graph_from_json(j["dual_graph"]).edges);
  std::filesystem::remove(path);
}

TEST_CASE("cli chartab literals parse back") {
  auto j = Json::parse(call({"chartab", "--catalog", "binary-octahedral"}).out);
  const auto g = [] {
    auto c = catalog("binary-octahedral");
    return close_group(c.generators, kDefaultMaxOrder, c.name);
  }();
  const auto t = character_table(g);
  REQUIRE(j["rows"].size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t c = 0; c < g.class_count(); ++c) CHECK(CycNum::parse(j["rows"][i][c].get<std::string>()) == t.rows[i].values[c]);
  }
}

TEST_CASE("cli molien and ncr") {
  auto m = Json::parse(call({"molien", "--catalog", "S3-refl", "--cutoff", "6"}).out);
  CHECK(m["series"] == std::vector<int>{1, 0, 1, 1, 1, 1, 2});
  auto n = Json::parse(call({"ncr", "--catalog", "mu2^n:1", "--cutoff", "5"}).out);
  CHECK(n["hs_Abar"] == std::vector<int>{1, 0, 0, 0, 0, 0});
  CHECK(n["cusp_check"].is_null());
  auto s = Json::parse(call({"ncr", "--catalog", "S3-refl", "--cutoff", "12"}).out);
  CHECK(s["cusp_check"]["shift"] == -1);
  CHECK(series_from_json(s["hs_corner"]).truncate(6) == series_from_json(m["series"]));
  CHECK(s["arrangement_components"].size() == 3);
}

TEST_CASE("cli output is deterministic") {
  auto a = call({"chartab", "--catalog", "G(3,1,2)"});
  auto b = call({"chartab", "--catalog", "G(3,1,2)"});
  CHECK(a.out == b.out);
}

TEST_CASE("cli --out writes a file") {
  const auto path = tmp("out.json");
  auto r = call({"invariants", "--catalog", "mu2^n:2", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  auto j = Json::parse(f);
  CHECK(j["polys"] == std::vector<std::string>{"x1^2", "x2^2"});
  std::filesystem::remove(path);
}

TEST_CASE("cli errors and exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"group", "--bogus"}).code == 2);
  CHECK(call({"group"}).code == 2);
  CHECK(call({"group", "--catalog", "S3", "--input", "x.json"}).code == 2);
  CHECK(call({"chartab", "--catalog", "S3", "--format", "dot"}).code == 2);
  CHECK(call({"molien", "--catalog", "S3", "--cutoff", "-1"}).code == 2);
  auto r = call({"group", "--catalog", "nope"});
  CHECK(r.code == 1);
  auto e = Json::parse(r.err);
  CHECK(e["error"] == "InvalidArgument");
  auto s = call({"invariants", "--catalog", "cyclic-sl2:3"});
  CHECK(s.code == 1);
  CHECK(Json::parse(s.err)["error"] == "VerificationError");
  CHECK(call({"group", "--input", "/nonexistent/g.json"}).code == 1);
  setenv("REFNC_THREADS", "0", 1);
  CHECK(call({"group", "--catalog", "S3"}).code == 2);
  setenv("REFNC_THREADS", "4", 1);
  CHECK(call({"group", "--catalog", "S3"}).code == 0);
  unsetenv("REFNC_THREADS");
}
