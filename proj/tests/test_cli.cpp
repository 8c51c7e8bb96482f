#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "heffter_cli.hpp"
#include "oracles.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "heffter");
  std::ostringstream out;
  std::ostringstream err;
  const int code = heffter::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "heffter_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("construct prints the worked array") {
  const auto r = run_cli({"construct", "--m", "3", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "field p=31 e=1 poly=0,1\n"
        "1 2 4 8 16\n"
        "5 10 20 9 18\n"
        "25 19 7 14 28\n");
  CHECK(r.err.find("heffter: ok") != std::string::npos);
}

TEST_CASE("construct writes to --out and round-trips") {
  const auto path = scratch("a35.txt");
  const auto r = run_cli({"construct", "--m", "3", "--n", "5", "--out", path.string()});
  CHECK(r.code == 0);
  const std::string text = slurp(path);
  CHECK(heffter::array_to_string(heffter::array_from_string(text)) == text);
}

TEST_CASE("construct rejects bad parameters") {
  CHECK(run_cli({"construct", "--m", "3", "--n", "9"}).code == 2);
  CHECK(run_cli({"construct", "--m", "4", "--n", "5"}).code == 2);
  CHECK(run_cli({"construct", "--m", "3", "--n", "5", "--q", "37"}).code == 2);
  CHECK(run_cli({"construct", "--m", "3", "--n", "5", "--xi", "3"}).code == 2);
  CHECK(run_cli({"construct"}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
}

TEST_CASE("construct over GF(343)") {
  const auto r = run_cli({"construct", "--m", "9", "--n", "19"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("field p=7 e=3 poly=", 0) == 0);
}

TEST_CASE("construct from q alone") {
  const auto r = run_cli({"construct", "--q", "43"});
  CHECK(r.code == 0);
  CHECK(r.err.find("h=7, k=3") != std::string::npos);
}

TEST_CASE("analyze in both modes as JSON") {
  const auto r = run_cli({"analyze", "--m", "3", "--n", "5", "--mode", "both", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["faces"]["3"] == 155);
  CHECK(j["faces"]["5"] == 93);
  CHECK(j["genus"] == 94);
  CHECK(j["aut0"] == 15);
  CHECK(j["total"] == 465);
  CHECK(j["modes_agree"] == true);
  CHECK(j["aut_exhaustive"]["aut0_minus"] == 0);
  CHECK(j["aut_restricted"]["cyclic"] == true);
  CHECK(j["ok"] == true);
}

TEST_CASE("analyze over Z_43") {
  const auto r = run_cli({"analyze", "--m", "3", "--n", "7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["aut0"] == 21);
  CHECK(j["total"] == 903);
}

TEST_CASE("analyze refuses exhaustive search on large fields") {
  CHECK(run_cli({"analyze", "--m", "3", "--n", "25", "--mode", "exhaustive"}).code == 2);
}

TEST_CASE("analyze reports a corrupted array file") {
  const auto path = scratch("bad.txt");
  {
    std::ofstream f(path);
    f << "field p=31 e=1 poly=0,1\n1 2 4 8 16\n5 10 20 9 18\n25 19 7 14 27\n";
  }
  const auto r = run_cli({"analyze", "--in", path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("heffter-validation failed") != std::string::npos);
}

TEST_CASE("analyze with reversed rows") {
  // One reversed row of three keeps the orderings compatible; ell must stay below m.
  CHECK(run_cli({"analyze", "--m", "3", "--n", "5", "--ell", "1"}).code == 0);
  CHECK(run_cli({"analyze", "--m", "3", "--n", "5", "--ell", "3"}).code == 2);
}

TEST_CASE("analyze rejects a malformed file") {
  const auto path = scratch("garbage.txt");
  {
    std::ofstream f(path);
    f << "not an array\n";
  }
  CHECK(run_cli({"analyze", "--in", path.string()}).code == 2);
}

TEST_CASE("analyze exports faces") {
  const auto path = scratch("faces.txt");
  const auto r = run_cli({"analyze", "--m", "3", "--n", "5", "--faces", path.string()});
  REQUIRE(r.code == 0);
  std::istringstream in(slurp(path));
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  CHECK(lines.size() == 248);

  const auto json_path = scratch("faces.json");
  REQUIRE(run_cli({"analyze", "--m", "3", "--n", "5", "--format", "json", "--faces", json_path.string()}).code == 0);
  const auto j = nlohmann::json::parse(slurp(json_path));
  CHECK(j.size() == 248);
  CHECK(j[0]["length"] == j[0]["vertices"].size());
}

TEST_CASE("catalog lists every admissible pair") {
  const auto r = run_cli({"catalog", "--qmax", "100"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "m,n,q,kind,globally_simple,compatible,aut0,total,genus");
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> seen;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string m, n, q;
    std::getline(fields, m, ',');
    std::getline(fields, n, ',');
    std::getline(fields, q, ',');
    seen.insert({std::stoull(m), std::stoull(n), std::stoull(q)});
    CHECK(line.find(",true,true,") != std::string::npos);
  }
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> expected;
  for (auto [m, n, q] : oracle::admissible_unordered(100)) {
    expected.insert({std::uint64_t(m), std::uint64_t(n), std::uint64_t(q)});
    expected.insert({std::uint64_t(n), std::uint64_t(m), std::uint64_t(q)});
  }
  CHECK(seen == expected);
}

TEST_CASE("catalog edge cases") {
  const auto small = run_cli({"catalog", "--qmax", "31"});
  CHECK(small.code == 0);
  CHECK(small.out ==
        "m,n,q,kind,globally_simple,compatible,aut0,total,genus\n"
        "3,5,31,prime,true,true,15,465,94\n"
        "5,3,31,prime,true,true,15,465,94\n");
  const auto empty = run_cli({"catalog", "--qmax", "7"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "m,n,q,kind,globally_simple,compatible,aut0,total,genus\n");
  CHECK(run_cli({"catalog", "--qmax", "2000"}).code == 2);
}

TEST_CASE("catalog output is deterministic") {
  const auto a = run_cli({"catalog", "--qmax", "80", "--format", "json"});
  const auto b = run_cli({"catalog", "--qmax", "80", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).size() == heffter::admissible_instances(80).size());
}
