#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmds/cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"pmds"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = pmds::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(PMDS_DATA_DIR) + "/" + name; }

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "pmds_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char ch : s) n += ch == '\n';
  return n;
}

}  // namespace

TEST_CASE("peel on the triangle") {
  const auto r = invoke({"peel", "--in", data("triangle.txt"), "--alg", "genpeelpp", "--p", "2",
                         "--c", "0.5", "--format", "json", "--emit-nodes"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto row = nlohmann::json::parse(r.out);
  CHECK(row["size"] == 3);
  CHECK(row["avg_degree"] == 2.0);
  CHECK(row["algorithm"] == "genpeelpp");
  CHECK(row["nodes"] == std::vector<std::string>{"0", "1", "2"});

  const auto text = invoke({"peel", "--in", data("triangle.txt")});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("size             3") != std::string::npos);
}

TEST_CASE("peel text output on K4 plus pendant keeps the clique") {
  const auto r = invoke({"peel", "--in", data("k4_pendant.txt"), "--alg", "simpeel",
                         "--emit-nodes"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("nodes            0 1 2 3\n") != std::string::npos);
  CHECK(r.out.find("fp               3\n") != std::string::npos);
}

TEST_CASE("peel refuses p below 1 for genpeelpp without the override") {
  const auto r = invoke({"peel", "--in", data("triangle.txt"), "--alg", "genpeelpp", "--p", "0.5"});
  CHECK(r.code == 1);
  CHECK(r.err == "error: p < 1 requires --override-p-range\n");
  CHECK(r.out.empty());

  const auto ok = invoke({"peel", "--in", data("triangle.txt"), "--alg", "genpeelpp", "--p", "0.5",
                          "--override-p-range", "--format", "csv"});
  CHECK(ok.code == 0);
  CHECK(ok.err.empty());
  CHECK(count_lines(ok.out) == 2);
}

TEST_CASE("peel input errors") {
  auto r = invoke({"peel", "--in", data("no_such_file.txt")});
  CHECK(r.code == 1);
  CHECK(r.err.find("input file not found") != std::string::npos);

  const auto bad = scratch_dir() / "bad.txt";
  std::ofstream(bad) << "1 2\n3\n";
  r = invoke({"peel", "--in", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);

  r = invoke({"peel", "--in", data("triangle.txt"), "--c", "1.5"});
  CHECK(r.code == 1);
  r = invoke({"peel", "--in", data("triangle.txt"), "--alg", "quickpeel"});
  CHECK(r.code == 1);
  CHECK(r.err.find("quickpeel") != std::string::npos);
}

TEST_CASE("bench emits one row per cell and keeps error cells") {
  const auto r = invoke({"bench", "--in", data("triangle.txt"), "--algs", "simpeel,genpeelpp",
                         "--reps", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  CHECK(count_lines(r.out) == 10);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t errors = 0;
  while (std::getline(lines, line)) errors += nlohmann::json::parse(line).contains("error");
  CHECK(errors == 1);  // genpeelpp at p = 0.5

  const auto path = scratch_dir() / "bench.csv";
  const auto c = invoke({"bench", "--in", data("florentine.txt"), "--algs", "maxcore",
                         "--p", "1,2", "--format", "csv", "--out", path.string(), "--reps", "1"});
  REQUIRE(c.code == 0);
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(count_lines(body.str()) == 3);
  CHECK(!c.out.empty());
}

TEST_CASE("bench accepts synthetic inputs deterministically") {
  const auto a = invoke({"stats", "--in", "gen:gnm:200:900", "--seed", "7", "--format", "json"});
  const auto b = invoke({"stats", "--in", "gen:gnm:200:900", "--seed", "7", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["m"] == 900);
  CHECK(invoke({"stats", "--in", "gen:lattice:10:2"}).code == 1);
}

TEST_CASE("oracle reports ratios") {
  auto r = invoke({"oracle", "--in", data("triangle.txt"), "--p", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto row = nlohmann::json::parse(r.out);
  CHECK(row["size"] == 3);
  CHECK(row["ratios"][0]["ratio"] == 1.0);

  r = invoke({"oracle", "--in", data("k4_pendant.txt"), "--alg", "simpeel", "--p", "1",
              "--format", "json", "--emit-nodes"});
  REQUIRE(r.code == 0);
  row = nlohmann::json::parse(r.out);
  CHECK(row["nodes"] == std::vector<std::string>{"0", "1", "2", "3"});
  CHECK(row["ratios"][0]["ratio"] == 1.0);

  const auto base = scratch_dir() / "ratio";
  r = invoke({"oracle", "--in", data("petersen.txt"), "--algs", "simpeel,genpeelpp", "--p",
              "1,2,3", "--out", base.string()});
  REQUIRE(r.code == 0);
  for (const char* alg : {"simpeel", "genpeelpp"}) {
    std::ifstream in(base.string() + "." + alg);
    double p = 0, ratio = 0;
    std::size_t n = 0;
    while (in >> p >> ratio) {
      CHECK(ratio <= 1.0);
      ++n;
    }
    CHECK(n == 3);
  }
}

TEST_CASE("oracle refuses large graphs") {
  auto r = invoke({"oracle", "--in", "gen:gnp:40:0.2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("graph has 40 nodes; exact optimum is limited to 24 (raise with --max-oracle-n)") !=
        std::string::npos);
  r = invoke({"oracle", "--in", "gen:gnp:40:0.2", "--max-oracle-n", "64"});
  CHECK(r.code == 1);
}

TEST_CASE("stats") {
  auto r = invoke({"stats", "--in", data("triangle.txt")});
  REQUIRE(r.code == 0);
  CHECK(r.out == "n=3\nm=3\nmax_degree=2\ndegeneracy=2\ncomponents=1\n");

  const auto empty = scratch_dir() / "empty.txt";
  std::ofstream(empty) << "# nothing here\n";
  r = invoke({"stats", "--in", empty.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("n=0\nm=0\n") == 0);
}

TEST_CASE("help and usage errors") {
  auto r = invoke({"peel", "--help"});
  CHECK(r.code == 0);
  for (const char* flag : {"--in", "--alg", "--p", "--c", "--override-p-range", "--emit-nodes"})
    CHECK(r.out.find(flag) != std::string::npos);
  r = invoke({});
  CHECK(r.code != 0);
  CHECK(!r.err.empty());
  r = invoke({"peel"});
  CHECK(r.code != 0);
  CHECK(!r.err.empty());
}
