#include <doctest.h>

#include <set>
#include <sstream>

#include "pmds/generators.hpp"
#include "pmds/graph.hpp"
#include "support/naive.hpp"

using namespace pmds;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

std::set<std::pair<std::string, std::string>> id_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> s;
  for (auto [u, v] : g.edges()) {
    auto a = g.original_id(u), b = g.original_id(v);
    s.emplace(std::min(a, b), std::max(a, b));
  }
  return s;
}

void check_simple_graph_invariants(const Graph& g) {
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    CHECK(nb.size() == g.degree(v));
    degree_sum += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      CHECK(nb[i] != v);
      if (i > 0) CHECK(nb[i - 1] < nb[i]);
      CHECK(g.has_edge(nb[i], v));
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("triangle loads with three edges and degree two everywhere") {
  const Graph g = parse("0 1\n1 2\n2 0\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  for (NodeId v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("self-loops and duplicates are normalized away") {
  const Graph g = parse("5 5\n5 7\n7 5\n");
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.original_id(0) == "5");
  CHECK(g.original_id(1) == "7");
}

TEST_CASE("node only seen in a self-loop stays as an isolated node") {
  const Graph g = parse("1 2\n9 9\n");
  CHECK(g.node_count() == 3);
  CHECK(g.degree(2) == 0);
  CHECK(g.original_id(2) == "9");
}

TEST_CASE("comments, blank lines and mixed whitespace") {
  const Graph g = parse("# header\n% matrix-market style\n\n  a\tb  \r\n   \n b c\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("empty input is a valid empty graph") {
  const Graph g = parse("");
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
  CHECK(g.edges().empty());
}

TEST_CASE("malformed lines name their line number") {
  SUBCASE("one token") {
    try {
      parse("0 1\n# c\n2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("three tokens") {
    try {
      parse("0 1 7\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
  }
}

TEST_CASE("missing file is an error") {
  CHECK_THROWS_AS(load_edge_list(EdgeListSource{"/nonexistent/graph.txt"}), std::runtime_error);
}

TEST_CASE("induced degree and edge count on the triangle") {
  const Graph g = parse("0 1\n1 2\n2 0\n");
  auto all = [](NodeId) { return true; };
  auto s01 = [](NodeId v) { return v == 0 || v == 1; };
  auto s12 = [](NodeId v) { return v == 1 || v == 2; };
  auto none = [](NodeId) { return false; };
  CHECK(induced_degree(g, all, 0) == 2);
  CHECK(induced_degree(g, s01, 0) == 1);
  CHECK(induced_degree(g, s12, 0) == 0);
  CHECK(induced_edge_count(g, all) == 3);
  CHECK(induced_edge_count(g, s01) == 1);
  CHECK(induced_edge_count(g, none) == 0);
  CHECK_THROWS_AS(induced_degree(g, all, 3), std::out_of_range);
}

TEST_CASE("random graphs satisfy the simple-graph invariants") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = trial % 2 ? erdos_renyi(40, 0.15, rng) : chung_lu_power_law(60, 0.1, rng);
    check_simple_graph_invariants(g);
    auto all = [](NodeId) { return true; };
    for (NodeId v = 0; v < g.node_count(); ++v) CHECK(induced_degree(g, all, v) == g.degree(v));
    CHECK(induced_edge_count(g, all) == g.edge_count());
  }
}

TEST_CASE("loader normalizes arbitrary noisy edge lists") {
  Rng rng(11);
  std::uniform_int_distribution<int> id(0, 25);
  for (int trial = 0; trial < 20; ++trial) {
    std::ostringstream text;
    std::set<std::pair<int, int>> truth;
    for (int i = 0; i < 80; ++i) {
      int a = id(rng) * 7, b = id(rng) * 7;  // sparse ids
      text << a << ' ' << b << '\n';
      if (a != b) truth.emplace(std::min(a, b), std::max(a, b));
    }
    const Graph g = parse(text.str());
    check_simple_graph_invariants(g);
    CHECK(g.edge_count() == truth.size());
    for (auto [u, v] : g.edges()) {
      const int a = std::stoi(g.original_id(u)), b = std::stoi(g.original_id(v));
      CHECK(truth.count({std::min(a, b), std::max(a, b)}) == 1);
    }
  }
}

TEST_CASE("canonical edge list round-trips") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = largest_component(chung_lu_power_law(30, 0.2, rng));
    std::ostringstream once;
    write_edge_list(once, g);
    const Graph reloaded = parse(once.str());
    CHECK(reloaded.node_count() == g.node_count());
    CHECK(reloaded.edge_count() == g.edge_count());
    CHECK(id_edges(reloaded) == id_edges(g));
  }
}

TEST_CASE("canonical format is tab separated, ordered by index pair") {
  const Graph g = parse("b a\nc a\n");  // b=0, a=1, c=2
  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(out.str() == "b\ta\na\tc\n");
}

TEST_CASE("connected components and largest component") {
  const Graph g = parse("0 1\n1 2\n3 4\n5 5\n");
  auto [label, count] = connected_components(g);
  CHECK(count == 3);
  CHECK(label[0] == label[2]);
  CHECK(label[3] != label[0]);
  const Graph big = largest_component(g);
  CHECK(big.node_count() == 3);
  CHECK(big.edge_count() == 2);
  CHECK(big.original_id(0) == "0");
}

TEST_CASE("generators respect their size contracts") {
  Rng rng(5);
  const Graph gm = erdos_renyi_m(1000, 5000, rng);
  CHECK(gm.node_count() == 1000);
  CHECK(gm.edge_count() == 5000);
  const Graph full = erdos_renyi_m(5, 100, rng);
  CHECK(full.edge_count() == 10);
  const Graph complete = erdos_renyi(6, 1.0, rng);
  CHECK(complete.edge_count() == 15);
}
