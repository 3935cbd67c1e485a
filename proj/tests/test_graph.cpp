#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "copcut/graph.hpp"

using namespace copcut;

TEST_CASE("make_graph normalizes edges") {
  Graph g = make_graph(4, {{2, 0}, {0, 2}, {3, 1}, {1, 3}, {0, 1}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edges[0] == std::make_pair(0, 1));
  CHECK(g.edges[1] == std::make_pair(0, 2));
  CHECK(g.edges[2] == std::make_pair(1, 3));

  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("adjacency and complement are consistent") {
  Graph g = make_graph(4, {{0, 1}, {2, 3}});
  auto adj = g.adjacency();
  CHECK(adj[0][1]);
  CHECK(adj[1][0]);
  CHECK_FALSE(adj[0][2]);
  auto comp = g.complement_edges();
  CHECK(comp.size() == 4);  // C(4,2) - 2
  for (auto [i, j] : comp) {
    CHECK_FALSE(adj[i][j]);
  }
}

TEST_CASE("complete_graph") {
  Graph k5 = complete_graph(5);
  CHECK(k5.edge_count() == 10);
  CHECK(k5.complement_edges().empty());
  CHECK(brute_force_clique(k5) == 5);
}

TEST_CASE("erdos_renyi is deterministic and respects the edge probability") {
  Graph a = erdos_renyi(20, 0.4, 99);
  Graph b = erdos_renyi(20, 0.4, 99);
  CHECK(a.edges == b.edges);
  Graph c = erdos_renyi(20, 0.4, 100);
  CHECK(a.edges != c.edges);

  CHECK(erdos_renyi(10, 0.0, 1).edge_count() == 0);
  CHECK(erdos_renyi(10, 1.0, 1).edge_count() == 45);
  CHECK_THROWS_AS(erdos_renyi(10, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi(0, 0.5, 1), std::invalid_argument);

  // Density 0.5 on many pairs stays near half the pairs.
  Graph d = erdos_renyi(30, 0.5, 7);
  const double frac = static_cast<double>(d.edge_count()) / 435.0;
  CHECK(frac > 0.35);
  CHECK(frac < 0.65);
}

TEST_CASE("parse_dimacs") {
  std::istringstream in(
      "c sample file\n"
      "p edge 4 3\n"
      "e 1 2\n"
      "e 2 3\n"
      "e 3 4\n");
  Graph g = parse_dimacs(in);
  CHECK(g.n == 4);
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges[0] == std::make_pair(0, 1));
  CHECK(g.edges[2] == std::make_pair(2, 3));

  std::istringstream bad("e 1 2\n");
  CHECK_THROWS_AS(parse_dimacs(bad), std::invalid_argument);
  std::istringstream bad2("p foo 3 0\n");
  CHECK_THROWS_AS(parse_dimacs(bad2), std::invalid_argument);
}

TEST_CASE("brute_force_clique on known graphs") {
  CHECK(brute_force_clique(make_graph(1, {})) == 1);
  CHECK(brute_force_clique(make_graph(6, {})) == 1);
  // Path of 3 vertices: largest clique is an edge.
  CHECK(brute_force_clique(make_graph(3, {{0, 1}, {1, 2}})) == 2);
  // Triangle plus pendant vertex.
  CHECK(brute_force_clique(make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})) == 3);
  // 5-cycle: clique number 2.
  CHECK(brute_force_clique(
            make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == 2);
  CHECK(brute_force_clique(figure_example_graph()) == 4);
  CHECK_THROWS_AS(brute_force_clique(make_graph(31, {})), std::invalid_argument);
}

TEST_CASE("brute_force_clique agrees with naive enumeration on random graphs") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = erdos_renyi(10, 0.3 + 0.05 * static_cast<double>(seed % 8), seed);
    auto adj = g.adjacency();
    int naive = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
      std::vector<int> verts;
      for (int i = 0; i < g.n; ++i) {
        if ((mask >> i) & 1u) verts.push_back(i);
      }
      bool clique = true;
      for (std::size_t a = 0; a < verts.size() && clique; ++a) {
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
          if (!adj[verts[a]][verts[b]]) {
            clique = false;
            break;
          }
        }
      }
      if (clique) naive = std::max(naive, static_cast<int>(verts.size()));
    }
    CHECK(brute_force_clique(g) == naive);
  }
}
