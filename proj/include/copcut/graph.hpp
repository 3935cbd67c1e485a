#ifndef COPCUT_GRAPH_HPP
#define COPCUT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace copcut {

/// Simple undirected graph: vertex count plus a sorted set of unordered
/// edges (i < j). No self-loops.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::size_t edge_count() const { return edges.size(); }

  std::vector<std::vector<bool>> adjacency() const {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [i, j] : edges) {
      adj[i][j] = adj[j][i] = true;
    }
    return adj;
  }

  /// Complement edge set, sorted.
  std::vector<std::pair<int, int>> complement_edges() const {
    auto adj = adjacency();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!adj[i][j]) out.emplace_back(i, j);
      }
    }
    return out;
  }
};

inline void validate(const Graph& g) {
  if (g.n < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto [i, j] : g.edges) {
    if (i == j) throw std::invalid_argument("Graph: self-loop");
    if (i < 0 || j < 0 || i >= g.n || j >= g.n) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
  }
}

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n = n;
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  validate(g);
  return g;
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return make_graph(n, std::move(e));
}

/// Each unordered pair is included independently with probability p;
/// deterministic given the seed (fixed pair order, one draw per pair).
inline Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("erdos_renyi: p must be in [0, 1]");
  }
  if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unif(rng) < p) edges.emplace_back(i, j);
    }
  }
  return make_graph(n, std::move(edges));
}

/// DIMACS edge format: "p edge <n> <m>" header, "e <i> <j>" lines with
/// 1-based vertices (converted to 0-based here).
inline Graph parse_dimacs(std::istream& in) {
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    char tag;
    ls >> tag;
    if (tag == 'p') {
      std::string fmt;
      long m;
      ls >> fmt >> n >> m;
      if (!ls || (fmt != "edge" && fmt != "col")) {
        throw std::invalid_argument("parse_dimacs: bad problem line: " + line);
      }
    } else if (tag == 'e') {
      int i, j;
      ls >> i >> j;
      if (!ls) throw std::invalid_argument("parse_dimacs: bad edge line: " + line);
      edges.emplace_back(i - 1, j - 1);
    }
  }
  if (n < 0) throw std::invalid_argument("parse_dimacs: missing problem line");
  return make_graph(n, std::move(edges));
}

/// Exact clique number by branch and bound with a greedy-coloring bound.
/// Vertex sets are bitmasks, so n is capped at 30.
inline int brute_force_clique(const Graph& g, int cap = 30) {
  validate(g);
  if (g.n > cap) throw std::invalid_argument("brute_force_clique: n exceeds size cap");
  if (g.n == 0) return 0;

  std::vector<std::uint32_t> adj(g.n, 0);
  for (auto [i, j] : g.edges) {
    adj[i] |= (1u << j);
    adj[j] |= (1u << i);
  }

  int best = 1;

  // Greedy coloring of the candidate set; the color count bounds the
  // largest clique inside it.
  auto color_bound = [&](std::uint32_t cand, std::vector<int>& order,
                         std::vector<int>& bound) {
    order.clear();
    bound.clear();
    int colors = 0;
    std::uint32_t uncolored = cand;
    while (uncolored) {
      ++colors;
      std::uint32_t cls = uncolored;
      while (cls) {
        int v = __builtin_ctz(cls);
        cls &= ~(1u << v);
        cls &= ~adj[v];
        uncolored &= ~(1u << v);
        order.push_back(v);
        bound.push_back(colors);
      }
    }
  };

  // One scratch buffer per recursion depth; sized up front so references
  // held by outer frames stay valid.
  std::vector<std::vector<int>> order_pool(g.n + 1), bound_pool(g.n + 1);
  auto expand = [&](auto&& self, std::uint32_t cand, int depth) -> void {
    auto& order = order_pool[depth];
    auto& bound = bound_pool[depth];
    color_bound(cand, order, bound);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (depth + bound[idx] <= best) return;
      int v = order[idx];
      best = std::max(best, depth + 1);
      std::uint32_t next = cand & adj[v];
      if (next) self(self, next, depth + 1);
      cand &= ~(1u << v);
    }
  };

  std::uint32_t all = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
  expand(expand, all, 0);
  return best;
}

/// Five vertices, all edges except {3,4} (0-based); clique number 4.
inline Graph figure_example_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (!(i == 3 && j == 4)) e.emplace_back(i, j);
    }
  }
  return make_graph(5, std::move(e));
}

}  // namespace copcut

#endif  // COPCUT_GRAPH_HPP
