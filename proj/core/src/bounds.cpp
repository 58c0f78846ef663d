#include "rcx/bounds.hpp"

#include "rcx/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rcx {

std::size_t HidingGraph::edge_count() const {
  std::size_t m = 0;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adj[u][v]) ++m;
    }
  }
  return m;
}

HidingGraph hiding_graph_over(const std::vector<RatPoint>& inner,
                              const std::vector<LatticePoint>& candidates, int jobs) {
  HidingGraph g;
  g.vertices = candidates;
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  const std::size_t n = g.vertices.size();
  g.adj.assign(n, std::vector<uint8_t>(n, 0));
  if (n < 2) return g;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto [u, v] = pairs[i];
      if (segment_hits_hull(to_rat_point(g.vertices[u]), to_rat_point(g.vertices[v]), inner)) {
        g.adj[u][v] = g.adj[v][u] = 1;
      }
    }
  };
  if (jobs <= 1 || pairs.size() < 64) {
    work(0, pairs.size());
  } else {
    const std::size_t nthreads = std::min<std::size_t>(jobs, pairs.size());
    std::vector<std::thread> threads;
    const std::size_t chunk = (pairs.size() + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      const std::size_t b = t * chunk;
      const std::size_t e = std::min(pairs.size(), b + chunk);
      if (b < e) threads.emplace_back(work, b, e);
    }
    for (auto& th : threads) th.join();
  }
  return g;
}

HidingGraph hiding_graph(const LatticeSet& x, const LatticeSet& y, int jobs) {
  std::vector<LatticePoint> candidates;
  for (const auto& p : y.points()) {
    if (!x.contains(p)) candidates.push_back(p);
  }
  return hiding_graph_over(to_rat_points(x.points()), candidates, jobs);
}

namespace {

// Greedy sequential coloring of the induced subgraph `verts`; returns the
// number of colors used. Doubles as a clique search upper bound.
int greedy_coloring(const HidingGraph& g, const std::vector<int>& verts,
                    std::vector<int>* coloring_out = nullptr) {
  int used = 0;
  std::vector<int> color(verts.size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::vector<char> taken(used + 1, 0);
    for (std::size_t j = 0; j < i; ++j) {
      if (g.has_edge(verts[i], verts[j]) && color[j] >= 0) taken[color[j]] = 1;
    }
    int c = 0;
    while (c < used && taken[c]) ++c;
    color[i] = c;
    used = std::max(used, c + 1);
  }
  if (coloring_out) *coloring_out = color;
  return used;
}

struct CliqueSearch {
  const HidingGraph& g;
  std::vector<int> best;
  std::vector<int> current;

  explicit CliqueSearch(const HidingGraph& graph) : g(graph) {}

  void expand(std::vector<int>& cand) {
    if (cand.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // Color-based bound: the candidates cannot add more than chi_greedy.
    if (current.size() + greedy_coloring(g, cand) <= best.size()) return;
    while (!cand.empty()) {
      if (current.size() + cand.size() <= best.size()) return;
      const int v = cand.back();
      cand.pop_back();
      current.push_back(v);
      std::vector<int> next;
      for (int u : cand) {
        if (g.has_edge(u, v)) next.push_back(u);
      }
      expand(next);
      current.pop_back();
    }
  }
};

}  // namespace

CliqueResult max_clique(const HidingGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return {0, {}};
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  // Ascending degree, so high-degree vertices are popped first.
  std::vector<int> degree(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) degree[u] += g.adj[u][v];
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] < degree[b]; });
  CliqueSearch search(g);
  search.expand(order);
  std::sort(search.best.begin(), search.best.end());
  return {static_cast<int>(search.best.size()), search.best};
}

namespace {

struct ColorSearch {
  const HidingGraph& g;
  int k;
  std::vector<int> color;

  ColorSearch(const HidingGraph& graph, int colors)
      : g(graph), k(colors), color(graph.size(), -1) {}

  // DSATUR: pick the uncolored vertex with the most distinct neighbor
  // colors, ties by degree then index.
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (color[v] >= 0) continue;
      std::vector<char> seen(k, 0);
      int sat = 0, deg = 0;
      for (std::size_t u = 0; u < g.size(); ++u) {
        if (!g.has_edge(v, u)) continue;
        ++deg;
        if (color[u] >= 0 && !seen[color[u]]) {
          seen[color[u]] = 1;
          ++sat;
        }
      }
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = static_cast<int>(v);
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool solve(int colored, int max_used) {
    if (colored == static_cast<int>(g.size())) return true;
    const int v = pick();
    std::vector<char> taken(k, 0);
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (g.has_edge(v, u) && color[u] >= 0) taken[color[u]] = 1;
    }
    // Allowing at most one brand-new color prunes color permutations.
    const int cap = std::min(k, max_used + 1);
    for (int c = 0; c < cap; ++c) {
      if (taken[c]) continue;
      color[v] = c;
      if (solve(colored + 1, std::max(max_used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  }
};

}  // namespace

ColoringResult chromatic_number(const HidingGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return {0, {}};
  const int lb = max_clique(g).size;
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  std::vector<int> greedy;
  const int ub = greedy_coloring(g, all, &greedy);
  for (int k = std::max(1, lb); k <= ub; ++k) {
    if (k == ub) {
      std::vector<int> colors(n);
      for (std::size_t i = 0; i < n; ++i) colors[all[i]] = greedy[i];
      return {ub, colors};
    }
    ColorSearch search(g, k);
    search.color[0] = 0;  // symmetry: first vertex pinned
    if (search.solve(1, 1)) return {k, search.color};
  }
  throw std::logic_error("chromatic_number: search exhausted without a coloring");
}

std::vector<std::pair<LatticePoint, LatticePoint>> hiding_pairs(const LatticeSet& x,
                                                                const LatticeSet& y) {
  const auto g = hiding_graph(x, y);
  std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adj[u][v]) pairs.emplace_back(g.vertices[u], g.vertices[v]);
    }
  }
  return pairs;
}

std::string to_dot(const HidingGraph& g) {
  std::ostringstream out;
  out << "graph hiding {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out << "  n" << v << " [label=\"(";
    for (std::size_t k = 0; k < g.vertices[v].size(); ++k) {
      if (k) out << ",";
      out << g.vertices[v][k];
    }
    out << ")\"];\n";
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adj[u][v]) out << "  n" << u << " -- n" << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

const std::vector<std::pair<int, int>>& delta3_certificate_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {0, 5},   {0, 13},  {0, 23},  {0, 24},  {1, 5},   {1, 7},   {1, 15},
      {1, 23},  {1, 27},  {2, 12},  {2, 24},  {2, 26},  {3, 6},   {3, 11},
      {3, 12},  {3, 18},  {3, 20},  {3, 25},  {4, 9},   {4, 11},  {4, 18},
      {5, 14},  {6, 8},   {6, 10},  {6, 16},  {7, 14},  {7, 16},  {8, 15},
      {8, 19},  {9, 23},  {9, 27},  {10, 19}, {10, 20}, {11, 23}, {12, 16},
      {12, 17}, {13, 14}, {13, 16}, {15, 16}, {15, 21}, {15, 25}, {16, 24},
      {17, 25}, {17, 26}, {18, 27}, {19, 21}, {20, 21}, {20, 23}, {20, 24},
      {21, 22}, {22, 24}, {22, 25}, {22, 26}, {25, 27},
  };
  return edges;
}

}  // namespace rcx
