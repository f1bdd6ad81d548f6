#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bracketforge {

// Simple undirected graph on at most 64 vertices, adjacency kept as one
// bitmask per vertex.
class SimpleGraph {
public:
  explicit SimpleGraph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 64)
      throw std::invalid_argument("SimpleGraph: vertex count must be in [0,64]");
  }

  int vertex_count() const { return n_; }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += __builtin_popcountll(adj_[v]);
    return total / 2;
  }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("SimpleGraph: no self-loops");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
  }

  bool has_edge(int u, int v) const {
    check(u);
    check(v);
    return adj_[u] >> v & 1;
  }

  std::uint64_t neighbors(int v) const {
    check(v);
    return adj_[v];
  }

  int degree(int v) const { return __builtin_popcountll(neighbors(v)); }

private:
  void check(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("SimpleGraph: vertex " + std::to_string(v));
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

inline bool is_bipartite(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u) {
        if (!(g.neighbors(v) >> u & 1)) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.vertex_count() + b.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v)
    for (int u = v + 1; u < a.vertex_count(); ++u)
      if (a.has_edge(v, u)) g.add_edge(v, u);
  const int off = a.vertex_count();
  for (int v = 0; v < b.vertex_count(); ++v)
    for (int u = v + 1; u < b.vertex_count(); ++u)
      if (b.has_edge(v, u)) g.add_edge(off + v, off + u);
  return g;
}

// Vertices split into groups of the given sizes; edges join every pair of
// vertices from different groups.
inline SimpleGraph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("complete_multipartite: empty part");
    n += p;
  }
  SimpleGraph g(n);
  int a_start = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int b_start = a_start + parts[i];
    for (int a = a_start; a < a_start + parts[i]; ++a)
      for (int b = b_start; b < n; ++b) g.add_edge(a, b);
    a_start = b_start;
  }
  return g;
}

namespace detail {

class IndependenceSum {
public:
  explicit IndependenceSum(const SimpleGraph& g) : g_(g) {}

  long long run() {
    std::uint64_t all =
        g_.vertex_count() == 64 ? ~0ull : (1ull << g_.vertex_count()) - 1;
    return rec(all);
  }

private:
  long long rec(std::uint64_t alive) {
    if (alive == 0) return 1;
    // An isolated vertex contributes a factor 1 + (-1) = 0.
    int best = -1, best_deg = -1;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (!(alive >> v & 1)) continue;
      int deg = __builtin_popcountll(g_.neighbors(v) & alive);
      if (deg == 0) return 0;
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    // Sets avoiding `best` minus sets containing it (which exclude N[best]).
    std::uint64_t without = alive & ~(1ull << best);
    long long val = rec(without) - rec(without & ~g_.neighbors(best));
    memo_.emplace(alive, val);
    return val;
  }

  const SimpleGraph& g_;
  std::unordered_map<std::uint64_t, long long> memo_;
};

}  // namespace detail

// f(G) = sum over independent vertex sets C (empty set included) of (-1)^|C|.
// Multiplicative over disjoint unions; zero whenever G has an isolated vertex.
inline long long independence_alternating_sum(const SimpleGraph& g) {
  return detail::IndependenceSum(g).run();
}

inline long long independence_alternating_sum_bruteforce(const SimpleGraph& g,
                                                         int limit = 20) {
  const int n = g.vertex_count();
  if (n > limit)
    throw std::domain_error("independence sum bruteforce: too many vertices");
  long long total = 0;
  for (std::uint64_t set = 0; set < (1ull << n); ++set) {
    bool indep = true;
    for (int v = 0; v < n && indep; ++v)
      if ((set >> v & 1) && (g.neighbors(v) & set)) indep = false;
    if (indep) total += __builtin_popcountll(set) % 2 ? -1 : 1;
  }
  return total;
}

}  // namespace bracketforge
