#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "bracketforge/graph.hpp"

using namespace bracketforge;

namespace {
SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}
}  // namespace

TEST_CASE("graph basics") {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 9), std::out_of_range);
  CHECK_THROWS_AS(SimpleGraph(65), std::invalid_argument);
}

TEST_CASE("bipartiteness") {
  SimpleGraph even_cycle(6);
  for (int i = 0; i < 6; ++i) even_cycle.add_edge(i, (i + 1) % 6);
  CHECK(is_bipartite(even_cycle));

  SimpleGraph odd_cycle(5);
  for (int i = 0; i < 5; ++i) odd_cycle.add_edge(i, (i + 1) % 5);
  CHECK_FALSE(is_bipartite(odd_cycle));

  CHECK(is_bipartite(SimpleGraph(0)));
  CHECK(is_bipartite(complete_multipartite({3, 4})));
  CHECK_FALSE(is_bipartite(complete_multipartite({1, 1, 1})));
}

TEST_CASE("alternating independence sum on small graphs") {
  CHECK(independence_alternating_sum(SimpleGraph(0)) == 1);  // empty graph
  CHECK(independence_alternating_sum(SimpleGraph(1)) == 0);  // K1
  SimpleGraph k2(2);
  k2.add_edge(0, 1);
  CHECK(independence_alternating_sum(k2) == -1);
  CHECK(independence_alternating_sum(complete_multipartite({2, 2})) == -1);
}

TEST_CASE("complete n-partite value is 1 - n") {
  std::vector<std::vector<int>> partitions = {
      {1},       {3},          {1, 1},    {2, 3},       {2, 2, 2},
      {1, 2, 3}, {4, 4, 4},    {1, 1, 1, 1}, {5, 7},    {2, 2, 2, 2, 2},
      {6, 6},    {1, 2, 3, 4}, {12},      {3, 3, 3, 3}, {10, 1, 1}};
  for (const auto& parts : partitions) {
    long long expected = 1 - static_cast<long long>(parts.size());
    CHECK(independence_alternating_sum(complete_multipartite(parts)) ==
          expected);
  }
  CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("recursion agrees with enumeration on random graphs") {
  std::mt19937 rng(20260815);
  std::uniform_int_distribution<int> size(0, 12);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int trial = 0; trial < 120; ++trial) {
    SimpleGraph g = random_graph(size(rng), dens(rng), rng);
    CHECK(independence_alternating_sum(g) ==
          independence_alternating_sum_bruteforce(g));
  }
}

TEST_CASE("multiplicative over disjoint unions") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    SimpleGraph a = random_graph(6, 0.4, rng);
    SimpleGraph b = random_graph(5, 0.5, rng);
    SimpleGraph u = disjoint_union(a, b);
    CHECK(u.vertex_count() == 11);
    CHECK(u.edge_count() == a.edge_count() + b.edge_count());
    CHECK(independence_alternating_sum(u) ==
          independence_alternating_sum(a) * independence_alternating_sum(b));
  }
}

TEST_CASE("isolated vertices force zero") {
  SimpleGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);  // triangle plus two isolated vertices
  CHECK(independence_alternating_sum(g) == 0);
}

TEST_CASE("bruteforce refuses oversized graphs") {
  CHECK_THROWS_AS(independence_alternating_sum_bruteforce(SimpleGraph(30)),
                  std::domain_error);
}
