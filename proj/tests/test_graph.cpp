#include <doctest.h>

#include <random>

#include "bei/errors.hpp"
#include "bei/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bei;

TEST_CASE("vertex sets order by size then mask") {
  CHECK(VertexSet{5} < VertexSet{0, 1});
  CHECK(VertexSet{0, 2} < VertexSet{1, 2});
  CHECK(VertexSet{} < VertexSet{0});
  VertexSet s{1, 3, 4};
  CHECK(s.size() == 3);
  CHECK(s.to_vector() == std::vector<int>{1, 3, 4});
  CHECK(s.without(3).with(0) == VertexSet{0, 1, 4});
  CHECK((s - VertexSet{1}) == VertexSet{3, 4});
  CHECK(s.to_string() == "{1,3,4}");
  CHECK(VertexSet::first(64).size() == 64);
}

TEST_CASE("graph construction rejects loops and bad indices") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
  CHECK_THROWS_AS(Graph(65), SizeLimit);
  Graph g(3, {{0, 1}, {1, 0}});
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(1, 0));
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("adjacency stays symmetric and irreflexive") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 30;
    Graph g = oracle::random_connected(n, 0.3, rng);
    for (Graph h : {g, saturate(g, trial % n), delete_vertices(g, VertexSet{0}),
                    relabel(g, [&] {
                      std::vector<int> p(n);
                      std::iota(p.begin(), p.end(), 0);
                      std::shuffle(p.begin(), p.end(), rng);
                      return p;
                    }())}) {
      for (int u = 0; u < h.order(); ++u) {
        CHECK_FALSE(h.adjacent(u, u));
        for (int v = 0; v < h.order(); ++v) CHECK(h.adjacent(u, v) == h.adjacent(v, u));
      }
    }
  }
}

TEST_CASE("vertex deletion examples") {
  CHECK(delete_vertices(complete_graph(4), VertexSet{0}) == complete_graph(3));
  CHECK(delete_vertices(path_graph(3), VertexSet{1}) == Graph(2));
  CHECK(delete_vertices(cycle_graph(4), VertexSet{}) == cycle_graph(4));
  auto sub = induced_subgraph(path_graph(5), VertexSet{1, 2, 4});
  CHECK(sub.to_parent == std::vector<int>{1, 2, 4});
  CHECK(sub.graph == Graph(3, {{0, 1}}));
}

TEST_CASE("component sizes add up to the remaining vertices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 20;
    Graph g = oracle::random_connected(n, 0.15, rng);
    VertexSet removed(rng() & VertexSet::first(n).mask());
    int total = 0;
    for (VertexSet c : components(g, removed)) {
      CHECK_FALSE(c.intersects(removed));
      total += c.size();
    }
    CHECK(total == n - removed.size());
    CHECK(component_count(g, removed) == oracle::components(g, removed.mask()));
  }
}

TEST_CASE("cycle rank matches the degree formula") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : fixtures::connected(n)) {
      int excess = 0;
      for (int v = 0; v < n; ++v) excess += g.degree(v) - 2;
      CHECK(2 * (cycle_rank(g) - 1) == excess);
      CHECK(cycle_rank(g) == g.edge_count() - n + 1);
    }
  }
  CHECK(cycle_rank(complete_graph(4)) == 3);
  CHECK_THROWS_AS(cycle_rank(Graph(2)), InvalidInput);
}

TEST_CASE("deleting a vertex commutes with saturating another") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : fixtures::connected(n)) {
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
          if (v == w) continue;
          const int w_after = w < v ? w : w - 1;
          CHECK(delete_vertices(saturate(g, w), VertexSet{v}) == saturate(delete_vertices(g, VertexSet{v}), w_after));
        }
      }
    }
  }
}

TEST_CASE("cutpoints and blocks") {
  // two triangles sharing vertex 2, plus a pendant at 4
  Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
  CHECK(cutpoints(g) == VertexSet{2, 4});
  auto bs = blocks(g);
  REQUIRE(bs.size() == 3);
  CHECK(bs[0].vertices == VertexSet{0, 1, 2});
  CHECK(bs[1].vertices == VertexSet{2, 3, 4});
  CHECK(bs[2].vertices == VertexSet{4, 5});
  CHECK(bs[2].graph == complete_graph(2));
  CHECK(cutpoints(cycle_graph(5)).empty());
  CHECK(blocks(cycle_graph(5)).size() == 1);
}

TEST_CASE("blocks partition the edges and meet at cutpoints") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : fixtures::connected(n)) {
      const auto bs = blocks(g);
      int edges = 0;
      std::vector<int> membership(n, 0);
      for (const Block& b : bs) {
        edges += b.graph.edge_count();
        for (int v : b.vertices) ++membership[v];
        CHECK(is_connected(b.graph));
        if (b.graph.order() > 2) CHECK(cutpoints(b.graph).empty());
      }
      CHECK(edges == g.edge_count());
      const VertexSet cps = cutpoints(g);
      for (int v = 0; v < n; ++v) CHECK((membership[v] > 1) == cps.contains(v));
      for (int v = 0; v < n; ++v)
        CHECK(cps.contains(v) == (oracle::components(g, VertexSet{v}.mask()) > 1));
    }
  }
}

TEST_CASE("relabel validates the permutation") {
  Graph p = path_graph(3);
  CHECK(relabel(p, {1, 0, 2}) == Graph(3, {{0, 1}, {0, 2}}));
  CHECK_THROWS_AS(relabel(p, {0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(relabel(p, {0, 1}), InvalidInput);
}

TEST_CASE("simplicial vertices and disjoint unions") {
  CHECK(is_simplicial(path_graph(3), 0));
  CHECK_FALSE(is_simplicial(path_graph(3), 1));
  Graph u = disjoint_union(complete_graph(3), path_graph(2));
  CHECK(u.order() == 5);
  CHECK(component_count(u) == 2);
  CHECK(u.adjacent(3, 4));
  CHECK(is_clique(u, VertexSet{0, 1, 2}));
  CHECK_FALSE(is_complete(u));
}
