#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bei {

inline constexpr int kMaxVertices = 64;

// A set of vertices of a graph with at most 64 vertices.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) mask_ |= bit(v);
  }

  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  // {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int front() const { return std::countr_zero(mask_); }
  constexpr bool is_subset_of(VertexSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (mask_ & o.mask_) != 0; }

  constexpr VertexSet with(int v) const { return VertexSet(mask_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(mask_ & ~bit(v)); }

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  std::string to_string() const;  // "{0,2,5}"

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    mask_ &= o.mask_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    mask_ &= ~o.mask_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  // (size, mask) order
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint64_t mask_ = 0;
};

// Components of a graph after vertex removal, ordered by smallest vertex.
using Partition = std::vector<VertexSet>;

// Simple undirected graph on vertices 0..n-1, n <= 64, one bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  std::uint64_t row(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// Induced subgraph with the map back to parent labels.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // local vertex i is parent vertex to_parent[i]
};

struct Block {
  VertexSet vertices;  // in parent labels
  Graph graph;
  std::vector<int> to_parent;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);
// N(v) is a clique, i.e. v lies in exactly one maximal clique.
bool is_simplicial(const Graph& g, int v);

Partition components(const Graph& g, VertexSet removed = {});
int component_count(const Graph& g, VertexSet removed = {});

// Vertices whose removal increases the number of components.
VertexSet cutpoints(const Graph& g);
std::vector<Block> blocks(const Graph& g);
int cycle_rank(const Graph& g);

// g with N(v) completed to a clique.
Graph saturate(const Graph& g, int v);
// Order-preserving compaction of V \ s.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);
Graph delete_vertices(const Graph& g, VertexSet s);
// Vertex v of g becomes vertex perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);
// Disjoint union, vertices of b shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace bei
