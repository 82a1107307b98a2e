#include "bei/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bei/errors.hpp"

namespace bei {

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : *this) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeLimit("graph order " + std::to_string(n) + " outside 0..64");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  adj_[u] |= VertexSet::bit(v);
  adj_[v] |= VertexSet::bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~VertexSet::bit(v);
  adj_[v] &= ~VertexSet::bit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] & ~((VertexSet::bit(u) << 1) - 1))) out.emplace_back(u, v);
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s.without(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_complete(const Graph& g) { return is_clique(g, g.vertices()); }

bool is_simplicial(const Graph& g, int v) { return is_clique(g, g.neighbors(v)); }

namespace {

// Component of `start` inside `allowed`.
std::uint64_t flood(const Graph& g, int start, std::uint64_t allowed) {
  std::uint64_t comp = VertexSet::bit(start);
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    next &= allowed & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

}  // namespace

Partition components(const Graph& g, VertexSet removed) {
  Partition parts;
  std::uint64_t rest = (g.vertices() - removed).mask();
  while (rest) {
    std::uint64_t comp = flood(g, std::countr_zero(rest), rest);
    parts.emplace_back(comp);
    rest &= ~comp;
  }
  return parts;
}

int component_count(const Graph& g, VertexSet removed) {
  int count = 0;
  std::uint64_t rest = (g.vertices() - removed).mask();
  while (rest) {
    rest &= ~flood(g, std::countr_zero(rest), rest);
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

VertexSet cutpoints(const Graph& g) {
  const int base = component_count(g);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (component_count(g, VertexSet::single(v)) > base) out = out.with(v);
  }
  return out;
}

std::vector<Block> blocks(const Graph& g) {
  // Hopcroft-Tarjan with an edge stack.
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<VertexSet> found;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int w : g.neighbors(u)) {
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          VertexSet block;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block = block.with(a).with(b);
            if (a == u && b == w) break;
          }
          found.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (int v = 0; v < n; ++v) {
    if (disc[v] >= 0) continue;
    if (g.degree(v) == 0) {
      found.push_back(VertexSet::single(v));
      disc[v] = timer++;
      continue;
    }
    dfs(v, -1);
  }

  std::sort(found.begin(), found.end(), [](VertexSet a, VertexSet b) {
    std::vector<int> va = a.to_vector(), vb = b.to_vector();
    return va < vb;
  });
  std::vector<Block> out;
  for (VertexSet s : found) {
    InducedSubgraph sub = induced_subgraph(g, s);
    out.push_back(Block{s, std::move(sub.graph), std::move(sub.to_parent)});
  }
  return out;
}

int cycle_rank(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw InvalidInput("cycle_rank needs a connected graph");
  return g.edge_count() - g.order() + 1;
}

Graph saturate(const Graph& g, int v) {
  Graph out = g;
  const VertexSet nb = g.neighbors(v);
  for (int a : nb)
    for (int b : nb)
      if (a < b) out.add_edge(a, b);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  InducedSubgraph out{Graph(keep.size()), keep.to_vector()};
  std::array<int, kMaxVertices> local{};
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (int w : g.neighbors(out.to_parent[i]) & keep) {
      if (local[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), local[w]);
    }
  }
  return out;
}

Graph delete_vertices(const Graph& g, VertexSet s) { return induced_subgraph(g, g.vertices() - s).graph; }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidInput("permutation size mismatch");
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || ((seen >> p) & 1U)) throw InvalidInput("not a permutation");
    seen |= VertexSet::bit(p);
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

}  // namespace bei
