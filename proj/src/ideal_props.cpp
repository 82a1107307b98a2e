#include "bei/ideal_props.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "bei/errors.hpp"

namespace bei {

namespace {

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

// Spreads the low bits of `index` over the set bits of `support`.
std::uint64_t deposit(std::uint64_t index, std::uint64_t support) {
  std::uint64_t out = 0;
  for (std::uint64_t s = support; s && index; s &= s - 1, index >>= 1) {
    if (index & 1U) out |= s & -s;
  }
  return out;
}

// Visits subsets of `support` in (size, mask) order until `fn` returns false.
template <typename Fn>
void for_each_subset_by_size(VertexSet support, Fn&& fn) {
  const int m = support.size();
  if (m > kMaxCutsetCandidates) {
    throw SizeLimit("too many cutset candidates (" + std::to_string(m) + ")");
  }
  for (int k = 0; k <= m; ++k) {
    if (k == 0) {
      if (!fn(VertexSet())) return;
      continue;
    }
    std::uint64_t idx = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (idx < limit) {
      if (!fn(VertexSet(deposit(idx, support.mask())))) return;
      const std::uint64_t c = idx & -idx;
      const std::uint64_t r = idx + c;
      idx = (((r ^ idx) >> 2) / c) | r;
    }
  }
}

}  // namespace

bool CutsetFamily::contains(VertexSet t) const { return std::binary_search(sets.begin(), sets.end(), t); }

int cutset_component_count(const Graph& g, VertexSet t) {
  std::array<std::uint64_t, kMaxVertices> comps{};
  int c = 0;
  std::uint64_t rest = (g.vertices() - t).mask();
  while (rest) {
    comps[c] = flood(g, std::countr_zero(rest), rest);
    rest &= ~comps[c];
    ++c;
  }
  for (int v : t) {
    const std::uint64_t nb = g.row(v);
    int hits = 0;
    for (int i = 0; i < c && hits < 2; ++i)
      if (nb & comps[i]) ++hits;
    if (hits < 2) return -1;
  }
  return c;
}

bool is_cutset(const Graph& g, VertexSet t) {
  if (!t.is_subset_of(g.vertices())) throw InvalidInput("cutset candidate outside the vertex set");
  return cutset_component_count(g, t) >= 0;
}

VertexSet cutset_candidates(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (!is_simplicial(g, v)) out = out.with(v);
  return out;
}

CutsetFamily cutsets(const Graph& g) {
  CutsetFamily family;
  for_each_subset_by_size(cutset_candidates(g), [&](VertexSet t) {
    if (cutset_component_count(g, t) >= 0) family.sets.push_back(t);
    return true;
  });
  return family;
}

UnmixedReport check_unmixed(const Graph& g) {
  UnmixedReport report;
  const int base = component_count(g);
  for_each_subset_by_size(cutset_candidates(g), [&](VertexSet t) {
    const int c = cutset_component_count(g, t);
    if (c < 0 || c - t.size() == base) return true;
    report.unmixed = false;
    report.violation = t;
    report.violation_components = c;
    return false;
  });
  return report;
}

bool is_unmixed(const Graph& g) { return check_unmixed(g).unmixed; }

AccessibilityReport check_accessible(const Graph& g) {
  AccessibilityReport report;
  const UnmixedReport um = check_unmixed(g);
  if (!um.unmixed) {
    report.witness = um.violation;
    return report;
  }
  report.unmixed = true;
  const CutsetFamily family = cutsets(g);
  std::unordered_set<std::uint64_t> members;
  members.reserve(family.sets.size() * 2);
  for (VertexSet t : family.sets) members.insert(t.mask());
  for (VertexSet t : family.sets) {
    if (t.empty()) continue;
    bool reachable = false;
    for (int v : t) {
      if (members.count(t.without(v).mask())) {
        reachable = true;
        break;
      }
    }
    if (!reachable) {
      report.witness = t;
      return report;
    }
  }
  report.accessible = true;
  return report;
}

bool is_accessible(const Graph& g) { return check_accessible(g).accessible; }

namespace {

// A cutpoint of h at which h splits into two pieces, or -1.
int find_split(const Graph& h) {
  if (!is_connected(h)) return -1;
  for (int v = 0; v < h.order(); ++v) {
    const Partition parts = components(h, VertexSet::single(v));
    if (parts.size() != 2) continue;
    if (is_clique(h, h.neighbors(v) & parts[0]) && is_clique(h, h.neighbors(v) & parts[1])) return v;
  }
  return -1;
}

}  // namespace

DecompositionTree decompose(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw InvalidInput("decompose needs a connected graph");
  std::vector<VertexSet> todo{g.vertices()};
  std::vector<VertexSet> done;
  std::vector<int> split_vertices;
  while (!todo.empty()) {
    VertexSet piece = todo.back();
    todo.pop_back();
    InducedSubgraph sub = induced_subgraph(g, piece);
    const int local = find_split(sub.graph);
    if (local < 0) {
      done.push_back(piece);
      continue;
    }
    const int v = sub.to_parent[local];
    split_vertices.push_back(v);
    for (VertexSet side : components(sub.graph, VertexSet::single(local))) {
      VertexSet parent_side = VertexSet::single(v);
      for (int x : side) parent_side = parent_side.with(sub.to_parent[x]);
      todo.push_back(parent_side);
    }
  }
  std::sort(done.begin(), done.end(), [](VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); });

  DecompositionTree tree;
  for (VertexSet piece : done) {
    InducedSubgraph sub = induced_subgraph(g, piece);
    tree.pieces.push_back(DecompositionPiece{std::move(sub.graph), std::move(sub.to_parent)});
  }
  std::sort(split_vertices.begin(), split_vertices.end());
  for (int v : split_vertices) {
    std::vector<int> holders;
    for (std::size_t i = 0; i < done.size(); ++i)
      if (done[i].contains(v)) holders.push_back(static_cast<int>(i));
    if (holders.size() != 2) throw std::logic_error("split vertex not shared by exactly two pieces");
    tree.glue.push_back(Glue{holders[0], holders[1], v});
  }
  return tree;
}

bool is_decomposable(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw InvalidInput("decomposability needs a connected graph");
  return find_split(g) >= 0;
}

}  // namespace bei
