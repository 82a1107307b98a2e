#include "bei/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "bei/graph_io.hpp"

namespace bei {

namespace {

using Cells = std::vector<std::uint64_t>;
using Rows = std::array<std::uint64_t, kMaxVertices>;

// Equitable refinement. Every decision depends only on cell order and
// neighbour counts, never on labels, so the result is isomorphism-invariant.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const std::uint64_t splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const std::uint64_t cell = cells[x];
        if (std::popcount(cell) < 2) continue;
        std::array<std::uint64_t, kMaxVertices + 1> bucket{};
        int lo = kMaxVertices, hi = 0;
        for (std::uint64_t c = cell; c; c &= c - 1) {
          const int v = std::countr_zero(c);
          const int k = std::popcount(g.row(v) & splitter);
          bucket[k] |= VertexSet::bit(v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        Cells parts;
        for (int k = lo; k <= hi; ++k)
          if (bucket[k]) parts.push_back(bucket[k]);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) { seed_twins(); }

  std::vector<int> run() {
    Cells root{g_.vertices().mask()};
    visit(root, 0);
    return best_lab_;
  }

  const Rows& best_rows() const { return best_rows_; }

 private:
  static constexpr std::size_t kMaxAutomorphisms = 256;

  // Transpositions of twins are automorphisms known up front.
  void seed_twins() {
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        const std::uint64_t nu = g_.row(u) & ~VertexSet::bit(v);
        const std::uint64_t nv = g_.row(v) & ~VertexSet::bit(u);
        if (nu != nv) continue;
        std::vector<int> perm(n_);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[u], perm[v]);
        auts_.push_back(std::move(perm));
        break;  // u's class is chained through v
      }
    }
  }

  Rows rows_of(const std::vector<int>& lab) const {
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (std::uint64_t nb = g_.row(lab[i]); nb; nb &= nb - 1) r |= VertexSet::bit(pos[std::countr_zero(nb)]);
      rows[i] = r;
    }
    return rows;
  }

  void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    if (auts_.size() >= kMaxAutomorphisms) return;
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[from[i]] = to[i];
    auts_.push_back(std::move(perm));
  }

  // Returns the depth to unwind to, or -1 to continue normally.
  int leaf(const Cells& cells) {
    std::vector<int> lab(n_);
    for (int i = 0; i < n_; ++i) lab[i] = std::countr_zero(cells[i]);
    Rows rows = rows_of(lab);
    if (best_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_rows_ = best_rows_ = rows;
      first_path_ = path_;
      return -1;
    }
    if (rows == first_rows_) {
      add_automorphism(lab, first_lab_);
      std::size_t d = 0;
      while (d < path_.size() && d < first_path_.size() && path_[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    if (rows > best_rows_) {
      best_lab_ = lab;
      best_rows_ = rows;
    } else if (rows == best_rows_) {
      add_automorphism(lab, best_lab_);
    }
    return -1;
  }

  bool same_orbit_as_tried(int v, const std::vector<int>& tried) {
    if (tried.empty()) return false;
    UnionFind uf(n_);
    for (const auto& a : auts_) {
      bool fixes = true;
      for (int p : path_)
        if (a[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, a[x]);
    }
    for (int u : tried)
      if (uf.find(u) == uf.find(v)) return true;
    return false;
  }

  int visit(Cells cells, int depth) {
    refine(g_, cells);
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    std::size_t target = 0;
    while (std::popcount(cells[target]) < 2) ++target;
    const std::uint64_t cell = cells[target];

    std::vector<int> tried;
    for (std::uint64_t c = cell; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      if (same_orbit_as_tried(v, tried)) continue;
      tried.push_back(v);
      Cells child = cells;
      child[target] = VertexSet::bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~VertexSet::bit(v));
      path_.push_back(v);
      const int unwind = visit(std::move(child), depth + 1);
      path_.pop_back();
      if (unwind >= 0 && unwind < depth) return unwind;
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::vector<int> first_lab_, best_lab_;
  Rows first_rows_{}, best_rows_{};
  std::vector<std::vector<int>> auts_;
};

// position[v] for a graph searched as a whole.
std::vector<int> search_positions(const Graph& g) {
  std::vector<int> position(g.order());
  if (g.order() == 0) return position;
  Search s(g);
  const std::vector<int> lab = s.run();
  for (int i = 0; i < g.order(); ++i) position[lab[i]] = i;
  return position;
}

std::string certificate_bytes(const Graph& canon) {
  if (canon.order() <= 62) return encode_graph6(canon);
  // beyond the graph6 short form: order byte plus packed upper triangle
  std::string out(1, static_cast<char>(canon.order()));
  unsigned acc = 0;
  int used = 0;
  for (int j = 1; j < canon.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (canon.adjacent(i, j) ? 1U : 0U);
      if (++used == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(acc << (8 - used)));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const Partition comps = components(g);
  std::vector<int> position(g.order());
  if (comps.size() <= 1) {
    position = search_positions(g);
  } else {
    struct Piece {
      std::string key;
      std::vector<int> to_parent;
      std::vector<int> local_position;
    };
    std::vector<Piece> pieces;
    for (VertexSet comp : comps) {
      InducedSubgraph sub = induced_subgraph(g, comp);
      std::vector<int> pos = search_positions(sub.graph);
      Graph canon = relabel(sub.graph, pos);
      pieces.push_back(Piece{certificate_bytes(canon), std::move(sub.to_parent), std::move(pos)});
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.key < b.key; });
    int offset = 0;
    for (const Piece& p : pieces) {
      for (std::size_t i = 0; i < p.to_parent.size(); ++i) position[p.to_parent[i]] = offset + p.local_position[i];
      offset += static_cast<int>(p.to_parent.size());
    }
  }
  Graph canon = relabel(g, position);
  return CanonicalForm{std::move(canon), std::move(position)};
}

Certificate canonical_certificate(const Graph& g) { return Certificate{certificate_bytes(canonical_form(g).graph)}; }

}  // namespace bei
