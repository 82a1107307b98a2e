#include <algorithm>
#include <map>

#include "bei/errors.hpp"
#include "bei/families.hpp"

namespace bei {

namespace {

bool biconnected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cutpoints(g).empty();
}

// Splits polygon regions along non-crossing chords until none is left inside.
std::vector<std::vector<int>> faces_of(const std::vector<int>& outer, const std::vector<std::pair<int, int>>& chords) {
  std::vector<std::vector<int>> done;
  std::vector<std::vector<int>> todo{outer};
  while (!todo.empty()) {
    std::vector<int> region = std::move(todo.back());
    todo.pop_back();
    bool split = false;
    for (auto [a, b] : chords) {
      auto ia = std::find(region.begin(), region.end(), a);
      auto ib = std::find(region.begin(), region.end(), b);
      if (ia == region.end() || ib == region.end()) continue;
      std::size_t i = ia - region.begin(), j = ib - region.begin();
      if (i > j) std::swap(i, j);
      if (j - i == 1 || (i == 0 && j == region.size() - 1)) continue;  // already a side
      std::vector<int> left(region.begin() + i, region.begin() + j + 1);
      std::vector<int> right(region.begin() + j, region.end());
      right.insert(right.end(), region.begin(), region.begin() + i + 1);
      todo.push_back(std::move(left));
      todo.push_back(std::move(right));
      split = true;
      break;
    }
    if (!split) done.push_back(std::move(region));
  }
  return done;
}

bool has_side(const std::vector<int>& face, int a, int b) {
  for (std::size_t k = 0; k < face.size(); ++k) {
    const int p = face[k], q = face[(k + 1) % face.size()];
    if ((p == a && q == b) || (p == b && q == a)) return true;
  }
  return false;
}

}  // namespace

ChainStructure recognize_chain(const Graph& block) {
  if (!biconnected(block)) throw NotAChain("block is not 2-connected");
  const int n = block.order();
  const int r = cycle_rank(block);

  // Chords: edges whose removal keeps the block 2-connected.
  std::vector<std::pair<int, int>> chords;
  Graph outer_graph = block;
  for (auto [u, v] : block.edges()) {
    Graph less = block;
    less.remove_edge(u, v);
    if (biconnected(less)) {
      chords.emplace_back(u, v);
      outer_graph.remove_edge(u, v);
    }
  }
  if (static_cast<int>(chords.size()) != r - 1) throw NotAChain("block is not a chain of cycles glued along edges");
  for (int v = 0; v < n; ++v)
    if (outer_graph.degree(v) != 2) throw NotAChain("no Hamiltonian outer cycle");
  if (!is_connected(outer_graph)) throw NotAChain("no Hamiltonian outer cycle");

  std::vector<int> outer{0};
  for (int prev = -1, at = 0;;) {
    const VertexSet nb = outer_graph.neighbors(at);
    int next = nb.front();
    if (next == prev) next = nb.without(next).front();
    if (next == 0) break;
    outer.push_back(next);
    prev = at;
    at = next;
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[outer[i]] = i;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      int a = pos[chords[i].first], b = pos[chords[i].second];
      int c = pos[chords[j].first], d = pos[chords[j].second];
      if (a > b) std::swap(a, b);
      const bool c_in = a < c && c < b, d_in = a < d && d < b;
      const bool shares = c == a || c == b || d == a || d == b;
      if (!shares && c_in != d_in) throw NotAChain("crossing chords");
    }
  }

  std::vector<std::vector<int>> faces = faces_of(outer, chords);
  if (static_cast<int>(faces.size()) != r) throw NotAChain("unexpected face count");

  // dual graph through chords; must be a path
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> dual(faces.size());
  for (auto chord : chords) {
    std::vector<int> holders;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (has_side(faces[f], chord.first, chord.second)) holders.push_back(static_cast<int>(f));
    if (holders.size() != 2) throw NotAChain("chord not shared by exactly two cycles");
    dual[holders[0]].push_back({holders[1], chord});
    dual[holders[1]].push_back({holders[0], chord});
  }
  int start = -1;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (dual[f].size() > 2) throw NotAChain("cycles do not form a chain");
    if (dual[f].size() <= 1 && start < 0) start = static_cast<int>(f);
  }
  if (start < 0) throw NotAChain("cycles do not form a chain");

  ChainStructure out;
  for (int prev = -1, at = start;;) {
    out.cycles.push_back(faces[at]);
    int next = -1;
    for (auto& [to, chord] : dual[at]) {
      if (to != prev) {
        next = to;
        out.shared.push_back(chord);
      }
    }
    if (next < 0) break;
    prev = at;
    at = next;
  }
  if (out.cycles.size() != faces.size()) throw NotAChain("cycles do not form a chain");
  return out;
}

}  // namespace bei
