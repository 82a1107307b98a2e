#include "bei/families.hpp"

#include <algorithm>
#include <numeric>

#include "bei/errors.hpp"

namespace bei {

WhiskeredBlock whisker_block(const Graph& block, VertexSet whiskered) {
  if (!whiskered.is_subset_of(block.vertices())) throw InvalidInput("whisker outside the block");
  const int b = block.order();
  Graph g(b + whiskered.size());
  for (auto [u, v] : block.edges()) g.add_edge(u, v);
  int tip = b;
  for (int v : whiskered) g.add_edge(v, tip++);
  return WhiskeredBlock{block, whiskered, std::move(g)};
}

WhiskeredBlock build_bbar(const Graph& g, int block_index) {
  if (!is_connected(g)) throw InvalidInput("build_bbar needs a connected graph");
  const std::vector<Block> bs = blocks(g);
  if (block_index < 0 || block_index >= static_cast<int>(bs.size())) {
    throw InvalidInput("block index " + std::to_string(block_index) + " out of range");
  }
  const Block& b = bs[block_index];
  const VertexSet cps = cutpoints(g);
  VertexSet whiskered;
  for (std::size_t i = 0; i < b.to_parent.size(); ++i)
    if (cps.contains(b.to_parent[i])) whiskered = whiskered.with(static_cast<int>(i));
  return whisker_block(b.graph, whiskered);
}

namespace {

void validate(const ChainSpec& spec) {
  if (spec.cycles.empty()) throw InvalidInput("chain needs at least one cycle");
  if (!spec.top_steps.empty() && spec.top_steps.size() != spec.cycles.size()) {
    throw InvalidInput("top_steps must give one entry per cycle");
  }
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    const int len = spec.cycles[i];
    if (len < 3) throw InvalidInput("cycle length below 3");
    const int a = spec.top_steps.empty() ? 0 : spec.top_steps[i];
    if (a < 0 || a > len - 2) throw InvalidInput("top_steps entry out of range for C" + std::to_string(len));
  }
}

}  // namespace

int chain_block_order(const ChainSpec& spec) {
  validate(spec);
  int order = 2;
  for (int len : spec.cycles) order += len - 2;
  return order;
}

WhiskeredBlock chain_block(const ChainSpec& spec) {
  const int order = chain_block_order(spec);
  if (order + spec.whiskers.size() > kMaxVertices) throw SizeLimit("chain exceeds 64 vertices");
  int top_len = 0;
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) top_len += spec.top_steps.empty() ? 0 : spec.top_steps[i];
  const int bottom_start = top_len + 1;

  Graph block(order);
  for (int t = 0; t < top_len; ++t) block.add_edge(t, t + 1);
  for (int s = bottom_start; s + 1 < order; ++s) block.add_edge(s, s + 1);
  int p = 0, q = 0;
  block.add_edge(0, bottom_start);  // rung e_0
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    const int a = spec.top_steps.empty() ? 0 : spec.top_steps[i];
    p += a;
    q += spec.cycles[i] - 2 - a;
    block.add_edge(p, bottom_start + q);
  }
  if (!spec.whiskers.is_subset_of(block.vertices())) throw InvalidInput("whisker outside the chain block");
  return whisker_block(block, spec.whiskers);
}

Graph chain_of_cycles(const ChainSpec& spec) { return chain_block(spec).graph; }

SetupReport check_setup(const WhiskeredBlock& wb) {
  const ChainStructure chain = recognize_chain(wb.block);
  const Graph& b = wb.block;
  const VertexSet w = wb.whiskered;
  const std::size_t r = chain.cycles.size();
  auto fail = [](int k) { return SetupReport{false, k}; };
  auto size_of = [&](std::size_t i) { return chain.cycles[i].size(); };

  for (std::size_t i = 0; i < r; ++i)
    if (size_of(i) != 3 && size_of(i) != 4) return fail(1);
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (size_of(i) == 4 && size_of(i + 1) == 4) return fail(2);

  // orient each shared edge as (w_i, u_i)
  std::vector<std::pair<int, int>> wu;
  for (auto [a, c] : chain.shared) {
    if (w.contains(a) == w.contains(c)) return fail(3);
    wu.emplace_back(w.contains(a) ? a : c, w.contains(a) ? c : a);
  }

  auto on_cycle_edge = [&](std::size_t i, int x, int y) {
    const auto& cyc = chain.cycles[i];
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int p = cyc[k], q = cyc[(k + 1) % cyc.size()];
      if ((p == x && q == y) || (p == y && q == x)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i + 1 < wu.size(); ++i) {
    const auto [w1, u1] = wu[i];
    const auto [w2, u2] = wu[i + 1];
    if (!(w1 == w2 || on_cycle_edge(i + 1, w1, w2))) return fail(4);
    if (!(u1 == u2 || on_cycle_edge(i + 1, u1, u2))) return fail(4);
  }

  // neighbour of x on cycle i other than `not_this`
  auto other_neighbour = [&](std::size_t i, int x, int not_this) {
    const auto& cyc = chain.cycles[i];
    const std::size_t k = std::find(cyc.begin(), cyc.end(), x) - cyc.begin();
    const int prev = cyc[(k + cyc.size() - 1) % cyc.size()];
    const int next = cyc[(k + 1) % cyc.size()];
    return prev == not_this ? next : prev;
  };
  auto terminal_c4_ok = [&](std::size_t cycle, std::size_t junction) {
    const auto [wi, ui] = wu[junction];
    return w.contains(other_neighbour(cycle, wi, ui)) && !w.contains(other_neighbour(cycle, ui, wi));
  };

  if (r == 1) {
    if (size_of(0) == 4) {
      const auto& cyc = chain.cycles[0];
      const VertexSet on = w & VertexSet{cyc[0], cyc[1], cyc[2], cyc[3]};
      bool ok = on.size() == 2;
      if (ok) {
        const int x = on.front(), y = on.without(x).front();
        ok = on_cycle_edge(0, x, y);
      }
      if (!ok) return fail(5);
    }
  } else {
    if (size_of(0) == 4 && !terminal_c4_ok(0, 0)) return fail(5);
    if (size_of(r - 1) == 4 && !terminal_c4_ok(r - 1, r - 2)) return fail(6);
  }

  VertexSet on_c4;
  for (std::size_t i = 0; i < r; ++i)
    if (size_of(i) == 4)
      for (int v : chain.cycles[i]) on_c4 = on_c4.with(v);
  for (int v = 0; v < b.order(); ++v) {
    const int d = b.degree(v);
    if ((d >= 5 || (d >= 4 && on_c4.contains(v))) && !w.contains(v)) return fail(7);
  }
  return SetupReport{true, 0};
}

Graph helm(int k) {
  if (k < 3) throw InvalidInput("helm needs k >= 3");
  if (2 * k + 1 > kMaxVertices) throw SizeLimit("helm too large");
  Graph g(2 * k + 1);
  for (int i = 1; i <= k; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == k ? 1 : i + 1);
    g.add_edge(i, k + i);
  }
  return g;
}

std::vector<CatalogEntry> rank3_catalog() {
  const Graph fan(5, {{0, 4}, {0, 1}, {4, 1}, {1, 2}, {4, 2}, {2, 3}, {4, 3}});
  const Graph square_fan(6, {{0, 1}, {0, 2}, {5, 1}, {5, 2}, {2, 3}, {5, 3}, {3, 4}, {5, 4}});
  const Graph two_squares(7, {{0, 1}, {0, 2}, {6, 1}, {6, 2}, {2, 3}, {6, 3}, {3, 4}, {5, 4}, {6, 5}});
  const Graph triangle_square_triangle(6, {{1, 3}, {2, 4}, {1, 2}, {3, 4}, {1, 0}, {2, 0}, {3, 5}, {5, 4}});
  const Graph k4_subdivided_twice(6, {{2, 5}, {5, 3}, {3, 0}, {3, 1}, {4, 1}, {4, 0}, {0, 2}, {1, 2}});
  const Graph k4_subdivided_once(5, {{2, 3}, {3, 0}, {3, 1}, {4, 1}, {4, 0}, {1, 2}, {0, 2}});
  return {
      {"chain-1", whisker_block(fan, {4})},
      {"chain-2", whisker_block(fan, {1, 2})},
      {"chain-3", whisker_block(square_fan, {1, 5})},
      {"chain-4", whisker_block(two_squares, {1, 5, 6})},
      {"chain-5", whisker_block(triangle_square_triangle, {2, 4})},
      {"k4-1", whisker_block(complete_graph(4), {})},
      {"k4-2", whisker_block(k4_subdivided_twice, {0, 2})},
      {"k4-3", whisker_block(k4_subdivided_once, {0, 2, 3})},
      {"k4-4", whisker_block(k4_subdivided_once, {0, 2, 4})},
  };
}

}  // namespace bei
