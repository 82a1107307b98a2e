#pragma once

#include <map>
#include <vector>

#include "bei/families.hpp"
#include "bei/graph.hpp"
#include "bei/initial_complex.hpp"
#include "bei/pipeline.hpp"

namespace fixtures {

using bei::Graph;

// Four K4s sharing the triangle {4,5,6}.
inline Graph star7() {
  Graph g(7);
  for (int a = 4; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) g.add_edge(a, b);
  for (int leaf = 0; leaf < 4; ++leaf)
    for (int h = 4; h < 7; ++h) g.add_edge(leaf, h);
  return g;
}

// Worked-example paths, written 0-based: 0-1-2 and 0-2-1.
inline Graph path_012() { return Graph(3, {{0, 1}, {1, 2}}); }
inline Graph path_021() { return Graph(3, {{0, 2}, {1, 2}}); }

inline Graph k4_plus_whisker() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

// Eleven-cycle whiskered chain: top row t0..t4 (0..4), bottom row b0..b10
// (5..15) left to right, whisker tips 16..20 on the top row.
inline Graph setup_figure() {
  Graph g(21);
  auto t = [](int i) { return i; };
  auto b = [](int i) { return 5 + i; };
  for (int i = 0; i < 4; ++i) g.add_edge(t(i), t(i + 1));
  for (int i = 0; i < 10; ++i) g.add_edge(b(i), b(i + 1));
  g.add_edge(t(0), b(0));
  g.add_edge(t(4), b(10));
  const std::pair<int, int> chords[] = {{1, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5},
                                        {3, 6}, {4, 7}, {4, 8}, {4, 9}};
  for (auto [top, bottom] : chords) g.add_edge(t(top), b(bottom));
  for (int i = 0; i < 5; ++i) g.add_edge(t(i), 16 + i);
  return g;
}

inline bei::ChainSpec setup_figure_spec() {
  bei::ChainSpec spec;
  spec.cycles = {4, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3};
  spec.top_steps = {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0};
  spec.whiskers = bei::VertexSet{0, 1, 2, 3, 4};
  return spec;
}

// Symbol set from 1-based text, e.g. "x1 y2".
inline bei::FaceMask face(int n, const char* text) { return bei::parse_face(n, text); }

inline std::vector<bei::FaceMask> faces(int n, std::initializer_list<const char*> texts) {
  std::vector<bei::FaceMask> out;
  for (const char* t : texts) out.push_back(face(n, t));
  std::sort(out.begin(), out.end());
  return out;
}

// Connected graphs on n vertices, computed once per process.
inline const std::vector<Graph>& connected(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, bei::enumerate_connected(n)).first;
  return it->second;
}

}  // namespace fixtures
