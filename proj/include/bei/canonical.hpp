#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// Isomorphism-class identifier: the graph6 string of the canonical form.
struct Certificate {
  std::string bytes;

  auto operator<=>(const Certificate&) const = default;
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept { return std::hash<std::string>{}(c.bytes); }
};

struct CanonicalForm {
  Graph graph;                // relabel(g, position)
  std::vector<int> position;  // original vertex v sits at position[v]
};

// Individualization-refinement search over ordered partitions. Leaves are
// compared by their permuted adjacency rows; automorphisms found along the
// way prune the tree. Components are canonicalized separately and sorted.
CanonicalForm canonical_form(const Graph& g);
Certificate canonical_certificate(const Graph& g);

}  // namespace bei
