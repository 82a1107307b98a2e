#pragma once

#include <optional>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// All cutsets of a graph in (size, mask) order; always contains the empty set.
struct CutsetFamily {
  std::vector<VertexSet> sets;

  bool contains(VertexSet t) const;
  std::size_t size() const { return sets.size(); }
};

// T is a cutset iff every v in T has neighbours in at least two components of G \ T.
bool is_cutset(const Graph& g, VertexSet t);
// c(T) when T is a cutset, -1 otherwise.
int cutset_component_count(const Graph& g, VertexSet t);

// Vertices that may belong to some cutset (the non-simplicial ones).
VertexSet cutset_candidates(const Graph& g);

// Largest candidate set enumerated exhaustively.
inline constexpr int kMaxCutsetCandidates = 30;

CutsetFamily cutsets(const Graph& g);

// Unmixed iff c(T) - |T| == c(empty) for every cutset T
// (for connected graphs: c(T) == |T| + 1).
struct UnmixedReport {
  bool unmixed = true;
  std::optional<VertexSet> violation;  // smallest offending cutset
  int violation_components = 0;
};
UnmixedReport check_unmixed(const Graph& g);
bool is_unmixed(const Graph& g);

// Accessible: unmixed, and every nonempty cutset T has t with T \ {t} a cutset.
struct AccessibilityReport {
  bool unmixed = false;
  bool accessible = false;
  std::optional<VertexSet> witness;  // smallest failing cutset
};
AccessibilityReport check_accessible(const Graph& g);
bool is_accessible(const Graph& g);

struct DecompositionPiece {
  Graph graph;
  std::vector<int> to_parent;
};

struct Glue {
  int first_piece;
  int second_piece;
  int vertex;  // in parent labels
};

struct DecompositionTree {
  std::vector<DecompositionPiece> pieces;  // sorted by parent vertex lists
  std::vector<Glue> glue;
};

// Repeatedly splits at a cutpoint v with G \ v in two components whose
// neighbourhoods of v are cliques. Requires a connected graph.
DecompositionTree decompose(const Graph& g);
bool is_decomposable(const Graph& g);

}  // namespace bei
