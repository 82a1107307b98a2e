#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// A block with one pendant whisker at each vertex of `whiskered`.
// In `graph` the block keeps labels 0..b-1; whisker tips follow in the
// ascending order of the vertices they hang from.
struct WhiskeredBlock {
  Graph block;
  VertexSet whiskered;
  Graph graph;
};

WhiskeredBlock whisker_block(const Graph& block, VertexSet whiskered);

// Block number `block_index` of blocks(g) with a whisker at every vertex
// that is a cutpoint of g.
WhiskeredBlock build_bbar(const Graph& g, int block_index);

// A chain of cycles drawn as a ladder: a top path (W side), a bottom path
// (U side), and rungs e_0..e_r between them. Cycle i is bounded by rungs
// e_{i-1}, e_i and advances top_steps[i] edges along the top path and
// cycles[i] - 2 - top_steps[i] edges along the bottom path. Consecutive
// cycles share exactly their common rung.
//
// Block labels: top path first, then bottom path; whiskers refers to
// block labels.
struct ChainSpec {
  std::vector<int> cycles;
  std::vector<int> top_steps;  // empty means all zero
  VertexSet whiskers;
};

int chain_block_order(const ChainSpec& spec);
WhiskeredBlock chain_block(const ChainSpec& spec);
Graph chain_of_cycles(const ChainSpec& spec);

// Cycle sequence of a block that is a chain of cycles glued along single
// edges. Throws NotAChain otherwise.
struct ChainStructure {
  std::vector<std::vector<int>> cycles;     // each in cyclic order
  std::vector<std::pair<int, int>> shared;  // shared[i] lies on cycles i and i+1
};
ChainStructure recognize_chain(const Graph& block);

struct SetupReport {
  bool satisfied = false;
  int violated = 0;  // first violated condition 1..7, 0 when satisfied
};

// Setup conditions for a whiskered chain of cycles:
//  1 every cycle is C3 or C4          2 no two consecutive C4s
//  3 each shared edge has exactly one whiskered end (call it w_i, the other u_i)
//  4 w_i, w_{i+1} equal or adjacent on their common cycle; same for u
//  5 a C4 at the start: its two non-shared vertices are w_0 (whiskered, next to w_1)
//    and u_0 (not whiskered, next to u_1); a lone C4 needs exactly one whiskered edge
//  6 the same at the end
//  7 block degree >= 5, or >= 4 on a C4, forces a whisker
SetupReport check_setup(const WhiskeredBlock& wb);

// Wheel with hub 0 and rim 1..k, plus a whisker k+i at each rim vertex i.
Graph helm(int k);

struct CatalogEntry {
  std::string name;
  WhiskeredBlock graph;
};

// Indecomposable accessible whiskered blocks of cycle rank 3:
// five chains of cycles and four graphs built on K4.
std::vector<CatalogEntry> rank3_catalog();

}  // namespace bei
