#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bei/graph.hpp"
#include "bei/ideal_props.hpp"

namespace bei {

// Squarefree monomial / face over x_0..x_{n-1}, y_0..y_{n-1}:
// bit i is x_i, bit n+i is y_i. Ascending bit index is descending in the
// lex order x_0 > ... > x_{n-1} > y_0 > ... > y_{n-1}.
using FaceMask = std::uint64_t;

inline constexpr int kMaxComplexOrder = 32;

inline FaceMask x_var(int i) { return FaceMask{1} << i; }
inline FaceMask y_var(int n, int i) { return FaceMask{1} << (n + i); }

struct FacetComplex {
  int n = 0;
  std::vector<FaceMask> facets;  // inclusion-maximal, ascending

  int max_facet_size() const;
  bool is_pure() const;
  bool is_face(FaceMask f) const;
};

struct MonomialSet {
  int n = 0;
  std::vector<FaceMask> monomials;  // ascending

  bool operator==(const MonomialSet&) const = default;
};

// Keeps the inclusion-maximal sets, sorted ascending.
std::vector<FaceMask> maximal_sets(std::vector<FaceMask> sets);
// Keeps the inclusion-minimal sets, sorted ascending.
std::vector<FaceMask> minimal_sets(std::vector<FaceMask> sets);

// Facets F(T, v) over all cutsets T and choices v_k in each component G_k:
// y_j for j <= v_k and x_j for j >= v_k, j in G_k.
FacetComplex delta_facets(const Graph& g, const CutsetFamily& cuts);
FacetComplex delta_facets(const Graph& g);

// x_i y_j u_pi over admissible paths pi from i to j (i < j), minimal ones only.
MonomialSet admissible_initial_generators(const Graph& g);

MonomialSet minimal_nonfaces(const FacetComplex& c);

// Facets of lk(f). A facet f gives {0}; throws InvalidInput on a non-face.
FacetComplex link(const FacetComplex& c, FaceMask f);

struct S2Options {
  // Skip faces whose y-indices all lie below their x-indices when |F| <= n-1.
  bool prune_monotone_split = false;
};

struct S2Report {
  bool unmixed = false;
  bool s2 = false;
  std::optional<FaceMask> witness;  // smallest face with a disconnected link of dim >= 1
  // every face with a disconnected link of dim >= 1, ordered by (size, mask)
  std::vector<FaceMask> disconnected;
  std::size_t faces_visited = 0;  // closed faces (intersections of facets) only
  std::size_t faces_skipped = 0;
  // disconnected links at faces of dimension below floor((n+1)/2)
  std::size_t low_dimension_disconnected = 0;
};

S2Report check_s2(const Graph& g, const S2Options& opts = {});
bool is_s2(const Graph& g);

// (f_{-1}, f_0, ..., f_{d-1}); f_{i-1} counts faces with i elements.
std::vector<std::int64_t> f_vector(const FacetComplex& c);
// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}; needs f.size() == d + 1.
std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f, int d);
// Number of facets of maximal size.
std::int64_t multiplicity(const FacetComplex& c);

// Text form with 1-based symbols: "x1 x3 y2". Lists are sorted, one per line.
std::string format_face(int n, FaceMask f);
std::string format_faces(int n, const std::vector<FaceMask>& faces);
FaceMask parse_face(int n, std::string_view text);

}  // namespace bei
