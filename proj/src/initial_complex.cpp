#include "bei/initial_complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "bei/errors.hpp"

namespace bei {

namespace {

void check_order(int n) {
  if (n > kMaxComplexOrder) throw SizeLimit("complexes need n <= 32 (2n symbols in one word)");
}

// For each symbol, the set of facets containing it, as a bitset over facets.
class Incidence {
 public:
  explicit Incidence(const FacetComplex& c)
      : symbols_(2 * c.n), words_(std::max<std::size_t>(1, (c.facets.size() + 63) / 64)), bits_(symbols_ * words_) {
    for (std::size_t f = 0; f < c.facets.size(); ++f) {
      for (FaceMask m = c.facets[f]; m; m &= m - 1) {
        bits_[std::countr_zero(m) * words_ + f / 64] |= std::uint64_t{1} << (f % 64);
      }
    }
    all_.assign(words_, 0);
    for (std::size_t f = 0; f < c.facets.size(); ++f) all_[f / 64] |= std::uint64_t{1} << (f % 64);
  }

  int symbols() const { return symbols_; }
  std::size_t words() const { return words_; }
  const std::uint64_t* of(int symbol) const { return &bits_[symbol * words_]; }
  const std::uint64_t* all() const { return all_.data(); }

 private:
  int symbols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> all_;
};

bool any_bit(const std::uint64_t* a, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (a[w]) return true;
  return false;
}

// Depth-first walk over all faces, adding symbols in increasing order so each
// face is visited once. `containing` is the facet bitset of the current face.
// `on_face(face, containing)`, `on_nonface(face, new_symbol)`.
template <typename OnFace, typename OnNonface>
void walk_faces(const FacetComplex& c, OnFace&& on_face, OnNonface&& on_nonface) {
  if (c.facets.empty()) return;
  const Incidence inc(c);
  const std::size_t words = inc.words();
  const int symbols = inc.symbols();
  std::vector<std::uint64_t> stack((symbols + 2) * words);
  std::copy(inc.all(), inc.all() + words, stack.begin());

  auto rec = [&](auto&& self, FaceMask face, int next, int depth) -> void {
    const std::uint64_t* cur = &stack[depth * words];
    on_face(face, cur, words);
    std::uint64_t* child = &stack[(depth + 1) * words];
    for (int s = next; s < symbols; ++s) {
      const std::uint64_t* col = inc.of(s);
      bool nonempty = false;
      for (std::size_t w = 0; w < words; ++w) {
        child[w] = cur[w] & col[w];
        nonempty |= child[w] != 0;
      }
      if (nonempty) {
        self(self, face | (FaceMask{1} << s), s + 1, depth + 1);
      } else {
        on_nonface(face, s, inc);
      }
    }
  };
  rec(rec, 0, 0, 0);
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

}  // namespace

int FacetComplex::max_facet_size() const {
  int d = 0;
  for (FaceMask f : facets) d = std::max(d, std::popcount(f));
  return d;
}

bool FacetComplex::is_pure() const {
  return std::all_of(facets.begin(), facets.end(),
                     [&](FaceMask f) { return std::popcount(f) == std::popcount(facets.front()); });
}

bool FacetComplex::is_face(FaceMask f) const {
  return std::any_of(facets.begin(), facets.end(), [&](FaceMask F) { return (f & ~F) == 0; });
}

std::vector<FaceMask> maximal_sets(std::vector<FaceMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (sets.empty()) return sets;
  const int first = std::popcount(sets.front());
  if (std::all_of(sets.begin(), sets.end(), [&](FaceMask f) { return std::popcount(f) == first; })) return sets;
  std::vector<FaceMask> by_size = sets;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](FaceMask a, FaceMask b) { return std::popcount(a) > std::popcount(b); });
  std::vector<FaceMask> kept;
  for (FaceMask f : by_size) {
    bool covered = false;
    for (FaceMask k : kept) {
      if ((f & ~k) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<FaceMask> minimal_sets(std::vector<FaceMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceMask> by_size = sets;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](FaceMask a, FaceMask b) { return std::popcount(a) < std::popcount(b); });
  std::vector<FaceMask> kept;
  for (FaceMask f : by_size) {
    bool covers = false;
    for (FaceMask k : kept) {
      if ((k & ~f) == 0) {
        covers = true;
        break;
      }
    }
    if (!covers) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

FacetComplex delta_facets(const Graph& g, const CutsetFamily& cuts) {
  const int n = g.order();
  check_order(n);
  std::vector<FaceMask> all;
  for (VertexSet t : cuts.sets) {
    // per component, the piece contributed by each choice of v_k
    std::vector<std::vector<FaceMask>> choices;
    for (VertexSet comp : components(g, t)) {
      std::vector<FaceMask> options;
      for (int v : comp) {
        FaceMask m = 0;
        for (int j : comp) {
          if (j <= v) m |= y_var(n, j);
          if (j >= v) m |= x_var(j);
        }
        options.push_back(m);
      }
      choices.push_back(std::move(options));
    }
    std::vector<std::size_t> at(choices.size(), 0);
    while (true) {
      FaceMask f = 0;
      for (std::size_t k = 0; k < choices.size(); ++k) f |= choices[k][at[k]];
      all.push_back(f);
      std::size_t k = 0;
      while (k < choices.size() && ++at[k] == choices[k].size()) at[k++] = 0;
      if (k == choices.size()) break;
    }
  }
  return FacetComplex{n, maximal_sets(std::move(all))};
}

FacetComplex delta_facets(const Graph& g) { return delta_facets(g, cutsets(g)); }

MonomialSet admissible_initial_generators(const Graph& g) {
  const int n = g.order();
  check_order(n);
  std::vector<FaceMask> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // interior vertices must lie outside [i, j]
      const std::uint64_t allowed = g.vertices().mask() & ~((VertexSet::bit(j) << 1) - VertexSet::bit(i));
      std::set<std::uint64_t> interiors;
      auto walk = [&](auto&& self, int at, std::uint64_t used) -> void {
        if (g.adjacent(at, j)) interiors.insert(used);
        for (std::uint64_t nb = g.row(at) & allowed & ~used; nb; nb &= nb - 1) {
          const int w = std::countr_zero(nb);
          self(self, w, used | VertexSet::bit(w));
        }
      };
      walk(walk, i, 0);

      for (std::uint64_t interior : interiors) {
        // minimality: no proper subset of the interior still joins i to j
        bool minimal = true;
        if (interior != 0 && g.adjacent(i, j)) minimal = false;
        for (std::uint64_t rest = interior; minimal && rest; rest &= rest - 1) {
          const std::uint64_t without = interior & ~(rest & -rest);
          const VertexSet removed = g.vertices() - VertexSet(without | VertexSet::bit(i) | VertexSet::bit(j));
          for (VertexSet comp : components(g, removed)) {
            if (comp.contains(i)) {
              if (comp.contains(j)) minimal = false;
              break;
            }
          }
        }
        if (!minimal) continue;
        FaceMask m = x_var(i) | y_var(n, j);
        for (int k : VertexSet(interior)) m |= (k > j) ? x_var(k) : y_var(n, k);
        gens.push_back(m);
      }
    }
  }
  return MonomialSet{n, minimal_sets(std::move(gens))};
}

MonomialSet minimal_nonfaces(const FacetComplex& c) {
  check_order(c.n);
  std::vector<FaceMask> found;
  if (c.facets.empty()) return MonomialSet{c.n, {}};
  std::vector<std::uint64_t> scratch;
  walk_faces(
      c, [](FaceMask, const std::uint64_t*, std::size_t) {},
      [&](FaceMask face, int s, const Incidence& inc) {
        // face + s is a nonface; minimal iff dropping any element of face gives a face
        const std::size_t words = inc.words();
        scratch.resize(words);
        for (FaceMask rest = face; rest; rest &= rest - 1) {
          const int drop = std::countr_zero(rest);
          std::copy(inc.of(s), inc.of(s) + words, scratch.begin());
          for (FaceMask keep = face & ~(FaceMask{1} << drop); keep; keep &= keep - 1) {
            const std::uint64_t* col = inc.of(std::countr_zero(keep));
            for (std::size_t w = 0; w < words; ++w) scratch[w] &= col[w];
          }
          if (!any_bit(scratch.data(), words)) return;
        }
        found.push_back(face | (FaceMask{1} << s));
      });
  std::sort(found.begin(), found.end());
  return MonomialSet{c.n, std::move(found)};
}

FacetComplex link(const FacetComplex& c, FaceMask f) {
  std::vector<FaceMask> out;
  for (FaceMask F : c.facets)
    if ((f & ~F) == 0) out.push_back(F & ~f);
  if (out.empty()) throw InvalidInput("link of a non-face");
  return FacetComplex{c.n, maximal_sets(std::move(out))};
}

// Only faces equal to the intersection of their facets can have a disconnected
// link; any other face has all link facets sharing a vertex. These closed faces
// are enumerated once each by prefix-preserving closure extension.
S2Report check_s2(const Graph& g, const S2Options& opts) {
  const int n = g.order();
  check_order(n);
  S2Report report;
  report.unmixed = check_unmixed(g).unmixed;
  if (!report.unmixed) return report;

  const FacetComplex c = delta_facets(g, cutsets(g));
  report.s2 = true;
  if (c.facets.empty()) return report;
  const int symbols = 2 * n;
  const FaceMask x_mask = (FaceMask{1} << n) - 1;
  const int low_dimension = (n + 1) / 2;
  std::vector<FaceMask> comps;

  // containing: facets that contain face, as indices into c.facets
  auto visit = [&](FaceMask face, const int* containing, std::size_t count) {
    ++report.faces_visited;
    if (count < 2) return;
    if (opts.prune_monotone_split && std::popcount(face) <= n - 1) {
      const FaceMask xs = face & x_mask;
      const FaceMask ys = (face >> n) & x_mask;
      // every y-index strictly below every x-index
      if (xs == 0 || ys == 0 || (63 - std::countl_zero(ys)) < std::countr_zero(xs)) {
        ++report.faces_skipped;
        return;
      }
    }
    // components of the link as symbol masks, merged facet by facet
    comps.clear();
    bool has_edge = false;
    for (std::size_t k = 0; k < count; ++k) {
      FaceMask merged = c.facets[containing[k]] & ~face;
      has_edge |= std::popcount(merged) >= 2;
      std::size_t keep = 0;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (comps[j] & merged) {
          merged |= comps[j];
        } else {
          comps[keep++] = comps[j];
        }
      }
      comps.resize(keep);
      comps.push_back(merged);
    }
    if (!has_edge || comps.size() == 1) return;

    if (std::popcount(face) - 1 < low_dimension) ++report.low_dimension_disconnected;
    report.disconnected.push_back(face);
  };

  // one arena per depth, filled by counting sort on the extension symbol
  std::vector<std::vector<int>> arena(symbols + 1);
  std::vector<std::vector<std::size_t>> offsets(symbols + 1, std::vector<std::size_t>(symbols + 1));

  auto rec = [&](auto&& self, FaceMask face, int tail, int depth, const int* containing, std::size_t count) -> void {
    visit(face, containing, count);
    if (tail + 1 >= symbols) return;
    const FaceMask above = ~((FaceMask{1} << (tail + 1)) - 1) & ~face;
    std::vector<std::size_t>& off = offsets[depth];
    std::fill(off.begin(), off.end(), 0);
    std::size_t total = 0;
    for (std::size_t k = 0; k < count; ++k) {
      for (FaceMask m = c.facets[containing[k]] & above; m; m &= m - 1) ++off[std::countr_zero(m) + 1];
    }
    for (int e = 0; e < symbols; ++e) off[e + 1] += off[e];
    total = off[symbols];
    std::vector<int>& buf = arena[depth];
    buf.resize(total);
    {
      std::vector<std::size_t> fill(off.begin(), off.end() - 1);
      for (std::size_t k = 0; k < count; ++k)
        for (FaceMask m = c.facets[containing[k]] & above; m; m &= m - 1) buf[fill[std::countr_zero(m)]++] = containing[k];
    }
    for (int e = tail + 1; e < symbols; ++e) {
      const std::size_t lo = off[e], hi = off[e + 1];
      if (lo == hi) continue;
      FaceMask next = ~FaceMask{0};
      for (std::size_t k = lo; k < hi; ++k) next &= c.facets[buf[k]];
      const FaceMask below = (FaceMask{1} << e) - 1;
      if ((next & below) != (face & below)) continue;
      self(self, next, e, depth + 1, buf.data() + lo, hi - lo);
    }
  };
  std::vector<int> all(c.facets.size());
  std::iota(all.begin(), all.end(), 0);
  FaceMask root = ~FaceMask{0};
  for (FaceMask f : c.facets) root &= f;
  rec(rec, root, -1, 0, all.data(), all.size());

  const auto key = [](FaceMask m) { return std::pair(std::popcount(m), m); };
  std::sort(report.disconnected.begin(), report.disconnected.end(),
            [&](FaceMask a, FaceMask b) { return key(a) < key(b); });
  if (!report.disconnected.empty()) report.witness = report.disconnected.front();
  report.s2 = report.disconnected.empty();
  return report;
}

bool is_s2(const Graph& g) { return check_s2(g).s2; }

std::vector<std::int64_t> f_vector(const FacetComplex& c) {
  check_order(c.n);
  std::vector<std::int64_t> f(c.max_facet_size() + 1, 0);
  walk_faces(
      c, [&](FaceMask face, const std::uint64_t*, std::size_t) { ++f[std::popcount(face)]; },
      [](FaceMask, int, const Incidence&) {});
  if (c.facets.empty()) f[0] = 0;
  return f;
}

std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f, int d) {
  if (d < 0 || static_cast<int>(f.size()) != d + 1) {
    throw InvalidInput("h_vector: f-vector length " + std::to_string(f.size()) + " inconsistent with d = " +
                       std::to_string(d));
  }
  std::vector<std::int64_t> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    __int128 sum = 0;
    for (int i = 0; i <= k; ++i) {
      const __int128 term = static_cast<__int128>(binomial(d - i, k - i)) * f[i];
      sum += ((k - i) % 2 == 0) ? term : -term;
    }
    h[k] = static_cast<std::int64_t>(sum);
  }
  return h;
}

std::int64_t multiplicity(const FacetComplex& c) {
  const int d = c.max_facet_size();
  return std::count_if(c.facets.begin(), c.facets.end(), [&](FaceMask f) { return std::popcount(f) == d; });
}

std::string format_face(int n, FaceMask f) {
  std::ostringstream out;
  bool first = true;
  for (FaceMask m = f; m; m &= m - 1) {
    const int s = std::countr_zero(m);
    if (!first) out << ' ';
    first = false;
    if (s < n) {
      out << 'x' << (s + 1);
    } else {
      out << 'y' << (s - n + 1);
    }
  }
  return out.str();
}

std::string format_faces(int n, const std::vector<FaceMask>& faces) {
  // order lines by their ascending symbol lists
  std::vector<std::pair<std::vector<int>, FaceMask>> keyed;
  for (FaceMask f : faces) {
    std::vector<int> syms;
    for (FaceMask m = f; m; m &= m - 1) syms.push_back(std::countr_zero(m));
    keyed.emplace_back(std::move(syms), f);
  }
  std::sort(keyed.begin(), keyed.end());
  std::string out;
  for (const auto& [syms, f] : keyed) {
    out += format_face(n, f);
    out += '\n';
  }
  return out;
}

FaceMask parse_face(int n, std::string_view text) {
  check_order(n);
  std::istringstream in{std::string(text)};
  std::string tok;
  FaceMask out = 0;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y')) throw InvalidInput("bad symbol '" + tok + "'");
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw InvalidInput("bad symbol '" + tok + "'");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad symbol '" + tok + "'");
    }
    if (idx < 1 || idx > n) throw InvalidInput("symbol index out of range: " + tok);
    out |= tok[0] == 'x' ? x_var(idx - 1) : y_var(n, idx - 1);
  }
  return out;
}

}  // namespace bei
