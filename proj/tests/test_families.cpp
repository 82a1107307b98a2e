#include <doctest.h>

#include <set>

#include "bei/canonical.hpp"
#include "bei/errors.hpp"
#include "bei/families.hpp"
#include "bei/ideal_props.hpp"
#include "bei/initial_complex.hpp"
#include "bei/strong_unmixed.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bei;

TEST_CASE("block with whiskers examples") {
  const Graph tri_whisker(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const WhiskeredBlock a = build_bbar(tri_whisker, 0);
  CHECK(a.block == complete_graph(3));
  CHECK(a.whiskered == VertexSet{2});
  CHECK(a.graph == tri_whisker);

  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const WhiskeredBlock b = build_bbar(bowtie, 0);
  CHECK(b.whiskered == VertexSet{2});
  CHECK(b.graph == tri_whisker);
  CHECK_THROWS_AS(build_bbar(bowtie, 2), InvalidInput);
  CHECK_THROWS_AS(whisker_block(complete_graph(3), VertexSet{3}), InvalidInput);
}

TEST_CASE("blocks of accessible graphs stay accessible with whiskers") {
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : fixtures::connected(n)) {
      if (!is_accessible(g)) continue;
      const auto bs = blocks(g);
      for (std::size_t k = 0; k < bs.size(); ++k) {
        const WhiskeredBlock wb = build_bbar(g, static_cast<int>(k));
        CHECK(is_accessible(wb.graph));
        ++checked;
        if (n > 7) continue;
        // c_G(T) == c_Bbar(T) for cutsets of Bbar inside the block
        for (VertexSet t : cutsets(wb.graph).sets) {
          if (!t.is_subset_of(wb.block.vertices())) continue;
          VertexSet in_g;
          for (int v : t) in_g = in_g.with(bs[k].to_parent[v]);
          CHECK(component_count(g, in_g) == component_count(wb.graph, t));
        }
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("chain construction") {
  ChainSpec one;
  one.cycles = {3};
  one.whiskers = VertexSet{0};
  const Graph tri = chain_of_cycles(one);
  CHECK(tri.order() == 4);
  CHECK(canonical_certificate(tri) == canonical_certificate(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})));

  CHECK(canonical_certificate(chain_of_cycles(fixtures::setup_figure_spec())) ==
        canonical_certificate(fixtures::setup_figure()));
  const WhiskeredBlock fig = chain_block(fixtures::setup_figure_spec());
  CHECK(fig.block.order() == 16);
  CHECK(fig.graph.order() == 21);

  // three triangles around one vertex, whiskered at the far end
  ChainSpec fan;
  fan.cycles = {3, 3, 3};
  const Graph f = chain_block(fan).block;
  CHECK(f.order() == 5);
  CHECK(f.edge_count() == 7);
  CHECK(cycle_rank(f) == 3);

  ChainSpec bad;
  bad.cycles = {3, 2};
  CHECK_THROWS_AS(chain_of_cycles(bad), InvalidInput);
  bad.cycles = {4};
  bad.top_steps = {3};
  CHECK_THROWS_AS(chain_of_cycles(bad), InvalidInput);
  bad.top_steps = {1, 1};
  CHECK_THROWS_AS(chain_of_cycles(bad), InvalidInput);
  CHECK(chain_block_order(fixtures::setup_figure_spec()) == 16);
}

TEST_CASE("chain recognition recovers the cycle sequence") {
  const ChainStructure s = recognize_chain(chain_block(fixtures::setup_figure_spec()).block);
  std::vector<int> lengths;
  for (const auto& c : s.cycles) lengths.push_back(static_cast<int>(c.size()));
  const std::vector<int> expected{4, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3};
  const std::vector<int> reversed(expected.rbegin(), expected.rend());
  CHECK((lengths == expected || lengths == reversed));
  CHECK(s.shared.size() == 10);

  CHECK(recognize_chain(cycle_graph(6)).cycles.size() == 1);
  CHECK_THROWS_AS(recognize_chain(path_graph(3)), NotAChain);
  // K4 is a wheel, not a chain
  CHECK_THROWS_AS(recognize_chain(complete_graph(4)), NotAChain);
  // theta graph: two cycles sharing a path of length 2
  CHECK_THROWS_AS(recognize_chain(Graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {0, 4}, {4, 2}})), NotAChain);
  // three cycles on a common edge
  CHECK_THROWS_AS(recognize_chain(Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}})), NotAChain);
}

TEST_CASE("setup conditions examples") {
  const SetupReport fig = check_setup(chain_block(fixtures::setup_figure_spec()));
  CHECK(fig.satisfied);
  CHECK(fig.violated == 0);

  for (std::uint64_t w = 0; w < 64; ++w) {
    ChainSpec s;
    s.cycles = {4, 4};
    s.top_steps = {1, 1};
    s.whiskers = VertexSet(w);
    const SetupReport r = check_setup(chain_block(s));
    CHECK_FALSE(r.satisfied);
    CHECK(r.violated == 2);
  }
  ChainSpec k3;
  k3.cycles = {3};
  CHECK(check_setup(chain_block(k3)).satisfied);
  CHECK_THROWS_AS(check_setup(whisker_block(complete_graph(4), {})), NotAChain);

  ChainSpec lone_c4;
  lone_c4.cycles = {4};
  lone_c4.whiskers = VertexSet{0, 1};
  CHECK(check_setup(chain_block(lone_c4)).satisfied);
  lone_c4.whiskers = VertexSet{0};
  CHECK_FALSE(check_setup(chain_block(lone_c4)).satisfied);
}

TEST_CASE("helm graphs") {
  CHECK(helm(4).order() == 9);
  CHECK(is_accessible(helm(4)));
  CHECK(is_accessible(helm(5)));
  for (int k = 6; k <= 9; ++k) CHECK_FALSE(is_unmixed(helm(k)));
  const Graph h6 = helm(6);
  const VertexSet t{0, 1, 3, 5};
  CHECK(is_cutset(h6, t));
  CHECK(cutset_component_count(h6, t) == 6);
  CHECK(check_unmixed(h6).violation_components - check_unmixed(h6).violation->size() != 1);
  CHECK_THROWS_AS(helm(2), InvalidInput);
}

TEST_CASE("rank three catalog") {
  const auto cat = rank3_catalog();
  REQUIRE(cat.size() == 9);
  std::set<Certificate> certs;
  for (const auto& e : cat) {
    CHECK(cycle_rank(e.graph.block) == 3);
    CHECK(blocks(e.graph.graph).size() == 1 + static_cast<std::size_t>(e.graph.whiskered.size()));
    CHECK(is_accessible(e.graph.graph));
    CHECK(is_strongly_unmixed(e.graph.graph));
    CHECK_FALSE(is_decomposable(e.graph.graph));
    certs.insert(canonical_certificate(e.graph.graph));
  }
  CHECK(certs.size() == 9);
}

TEST_CASE("accessible chains use only triangles and squares") {
  int chains = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : fixtures::connected(n)) {
      if (!is_accessible(g)) continue;
      for (const Block& b : blocks(g)) {
        if (b.graph.order() < 3) continue;
        ChainStructure s;
        try {
          s = recognize_chain(b.graph);
        } catch (const NotAChain&) {
          continue;
        }
        ++chains;
        for (const auto& c : s.cycles) CHECK((c.size() == 3 || c.size() == 4));
        for (std::size_t i = 0; i + 1 < s.cycles.size(); ++i) {
          std::set<int> a(s.cycles[i].begin(), s.cycles[i].end());
          int common = 0;
          for (int v : s.cycles[i + 1]) common += static_cast<int>(a.count(v));
          CHECK(common == 2);
        }
      }
    }
  }
  CHECK(chains > 100);
}

TEST_CASE("setup matches accessibility on small chains") {
  // every cycle sequence with block order <= 8, every step choice and whisker set
  int instances = 0;
  auto rec = [&](auto&& self, std::vector<int>& cycles, int order) -> void {
    if (!cycles.empty()) {
      std::vector<int> steps(cycles.size(), 0);
      while (true) {
        ChainSpec spec;
        spec.cycles = cycles;
        spec.top_steps = steps;
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << order); ++w) {
          spec.whiskers = VertexSet(w);
          const WhiskeredBlock wb = chain_block(spec);
          const bool setup = check_setup(wb).satisfied;
          CHECK(setup == is_accessible(wb.graph));
          CHECK(setup == is_strongly_unmixed(wb.graph));
          ++instances;
        }
        std::size_t k = 0;
        while (k < steps.size() && ++steps[k] > cycles[k] - 2) steps[k++] = 0;
        if (k == steps.size()) break;
      }
    }
    for (int len = 3; order + len - 2 <= 7; ++len) {
      cycles.push_back(len);
      self(self, cycles, order + len - 2);
      cycles.pop_back();
    }
  };
  std::vector<int> cycles;
  rec(rec, cycles, 2);
  CHECK(instances > 1000);
}
