#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "bei/canonical.hpp"
#include "bei/graph_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bei;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph torus_graph(bool shrikhande) {
  Graph g(16);
  auto id = [](int a, int b) { return ((a + 4) % 4) * 4 + (b + 4) % 4; };
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (shrikhande) {
        for (auto [da, db] : {std::pair{0, 1}, {1, 0}, {1, 1}}) g.add_edge(id(a, b), id(a + da, b + db));
      } else {
        for (int c = 0; c < 4; ++c) {
          if (c != b) g.add_edge(id(a, b), id(a, c));
          if (c != a) g.add_edge(id(a, b), id(c, b));
        }
      }
    }
  }
  return g;
}

Graph hypercube(int d) {
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int k = 0; k < d; ++k)
      if (v < (v ^ (1 << k))) g.add_edge(v, v ^ (1 << k));
  return g;
}

Graph paley13() {
  Graph g(13);
  std::set<int> squares;
  for (int x = 1; x < 13; ++x) squares.insert(x * x % 13);
  for (int a = 0; a < 13; ++a)
    for (int b = a + 1; b < 13; ++b)
      if (squares.count((b - a) % 13)) g.add_edge(a, b);
  return g;
}

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("canonical form is the relabeling it reports") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 25;
    Graph g = oracle::random_connected(n, 0.25, rng);
    CanonicalForm cf = canonical_form(g);
    CHECK(cf.graph == relabel(g, cf.position));
    CHECK(canonical_certificate(g).bytes == encode_graph6(cf.graph));
  }
}

TEST_CASE("certificates agree with brute-force minimization on all labeled graphs up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::string, std::string> brute_to_cert;
    std::map<std::string, std::string> cert_to_brute;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      Graph g(n);
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if ((bits >> k) & 1U) g.add_edge(i, j);
      const std::string brute = oracle::brute_canonical_string(g);
      const std::string cert = canonical_certificate(g).bytes;
      auto [a, fresh_a] = brute_to_cert.emplace(brute, cert);
      auto [b, fresh_b] = cert_to_brute.emplace(cert, brute);
      CHECK(a->second == cert);
      CHECK(b->second == brute);
    }
    CHECK(brute_to_cert.size() == cert_to_brute.size());
  }
}

TEST_CASE("distinct representatives up to 6 vertices have distinct certificates") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> brute, certs;
    for (const Graph& g : fixtures::connected(n)) {
      brute.insert(oracle::brute_canonical_string(g));
      certs.insert(canonical_certificate(g).bytes);
    }
    CHECK(brute.size() == fixtures::connected(n).size());
    CHECK(certs.size() == fixtures::connected(n).size());
  }
}

TEST_CASE("certificates are invariant under random relabeling") {
  std::mt19937_64 rng(42);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      Graph g = oracle::random_connected(n, (trial % 10) / 10.0, rng);
      CHECK(canonical_certificate(g) == canonical_certificate(oracle::random_relabel(g, rng)));
    }
  }
}

TEST_CASE("certificates separate and recognize symmetric graphs") {
  std::mt19937_64 rng(9);
  const Graph shrikhande = torus_graph(true);
  const Graph rook = torus_graph(false);
  CHECK(shrikhande.edge_count() == rook.edge_count());
  CHECK(canonical_certificate(shrikhande) != canonical_certificate(rook));
  for (const Graph& g : {petersen(), shrikhande, rook, hypercube(4), hypercube(5), paley13(), cycle_graph(40),
                         complete_graph(20), disjoint_union(petersen(), petersen())}) {
    const Certificate c = canonical_certificate(g);
    for (int trial = 0; trial < 20; ++trial) CHECK(canonical_certificate(relabel(g, shuffled(g.order(), rng))) == c);
  }
  // the Petersen graph is not the 5-prism
  Graph prism(10);
  for (int i = 0; i < 5; ++i) {
    prism.add_edge(i, (i + 1) % 5);
    prism.add_edge(5 + i, 5 + (i + 1) % 5);
    prism.add_edge(i, i + 5);
  }
  CHECK(canonical_certificate(prism) != canonical_certificate(petersen()));
}

TEST_CASE("disconnected graphs canonicalize componentwise") {
  std::mt19937_64 rng(13);
  const Graph a = disjoint_union(cycle_graph(5), path_graph(3));
  const Graph b = disjoint_union(path_graph(3), cycle_graph(5));
  CHECK(canonical_certificate(a) == canonical_certificate(b));
  CHECK(canonical_certificate(a) != canonical_certificate(disjoint_union(cycle_graph(4), path_graph(4))));
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = disjoint_union(oracle::random_connected(1 + trial % 7, 0.3, rng),
                             oracle::random_connected(1 + trial % 5, 0.4, rng));
    CHECK(canonical_certificate(g) == canonical_certificate(oracle::random_relabel(g, rng)));
  }
  CHECK(canonical_certificate(Graph(0)).bytes == "?");
}
