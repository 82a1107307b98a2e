#include <algorithm>
#include <unordered_set>

#include "bei/errors.hpp"
#include "bei/graph_io.hpp"
#include "bei/pipeline.hpp"

namespace bei {

std::vector<Certificate> enumerate_connected_certificates(int n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (n > kMaxGeneratedOrder) {
    throw SizeLimit("built-in generator stops at n = " + std::to_string(kMaxGeneratedOrder) +
                    "; pass a graph6 file instead");
  }
  std::vector<Certificate> level{canonical_certificate(Graph(1))};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<Certificate, CertificateHash> next;
    for (const Certificate& c : level) {
      const Graph base = decode_graph6(c.bytes);
      Graph grown(k);
      for (auto [u, v] : base.edges()) grown.add_edge(u, v);
      const std::uint64_t limit = std::uint64_t{1} << (k - 1);
      for (std::uint64_t nb = 1; nb < limit; ++nb) {
        Graph h = grown;
        for (int v : VertexSet(nb)) h.add_edge(v, k - 1);
        next.insert(canonical_certificate(h));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for (const Certificate& c : enumerate_connected_certificates(n)) out.push_back(decode_graph6(c.bytes));
  return out;
}

}  // namespace bei
