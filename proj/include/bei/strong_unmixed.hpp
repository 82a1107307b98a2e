#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "bei/canonical.hpp"
#include "bei/graph.hpp"

namespace bei {

// BEI_CACHE_CAP if set and valid, else 2^20.
std::size_t default_memo_capacity();

// Bounded LRU keyed by canonical certificate. Thread-safe; entries are
// deterministic so concurrent writers of the same key agree.
class SuMemo {
 public:
  explicit SuMemo(std::size_t capacity = default_memo_capacity());

  std::optional<bool> get(const Certificate& key);
  void put(const Certificate& key, bool value);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }
  std::size_t hits() const;
  std::size_t misses() const;

 private:
  using Entry = std::pair<Certificate, bool>;

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Entry> order_;  // most recent first
  std::unordered_map<Certificate, std::list<Entry>::iterator, CertificateHash> index_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

// Strongly unmixed: every component complete, or unmixed with a cutpoint v
// such that G \ v, G_v and G_v \ v are all strongly unmixed.
bool is_strongly_unmixed(const Graph& g, SuMemo& memo);
bool is_strongly_unmixed(const Graph& g);

}  // namespace bei
