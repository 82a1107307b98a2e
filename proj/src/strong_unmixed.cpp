#include "bei/strong_unmixed.hpp"

#include <cstdlib>
#include <string>

#include "bei/ideal_props.hpp"

namespace bei {

std::size_t default_memo_capacity() {
  constexpr std::size_t kDefault = std::size_t{1} << 20;
  const char* env = std::getenv("BEI_CACHE_CAP");
  if (env == nullptr || *env == '\0') return kDefault;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) return kDefault;
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return kDefault;
  }
}

SuMemo::SuMemo(std::size_t capacity) : capacity_(capacity == 0 ? 1 : capacity) {}

std::optional<bool> SuMemo::get(const Certificate& key) {
  std::lock_guard lock(mutex_);
  auto it = index_.find(key);
  if (it == index_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  order_.splice(order_.begin(), order_, it->second);
  return it->second->second;
}

void SuMemo::put(const Certificate& key, bool value) {
  std::lock_guard lock(mutex_);
  if (auto it = index_.find(key); it != index_.end()) {
    it->second->second = value;
    order_.splice(order_.begin(), order_, it->second);
    return;
  }
  order_.emplace_front(key, value);
  index_.emplace(key, order_.begin());
  if (index_.size() > capacity_) {
    index_.erase(order_.back().first);
    order_.pop_back();
  }
}

std::size_t SuMemo::size() const {
  std::lock_guard lock(mutex_);
  return index_.size();
}

std::size_t SuMemo::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t SuMemo::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

bool is_strongly_unmixed(const Graph& g, SuMemo& memo) {
  bool all_complete = true;
  for (VertexSet comp : components(g)) {
    if (!is_clique(g, comp)) {
      all_complete = false;
      break;
    }
  }
  if (all_complete) return true;

  const Certificate key = canonical_certificate(g);
  if (auto hit = memo.get(key)) return *hit;

  bool result = false;
  if (is_unmixed(g)) {
    for (int v : cutpoints(g)) {
      const VertexSet sv = VertexSet::single(v);
      if (!is_strongly_unmixed(delete_vertices(g, sv), memo)) continue;
      const Graph gv = saturate(g, v);
      if (!is_strongly_unmixed(gv, memo)) continue;
      if (is_strongly_unmixed(delete_vertices(gv, sv), memo)) {
        result = true;
        break;
      }
    }
  }
  memo.put(key, result);
  return result;
}

bool is_strongly_unmixed(const Graph& g) {
  SuMemo memo;
  return is_strongly_unmixed(g, memo);
}

}  // namespace bei
