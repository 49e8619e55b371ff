#include <optional>

#include "pwim/embedding.h"
#include "pwim/error.h"

namespace pwim {

CachingProvider::CachingProvider(std::shared_ptr<EmbeddingProvider> backend, std::size_t capacity)
    : backend_(std::move(backend)), capacity_(capacity == 0 ? 1 : capacity) {}

const EmbeddingVector* CachingProvider::lookup_locked(const std::string& text) {
  auto it = index_.find(text);
  if (it == index_.end()) return nullptr;
  lru_.splice(lru_.begin(), lru_, it->second);
  return &it->second->second;
}

void CachingProvider::store_locked(const std::string& text, const EmbeddingVector& vec) {
  if (auto it = index_.find(text); it != index_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    return;
  }
  lru_.emplace_front(text, vec);
  index_.emplace(text, lru_.begin());
  while (lru_.size() > capacity_) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
}

std::vector<EmbeddingVector> CachingProvider::embed_batch(std::span<const std::string> texts) {
  check_texts(texts);
  std::vector<std::optional<EmbeddingVector>> slots(texts.size());
  std::vector<std::string> misses;
  std::vector<std::size_t> miss_slots;
  {
    std::lock_guard lock(mutex_);
    std::unordered_map<std::string, std::size_t> first_miss;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (const auto* hit = lookup_locked(texts[i])) {
        slots[i] = *hit;
      } else if (!first_miss.count(texts[i])) {
        first_miss.emplace(texts[i], misses.size());
        misses.push_back(texts[i]);
        miss_slots.push_back(i);
      }
    }
  }

  if (!misses.empty()) {
    std::vector<EmbeddingVector> fresh;
    {
      std::lock_guard backend_lock(backend_mutex_);
      fresh = backend_->embed_batch(misses);
    }
    if (fresh.size() != misses.size()) {
      throw Error(ErrorCode::kProviderUnavailable, "backend returned wrong number of vectors");
    }
    std::lock_guard lock(mutex_);
    std::unordered_map<std::string, const EmbeddingVector*> by_text;
    for (std::size_t m = 0; m < misses.size(); ++m) {
      store_locked(misses[m], fresh[m]);
      by_text.emplace(misses[m], &fresh[m]);
    }
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (!slots[i]) slots[i] = *by_text.at(texts[i]);
    }
  }

  std::vector<EmbeddingVector> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void CachingProvider::precompute(std::span<const std::string> texts) {
  if (texts.empty()) return;
  embed_batch(texts);
}

std::size_t CachingProvider::size() const {
  std::lock_guard lock(mutex_);
  return lru_.size();
}

}  // namespace pwim
