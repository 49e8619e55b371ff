#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pwim {

struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dimension() const { return values.size(); }
  bool operator==(const EmbeddingVector&) const = default;
};

enum class ProviderKind { kRemote, kFallback };

struct ProviderDescriptor {
  ProviderKind kind = ProviderKind::kFallback;
  std::string endpoint;  // remote only
  std::string model_name;
  std::size_t dimension = 0;  // 0 until a remote backend has answered once
};

/// Scales to unit L2 norm. Throws Error(kZeroVector) for an all-zero input
/// and Error(kProviderUnavailable) for non-finite components.
EmbeddingVector normalized(std::vector<double> values);

/// Throws Error(kEmptyText) for an empty batch or a blank text.
void check_texts(std::span<const std::string> texts);

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  /// One unit-norm vector per text, order-preserving.
  virtual std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) = 0;
  virtual ProviderDescriptor descriptor() const = 0;

  EmbeddingVector embed(const std::string& text);
};

// Fallback embedder ---------------------------------------------------------
//
// lowercase (ASCII only) -> pad with '<' and '>' -> every byte trigram ->
// FNV-1a 64 -> bucket = hash >> 56 -> counts -> L2 normalize.

inline constexpr std::size_t kFallbackDimension = 256;

std::uint64_t fnv1a64(std::string_view bytes);
std::array<std::uint32_t, kFallbackDimension> fallback_counts(std::string_view text);
EmbeddingVector fallback_embed(std::string_view text);

class FallbackProvider final : public EmbeddingProvider {
 public:
  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) override;
  ProviderDescriptor descriptor() const override;
};

// Remote embedder -----------------------------------------------------------
//
// POST {endpoint}/embed  {"model": m, "texts": [...]}
//   -> {"model": m, "dimension": D, "vectors": [[...], ...]}

class RemoteProvider final : public EmbeddingProvider {
 public:
  RemoteProvider(std::string endpoint, std::string model_name,
                 std::chrono::milliseconds timeout = std::chrono::seconds(30));

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) override;
  ProviderDescriptor descriptor() const override;

 private:
  std::string endpoint_;
  std::string model_name_;
  std::chrono::milliseconds timeout_;
  std::atomic<std::size_t> dimension_{0};
};

/// PWIM_EMBED_URL selects RemoteProvider (model from PWIM_EMBED_MODEL,
/// default "all-mpnet-base-v2"); otherwise FallbackProvider.
std::shared_ptr<EmbeddingProvider> make_provider_from_env();

// Cache ---------------------------------------------------------------------

/// Exact-string LRU cache in front of another provider. Misses within one
/// embed_batch call go to the backend as a single batch.
class CachingProvider final : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDefaultCapacity = 4096;

  explicit CachingProvider(std::shared_ptr<EmbeddingProvider> backend,
                           std::size_t capacity = kDefaultCapacity);

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) override;
  ProviderDescriptor descriptor() const override { return backend_->descriptor(); }

  /// Warms the cache with one backend batch covering every uncached text.
  void precompute(std::span<const std::string> texts);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }

 private:
  using Entry = std::pair<std::string, EmbeddingVector>;

  const EmbeddingVector* lookup_locked(const std::string& text);
  void store_locked(const std::string& text, const EmbeddingVector& vec);

  std::shared_ptr<EmbeddingProvider> backend_;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::mutex backend_mutex_;
  std::list<Entry> lru_;  // front = most recent
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
};

}  // namespace pwim
