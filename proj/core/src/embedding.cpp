#include "pwim/embedding.h"

#include <cmath>
#include <cstdlib>

#include "pwim/error.h"

namespace pwim {

EmbeddingVector normalized(std::vector<double> values) {
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kProviderUnavailable, "non-finite embedding component");
    sum += v * v;
  }
  if (sum == 0.0) throw Error(ErrorCode::kZeroVector, "cannot normalize a zero vector");
  const double norm = std::sqrt(sum);
  for (double& v : values) v /= norm;
  return {std::move(values)};
}

void check_texts(std::span<const std::string> texts) {
  if (texts.empty()) throw Error(ErrorCode::kEmptyText, "empty batch");
  for (const auto& t : texts) {
    if (t.find_first_not_of(" \t\r\n") == std::string::npos) {
      throw Error(ErrorCode::kEmptyText, "text is empty after trimming");
    }
  }
}

EmbeddingVector EmbeddingProvider::embed(const std::string& text) {
  return std::move(embed_batch(std::span<const std::string>(&text, 1)).front());
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::array<std::uint32_t, kFallbackDimension> fallback_counts(std::string_view text) {
  std::string padded;
  padded.reserve(text.size() + 2);
  padded.push_back('<');
  for (char c : text) padded.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + ('a' - 'A')) : c);
  padded.push_back('>');

  std::array<std::uint32_t, kFallbackDimension> counts{};
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    ++counts[fnv1a64(std::string_view(padded).substr(i, 3)) >> 56];
  }
  return counts;
}

EmbeddingVector fallback_embed(std::string_view text) {
  const auto counts = fallback_counts(text);
  return normalized(std::vector<double>(counts.begin(), counts.end()));
}

std::vector<EmbeddingVector> FallbackProvider::embed_batch(std::span<const std::string> texts) {
  check_texts(texts);
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(fallback_embed(t));
  return out;
}

ProviderDescriptor FallbackProvider::descriptor() const {
  return {ProviderKind::kFallback, "", "trigram-fnv1a-256", kFallbackDimension};
}

std::shared_ptr<EmbeddingProvider> make_provider_from_env() {
  const char* url = std::getenv("PWIM_EMBED_URL");
  if (url == nullptr || *url == '\0') return std::make_shared<FallbackProvider>();
  const char* model = std::getenv("PWIM_EMBED_MODEL");
  return std::make_shared<RemoteProvider>(url, model && *model ? model : "all-mpnet-base-v2");
}

}  // namespace pwim
