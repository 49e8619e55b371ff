#include <cmath>

#include "httplib.h"
#include "json.hpp"
#include "pwim/embedding.h"
#include "pwim/error.h"

namespace pwim {

using json = nlohmann::json;

RemoteProvider::RemoteProvider(std::string endpoint, std::string model_name,
                               std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), model_name_(std::move(model_name)), timeout_(timeout) {
  while (!endpoint_.empty() && endpoint_.back() == '/') endpoint_.pop_back();
}

ProviderDescriptor RemoteProvider::descriptor() const {
  return {ProviderKind::kRemote, endpoint_, model_name_, dimension_.load()};
}

std::vector<EmbeddingVector> RemoteProvider::embed_batch(std::span<const std::string> texts) {
  check_texts(texts);

  // "http://host:port/prefix" -> client on scheme+authority, POST prefix/embed
  std::string base = endpoint_;
  std::string prefix;
  const std::size_t scheme = base.find("://");
  const std::size_t slash = base.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (slash != std::string::npos) {
    prefix = base.substr(slash);
    base.resize(slash);
  }

  httplib::Client client(base);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);

  const json request = {{"model", model_name_}, {"texts", std::vector<std::string>(texts.begin(), texts.end())}};
  auto res = client.Post(prefix + "/embed", request.dump(), "application/json");
  if (!res) {
    throw Error(ErrorCode::kProviderUnavailable,
                endpoint_ + " unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kProviderUnavailable, endpoint_ + " returned HTTP " + std::to_string(res->status));
  }

  json body;
  try {
    body = json::parse(res->body);
  } catch (const json::parse_error&) {
    throw Error(ErrorCode::kProviderUnavailable, "malformed /embed response");
  }
  if (!body.is_object() || !body.contains("vectors") || !body["vectors"].is_array() ||
      body["vectors"].size() != texts.size()) {
    throw Error(ErrorCode::kProviderUnavailable, "/embed response does not carry one vector per text");
  }

  std::size_t dim = dimension_.load();
  if (body.contains("dimension") && body["dimension"].is_number_unsigned()) {
    const auto declared = body["dimension"].get<std::size_t>();
    if (dim != 0 && declared != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "backend switched dimension " + std::to_string(dim) + " -> " + std::to_string(declared));
    }
    dim = declared;
  }

  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& v : body["vectors"]) {
    if (!v.is_array()) throw Error(ErrorCode::kProviderUnavailable, "vector is not an array");
    std::vector<double> values;
    values.reserve(v.size());
    for (const auto& x : v) {
      if (!x.is_number()) throw Error(ErrorCode::kProviderUnavailable, "non-numeric vector component");
      values.push_back(x.get<double>());
    }
    if (dim == 0) dim = values.size();
    if (values.size() != dim || dim < 2) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "expected dimension " + std::to_string(dim) + ", got " + std::to_string(values.size()));
    }
    out.push_back(normalized(std::move(values)));
  }
  dimension_.store(dim);
  return out;
}

}  // namespace pwim
