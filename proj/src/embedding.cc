#include "lexiswitch/embedding.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "lexiswitch/error.h"
#include "lexiswitch/text.h"

namespace lexiswitch {

namespace {

void check_finite(std::span<const double> values) {
  for (double v : values)
    if (!std::isfinite(v)) throw Error(ErrorKind::kInvalidArgument, "non-finite embedding component");
}

double l2_norm(std::span<const double> values) { return std::sqrt(dot(values, values)); }

}  // namespace

EmbeddingVector EmbeddingVector::raw(std::vector<double> values) {
  check_finite(values);
  return EmbeddingVector(std::move(values), false);
}

EmbeddingVector EmbeddingVector::unit(std::vector<double> values) {
  check_finite(values);
  if (values.empty()) throw Error(ErrorKind::kInvalidArgument, "empty embedding");
  const double n = l2_norm(values);
  if (n == 0.0) throw Error(ErrorKind::kZeroVector, "cannot normalize a zero vector");
  for (double& v : values) v /= n;
  return EmbeddingVector(std::move(values), true);
}

double EmbeddingVector::norm() const noexcept { return l2_norm(values_); }

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError(a.dim(), b.dim());
  const double na = a.normalized() ? 1.0 : a.norm();
  const double nb = b.normalized() ? 1.0 : b.norm();
  if (na == 0.0 || nb == 0.0) throw Error(ErrorKind::kZeroVector, "cosine of a zero vector");
  const double c = dot(a.values(), b.values()) / (na * nb);
  return std::clamp(c, -1.0, 1.0);
}

void EmbeddingProviderConfig::validate() const {
  if (dim == 0) throw Error(ErrorKind::kInvalidArgument, "embedding dim must be positive");
  if (max_batch == 0) throw Error(ErrorKind::kInvalidArgument, "max_batch must be positive");
  if (kind == Kind::kRemote && endpoint.empty())
    throw Error(ErrorKind::kInvalidArgument, "remote embedding provider requires an endpoint");
}

EmbeddingVector Embedder::embed(std::string_view text) const {
  const std::string owned(text);
  return std::move(embed_batch(std::span<const std::string>(&owned, 1)).front());
}

// ---------------------------------------------------------------------------

namespace {

constexpr char32_t kBoundary = 0x02;

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t trigram_hash(char32_t a, char32_t b, char32_t c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char32_t cp : {a, b, c}) {
    for (int shift = 0; shift < 32; shift += 8) {
      h ^= (cp >> shift) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  }
  return mix64(h);
}

}  // namespace

HashingEmbedder::HashingEmbedder(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error(ErrorKind::kInvalidArgument, "embedding dim must be positive");
}

std::string HashingEmbedder::canonicalize(std::string_view text) {
  return text::to_lower(text::collapse_whitespace(text));
}

std::string HashingEmbedder::fingerprint() const { return fmt::format("hashing-trigram/dim={}", dim_); }

EmbeddingVector HashingEmbedder::embed_one(std::string_view input) const {
  const std::string canon = canonicalize(input);
  if (canon.empty()) throw Error(ErrorKind::kEmptyInput, "cannot embed empty text");

  std::vector<char32_t> cps{kBoundary, kBoundary};
  for (std::size_t pos = 0; pos < canon.size();) {
    const auto d = text::decode(canon, pos);
    // Invalid bytes keep their raw value, offset past the Unicode range.
    cps.push_back(d.valid ? d.code_point : 0x110000 + static_cast<unsigned char>(canon[pos]));
    pos += d.length;
  }
  cps.push_back(kBoundary);
  cps.push_back(kBoundary);

  std::vector<double> values(dim_, 0.0);
  for (std::size_t i = 0; i + 2 < cps.size(); ++i) {
    const std::uint64_t h = trigram_hash(cps[i], cps[i + 1], cps[i + 2]);
    const std::size_t bucket = static_cast<std::size_t>(h & 0xFFFFFFFFULL) % dim_;
    values[bucket] += (h >> 63) ? -1.0 : 1.0;
  }
  return EmbeddingVector::unit(std::move(values));
}

std::vector<EmbeddingVector> HashingEmbedder::embed_batch(std::span<const std::string> texts) const {
  if (texts.empty()) throw Error(ErrorKind::kEmptyInput, "no texts to embed");
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(embed_one(t));
  return out;
}

// ---------------------------------------------------------------------------

RemoteEmbedder::RemoteEmbedder(EmbeddingProviderConfig config, std::optional<std::string> api_key,
                               std::shared_ptr<ProviderLimiter> limiter)
    : config_((config.validate(), std::move(config))),
      client_(config_.endpoint, config_.timeout, std::move(api_key), config_.retry,
              std::move(limiter)) {}

std::string RemoteEmbedder::fingerprint() const {
  return fmt::format("remote:{}/dim={}", config_.model_name, config_.dim);
}

std::vector<EmbeddingVector> RemoteEmbedder::embed_batch(std::span<const std::string> texts) const {
  if (texts.empty()) throw Error(ErrorKind::kEmptyInput, "no texts to embed");
  for (const auto& t : texts)
    if (t.empty()) throw Error(ErrorKind::kEmptyInput, "cannot embed empty text");

  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (std::size_t begin = 0; begin < texts.size(); begin += config_.max_batch) {
    const auto chunk = texts.subspan(begin, std::min(config_.max_batch, texts.size() - begin));
    nlohmann::json body = {{"model", config_.model_name}, {"input", std::vector<std::string>(chunk.begin(), chunk.end())}};
    const nlohmann::json reply = client_.post("/embeddings", body);

    const auto data = reply.find("data");
    if (data == reply.end() || !data->is_array() || data->size() != chunk.size())
      throw ProviderError(200, fmt::format("expected {} embeddings in reply", chunk.size()));

    std::vector<std::vector<double>> vectors(chunk.size());
    for (std::size_t i = 0; i < data->size(); ++i) {
      const auto& item = (*data)[i];
      const std::size_t slot = item.contains("index") ? item["index"].get<std::size_t>() : i;
      if (slot >= chunk.size() || !item.contains("embedding") || !item["embedding"].is_array())
        throw ProviderError(200, "malformed embedding item");
      vectors[slot] = item["embedding"].get<std::vector<double>>();
    }
    for (auto& v : vectors) {
      if (v.size() != config_.dim) throw DimensionMismatchError(config_.dim, v.size());
      out.push_back(EmbeddingVector::unit(std::move(v)));
    }
  }
  return out;
}

std::unique_ptr<Embedder> make_embedder(const EmbeddingProviderConfig& config,
                                        std::shared_ptr<ProviderLimiter> limiter) {
  config.validate();
  if (config.kind == EmbeddingProviderConfig::Kind::kDeterministic)
    return std::make_unique<HashingEmbedder>(config.dim);
  return std::make_unique<RemoteEmbedder>(config, env_value(kApiKeyEnv), std::move(limiter));
}

std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts,
                                         const EmbeddingProviderConfig& config) {
  return make_embedder(config)->embed_batch(texts);
}

}  // namespace lexiswitch
