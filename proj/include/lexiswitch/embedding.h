#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexiswitch/http_client.h"

namespace lexiswitch {

// A finite real vector. `normalized()` vectors have unit L2 norm within 1e-6.
class EmbeddingVector {
 public:
  static constexpr double kNormTolerance = 1e-6;

  EmbeddingVector() = default;

  // Validates finiteness; keeps the values as given.
  static EmbeddingVector raw(std::vector<double> values);
  // Validates finiteness and scales to unit norm. Throws ZeroVector.
  static EmbeddingVector unit(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t dim() const noexcept { return values_.size(); }
  bool normalized() const noexcept { return normalized_; }
  double norm() const noexcept;

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

 private:
  EmbeddingVector(std::vector<double> values, bool normalized)
      : values_(std::move(values)), normalized_(normalized) {}

  std::vector<double> values_;
  bool normalized_ = false;
};

double dot(std::span<const double> a, std::span<const double> b);

// dot(a, b) / (|a| |b|), clamped to [-1, 1]. Throws DimensionMismatch, ZeroVector.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

struct EmbeddingProviderConfig {
  enum class Kind { kRemote, kDeterministic };

  Kind kind = Kind::kDeterministic;
  std::string endpoint;
  std::string model_name = "text-embedding-3-small";
  std::size_t dim = 256;
  std::chrono::milliseconds timeout{30000};
  std::size_t max_batch = 64;
  RetryPolicy retry;

  void validate() const;
};

class Embedder {
 public:
  virtual ~Embedder() = default;

  // One unit-norm vector per input, in input order. Throws EmptyInput for an
  // empty list or an empty text.
  virtual std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const = 0;
  virtual std::size_t dim() const = 0;
  // Identifies the embedding space, e.g. "hashing-trigram/dim=64".
  virtual std::string fingerprint() const = 0;

  EmbeddingVector embed(std::string_view text) const;
};

// Offline embedder: signed feature hashing of character trigrams over the
// canonicalized text (lowercased, whitespace collapsed), padded with two
// boundary marks on each side, then L2 normalization.
class HashingEmbedder final : public Embedder {
 public:
  explicit HashingEmbedder(std::size_t dim);

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const override;
  std::size_t dim() const override { return dim_; }
  std::string fingerprint() const override;

  static std::string canonicalize(std::string_view text);

 private:
  EmbeddingVector embed_one(std::string_view text) const;

  std::size_t dim_;
};

// Wire-compatible client for POST {endpoint}/embeddings.
class RemoteEmbedder final : public Embedder {
 public:
  RemoteEmbedder(EmbeddingProviderConfig config, std::optional<std::string> api_key,
                 std::shared_ptr<ProviderLimiter> limiter);

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const override;
  std::size_t dim() const override { return config_.dim; }
  std::string fingerprint() const override;

 private:
  EmbeddingProviderConfig config_;
  JsonHttpClient client_;
};

std::unique_ptr<Embedder> make_embedder(const EmbeddingProviderConfig& config,
                                        std::shared_ptr<ProviderLimiter> limiter = nullptr);

std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts,
                                         const EmbeddingProviderConfig& config);

}  // namespace lexiswitch
