#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lexiswitch/embedding.h"

namespace lexiswitch {

struct HnswParams {
  std::size_t m = 16;                 // max neighbors per node on layers >= 1
  std::size_t ef_construction = 200;  // beam width while inserting
  std::size_t ef_search = 64;         // default beam width while querying
  std::uint64_t seed = 42;            // level-assignment RNG

  void validate() const;
  friend bool operator==(const HnswParams&, const HnswParams&) = default;
};

struct NeighborHit {
  std::string entry_id;
  double score = 0.0;  // cosine similarity
  std::size_t rank = 0;  // 1-based

  friend bool operator==(const NeighborHit&, const NeighborHit&) = default;
};

struct LabeledVector {
  std::string id;
  EmbeddingVector vector;
};

// Identifies what an index was built from; persisted in snapshots.
struct IndexProvenance {
  std::string lexicon_checksum;
  std::string embedder;
  std::string embedding_text;

  friend bool operator==(const IndexProvenance&, const IndexProvenance&) = default;
};

// Hierarchical navigable small-world graph over unit vectors. Internally the
// distance is 1 - cosine; results are reported as cosine similarity, sorted by
// score descending with ties broken by entry id ascending. Immutable after
// build, so concurrent queries need no locking.
class HnswIndex {
 public:
  static HnswIndex build(std::span<const LabeledVector> vectors, const HnswParams& params = {},
                         IndexProvenance provenance = {});

  std::vector<NeighborHit> query(const EmbeddingVector& q, std::size_t k) const;
  std::vector<NeighborHit> query(const EmbeddingVector& q, std::size_t k, std::size_t ef) const;

  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const HnswParams& params() const noexcept { return params_; }
  const IndexProvenance& provenance() const noexcept { return provenance_; }
  int max_level() const noexcept { return max_level_; }
  int node_level(std::size_t node) const { return levels_.at(node); }
  const std::string& node_id(std::size_t node) const { return ids_.at(node); }
  std::span<const std::uint32_t> neighbors(std::size_t node, int layer) const;
  std::size_t max_neighbors(int layer) const { return layer == 0 ? 2 * params_.m : params_.m; }

  // Versioned JSON snapshot holding params, provenance, vectors and adjacency.
  nlohmann::ordered_json to_json() const;
  static HnswIndex from_json(const nlohmann::json& snapshot);
  void save(const std::filesystem::path& path) const;
  static HnswIndex load(const std::filesystem::path& path);

  static constexpr int kSnapshotVersion = 1;

 private:
  HnswIndex() = default;

  struct Candidate {
    double distance;
    std::uint32_t node;
    friend auto operator<=>(const Candidate&, const Candidate&) = default;
  };

  std::span<const double> vector_of(std::uint32_t node) const {
    return {data_.data() + static_cast<std::size_t>(node) * dim_, dim_};
  }
  double distance(std::span<const double> q, std::uint32_t node) const;
  std::uint32_t greedy_closest(std::span<const double> q, std::uint32_t entry, int layer) const;
  std::vector<Candidate> search_layer(std::span<const double> q, std::uint32_t entry,
                                      std::size_t ef, int layer) const;
  // Candidate distances are measured from the node being linked.
  std::vector<std::uint32_t> select_neighbors(std::vector<Candidate> candidates,
                                              std::size_t max_count) const;
  void insert(std::uint32_t node);

  HnswParams params_;
  IndexProvenance provenance_;
  std::size_t dim_ = 0;
  std::vector<std::string> ids_;
  std::vector<double> data_;
  std::vector<int> levels_;
  std::vector<std::vector<std::vector<std::uint32_t>>> links_;  // [node][layer]
  std::uint32_t entry_point_ = 0;
  int max_level_ = -1;
};

// Exact top-k by full scan, with the same ordering rules as HnswIndex::query.
std::vector<NeighborHit> brute_force_query(std::span<const LabeledVector> vectors,
                                           const EmbeddingVector& q, std::size_t k);

}  // namespace lexiswitch
