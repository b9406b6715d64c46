#include "lexiswitch/hnsw_index.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

#include "lexiswitch/error.h"

namespace lexiswitch {

void HnswParams::validate() const {
  if (m < 2) throw Error(ErrorKind::kInvalidArgument, "HNSW m must be >= 2");
  if (ef_construction < m) throw Error(ErrorKind::kInvalidArgument, "ef_construction must be >= m");
  if (ef_search < 1) throw Error(ErrorKind::kInvalidArgument, "ef_search must be >= 1");
}

namespace {

void check_unit(const EmbeddingVector& v, std::string_view id) {
  if (!v.normalized() || std::abs(v.norm() - 1.0) > EmbeddingVector::kNormTolerance)
    throw Error(ErrorKind::kInvalidArgument, fmt::format("vector '{}' is not unit-normalized", id));
}

EmbeddingVector as_unit(const EmbeddingVector& q) {
  if (q.normalized()) return q;
  return EmbeddingVector::unit(std::vector<double>(q.values().begin(), q.values().end()));
}

void sort_and_rank(std::vector<NeighborHit>& hits, std::size_t k) {
  const auto better = [](const NeighborHit& a, const NeighborHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.entry_id < b.entry_id;
  };
  if (hits.size() > k) {
    std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(k), hits.end(), better);
    hits.resize(k);
  } else {
    std::sort(hits.begin(), hits.end(), better);
  }
  for (std::size_t i = 0; i < hits.size(); ++i) hits[i].rank = i + 1;
}

}  // namespace

HnswIndex HnswIndex::build(std::span<const LabeledVector> vectors, const HnswParams& params,
                           IndexProvenance provenance) {
  params.validate();
  if (vectors.empty()) throw Error(ErrorKind::kEmptyInput, "cannot build an index from no vectors");
  if (vectors.size() > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorKind::kInvalidArgument, "too many vectors");

  HnswIndex index;
  index.params_ = params;
  index.provenance_ = std::move(provenance);
  index.dim_ = vectors.front().vector.dim();
  if (index.dim_ == 0) throw Error(ErrorKind::kInvalidArgument, "zero-dimensional vectors");

  std::unordered_set<std::string> seen;
  index.ids_.reserve(vectors.size());
  index.data_.reserve(vectors.size() * index.dim_);
  for (const auto& lv : vectors) {
    if (lv.vector.dim() != index.dim_) throw DimensionMismatchError(index.dim_, lv.vector.dim());
    check_unit(lv.vector, lv.id);
    if (!seen.insert(lv.id).second)
      throw Error(ErrorKind::kDuplicateId, fmt::format("duplicate entry id '{}'", lv.id));
    index.ids_.push_back(lv.id);
    index.data_.insert(index.data_.end(), lv.vector.values().begin(), lv.vector.values().end());
  }

  std::mt19937_64 rng(params.seed);
  const double level_mult = 1.0 / std::log(static_cast<double>(params.m));
  index.levels_.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    // Uniform in (0, 1], built from the top 53 bits so it is platform independent.
    const double u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
    index.levels_.push_back(static_cast<int>(std::floor(-std::log(u) * level_mult)));
  }

  index.links_.resize(vectors.size());
  for (std::uint32_t node = 0; node < vectors.size(); ++node) index.insert(node);
  return index;
}

double HnswIndex::distance(std::span<const double> q, std::uint32_t node) const {
  return 1.0 - dot(q, vector_of(node));
}

std::span<const std::uint32_t> HnswIndex::neighbors(std::size_t node, int layer) const {
  const auto& layers = links_.at(node);
  if (layer < 0 || static_cast<std::size_t>(layer) >= layers.size()) return {};
  return layers[static_cast<std::size_t>(layer)];
}

std::uint32_t HnswIndex::greedy_closest(std::span<const double> q, std::uint32_t entry,
                                        int layer) const {
  std::uint32_t current = entry;
  double current_distance = distance(q, current);
  for (bool improved = true; improved;) {
    improved = false;
    for (std::uint32_t nb : neighbors(current, layer)) {
      const double d = distance(q, nb);
      if (d < current_distance || (d == current_distance && nb < current)) {
        current = nb;
        current_distance = d;
        improved = true;
      }
    }
  }
  return current;
}

std::vector<HnswIndex::Candidate> HnswIndex::search_layer(std::span<const double> q,
                                                          std::uint32_t entry, std::size_t ef,
                                                          int layer) const {
  std::vector<char> visited(ids_.size(), 0);
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> frontier;
  std::priority_queue<Candidate> results;

  const Candidate start{distance(q, entry), entry};
  visited[entry] = 1;
  frontier.push(start);
  results.push(start);

  while (!frontier.empty()) {
    const Candidate current = frontier.top();
    if (current.distance > results.top().distance && results.size() >= ef) break;
    frontier.pop();
    for (std::uint32_t nb : neighbors(current.node, layer)) {
      if (visited[nb]) continue;
      visited[nb] = 1;
      const Candidate c{distance(q, nb), nb};
      if (results.size() < ef || c < results.top()) {
        frontier.push(c);
        results.push(c);
        if (results.size() > ef) results.pop();
      }
    }
  }

  std::vector<Candidate> out(results.size());
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    *it = results.top();
    results.pop();
  }
  return out;
}

// Keeps a candidate only if it is closer to the base than to every neighbor
// already kept, which spreads links across directions.
std::vector<std::uint32_t> HnswIndex::select_neighbors(std::vector<Candidate> candidates,
                                                       std::size_t max_count) const {
  std::sort(candidates.begin(), candidates.end());
  std::vector<std::uint32_t> kept;
  if (candidates.size() <= max_count) {
    for (const auto& c : candidates) kept.push_back(c.node);
    return kept;
  }
  for (const auto& c : candidates) {
    if (kept.size() >= max_count) break;
    const auto cv = vector_of(c.node);
    const bool diverse = std::none_of(kept.begin(), kept.end(), [&](std::uint32_t r) {
      return distance(cv, r) < c.distance;
    });
    if (diverse) kept.push_back(c.node);
  }
  return kept;
}

void HnswIndex::insert(std::uint32_t node) {
  const int level = levels_[node];
  links_[node].resize(static_cast<std::size_t>(level) + 1);
  if (max_level_ < 0) {
    entry_point_ = node;
    max_level_ = level;
    return;
  }

  const auto q = vector_of(node);
  std::uint32_t entry = entry_point_;
  for (int layer = max_level_; layer > level; --layer) entry = greedy_closest(q, entry, layer);

  for (int layer = std::min(level, max_level_); layer >= 0; --layer) {
    auto found = search_layer(q, entry, params_.ef_construction, layer);
    entry = found.front().node;
    auto chosen = select_neighbors(std::move(found), params_.m);
    const auto l = static_cast<std::size_t>(layer);
    links_[node][l] = chosen;

    for (std::uint32_t other : chosen) {
      auto& theirs = links_[other][l];
      theirs.push_back(node);
      if (theirs.size() <= max_neighbors(layer)) continue;
      const auto ov = vector_of(other);
      std::vector<Candidate> pool;
      pool.reserve(theirs.size());
      for (std::uint32_t x : theirs) pool.push_back({distance(ov, x), x});
      theirs = select_neighbors(std::move(pool), max_neighbors(layer));
    }
  }

  if (level > max_level_) {
    entry_point_ = node;
    max_level_ = level;
  }
}

std::vector<NeighborHit> HnswIndex::query(const EmbeddingVector& q, std::size_t k) const {
  return query(q, k, params_.ef_search);
}

std::vector<NeighborHit> HnswIndex::query(const EmbeddingVector& q, std::size_t k,
                                          std::size_t ef) const {
  if (ids_.empty()) throw Error(ErrorKind::kEmptyIndex, "index holds no vectors");
  if (q.dim() != dim_) throw DimensionMismatchError(dim_, q.dim());
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be >= 1");

  const EmbeddingVector unit = as_unit(q);
  const auto qv = unit.values();
  std::uint32_t entry = entry_point_;
  for (int layer = max_level_; layer > 0; --layer) entry = greedy_closest(qv, entry, layer);
  const auto found = search_layer(qv, entry, std::max({ef, k, std::size_t{1}}), 0);

  std::vector<NeighborHit> hits;
  hits.reserve(found.size());
  for (const auto& c : found) hits.push_back({ids_[c.node], dot(qv, vector_of(c.node)), 0});
  sort_and_rank(hits, k);
  return hits;
}

std::vector<NeighborHit> brute_force_query(std::span<const LabeledVector> vectors,
                                           const EmbeddingVector& q, std::size_t k) {
  if (vectors.empty()) throw Error(ErrorKind::kEmptyIndex, "no vectors to scan");
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be >= 1");
  const EmbeddingVector unit = as_unit(q);
  std::vector<NeighborHit> hits;
  hits.reserve(vectors.size());
  for (const auto& lv : vectors) {
    if (lv.vector.dim() != unit.dim()) throw DimensionMismatchError(lv.vector.dim(), unit.dim());
    const double score = lv.vector.normalized() ? dot(unit.values(), lv.vector.values())
                                                : cosine_similarity(unit, lv.vector);
    hits.push_back({lv.id, score, 0});
  }
  sort_and_rank(hits, k);
  return hits;
}

// ---------------------------------------------------------------------------
// Snapshots

nlohmann::ordered_json HnswIndex::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "lexiswitch.hnsw";
  j["version"] = kSnapshotVersion;
  j["provenance"] = {{"lexicon_checksum", provenance_.lexicon_checksum},
                     {"embedder", provenance_.embedder},
                     {"embedding_text", provenance_.embedding_text}};
  j["params"] = {{"m", params_.m},
                 {"ef_construction", params_.ef_construction},
                 {"ef_search", params_.ef_search},
                 {"seed", params_.seed}};
  j["dim"] = dim_;
  j["entry_point"] = entry_point_;
  j["max_level"] = max_level_;
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    nlohmann::ordered_json node;
    node["id"] = ids_[i];
    node["level"] = levels_[i];
    node["vector"] = std::vector<double>(vector_of(static_cast<std::uint32_t>(i)).begin(),
                                         vector_of(static_cast<std::uint32_t>(i)).end());
    node["links"] = links_[i];
    nodes.push_back(std::move(node));
  }
  return j;
}

HnswIndex HnswIndex::from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& why) -> Error {
    return Error(ErrorKind::kParse, fmt::format("invalid index snapshot: {}", why));
  };
  try {
    if (j.value("format", "") != "lexiswitch.hnsw") throw fail("unknown format");
    if (j.at("version").get<int>() != kSnapshotVersion)
      throw fail(fmt::format("unsupported version {}", j.at("version").get<int>()));

    HnswIndex index;
    const auto& p = j.at("params");
    index.params_ = {p.at("m").get<std::size_t>(), p.at("ef_construction").get<std::size_t>(),
                     p.at("ef_search").get<std::size_t>(), p.at("seed").get<std::uint64_t>()};
    index.params_.validate();
    const auto& prov = j.at("provenance");
    index.provenance_ = {prov.at("lexicon_checksum").get<std::string>(),
                         prov.at("embedder").get<std::string>(),
                         prov.value("embedding_text", "")};
    index.dim_ = j.at("dim").get<std::size_t>();
    index.entry_point_ = j.at("entry_point").get<std::uint32_t>();
    index.max_level_ = j.at("max_level").get<int>();

    const auto& nodes = j.at("nodes");
    if (nodes.empty()) throw Error(ErrorKind::kEmptyIndex, "snapshot holds no nodes");
    const std::size_t n = nodes.size();
    for (const auto& node : nodes) {
      index.ids_.push_back(node.at("id").get<std::string>());
      index.levels_.push_back(node.at("level").get<int>());
      const auto v = node.at("vector").get<std::vector<double>>();
      if (v.size() != index.dim_) throw DimensionMismatchError(index.dim_, v.size());
      index.data_.insert(index.data_.end(), v.begin(), v.end());
      auto links = node.at("links").get<std::vector<std::vector<std::uint32_t>>>();
      if (links.size() != static_cast<std::size_t>(index.levels_.back()) + 1)
        throw fail("link layers do not match node level");
      for (const auto& layer : links)
        for (auto nb : layer)
          if (nb >= n) throw fail("neighbor out of range");
      index.links_.push_back(std::move(links));
    }
    if (index.entry_point_ >= n || index.levels_[index.entry_point_] != index.max_level_)
      throw fail("bad entry point");
    return index;
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }
}

void HnswIndex::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write {}", path.string()));
  out << to_json().dump() << '\n';
  if (!out) throw Error(ErrorKind::kIo, fmt::format("failed writing {}", path.string()));
}

HnswIndex HnswIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kMissingFile, path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, fmt::format("{}: {}", path.string(), e.what()));
  }
  return from_json(j);
}

}  // namespace lexiswitch
