#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexiswitch/embedding.h"
#include "lexiswitch/pipeline.h"

namespace lexiswitch {

// Levenshtein distance over token sequences; O(|a|*|b|) time, O(min) space.
std::size_t levenshtein(std::span<const std::string> a, std::span<const std::string> b);

// Distance between the lowercased token sequences of `a` and `b`.
std::size_t token_edit_distance(std::string_view a, std::string_view b);

// Cosine of the two response embeddings. Throws EmptyText on blank input.
double semantic_similarity(std::string_view a, std::string_view b, const Embedder& embedder);

struct EvalRecord {
  std::string id;
  Mode mode = Mode::kBaseline;
  std::string original;
  std::string generated;
  std::size_t edit_distance = 0;
  std::optional<double> cosine;  // absent when either text is blank
};

// Scores one pair. The embedder is only called when both texts are non-blank.
EvalRecord score_pair(std::string id, Mode mode, std::string original, std::string generated,
                      const Embedder& embedder);

struct SummaryStats {
  std::size_t n = 0;
  double median_edits = 0;
  double mean_edits = 0;
  double pct_le_2 = 0;
  double pct_le_5 = 0;
  std::size_t n_cosine = 0;
  double mean_cosine = 0;
  double median_cosine = 0;
  double p5_cosine = 0;
  std::optional<double> pearson_r;  // absent with < 2 points or zero variance
};

// Statistics for one group of records. Throws EmptyGroup when `records` is
// empty or none of them carries a cosine.
SummaryStats summarize_group(std::span<const EvalRecord> records);

// One SummaryStats per mode present in `records`.
std::map<Mode, SummaryStats> summarize(std::span<const EvalRecord> records);

// Sample Pearson correlation. Throws LengthMismatch, InvalidArgument (fewer
// than two points) or ZeroVariance.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Mean of the two middle values for even sizes. Throws EmptyGroup.
double median(std::vector<double> values);

// Nearest-rank percentile: the ceil(percent/100 * n)-th smallest value (at
// least the first). Throws EmptyGroup.
double nearest_rank_percentile(std::vector<double> values, unsigned percent);

}  // namespace lexiswitch
