#include "lexiswitch/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "lexiswitch/error.h"
#include "lexiswitch/text.h"
#include "lexiswitch/tokenizer.h"

namespace lexiswitch {

std::size_t levenshtein(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t token_edit_distance(std::string_view a, std::string_view b) {
  const auto ta = lowered_tokens(a);
  const auto tb = lowered_tokens(b);
  return levenshtein(ta, tb);
}

double semantic_similarity(std::string_view a, std::string_view b, const Embedder& embedder) {
  if (text::trim(a).empty() || text::trim(b).empty())
    throw Error(ErrorKind::kEmptyText, "semantic similarity needs two non-empty texts");
  const std::vector<std::string> texts{std::string(a), std::string(b)};
  const auto v = embedder.embed_batch(texts);
  return cosine_similarity(v[0], v[1]);
}

EvalRecord score_pair(std::string id, Mode mode, std::string original, std::string generated,
                      const Embedder& embedder) {
  EvalRecord r;
  r.id = std::move(id);
  r.mode = mode;
  r.edit_distance = token_edit_distance(original, generated);
  if (!text::trim(original).empty() && !text::trim(generated).empty())
    r.cosine = semantic_similarity(original, generated, embedder);
  r.original = std::move(original);
  r.generated = std::move(generated);
  return r;
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorKind::kEmptyGroup, "median of an empty group");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double nearest_rank_percentile(std::vector<double> values, unsigned percent) {
  if (values.empty()) throw Error(ErrorKind::kEmptyGroup, "percentile of an empty group");
  if (percent > 100) throw Error(ErrorKind::kInvalidArgument, "percent must lie in [0, 100]");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  std::size_t rank = (static_cast<std::size_t>(percent) * n + 99) / 100;
  rank = std::clamp<std::size_t>(rank, 1, n);
  return values[rank - 1];
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw Error(ErrorKind::kLengthMismatch,
                fmt::format("pearson needs equal lengths, got {} and {}", xs.size(), ys.size()));
  if (xs.size() < 2) throw Error(ErrorKind::kInvalidArgument, "pearson needs at least two points");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorKind::kZeroVariance, "pearson of a constant series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

SummaryStats summarize_group(std::span<const EvalRecord> records) {
  if (records.empty()) throw Error(ErrorKind::kEmptyGroup, "cannot summarize an empty group");
  SummaryStats s;
  s.n = records.size();
  std::vector<double> edits;
  std::vector<double> paired_edits;
  std::vector<double> cosines;
  std::size_t le2 = 0;
  std::size_t le5 = 0;
  for (const auto& r : records) {
    const auto e = static_cast<double>(r.edit_distance);
    edits.push_back(e);
    le2 += r.edit_distance <= 2 ? 1 : 0;
    le5 += r.edit_distance <= 5 ? 1 : 0;
    if (r.cosine) {
      cosines.push_back(*r.cosine);
      paired_edits.push_back(e);
    }
  }
  if (cosines.empty())
    throw Error(ErrorKind::kEmptyGroup, fmt::format("no record in the {} group has a cosine",
                                                    to_string(records.front().mode)));
  const double n = static_cast<double>(s.n);
  s.median_edits = median(edits);
  s.mean_edits = std::accumulate(edits.begin(), edits.end(), 0.0) / n;
  s.pct_le_2 = 100.0 * static_cast<double>(le2) / n;
  s.pct_le_5 = 100.0 * static_cast<double>(le5) / n;
  s.n_cosine = cosines.size();
  s.mean_cosine = std::accumulate(cosines.begin(), cosines.end(), 0.0) / static_cast<double>(s.n_cosine);
  s.median_cosine = median(cosines);
  s.p5_cosine = nearest_rank_percentile(cosines, 5);
  try {
    s.pearson_r = pearson(paired_edits, cosines);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kZeroVariance && e.kind() != ErrorKind::kInvalidArgument) throw;
  }
  return s;
}

std::map<Mode, SummaryStats> summarize(std::span<const EvalRecord> records) {
  if (records.empty()) throw Error(ErrorKind::kEmptyGroup, "no records to summarize");
  std::map<Mode, std::vector<EvalRecord>> groups;
  for (const auto& r : records) groups[r.mode].push_back(r);
  std::map<Mode, SummaryStats> out;
  for (const auto& [mode, group] : groups) out.emplace(mode, summarize_group(group));
  return out;
}

}  // namespace lexiswitch
