#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexiswitch/metrics.h"

namespace lexiswitch::testing {

// Levenshtein distance straight from the recursive definition, no memo.
// Exponential; only for short sequences.
inline std::size_t recursive_levenshtein(const std::vector<std::string>& a, std::size_t i,
                                         const std::vector<std::string>& b, std::size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  if (a[i] == b[j]) return recursive_levenshtein(a, i + 1, b, j + 1);
  return 1 + std::min({recursive_levenshtein(a, i + 1, b, j), recursive_levenshtein(a, i, b, j + 1),
                       recursive_levenshtein(a, i + 1, b, j + 1)});
}

inline std::size_t recursive_levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return recursive_levenshtein(a, 0, b, 0);
}

// Random token sequence of length [0, max_len] over `alphabet` words.
inline std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t max_len,
                                              const std::vector<std::string>& alphabet) {
  std::vector<std::string> out(rng() % (max_len + 1));
  for (auto& t : out) t = alphabet[rng() % alphabet.size()];
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

// Running median from two heaps; never sorts the whole sequence.
class RunningMedian {
 public:
  void add(double v) {
    if (low_.empty() || v <= low_.top())
      low_.push(v);
    else
      high_.push(v);
    if (low_.size() > high_.size() + 1) {
      high_.push(low_.top());
      low_.pop();
    } else if (high_.size() > low_.size()) {
      low_.push(high_.top());
      high_.pop();
    }
  }
  double value() const { return low_.size() > high_.size() ? low_.top() : (low_.top() + high_.top()) / 2; }

 private:
  std::priority_queue<double> low_;
  std::priority_queue<double, std::vector<double>, std::greater<>> high_;
};

// Single-pass recomputation of SummaryStats: Welford means and co-moment,
// heap medians, and an ordered multiset for the 5th percentile.
class StreamingSummary {
 public:
  void add(const EvalRecord& r) {
    const double e = static_cast<double>(r.edit_distance);
    ++n_;
    edit_mean_ += (e - edit_mean_) / static_cast<double>(n_);
    edit_median_.add(e);
    le2_ += r.edit_distance <= 2;
    le5_ += r.edit_distance <= 5;
    if (!r.cosine) return;
    const double c = *r.cosine;
    ++m_;
    const double dx = e - px_;
    px_ += dx / static_cast<double>(m_);
    const double dy = c - py_;
    py_ += dy / static_cast<double>(m_);
    sxx_ += dx * (e - px_);
    syy_ += dy * (c - py_);
    sxy_ += dx * (c - py_);
    cos_median_.add(c);
    cos_sorted_.insert(c);
  }

  SummaryStats result() const {
    SummaryStats s;
    s.n = n_;
    s.median_edits = edit_median_.value();
    s.mean_edits = edit_mean_;
    s.pct_le_2 = 100.0 * static_cast<double>(le2_) / static_cast<double>(n_);
    s.pct_le_5 = 100.0 * static_cast<double>(le5_) / static_cast<double>(n_);
    s.n_cosine = m_;
    s.mean_cosine = py_;
    s.median_cosine = cos_median_.value();
    const std::size_t rank = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(m_) - 1e-9)));
    auto it = cos_sorted_.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(rank - 1));
    s.p5_cosine = *it;
    if (m_ >= 2 && sxx_ > 0 && syy_ > 0) s.pearson_r = sxy_ / std::sqrt(sxx_ * syy_);
    return s;
  }

 private:
  std::size_t n_ = 0, m_ = 0, le2_ = 0, le5_ = 0;
  double edit_mean_ = 0, px_ = 0, py_ = 0, sxx_ = 0, syy_ = 0, sxy_ = 0;
  RunningMedian edit_median_, cos_median_;
  std::multiset<double> cos_sorted_;
};

// Seeded synthetic records over the three modes: edits skewed by mode, cosine
// loosely anti-correlated with edits, about 2% without a cosine.
inline std::vector<EvalRecord> synthetic_records(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<EvalRecord> out;
  out.reserve(count);
  const Mode modes[] = {Mode::kZeroShot, Mode::kRag, Mode::kBaseline};
  for (std::size_t i = 0; i < count; ++i) {
    EvalRecord r;
    r.id = "s" + std::to_string(i);
    r.mode = modes[rng() % 3];
    const std::size_t span = r.mode == Mode::kZeroShot ? 40 : r.mode == Mode::kRag ? 5 : 2;
    r.edit_distance = rng() % span;
    if (unit(rng) >= 0.02)
      r.cosine = std::clamp(1.0 - 0.015 * static_cast<double>(r.edit_distance) - 0.2 * unit(rng), -1.0, 1.0);
    out.push_back(std::move(r));
  }
  return out;
}

// Largest absolute difference over all fields; infinity when counts differ or
// only one side has a correlation.
inline double max_deviation(const SummaryStats& a, const SummaryStats& b) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (a.n != b.n || a.n_cosine != b.n_cosine || a.pearson_r.has_value() != b.pearson_r.has_value()) return kInf;
  double d = 0;
  for (auto [x, y] : std::initializer_list<std::pair<double, double>>{{a.median_edits, b.median_edits}, {a.mean_edits, b.mean_edits},
                      {a.pct_le_2, b.pct_le_2}, {a.pct_le_5, b.pct_le_5}, {a.mean_cosine, b.mean_cosine},
                      {a.median_cosine, b.median_cosine}, {a.p5_cosine, b.p5_cosine}})
    d = std::max(d, std::abs(x - y));
  if (a.pearson_r) d = std::max(d, std::abs(*a.pearson_r - *b.pearson_r));
  return d;
}

// Random multi-sentence bases with distinct words; each sentence receives a
// known number of separated local mutations (substitution, insertion,
// deletion, phrase swap). Distinct words make the set of unchanged tokens, and
// so the changed spans, unique.
struct MutationCase {
  std::string base;
  std::string mutated;
  std::vector<std::size_t> spans_per_sentence;
};

inline MutationCase make_mutation_case(std::mt19937_64& rng, int serial) {
  std::vector<std::string> pool;
  for (int i = 0; i < 60; ++i) pool.push_back("w" + std::to_string(i));
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t next_word = 0;
  int fresh = 0;
  auto novel = [&] { return "n" + std::to_string(serial) + "x" + std::to_string(fresh++); };

  MutationCase mc;
  const int sentences = 1 + static_cast<int>(rng() % 3);
  std::vector<std::string> base_parts, mutated_parts;
  for (int s = 0; s < sentences; ++s) {
    const std::size_t len = 3 + rng() % 9;
    std::vector<std::string> words(pool.begin() + static_cast<std::ptrdiff_t>(next_word),
                                   pool.begin() + static_cast<std::ptrdiff_t>(next_word + len));
    next_word += len;

    // Mutation sites: positions separated by at least one untouched word.
    std::vector<std::size_t> sites;
    const std::size_t wanted = rng() % 4;
    for (std::size_t attempt = 0; attempt < 50 && sites.size() < wanted; ++attempt) {
      const std::size_t p = rng() % len;
      bool ok = true;
      for (std::size_t q : sites)
        if ((p > q ? p - q : q - p) < 3) ok = false;
      if (ok) sites.push_back(p);
    }
    std::sort(sites.begin(), sites.end());

    std::vector<std::string> out;
    for (std::size_t i = 0; i < len; ++i) {
      if (!std::binary_search(sites.begin(), sites.end(), i)) {
        out.push_back(words[i]);
        continue;
      }
      switch (rng() % 4) {
        case 0: out.push_back(novel()); break;                       // substitute
        case 1: out.push_back(novel()); out.push_back(words[i]); break;  // insert before
        case 2: break;                                               // delete
        default: out.push_back(novel()); out.push_back(novel()); break;  // 1 -> 2 swap
      }
    }
    if (out.empty()) {  // keep the sentence alive
      out.push_back(novel());
    }
    mc.spans_per_sentence.push_back(sites.size());
    base_parts.push_back(join_tokens(words) + ".");
    mutated_parts.push_back(join_tokens(out) + ".");
  }
  mc.base = join_tokens(base_parts);
  mc.mutated = join_tokens(mutated_parts);
  return mc;
}

}  // namespace lexiswitch::testing
