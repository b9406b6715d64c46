#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lexiswitch/tokenizer.h"

namespace lexiswitch {

struct VarietyConfig;

// A maximal run of non-matching alignment steps. Token indices are half-open
// ranges into the base and final sequences; either range may be empty.
struct EditSpan {
  std::size_t base_begin = 0;
  std::size_t base_end = 0;
  std::size_t final_begin = 0;
  std::size_t final_end = 0;

  friend bool operator==(const EditSpan&, const EditSpan&) = default;
};

struct Alignment {
  std::size_t edits = 0;  // Levenshtein distance
  std::vector<EditSpan> spans;
};

// Minimum-edit alignment of two token sequences; among the minimum-edit
// alignments it picks one with the fewest contiguous changed spans, preferring
// earlier matches on ties so the result is deterministic.
Alignment align_tokens(std::span<const std::string> base, std::span<const std::string> final);

// Sentence ranges [begin, end) over `tokens`: a sentence ends after '.', '!' or
// '?' when followed by whitespace or the end of `text`.
std::vector<std::pair<std::size_t, std::size_t>> split_sentences(std::string_view text,
                                                                 std::span<const Token> tokens);

struct SentenceSpans {
  std::size_t sentence = 0;  // index into the base sentences
  std::vector<EditSpan> spans;  // indices relative to the whole token sequences
};

struct ValidationReport {
  std::vector<std::string> particle_violations;  // sorted, unique
  std::vector<SentenceSpans> sentences;
  std::vector<std::size_t> over_budget_sentences;
  std::vector<EditSpan> nonlocal_spans;
  bool sentence_count_changed = false;
  std::size_t token_edits = 0;

  std::size_t total_spans() const;
  bool ok() const;
  // No findings and no changes at all.
  bool clean() const { return ok() && token_edits == 0; }

  nlohmann::ordered_json to_json() const;
  static ValidationReport from_json(const nlohmann::json& j);

  friend bool operator==(const ValidationReport&, const ValidationReport&);
};

bool operator==(const SentenceSpans& a, const SentenceSpans& b);

// Checks a rewrite against the rewrite rules: no newly introduced blocklisted
// particles, at most `max_substitutions_per_sentence` changed spans per
// sentence, and every span local (at most `max_span_tokens` tokens on either
// side, sentence count unchanged).
ValidationReport validate_rewrite(std::string_view base, std::string_view final,
                                  const VarietyConfig& config);

}  // namespace lexiswitch
