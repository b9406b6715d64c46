#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>

#include <json.hpp>

namespace lexiswitch {

// Target code-switched variety and the knobs that constrain rewriting into it.
struct VarietyConfig {
  std::string name = "Singlish";
  std::set<std::string> particle_blocklist{"la", "lor", "leh"};
  std::size_t max_substitutions_per_sentence = 1;
  double min_retrieval_score = 0.35;
  std::size_t k_per_word = 1;
  // Longest token run either side of one changed span may cover and still count
  // as a lexical substitution ("act blur that" for "pretend" is 1 -> 3).
  std::size_t max_span_tokens = 4;

  void validate() const;

  nlohmann::ordered_json to_json() const;
  static VarietyConfig from_json(const nlohmann::json& j);

  friend bool operator==(const VarietyConfig&, const VarietyConfig&) = default;
};

// One particle per line; blank lines and '#' comments ignored; lowercased.
std::set<std::string> load_particle_blocklist(const std::filesystem::path& path);

}  // namespace lexiswitch
