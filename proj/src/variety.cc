#include "lexiswitch/variety.h"

#include <fstream>

#include <fmt/format.h>

#include "lexiswitch/error.h"
#include "lexiswitch/text.h"

namespace lexiswitch {

void VarietyConfig::validate() const {
  for (const auto& p : particle_blocklist)
    if (p.empty() || text::to_lower(p) != p)
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("particle '{}' must be non-empty and lowercase", p));
  if (max_substitutions_per_sentence < 1)
    throw Error(ErrorKind::kInvalidArgument, "max_substitutions_per_sentence must be >= 1");
  if (!(min_retrieval_score >= -1.0 && min_retrieval_score <= 1.0))
    throw Error(ErrorKind::kInvalidArgument, "min_retrieval_score must lie in [-1, 1]");
  if (k_per_word < 1) throw Error(ErrorKind::kInvalidArgument, "k_per_word must be >= 1");
  if (max_span_tokens < 1) throw Error(ErrorKind::kInvalidArgument, "max_span_tokens must be >= 1");
}

nlohmann::ordered_json VarietyConfig::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["particle_blocklist"] = particle_blocklist;
  j["max_substitutions_per_sentence"] = max_substitutions_per_sentence;
  j["min_retrieval_score"] = min_retrieval_score;
  j["k_per_word"] = k_per_word;
  j["max_span_tokens"] = max_span_tokens;
  return j;
}

VarietyConfig VarietyConfig::from_json(const nlohmann::json& j) {
  VarietyConfig c;
  c.name = j.value("name", c.name);
  if (j.contains("particle_blocklist"))
    c.particle_blocklist = j.at("particle_blocklist").get<std::set<std::string>>();
  c.max_substitutions_per_sentence =
      j.value("max_substitutions_per_sentence", c.max_substitutions_per_sentence);
  c.min_retrieval_score = j.value("min_retrieval_score", c.min_retrieval_score);
  c.k_per_word = j.value("k_per_word", c.k_per_word);
  c.max_span_tokens = j.value("max_span_tokens", c.max_span_tokens);
  c.validate();
  return c;
}

std::set<std::string> load_particle_blocklist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kMissingFile, path.string());
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto p = text::to_lower(text::trim(line));
    if (!p.empty() && p.front() != '#') out.insert(std::move(p));
  }
  return out;
}

}  // namespace lexiswitch
