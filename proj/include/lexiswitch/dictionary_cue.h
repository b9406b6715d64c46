#pragma once

#include <optional>
#include <string>

namespace lexiswitch {

// One retrieved lexicon item offered to the rewrite model as a candidate
// substitution for `token` in the base response.
struct DictionaryCue {
  std::string token;
  std::string word;
  std::optional<std::string> label;
  std::string meaning;
  double score = 0.0;

  friend bool operator==(const DictionaryCue&, const DictionaryCue&) = default;
};

}  // namespace lexiswitch
