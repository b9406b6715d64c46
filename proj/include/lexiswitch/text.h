#pragma once

// UTF-8 helpers shared by the tokenizer, the hashing embedder and the lexicon.
// Classification and case folding cover ASCII, Latin-1, Latin Extended-A,
// Greek and Cyrillic exactly; other scripts fall back to "letter" and are left
// unchanged by to_lower.

#include <cstddef>
#include <string>
#include <string_view>

namespace lexiswitch::text {

struct DecodedChar {
  char32_t code_point = 0;
  std::size_t length = 1;  // bytes consumed; 1 for an invalid byte
  bool valid = false;
};

DecodedChar decode(std::string_view s, std::size_t pos);
void append_utf8(std::string& out, char32_t cp);

enum class CharClass { kSpace, kLetter, kDigit, kPunctuation, kSymbol };

CharClass classify(char32_t cp);
bool is_apostrophe(char32_t cp);
bool is_uppercase(char32_t cp);

char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view s);

std::string trim(std::string_view s);
// Trims and collapses every run of whitespace into one ASCII space.
std::string collapse_whitespace(std::string_view s);

}  // namespace lexiswitch::text
