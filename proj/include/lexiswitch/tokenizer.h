#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexiswitch {

enum class TokenKind { kWord, kPunctuation, kNumber, kSymbol };

const char* to_string(TokenKind kind);

// One token of the shared tokenizer. Offsets are UTF-8 byte offsets into the
// tokenized string; [start, end) is never empty.
struct Token {
  std::string surface;
  std::string lower;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const Token&, const Token&) = default;
};

// Lossless tokenization: every non-whitespace byte of `text` belongs to exactly
// one token and the text between consecutive tokens is whitespace.
//
//  - letter/digit runs form words; pure digit runs (with inner '.' or ',' between
//    digits) form numbers
//  - every punctuation or symbol code point is its own token, so hyphenated
//    compounds split as back / - / to / - / back
//  - contractions split at the apostrophe, the apostrophe going to the suffix
//    ("it's" -> it 's), except the negation suffix which keeps its 'n'
//    ("don't" -> do n't)
std::vector<Token> tokenize(std::string_view text);

// Lowercased token sequence used by the edit-distance metric.
std::vector<std::string> lowered_tokens(std::string_view text);

}  // namespace lexiswitch
