#include "lexiswitch/tokenizer.h"

#include "lexiswitch/text.h"

namespace lexiswitch {

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kNumber: return "number";
    case TokenKind::kSymbol: return "symbol";
  }
  return "word";
}

namespace {

using text::CharClass;

struct Cursor {
  std::string_view text;

  text::DecodedChar at(std::size_t pos) const { return text::decode(text, pos); }

  CharClass class_at(std::size_t pos) const {
    if (pos >= text.size()) return CharClass::kSpace;
    const auto d = at(pos);
    return d.valid ? text::classify(d.code_point) : CharClass::kSymbol;
  }

  bool apostrophe_at(std::size_t pos) const {
    if (pos >= text.size()) return false;
    const auto d = at(pos);
    return d.valid && text::is_apostrophe(d.code_point);
  }

  bool is_word_char(std::size_t pos) const {
    const auto c = class_at(pos);
    return c == CharClass::kLetter || c == CharClass::kDigit;
  }

  // End of the run of letters starting at `pos`.
  std::size_t letters_end(std::size_t pos) const {
    while (pos < text.size() && class_at(pos) == CharClass::kLetter) pos += at(pos).length;
    return pos;
  }
};

void push(std::vector<Token>& out, std::string_view text, std::size_t start, std::size_t end,
          TokenKind kind) {
  Token t;
  t.surface = std::string(text.substr(start, end - start));
  t.lower = text::to_lower(t.surface);
  t.start = start;
  t.end = end;
  t.kind = kind;
  out.push_back(std::move(t));
}

bool ends_with_n(std::string_view s) { return !s.empty() && (s.back() == 'n' || s.back() == 'N'); }

bool is_single_t(std::string_view s) { return s == "t" || s == "T"; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  const Cursor cur{text};
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto d = cur.at(pos);
    const CharClass cls = d.valid ? text::classify(d.code_point) : CharClass::kSymbol;

    if (cls == CharClass::kSpace) {
      pos += d.length;
      continue;
    }
    if (cls == CharClass::kPunctuation || cls == CharClass::kSymbol) {
      push(out, text, pos, pos + d.length,
           cls == CharClass::kPunctuation ? TokenKind::kPunctuation : TokenKind::kSymbol);
      pos += d.length;
      continue;
    }

    // Letter/digit run.
    const std::size_t start = pos;
    bool has_letter = false;
    while (pos < text.size()) {
      const CharClass c = cur.class_at(pos);
      if (c == CharClass::kLetter) {
        has_letter = true;
        pos += cur.at(pos).length;
      } else if (c == CharClass::kDigit) {
        pos += cur.at(pos).length;
      } else if (!has_letter && (text[pos] == '.' || text[pos] == ',') &&
                 cur.class_at(pos + 1) == CharClass::kDigit) {
        pos += 1;
      } else {
        break;
      }
    }

    if (!has_letter) {
      push(out, text, start, pos, TokenKind::kNumber);
      continue;
    }

    // Contraction suffixes: apostrophe directly followed by letters.
    std::size_t word_end = pos;
    std::vector<std::pair<std::size_t, std::size_t>> suffixes;
    while (cur.apostrophe_at(pos)) {
      const std::size_t after = pos + cur.at(pos).length;
      if (cur.class_at(after) != CharClass::kLetter) break;
      const std::size_t end = cur.letters_end(after);
      suffixes.emplace_back(pos, end);
      pos = end;
    }
    if (!suffixes.empty()) {
      const auto [ap, ap_end] = suffixes.front();
      const std::string_view stem = text.substr(start, word_end - start);
      const std::size_t ap_len = cur.at(ap).length;
      const std::string_view tail = text.substr(ap + ap_len, ap_end - ap - ap_len);
      if (stem.size() > 1 && ends_with_n(stem) && is_single_t(tail)) {
        word_end -= 1;
        suffixes.front().first = word_end;
      }
    }
    push(out, text, start, word_end, TokenKind::kWord);
    for (const auto& [s, e] : suffixes) push(out, text, s, e, TokenKind::kWord);
  }
  return out;
}

std::vector<std::string> lowered_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize(text)) out.push_back(std::move(t.lower));
  return out;
}

}  // namespace lexiswitch
