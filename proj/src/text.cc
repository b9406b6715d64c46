#include "lexiswitch/text.h"

namespace lexiswitch::text {

DecodedChar decode(std::string_view s, std::size_t pos) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  if (lead < 0x80) return {lead, 1, true};

  std::size_t length = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    return {0xFFFD, 1, false};
  }
  if (pos + length > s.size()) return {0xFFFD, 1, false};
  for (std::size_t i = 1; i < length; ++i) {
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if ((c & 0xC0) != 0x80) return {0xFFFD, 1, false};
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {0xFFFD, 1, false};
  return {cp, length, true};
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

namespace {

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

CharClass classify_ascii(char32_t cp) {
  if (cp == ' ' || in(cp, 0x09, 0x0D)) return CharClass::kSpace;
  if (in(cp, '0', '9')) return CharClass::kDigit;
  if (in(cp, 'a', 'z') || in(cp, 'A', 'Z')) return CharClass::kLetter;
  switch (cp) {
    case '$': case '+': case '<': case '=': case '>': case '^': case '`': case '|': case '~':
      return CharClass::kSymbol;
    default:
      break;
  }
  if (cp < 0x20 || cp == 0x7F) return CharClass::kSymbol;
  return CharClass::kPunctuation;
}

}  // namespace

CharClass classify(char32_t cp) {
  if (cp < 0x80) return classify_ascii(cp);

  if (cp == 0x85 || cp == 0xA0 || cp == 0x1680 || in(cp, 0x2000, 0x200B) || cp == 0x2028 ||
      cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000 || cp == 0xFEFF)
    return CharClass::kSpace;

  if (cp == 0xA1 || cp == 0xA7 || cp == 0xAB || cp == 0xB6 || cp == 0xB7 || cp == 0xBB ||
      cp == 0xBF || in(cp, 0x2010, 0x2027) || in(cp, 0x2030, 0x205E) ||
      in(cp, 0x2E00, 0x2E7F) || in(cp, 0x3001, 0x3003) || in(cp, 0x3008, 0x3011) ||
      in(cp, 0x3014, 0x301F) || in(cp, 0xFF01, 0xFF0F) || in(cp, 0xFF1A, 0xFF20))
    return CharClass::kPunctuation;

  if (in(cp, 0x80, 0x9F) || in(cp, 0xA2, 0xA6) || cp == 0xA8 || cp == 0xA9 || cp == 0xAC ||
      in(cp, 0xAE, 0xB1) || cp == 0xB4 || cp == 0xB8 || cp == 0xD7 || cp == 0xF7 ||
      in(cp, 0x20A0, 0x20CF) || in(cp, 0x2100, 0x2BFF) || in(cp, 0xFE00, 0xFE0F) ||
      in(cp, 0x1F000, 0x1FAFF) || in(cp, 0xE000, 0xF8FF) || cp == 0xFFFD)
    return CharClass::kSymbol;

  return CharClass::kLetter;
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

char32_t to_lower(char32_t cp) {
  if (in(cp, 'A', 'Z')) return cp + 32;
  if (cp < 0xC0) return cp;
  if ((in(cp, 0xC0, 0xD6) || in(cp, 0xD8, 0xDE))) return cp + 32;
  if (in(cp, 0x100, 0x137) || in(cp, 0x14A, 0x177)) return (cp % 2 == 0) ? cp + 1 : cp;
  if (in(cp, 0x139, 0x148) || in(cp, 0x179, 0x17E)) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (in(cp, 0x391, 0x3A1) || in(cp, 0x3A3, 0x3AB)) return cp + 32;
  if (in(cp, 0x410, 0x42F)) return cp + 32;
  if (in(cp, 0x400, 0x40F)) return cp + 80;
  return cp;
}

bool is_uppercase(char32_t cp) { return to_lower(cp) != cp; }

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = decode(s, pos);
    if (d.valid) {
      append_utf8(out, to_lower(d.code_point));
    } else {
      out.push_back(s[pos]);
    }
    pos += d.length;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end) {
    const auto d = decode(s, begin);
    if (!d.valid || classify(d.code_point) != CharClass::kSpace) break;
    begin += d.length;
  }
  // Walk back over whole code points; find the last non-space one.
  std::size_t last_end = begin;
  for (std::size_t pos = begin; pos < end;) {
    const auto d = decode(s, pos);
    pos += d.length;
    if (!d.valid || classify(d.code_point) != CharClass::kSpace) last_end = pos;
  }
  return std::string(s.substr(begin, last_end - begin));
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = decode(s, pos);
    if (d.valid && classify(d.code_point) == CharClass::kSpace) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.append(s.substr(pos, d.length));
    }
    pos += d.length;
  }
  return out;
}

}  // namespace lexiswitch::text
