#include "lexiswitch/rewrite_prompt.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "lexiswitch/error.h"

namespace lexiswitch {

namespace {

constexpr std::string_view kDictPlaceholder = "{dict_str}";
constexpr std::string_view kSentencePlaceholder = "{sentence}";

constexpr const char* kStandardTemplate =
    R"(You are a linguistics expert specialising in the nuances of Singaporean English. Rewrite the message in <TARGET> in everyday Singaporean English. The messages are currently from a western society and are slightly awkward to hear in Singapore. Most Singaporeans speak fluent, standard English, with light Singlish touches here and there. Not broken grammar everywhere. A dictionary is provided to give you possibilities for words to replace with Singlish variants.

Rules:
- You need not use any of the words from the dictionary, but you may use one of them if it fits the context.
- Absolutely never use any discourse particles such as but not limited to la, lor, leh.
- Replace at most ONE word with a Singlish variant for each sentence even if multiple dictionary matches are present.
- Keep all other parts of the message exactly the same.
- If no suitable match is found, return the original message unchanged.
- You must preserve the message's meaning.
- Return ONLY the rewritten message — do not explain or add anything else.

Examples:

Dictionary: [{'token': 'behavior', 'word': 'pattern', 'label': 'noun','meaning': 'troublesome or annoying actions'}, {'token': 'driving', 'word': 'chiong', 'meaning': 'to charge; to rush forward; to make a dash for'}]

<TARGET>His behavior is driving everyone mad.</TARGET>
Rewritten: His pattern is driving everyone mad.

Dictionary: [{'token': 'mind', 'word': 'eye power', 'label': 'noun','meaning': 'just watching and not helping'}]

<TARGET>If there's anything on your mind, just say it.</TARGET>
Rewritten: If there's anything on your mind, just say it.

Dictionary: [{'token': 'must', 'word': 'die die', 'label': 'adverb', 'meaning': 'absolutely; no matter what; even at the cost of one's life'},{'token': 'amazing','word': 'power','meaning': 'used to express amazement, praise, etc. at something impressive or outstanding'}]

<TARGET>You must try this dish, it's amazing!</TARGET>
Rewritten: You die die must try this dish, it's amazing!

Dictionary: [{'token': 'act blur', 'word': 'pretend', 'label': 'verb', 'meaning': 'to feign ignorance; to play dumb'}, {'token': 'pretend', 'word': 'act chio', 'meaning': 'to behave in an (often exaggeratedly) charming or vain manner; to act pretty; to pretend as if one is extremely beautiful'}]

<TARGET> Don't pretend you don't know anything about the situation.</TARGET>
Rewritten: Don't act blur that you don't know anything about the situation.

Please complete the following:

Dictionary: {dict_str}
<TARGET>{sentence}</TARGET>
Rewritten:)";

std::size_t count_occurrences(std::string_view haystack, std::string_view needle) {
  std::size_t count = 0;
  for (auto pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

DictionaryFormat parse_dictionary_format(std::string_view name) {
  if (name == "python") return DictionaryFormat::kPythonLiteral;
  if (name == "json") return DictionaryFormat::kJson;
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown dictionary format '{}' (python|json)", name));
}

std::string python_string_literal(std::string_view s) {
  const bool has_single = s.find('\'') != std::string_view::npos;
  const bool has_double = s.find('"') != std::string_view::npos;
  const char quote = (has_single && !has_double) ? '"' : '\'';
  std::string out(1, quote);
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (ch == quote || ch == '\\') {
      out.push_back('\\');
      out.push_back(ch);
    } else if (ch == '\n') {
      out += "\\n";
    } else if (ch == '\r') {
      out += "\\r";
    } else if (ch == '\t') {
      out += "\\t";
    } else if (c < 0x20 || c == 0x7F) {
      out += fmt::format("\\x{:02x}", c);
    } else {
      out.push_back(ch);
    }
  }
  out.push_back(quote);
  return out;
}

std::string format_dictionary(std::span<const DictionaryCue> cues, DictionaryFormat format) {
  if (format == DictionaryFormat::kJson) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& cue : cues) {
      nlohmann::ordered_json obj;
      obj["token"] = cue.token;
      obj["word"] = cue.word;
      if (cue.label) obj["label"] = *cue.label;
      obj["meaning"] = cue.meaning;
      arr.push_back(std::move(obj));
    }
    return arr.dump();
  }

  std::string out = "[";
  for (std::size_t i = 0; i < cues.size(); ++i) {
    const auto& cue = cues[i];
    if (i > 0) out += ", ";
    out += "{'token': " + python_string_literal(cue.token);
    out += ", 'word': " + python_string_literal(cue.word);
    if (cue.label) out += ", 'label': " + python_string_literal(*cue.label);
    out += ", 'meaning': " + python_string_literal(cue.meaning) + "}";
  }
  out += "]";
  return out;
}

const RewritePromptTemplate& RewritePromptTemplate::standard() {
  static const RewritePromptTemplate tmpl(kStandardTemplate);
  return tmpl;
}

RewritePromptTemplate::RewritePromptTemplate(std::string text) : text_(std::move(text)) {
  if (count_occurrences(text_, kDictPlaceholder) != 1 ||
      count_occurrences(text_, kSentencePlaceholder) != 1)
    throw Error(ErrorKind::kInvalidArgument,
                "prompt template must contain {dict_str} and {sentence} exactly once");
}

RewritePromptTemplate RewritePromptTemplate::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kMissingFile, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return RewritePromptTemplate(ss.str());
}

std::string RewritePromptTemplate::render(std::string_view dict_str, std::string_view sentence) const {
  const std::string_view t = text_;
  const std::size_t dict_pos = t.find(kDictPlaceholder);
  const std::size_t sent_pos = t.find(kSentencePlaceholder);

  struct Slot {
    std::size_t pos;
    std::size_t len;
    std::string_view value;
  };
  Slot first{dict_pos, kDictPlaceholder.size(), dict_str};
  Slot second{sent_pos, kSentencePlaceholder.size(), sentence};
  if (second.pos < first.pos) std::swap(first, second);

  std::string out;
  out.reserve(t.size() + dict_str.size() + sentence.size());
  out.append(t.substr(0, first.pos));
  out.append(first.value);
  out.append(t.substr(first.pos + first.len, second.pos - first.pos - first.len));
  out.append(second.value);
  out.append(t.substr(second.pos + second.len));
  return out;
}

std::string assemble_rewrite_prompt(std::string_view base, std::span<const DictionaryCue> cues,
                                    DictionaryFormat format, const RewritePromptTemplate& tmpl) {
  return tmpl.render(format_dictionary(cues, format), base);
}

std::optional<std::string> extract_target(std::string_view prompt) {
  constexpr std::string_view kOpen = "<TARGET>";
  constexpr std::string_view kClose = "</TARGET>";
  const auto close = prompt.rfind(kClose);
  if (close == std::string_view::npos) return std::nullopt;
  const auto open = prompt.rfind(kOpen, close);
  if (open == std::string_view::npos) return std::nullopt;
  return std::string(prompt.substr(open + kOpen.size(), close - open - kOpen.size()));
}

}  // namespace lexiswitch
