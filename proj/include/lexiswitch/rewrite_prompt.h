#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lexiswitch/dictionary_cue.h"

namespace lexiswitch {

enum class DictionaryFormat {
  // Python literal of a list of dicts, as str() renders it:
  // [{'token': 'behavior', 'word': 'pattern', 'label': 'noun', 'meaning': '...'}]
  kPythonLiteral,
  // Single-line JSON array with the same keys in the same order.
  kJson,
};

DictionaryFormat parse_dictionary_format(std::string_view name);

// Renders cues in order with keys token, word, label, meaning; label is omitted
// when absent. Scores are not rendered.
std::string format_dictionary(std::span<const DictionaryCue> cues, DictionaryFormat format);

// Python repr() of a str.
std::string python_string_literal(std::string_view s);

// Rewrite instruction with `{dict_str}` and `{sentence}` placeholders.
class RewritePromptTemplate {
 public:
  // Singlish rewrite prompt: rules block, four worked examples, then the
  // dictionary and target to complete.
  static const RewritePromptTemplate& standard();
  static RewritePromptTemplate from_file(const std::filesystem::path& path);
  explicit RewritePromptTemplate(std::string text);

  std::string render(std::string_view dict_str, std::string_view sentence) const;
  const std::string& text() const noexcept { return text_; }

 private:
  std::string text_;
};

std::string assemble_rewrite_prompt(std::string_view base, std::span<const DictionaryCue> cues,
                                    DictionaryFormat format = DictionaryFormat::kPythonLiteral,
                                    const RewritePromptTemplate& tmpl = RewritePromptTemplate::standard());

// Text between the last <TARGET> and </TARGET> of a rendered prompt, if any.
std::optional<std::string> extract_target(std::string_view prompt);

}  // namespace lexiswitch
