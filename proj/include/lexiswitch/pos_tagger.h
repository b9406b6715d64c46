#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexiswitch/tokenizer.h"

namespace lexiswitch {

// Universal POS tag set.
enum class PosTag {
  kAdj, kAdp, kAdv, kAux, kCconj, kDet, kIntj, kNoun, kNum,
  kPart, kPron, kPropn, kPunct, kSconj, kSym, kVerb, kX,
};

const char* to_string(PosTag tag);
// Case-insensitive; surrounding whitespace ignored.
std::optional<PosTag> parse_pos_tag(std::string_view label);
bool is_content_tag(PosTag tag);

class PosTagger {
 public:
  virtual ~PosTagger() = default;
  // One label per token, deterministic for identical input.
  virtual std::vector<PosTag> tag(std::span<const Token> tokens) const = 0;
};

// Closed-class lookup plus suffix and context heuristics; needs no model files.
class BaselineTagger final : public PosTagger {
 public:
  std::vector<PosTag> tag(std::span<const Token> tokens) const override;
};

std::vector<PosTag> baseline_tag(std::span<const Token> tokens);

// Talks to an external tagger process over a line protocol: one token per line,
// a blank line ends the sentence; the process answers with one tag per line
// followed by a blank line. Calls are serialized.
class ExternalProcessTagger final : public PosTagger {
 public:
  explicit ExternalProcessTagger(std::string command);
  ~ExternalProcessTagger() override;

  ExternalProcessTagger(const ExternalProcessTagger&) = delete;
  ExternalProcessTagger& operator=(const ExternalProcessTagger&) = delete;

  std::vector<PosTag> tag(std::span<const Token> tokens) const override;

 private:
  struct Process;
  std::string command_;
  mutable std::mutex mutex_;
  std::unique_ptr<Process> process_;
};

class Stoplist {
 public:
  // About 120 English function and light words.
  static Stoplist defaults();
  static Stoplist from_file(const std::filesystem::path& path);
  explicit Stoplist(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  bool contains(std::string_view lower) const { return words_.contains(std::string(lower)); }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct ContentWord {
  std::size_t token_index = 0;
  std::string lemma;
  PosTag pos = PosTag::kNoun;

  friend bool operator==(const ContentWord&, const ContentWord&) = default;
};

// Word tokens tagged NOUN, PROPN, VERB, ADJ or ADV that are not stoplisted, in
// token order. Lemma is the lowercased surface.
std::vector<ContentWord> extract_content_words(std::span<const Token> tokens,
                                               std::span<const PosTag> tags,
                                               const Stoplist& stoplist);
std::vector<ContentWord> extract_content_words(std::span<const Token> tokens,
                                               const PosTagger& tagger,
                                               const Stoplist& stoplist);

}  // namespace lexiswitch
