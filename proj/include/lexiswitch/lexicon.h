#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexiswitch {

struct LexiconEntry {
  std::string id;
  std::string word;
  std::string meaning;
  std::string example;
  std::optional<std::string> label;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Stable identifier for a lexicon word: lowercased, whitespace runs joined by '-'.
std::string normalize_entry_id(std::string_view word);

// An immutable, validated dialect lexicon. Field values are stored trimmed, and
// the checksum is the SHA-256 of serialize_jsonl().
class Lexicon {
 public:
  static Lexicon from_entries(std::vector<LexiconEntry> entries, std::string source_path = {});

  const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::string& source_path() const noexcept { return source_path_; }
  const std::string& checksum() const noexcept { return checksum_; }

  const LexiconEntry* find(std::string_view id) const;
  const LexiconEntry& at(std::string_view id) const;

  // Canonical form: one JSON object per line, keys word, meaning, example[, label].
  std::string serialize_jsonl() const;

 private:
  Lexicon() = default;

  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::string source_path_;
  std::string checksum_;
};

Lexicon parse_lexicon_jsonl(std::string_view content, std::string source = "<memory>");
Lexicon load_lexicon(const std::filesystem::path& path);
// CSV with a header row naming the columns word, meaning, example[, label].
Lexicon load_lexicon_csv(const std::filesystem::path& path);
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

enum class EmbeddingTextPolicy { kGloss, kWord, kWordAndGloss };

EmbeddingTextPolicy parse_embedding_text_policy(std::string_view name);
const char* to_string(EmbeddingTextPolicy policy);

std::string entry_text_for_embedding(const LexiconEntry& entry,
                                     EmbeddingTextPolicy policy = EmbeddingTextPolicy::kGloss);

std::string sha256_hex(std::string_view data);

}  // namespace lexiswitch
