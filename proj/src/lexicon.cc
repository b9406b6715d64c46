#include "lexiswitch/lexicon.h"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "lexiswitch/csv.h"
#include "lexiswitch/error.h"
#include "lexiswitch/text.h"

namespace lexiswitch {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::kIo, "SHA-256 digest failed");
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string normalize_entry_id(std::string_view word) {
  std::string id = text::to_lower(text::collapse_whitespace(word));
  for (char& c : id)
    if (c == ' ') c = '-';
  return id;
}

Lexicon Lexicon::from_entries(std::vector<LexiconEntry> entries, std::string source_path) {
  if (entries.empty()) throw Error(ErrorKind::kEmptyLexicon, source_path.empty() ? "no entries" : source_path);
  Lexicon lex;
  lex.source_path_ = std::move(source_path);
  for (auto& e : entries) {
    e.word = text::trim(e.word);
    e.meaning = text::trim(e.meaning);
    e.example = text::trim(e.example);
    if (e.word.empty()) throw EmptyFieldError(e.word, "word");
    if (e.meaning.empty()) throw EmptyFieldError(e.word, "meaning");
    if (e.label) {
      e.label = text::trim(*e.label);
      if (e.label->empty()) throw EmptyFieldError(e.word, "label");
    }
    e.id = normalize_entry_id(e.word);
    if (!lex.by_id_.emplace(e.id, lex.entries_.size()).second) throw DuplicateEntryError(e.word);
    lex.entries_.push_back(std::move(e));
  }
  lex.checksum_ = sha256_hex(lex.serialize_jsonl());
  return lex;
}

const LexiconEntry* Lexicon::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

const LexiconEntry& Lexicon::at(std::string_view id) const {
  if (const auto* e = find(id)) return *e;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown lexicon id '{}'", id));
}

std::string Lexicon::serialize_jsonl() const {
  std::string out;
  for (const auto& e : entries_) {
    nlohmann::ordered_json j;
    j["word"] = e.word;
    j["meaning"] = e.meaning;
    j["example"] = e.example;
    if (e.label) j["label"] = *e.label;
    out += j.dump();
    out += '\n';
  }
  return out;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kMissingFile, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string string_field(const nlohmann::json& obj, const char* key, const std::string& source,
                         std::size_t line, bool required) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    if (required) throw ParseError(source, line, fmt::format("missing \"{}\"", key));
    return {};
  }
  if (!it->is_string()) throw ParseError(source, line, fmt::format("\"{}\" must be a string", key));
  return it->get<std::string>();
}

}  // namespace

Lexicon parse_lexicon_jsonl(std::string_view content, std::string source) {
  std::vector<LexiconEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    auto nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    const std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (text::trim(line).empty()) continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (!obj.is_object()) throw ParseError(source, line_no, "expected a JSON object");

    LexiconEntry entry;
    entry.word = string_field(obj, "word", source, line_no, true);
    entry.meaning = string_field(obj, "meaning", source, line_no, true);
    entry.example = string_field(obj, "example", source, line_no, false);
    if (obj.contains("label") && !obj["label"].is_null())
      entry.label = string_field(obj, "label", source, line_no, true);
    entries.push_back(std::move(entry));
  }
  return Lexicon::from_entries(std::move(entries), std::move(source));
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon_jsonl(read_file(path), path.string());
}

Lexicon load_lexicon_csv(const std::filesystem::path& path) {
  const std::string source = path.string();
  const auto rows = csv::parse(read_file(path), source);
  if (rows.empty()) throw Error(ErrorKind::kEmptyLexicon, source);

  const auto& header = rows.front().fields;
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (text::to_lower(text::trim(header[i])) == name) return i;
    return std::nullopt;
  };
  const auto word_col = column("word");
  const auto meaning_col = column("meaning");
  const auto example_col = column("example");
  const auto label_col = column("label");
  if (!word_col || !meaning_col)
    throw ParseError(source, rows.front().line, "header must name 'word' and 'meaning' columns");

  std::vector<LexiconEntry> entries;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r].fields;
    if (f.size() != header.size())
      throw ParseError(source, rows[r].line,
                       fmt::format("expected {} fields, found {}", header.size(), f.size()));
    LexiconEntry e;
    e.word = f[*word_col];
    e.meaning = f[*meaning_col];
    if (example_col) e.example = f[*example_col];
    if (label_col && !text::trim(f[*label_col]).empty()) e.label = f[*label_col];
    entries.push_back(std::move(e));
  }
  return Lexicon::from_entries(std::move(entries), source);
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write {}", path.string()));
  out << lexicon.serialize_jsonl();
  if (!out) throw Error(ErrorKind::kIo, fmt::format("failed writing {}", path.string()));
}

EmbeddingTextPolicy parse_embedding_text_policy(std::string_view name) {
  if (name == "gloss") return EmbeddingTextPolicy::kGloss;
  if (name == "word") return EmbeddingTextPolicy::kWord;
  if (name == "word+gloss") return EmbeddingTextPolicy::kWordAndGloss;
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown embedding text policy '{}' (gloss|word|word+gloss)", name));
}

const char* to_string(EmbeddingTextPolicy policy) {
  switch (policy) {
    case EmbeddingTextPolicy::kGloss: return "gloss";
    case EmbeddingTextPolicy::kWord: return "word";
    case EmbeddingTextPolicy::kWordAndGloss: return "word+gloss";
  }
  return "gloss";
}

std::string entry_text_for_embedding(const LexiconEntry& entry, EmbeddingTextPolicy policy) {
  switch (policy) {
    case EmbeddingTextPolicy::kGloss: return entry.meaning;
    case EmbeddingTextPolicy::kWord: return entry.word;
    case EmbeddingTextPolicy::kWordAndGloss: return entry.word + " — " + entry.meaning;
  }
  return entry.meaning;
}

}  // namespace lexiswitch
