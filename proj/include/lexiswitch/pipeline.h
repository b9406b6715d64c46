#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lexiswitch/chat.h"
#include "lexiswitch/dictionary_cue.h"
#include "lexiswitch/embedding.h"
#include "lexiswitch/hnsw_index.h"
#include "lexiswitch/lexicon.h"
#include "lexiswitch/pos_tagger.h"
#include "lexiswitch/rewrite_prompt.h"
#include "lexiswitch/validator.h"
#include "lexiswitch/variety.h"

namespace lexiswitch {

enum class Mode { kBaseline, kRag, kZeroShot };

// "baseline", "rag", "zero_shot" (the trace/report spelling).
const char* to_string(Mode mode);
// "baseline", "rag", "zero-shot" (the command-line spelling).
const char* cli_name(Mode mode);
// Accepts either spelling.
Mode parse_mode(std::string_view name);

// System instructions for the base response and the prompting-only condition.
struct SystemPrompts {
  std::string version;
  std::string baseline;
  std::string zero_shot;

  static SystemPrompts defaults();
  static SystemPrompts load(const std::filesystem::path& path);
};

struct PipelineOptions {
  // Skip the rewrite call when retrieval finds nothing and return the base.
  bool short_circuit = true;
  double temperature = 0.0;
  DictionaryFormat dict_format = DictionaryFormat::kPythonLiteral;
  std::optional<RewritePromptTemplate> prompt_template;  // standard() when empty
  SystemPrompts prompts = SystemPrompts::defaults();
};

// Embeds every entry's text under `policy` and builds an index whose
// provenance records the lexicon checksum, embedder fingerprint and policy.
HnswIndex build_lexicon_index(const Lexicon& lexicon, const Embedder& embedder,
                              const HnswParams& params = {},
                              EmbeddingTextPolicy policy = EmbeddingTextPolicy::kGloss);

// Content-word extraction plus ANN lookup against one lexicon index. Holds
// references only; every referenced object must outlive the retriever.
class CueRetriever {
 public:
  // Throws ChecksumMismatch when the index was built from another lexicon or
  // embedding space, DimensionMismatch when the embedder width differs.
  CueRetriever(const Lexicon& lexicon, const HnswIndex& index, const Embedder& embedder,
               const PosTagger& tagger, const Stoplist& stoplist);

  std::vector<DictionaryCue> retrieve(std::string_view base, const VarietyConfig& config) const;

 private:
  const Lexicon& lexicon_;
  const HnswIndex& index_;
  const Embedder& embedder_;
  const PosTagger& tagger_;
  const Stoplist& stoplist_;
};

// Convenience form using the baseline tagger and the default stoplist.
std::vector<DictionaryCue> retrieve_cues(std::string_view base, const Lexicon& lexicon,
                                         const HnswIndex& index, const Embedder& embedder,
                                         const VarietyConfig& config);

struct RewriteTrace {
  std::string id;
  Mode mode = Mode::kBaseline;
  std::vector<ChatMessage> context;
  std::string base_response;
  std::vector<DictionaryCue> cues;
  std::string prompt;  // rewrite prompt (rag) or system instruction (zero_shot)
  std::string final_response;
  bool short_circuited = false;
  ValidationReport validation;
  VarietyConfig variety;

  nlohmann::ordered_json to_json() const;
  static RewriteTrace from_json(const nlohmann::json& j);
};

class RewritePipeline {
 public:
  // `retriever` may be null when only baseline and zero-shot runs are needed.
  RewritePipeline(const ChatProvider& chat, const CueRetriever* retriever, VarietyConfig variety,
                  PipelineOptions options = {});

  // Standard English reply to `context` under the baseline system prompt.
  std::string generate_base(std::span<const ChatMessage> context) const;

  RewriteTrace baseline(std::span<const ChatMessage> context,
                        std::optional<std::string> base = std::nullopt) const;
  // Retrieval-conditioned second pass over `base` (generated when absent).
  RewriteTrace rewrite(std::span<const ChatMessage> context,
                       std::optional<std::string> base = std::nullopt) const;
  RewriteTrace zero_shot_rewrite(std::span<const ChatMessage> context,
                                 std::optional<std::string> base = std::nullopt) const;
  RewriteTrace run_condition(Mode mode, std::span<const ChatMessage> context,
                             std::optional<std::string> base = std::nullopt) const;

  const VarietyConfig& variety() const noexcept { return variety_; }
  const PipelineOptions& options() const noexcept { return options_; }

 private:
  RewriteTrace start_trace(Mode mode, std::span<const ChatMessage> context,
                           std::optional<std::string> base) const;
  void finish_trace(RewriteTrace& trace) const;
  const RewritePromptTemplate& prompt_template() const;

  const ChatProvider& chat_;
  const CueRetriever* retriever_;
  VarietyConfig variety_;
  PipelineOptions options_;
};

}  // namespace lexiswitch
