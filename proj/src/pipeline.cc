#include "lexiswitch/pipeline.h"

#include <algorithm>
#include <fstream>
#include <map>

#include <fmt/format.h>

#include "lexiswitch/error.h"
#include "lexiswitch/text.h"
#include "lexiswitch/tokenizer.h"

namespace lexiswitch {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::kBaseline: return "baseline";
    case Mode::kRag: return "rag";
    case Mode::kZeroShot: return "zero_shot";
  }
  return "?";
}

const char* cli_name(Mode mode) {
  return mode == Mode::kZeroShot ? "zero-shot" : to_string(mode);
}

Mode parse_mode(std::string_view name) {
  if (name == "baseline") return Mode::kBaseline;
  if (name == "rag") return Mode::kRag;
  if (name == "zero_shot" || name == "zero-shot") return Mode::kZeroShot;
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown mode '{}' (expected baseline, rag or zero-shot)", name));
}

SystemPrompts SystemPrompts::defaults() {
  SystemPrompts p;
  p.version = "lexiswitch-system-prompts/1";
  p.baseline =
      "You are a friendly, helpful assistant. Reply to the user in clear Standard English, "
      "in a few sentences.";
  p.zero_shot = p.baseline.substr(0, p.baseline.find(" Reply")) +
                " Reply to the user in a few sentences, written the way a Singaporean would "
                "say it in everyday Singlish.";
  return p;
}

SystemPrompts SystemPrompts::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kMissingFile, path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), 0, e.what());
  }
  SystemPrompts p;
  p.version = j.value("version", std::string("unversioned"));
  p.baseline = j.at("baseline").get<std::string>();
  p.zero_shot = j.at("zero_shot").get<std::string>();
  if (p.baseline.empty() || p.zero_shot.empty())
    throw Error(ErrorKind::kEmptyField, fmt::format("{}: system prompts must be non-empty", path.string()));
  return p;
}

HnswIndex build_lexicon_index(const Lexicon& lexicon, const Embedder& embedder,
                              const HnswParams& params, EmbeddingTextPolicy policy) {
  std::vector<std::string> texts;
  texts.reserve(lexicon.size());
  for (const auto& e : lexicon.entries()) texts.push_back(entry_text_for_embedding(e, policy));
  if (texts.empty()) throw Error(ErrorKind::kEmptyLexicon, "cannot index an empty lexicon");
  const auto vectors = embedder.embed_batch(texts);
  std::vector<LabeledVector> labeled;
  labeled.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) labeled.push_back({lexicon.entries()[i].id, vectors[i]});
  return HnswIndex::build(labeled, params, {lexicon.checksum(), embedder.fingerprint(), to_string(policy)});
}

CueRetriever::CueRetriever(const Lexicon& lexicon, const HnswIndex& index, const Embedder& embedder,
                           const PosTagger& tagger, const Stoplist& stoplist)
    : lexicon_(lexicon), index_(index), embedder_(embedder), tagger_(tagger), stoplist_(stoplist) {
  const auto& prov = index.provenance();
  if (prov.lexicon_checksum != lexicon.checksum())
    throw Error(ErrorKind::kChecksumMismatch,
                fmt::format("index was built from lexicon {} but {} has checksum {}; rebuild the index",
                            prov.lexicon_checksum.empty() ? "<unknown>" : prov.lexicon_checksum,
                            lexicon.source_path().empty() ? "the lexicon" : lexicon.source_path(),
                            lexicon.checksum()));
  if (index.dim() != embedder.dim()) throw DimensionMismatchError(index.dim(), embedder.dim());
  if (!prov.embedder.empty() && prov.embedder != embedder.fingerprint())
    throw Error(ErrorKind::kChecksumMismatch,
                fmt::format("index embedding space '{}' differs from embedder '{}'", prov.embedder,
                            embedder.fingerprint()));
}

std::vector<DictionaryCue> CueRetriever::retrieve(std::string_view base,
                                                  const VarietyConfig& config) const {
  const auto tokens = tokenize(base);
  const auto content = extract_content_words(tokens, tagger_, stoplist_);
  if (content.empty()) return {};

  std::vector<std::string> lemmas;
  std::map<std::string, std::size_t> lemma_slot;
  for (const auto& w : content)
    if (lemma_slot.emplace(w.lemma, lemmas.size()).second) lemmas.push_back(w.lemma);
  const auto vectors = embedder_.embed_batch(lemmas);

  struct Best {
    std::size_t token_index;
    double score;
  };
  std::map<std::string, Best> best;  // entry id -> best (token, score)
  for (const auto& w : content) {
    const auto hits = index_.query(vectors[lemma_slot.at(w.lemma)], config.k_per_word);
    for (const auto& hit : hits) {
      if (hit.score < config.min_retrieval_score) continue;
      auto [it, inserted] = best.emplace(hit.entry_id, Best{w.token_index, hit.score});
      if (!inserted && hit.score > it->second.score) it->second = {w.token_index, hit.score};
    }
  }

  struct Ranked {
    std::size_t token_index;
    double score;
    const LexiconEntry* entry;
  };
  std::vector<Ranked> ranked;
  for (const auto& [id, b] : best) ranked.push_back({b.token_index, b.score, &lexicon_.at(id)});
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.token_index != b.token_index) return a.token_index < b.token_index;
    if (a.score != b.score) return a.score > b.score;
    return a.entry->id < b.entry->id;
  });

  std::vector<DictionaryCue> cues;
  for (const auto& r : ranked)
    cues.push_back({tokens[r.token_index].surface, r.entry->word, r.entry->label, r.entry->meaning,
                    r.score});
  return cues;
}

std::vector<DictionaryCue> retrieve_cues(std::string_view base, const Lexicon& lexicon,
                                         const HnswIndex& index, const Embedder& embedder,
                                         const VarietyConfig& config) {
  static const BaselineTagger tagger;
  static const Stoplist stoplist = Stoplist::defaults();
  return CueRetriever(lexicon, index, embedder, tagger, stoplist).retrieve(base, config);
}

namespace {

nlohmann::ordered_json cue_json(const DictionaryCue& c) {
  nlohmann::ordered_json j;
  j["token"] = c.token;
  j["word"] = c.word;
  if (c.label) j["label"] = *c.label;
  j["meaning"] = c.meaning;
  j["score"] = c.score;
  return j;
}

DictionaryCue cue_from_json(const nlohmann::json& j) {
  DictionaryCue c;
  c.token = j.at("token").get<std::string>();
  c.word = j.at("word").get<std::string>();
  if (j.contains("label")) c.label = j.at("label").get<std::string>();
  c.meaning = j.at("meaning").get<std::string>();
  c.score = j.at("score").get<double>();
  return c;
}

}  // namespace

nlohmann::ordered_json RewriteTrace::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["mode"] = to_string(mode);
  auto ctx = nlohmann::ordered_json::array();
  for (const auto& m : context) ctx.push_back({{"role", m.role}, {"content", m.content}});
  j["context"] = std::move(ctx);
  j["base_response"] = base_response;
  auto cue_list = nlohmann::ordered_json::array();
  for (const auto& c : cues) cue_list.push_back(cue_json(c));
  j["cues"] = std::move(cue_list);
  j["prompt"] = prompt;
  j["final_response"] = final_response;
  j["short_circuited"] = short_circuited;
  j["validation"] = validation.to_json();
  j["variety"] = variety.to_json();
  return j;
}

RewriteTrace RewriteTrace::from_json(const nlohmann::json& j) {
  RewriteTrace t;
  t.id = j.value("id", std::string());
  t.mode = parse_mode(j.at("mode").get<std::string>());
  for (const auto& m : j.value("context", nlohmann::json::array()))
    t.context.push_back({m.at("role").get<std::string>(), m.at("content").get<std::string>()});
  t.base_response = j.at("base_response").get<std::string>();
  for (const auto& c : j.value("cues", nlohmann::json::array())) t.cues.push_back(cue_from_json(c));
  t.prompt = j.value("prompt", std::string());
  t.final_response = j.at("final_response").get<std::string>();
  t.short_circuited = j.value("short_circuited", false);
  if (j.contains("validation")) t.validation = ValidationReport::from_json(j.at("validation"));
  if (j.contains("variety")) t.variety = VarietyConfig::from_json(j.at("variety"));
  return t;
}

RewritePipeline::RewritePipeline(const ChatProvider& chat, const CueRetriever* retriever,
                                 VarietyConfig variety, PipelineOptions options)
    : chat_(chat), retriever_(retriever), variety_(std::move(variety)), options_(std::move(options)) {
  variety_.validate();
}

const RewritePromptTemplate& RewritePipeline::prompt_template() const {
  return options_.prompt_template ? *options_.prompt_template : RewritePromptTemplate::standard();
}

std::string RewritePipeline::generate_base(std::span<const ChatMessage> context) const {
  if (context.empty()) throw Error(ErrorKind::kInvalidArgument, "context must not be empty");
  if (context.back().role != "user")
    throw Error(ErrorKind::kInvalidArgument, "the last context message must come from the user");
  ChatRequest req;
  req.messages.push_back({"system", options_.prompts.baseline});
  req.messages.insert(req.messages.end(), context.begin(), context.end());
  req.temperature = options_.temperature;
  req.purpose = ChatPurpose::kBaseResponse;
  return chat_.complete(req);
}

RewriteTrace RewritePipeline::start_trace(Mode mode, std::span<const ChatMessage> context,
                                          std::optional<std::string> base) const {
  RewriteTrace t;
  t.mode = mode;
  t.context.assign(context.begin(), context.end());
  t.base_response = base ? std::move(*base) : generate_base(context);
  if (text::trim(t.base_response).empty())
    throw Error(ErrorKind::kEmptyText, "base response must not be empty");
  t.variety = variety_;
  return t;
}

void RewritePipeline::finish_trace(RewriteTrace& t) const {
  t.validation = validate_rewrite(t.base_response, t.final_response, variety_);
}

RewriteTrace RewritePipeline::baseline(std::span<const ChatMessage> context,
                                       std::optional<std::string> base) const {
  auto t = start_trace(Mode::kBaseline, context, std::move(base));
  t.final_response = t.base_response;
  finish_trace(t);
  return t;
}

RewriteTrace RewritePipeline::rewrite(std::span<const ChatMessage> context,
                                      std::optional<std::string> base) const {
  if (retriever_ == nullptr)
    throw Error(ErrorKind::kInvalidArgument, "rag mode needs a lexicon and an index (--lexicon, --index)");
  auto t = start_trace(Mode::kRag, context, std::move(base));
  t.cues = retriever_->retrieve(t.base_response, variety_);
  t.prompt = assemble_rewrite_prompt(t.base_response, t.cues, options_.dict_format, prompt_template());
  if (t.cues.empty() && options_.short_circuit) {
    t.final_response = t.base_response;
    t.short_circuited = true;
  } else {
    ChatRequest req;
    req.messages.push_back({"user", t.prompt});
    req.temperature = options_.temperature;
    req.purpose = ChatPurpose::kRewrite;
    req.target = t.base_response;
    req.cues = t.cues;
    t.final_response = chat_.complete(req);
  }
  finish_trace(t);
  return t;
}

RewriteTrace RewritePipeline::zero_shot_rewrite(std::span<const ChatMessage> context,
                                                std::optional<std::string> base) const {
  if (context.empty() || context.back().role != "user")
    throw Error(ErrorKind::kInvalidArgument, "zero-shot mode needs a context ending in a user message");
  auto t = start_trace(Mode::kZeroShot, context, std::move(base));
  ChatRequest req;
  req.messages.push_back({"system", options_.prompts.zero_shot});
  req.messages.insert(req.messages.end(), context.begin(), context.end());
  req.temperature = options_.temperature;
  req.purpose = ChatPurpose::kZeroShot;
  req.target = t.base_response;
  t.prompt = options_.prompts.zero_shot;
  t.final_response = chat_.complete(req);
  finish_trace(t);
  return t;
}

RewriteTrace RewritePipeline::run_condition(Mode mode, std::span<const ChatMessage> context,
                                            std::optional<std::string> base) const {
  switch (mode) {
    case Mode::kBaseline: return baseline(context, std::move(base));
    case Mode::kRag: return rewrite(context, std::move(base));
    case Mode::kZeroShot: return zero_shot_rewrite(context, std::move(base));
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown mode");
}

}  // namespace lexiswitch
