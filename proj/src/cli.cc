#include "lexiswitch/cli.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lexiswitch/chat.h"
#include "lexiswitch/embedding.h"
#include "lexiswitch/error.h"
#include "lexiswitch/hnsw_index.h"
#include "lexiswitch/lexicon.h"
#include "lexiswitch/metrics.h"
#include "lexiswitch/pipeline.h"
#include "lexiswitch/pos_tagger.h"
#include "lexiswitch/report.h"
#include "lexiswitch/text.h"
#include "lexiswitch/variety.h"

namespace lexiswitch {

namespace {

constexpr std::size_t kDefaultEmbedDim = 256;

struct EmbedFlags {
  std::string kind = "hashing";
  std::string endpoint;
  std::string model = "text-embedding-3-small";
  std::size_t dim = 0;  // 0: from the index, else kDefaultEmbedDim
};

struct ChatFlags {
  std::string endpoint;
  std::string model = "gpt-4o-mini";
  std::string script;
  double temperature = 0.0;
};

struct RunFlags {
  std::string lexicon;
  std::string index;
  std::string mode = "rag";
  std::size_t k_per_word = 1;
  double min_score = 0.35;
  std::size_t max_span_tokens = 4;
  std::string particles;
  std::string stoplist;
  std::string tagger_cmd;
  bool no_short_circuit = false;
  std::string dict_format = "python";
  std::string prompt_template;
  std::string system_prompts;
  std::uint64_t seed = 42;
  std::size_t concurrency = 4;
  EmbedFlags embed;
  ChatFlags chat;
};

void add_embed_flags(CLI::App* cmd, EmbedFlags& f) {
  cmd->add_option("--embedder", f.kind, "Embedding provider: hashing (offline) or remote")
      ->check(CLI::IsMember({"hashing", "remote"}));
  cmd->add_option("--embed-endpoint", f.endpoint,
                  "Base URL of the embeddings API (default: $LEXISWITCH_BASE_URL)");
  cmd->add_option("--embed-model", f.model, "Remote embedding model name");
  cmd->add_option("--embed-dim", f.dim, "Embedding width");
}

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--lexicon", f.lexicon, "Lexicon file (.jsonl or .csv)");
  cmd->add_option("--index", f.index, "Index snapshot built by index-build");
  cmd->add_option("--mode", f.mode, "Condition: baseline, rag or zero-shot")
      ->check(CLI::IsMember({"baseline", "rag", "zero-shot"}));
  cmd->add_option("--endpoint", f.chat.endpoint,
                  "Base URL of the chat completions API (default: $LEXISWITCH_BASE_URL)");
  cmd->add_option("--model", f.chat.model, "Chat model name");
  cmd->add_option("--script", f.chat.script, "Scripted chat replies (JSON) instead of a remote model");
  cmd->add_option("--temperature", f.chat.temperature, "Sampling temperature");
  cmd->add_option("--k-per-word", f.k_per_word, "Lexicon hits kept per content word");
  cmd->add_option("--min-score", f.min_score, "Minimum cosine for a retrieved cue");
  cmd->add_option("--max-span-tokens", f.max_span_tokens,
                  "Longest changed span still counted as one local substitution");
  cmd->add_option("--particles", f.particles, "Discourse-particle blocklist file");
  cmd->add_option("--stoplist", f.stoplist, "Stopword file replacing the built-in list");
  cmd->add_option("--tagger-cmd", f.tagger_cmd, "External POS tagger command (token-per-line protocol)");
  cmd->add_flag("--no-short-circuit", f.no_short_circuit,
                "Call the rewrite model even when no cue was retrieved");
  cmd->add_option("--dict-format", f.dict_format, "Dictionary rendering: python or json")
      ->check(CLI::IsMember({"python", "json"}));
  cmd->add_option("--prompt-template", f.prompt_template,
                  "Rewrite prompt with {dict_str} and {sentence} placeholders");
  cmd->add_option("--system-prompts", f.system_prompts, "JSON with baseline and zero_shot system prompts");
  cmd->add_option("--seed", f.seed, "Seed for scripted providers");
  cmd->add_option("--concurrency", f.concurrency, "Concurrent items and provider calls")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
  add_embed_flags(cmd, f.embed);
}

std::string endpoint_or_env(const std::string& flag) {
  if (!flag.empty()) return flag;
  return env_value(kBaseUrlEnv).value_or("");
}

EmbeddingProviderConfig embed_config(const EmbedFlags& f, std::size_t fallback_dim) {
  EmbeddingProviderConfig c;
  c.kind = f.kind == "remote" ? EmbeddingProviderConfig::Kind::kRemote
                              : EmbeddingProviderConfig::Kind::kDeterministic;
  c.endpoint = endpoint_or_env(f.endpoint);
  c.model_name = f.model;
  c.dim = f.dim != 0 ? f.dim : fallback_dim;
  return c;
}

ChatProviderConfig chat_config(const ChatFlags& f) {
  ChatProviderConfig c;
  if (!f.script.empty()) {
    c.kind = ChatProviderConfig::Kind::kScripted;
    c.script = f.script;
  } else {
    c.kind = ChatProviderConfig::Kind::kRemote;
    c.endpoint = endpoint_or_env(f.endpoint);
    if (c.endpoint.empty())
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("no chat provider: pass --script, --endpoint or set {}", kBaseUrlEnv));
  }
  c.model_name = f.model;
  c.temperature = f.temperature;
  return c;
}

Lexicon load_any_lexicon(const std::string& path) {
  if (std::filesystem::path(path).extension() == ".csv") return load_lexicon_csv(path);
  return load_lexicon(path);
}

int exit_code_for(const Error& e) {
  if (is_provider_failure(e.kind())) return kExitProvider;
  if (e.kind() == ErrorKind::kInvalidArgument) return kExitUsage;
  return kExitData;
}

// Everything a rewrite or chat run needs, owned in one place so the retriever's
// references stay valid.
class RunContext {
 public:
  RunContext(const RunFlags& f, Mode mode) {
    limiter_ = std::make_shared<ProviderLimiter>(f.concurrency);
    variety_.k_per_word = f.k_per_word;
    variety_.min_retrieval_score = f.min_score;
    variety_.max_span_tokens = f.max_span_tokens;
    if (!f.particles.empty()) variety_.particle_blocklist = load_particle_blocklist(f.particles);
    variety_.validate();

    options_.short_circuit = !f.no_short_circuit;
    options_.temperature = f.chat.temperature;
    options_.dict_format = parse_dictionary_format(f.dict_format);
    if (!f.prompt_template.empty())
      options_.prompt_template = RewritePromptTemplate::from_file(f.prompt_template);
    if (!f.system_prompts.empty()) options_.prompts = SystemPrompts::load(f.system_prompts);

    chat_ = make_chat_provider(chat_config(f.chat), limiter_, f.seed);

    if (mode == Mode::kRag) {
      if (f.lexicon.empty() || f.index.empty())
        throw Error(ErrorKind::kInvalidArgument,
                    "rag mode needs --lexicon and --index (build one with `lexiswitch index-build`)");
      lexicon_.emplace(load_any_lexicon(f.lexicon));
      index_.emplace(HnswIndex::load(f.index));
      embedder_ = make_embedder(embed_config(f.embed, index_->dim()), limiter_);
      if (!f.tagger_cmd.empty())
        tagger_ = std::make_unique<ExternalProcessTagger>(f.tagger_cmd);
      else
        tagger_ = std::make_unique<BaselineTagger>();
      stoplist_.emplace(f.stoplist.empty() ? Stoplist::defaults() : Stoplist::from_file(f.stoplist));
      retriever_.emplace(*lexicon_, *index_, *embedder_, *tagger_, *stoplist_);
    }
    pipeline_.emplace(*chat_, retriever_ ? &*retriever_ : nullptr, variety_, options_);
  }

  const RewritePipeline& pipeline() const { return *pipeline_; }

 private:
  std::shared_ptr<ProviderLimiter> limiter_;
  VarietyConfig variety_;
  PipelineOptions options_;
  std::unique_ptr<ChatProvider> chat_;
  std::optional<Lexicon> lexicon_;
  std::optional<HnswIndex> index_;
  std::unique_ptr<Embedder> embedder_;
  std::unique_ptr<PosTagger> tagger_;
  std::optional<Stoplist> stoplist_;
  std::optional<CueRetriever> retriever_;
  std::optional<RewritePipeline> pipeline_;
};

struct WorkItem {
  std::string id;
  std::vector<ChatMessage> context;
  std::optional<std::string> base;
};

std::vector<WorkItem> load_work_items(const std::filesystem::path& path) {
  const auto content = read_file(path);
  std::vector<WorkItem> items;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto nl = content.find('\n', pos);
    if (nl == std::string::npos) nl = content.size();
    ++line_no;
    const auto line = text::trim(std::string_view(content).substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      WorkItem item;
      item.id = j.contains("id") ? j.at("id").get<std::string>() : fmt::format("item-{}", items.size() + 1);
      if (j.contains("context")) {
        for (const auto& m : j.at("context"))
          item.context.push_back({m.at("role").get<std::string>(), m.at("content").get<std::string>()});
      } else if (j.contains("user")) {
        item.context.push_back({"user", j.at("user").get<std::string>()});
      }
      if (j.contains("base")) item.base = j.at("base").get<std::string>();
      if (item.context.empty() && !item.base)
        throw Error(ErrorKind::kEmptyField, "item needs \"user\", \"context\" or \"base\"");
      items.push_back(std::move(item));
    } catch (const std::exception& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  }
  return items;
}

// ---------------------------------------------------------------------------

int cmd_index_build(const std::string& lexicon_path, const std::string& out_path,
                    const EmbedFlags& ef, const std::string& embedding_text, const HnswParams& params,
                    std::ostream& out) {
  const auto lexicon = load_any_lexicon(lexicon_path);
  const auto policy = parse_embedding_text_policy(embedding_text);
  auto limiter = std::make_shared<ProviderLimiter>();
  const auto embedder = make_embedder(embed_config(ef, kDefaultEmbedDim), limiter);

  const auto index = build_lexicon_index(lexicon, *embedder, params, policy);
  const std::filesystem::path target(out_path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  index.save(target);
  out << fmt::format("indexed {} entries (dim {}, top layer {}) -> {}\n", index.size(), index.dim(),
                     index.max_level(), out_path);
  return kExitOk;
}

int cmd_rewrite(const RunFlags& f, const std::string& text_arg, const std::string& user_arg,
                const std::string& input, const std::string& out_dir, std::ostream& out,
                std::ostream& err) {
  const Mode mode = parse_mode(f.mode);
  std::vector<WorkItem> items;
  if (!input.empty()) {
    items = load_work_items(input);
  } else {
    WorkItem item{"item-1", {}, std::nullopt};
    if (!user_arg.empty()) item.context.push_back({"user", user_arg});
    if (!text_arg.empty()) item.base = text_arg;
    items.push_back(std::move(item));
  }
  if (items.empty()) throw Error(ErrorKind::kEmptyInput, "no items to rewrite");

  RunContext ctx(f, mode);
  std::vector<std::optional<RewriteTrace>> traces(items.size());
  std::vector<std::optional<Error>> failures(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        auto t = ctx.pipeline().run_condition(mode, items[i].context, items[i].base);
        t.id = items[i].id;
        traces[i] = std::move(t);
      } catch (const Error& e) {
        failures[i] = e;
      } catch (const std::exception& e) {
        failures[i] = Error(ErrorKind::kInvalidArgument, e.what());
      }
    }
  };
  const std::size_t n_threads = std::min(f.concurrency, items.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::string jsonl;
  std::size_t written = 0;
  int code = kExitOk;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (traces[i]) {
      jsonl += traces[i]->to_json().dump();
      jsonl += '\n';
      ++written;
    } else {
      err << fmt::format("{}: {}\n", items[i].id, failures[i]->what());
      const int c = exit_code_for(*failures[i]);
      if (code == kExitOk || c == kExitProvider) code = c;
    }
  }
  if (out_dir.empty()) {
    out << jsonl;
  } else {
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / "traces.jsonl";
    write_file(path, jsonl);
    out << fmt::format("wrote {} {} trace(s) -> {}\n", written, to_string(mode), path.string());
  }
  return code;
}

int cmd_eval(const std::string& traces_path, const std::string& pairs_path, const std::string& out_dir,
             const EmbedFlags& ef, std::optional<double> x_axis_cap, std::ostream& out) {
  if (traces_path.empty() == pairs_path.empty())
    throw Error(ErrorKind::kInvalidArgument, "pass exactly one of --traces or --pairs");
  std::vector<PairRecord> pairs;
  if (!traces_path.empty()) {
    const auto traces = load_traces(traces_path);
    pairs = pairs_from_traces(traces);
  } else {
    pairs = load_pairs(pairs_path);
  }
  if (pairs.empty()) throw Error(ErrorKind::kEmptyGroup, "no records to evaluate");

  auto limiter = std::make_shared<ProviderLimiter>();
  const auto embedder = make_embedder(embed_config(ef, kDefaultEmbedDim), limiter);
  std::vector<EvalRecord> records;
  records.reserve(pairs.size());
  for (auto& p : pairs)
    records.push_back(score_pair(std::move(p.id), p.mode, std::move(p.original), std::move(p.generated), *embedder));
  const auto stats = summarize(records);
  export_report(stats, records, out_dir, {x_axis_cap, embedder->fingerprint()});
  out << render_summary_text(stats);
  return kExitOk;
}

int cmd_chat(const RunFlags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  const Mode mode = parse_mode(f.mode);
  RunContext ctx(f, mode);
  std::vector<ChatMessage> context;
  std::optional<RewriteTrace> last;
  std::string line;
  while (std::getline(in, line)) {
    const auto turn = text::trim(line);
    if (turn.empty()) continue;
    if (turn == "/quit") break;
    if (turn == "/trace") {
      if (last)
        out << last->to_json().dump(2) << '\n';
      else
        out << "(no trace yet)\n";
      continue;
    }
    context.push_back({"user", turn});
    try {
      auto t = ctx.pipeline().run_condition(mode, context);
      t.id = fmt::format("turn-{}", (context.size() + 1) / 2);
      out << t.final_response << '\n';
      context.push_back({"assistant", t.final_response});
      last = std::move(t);
    } catch (const Error& e) {
      context.pop_back();
      err << e.what() << '\n';
      if (!is_provider_failure(e.kind())) throw;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Lexicon-grounded code-switching rewrites and their evaluation", "lexiswitch"};
  app.require_subcommand(1);

  std::string lexicon_path, out_path, embedding_text = "gloss";
  EmbedFlags build_embed;
  HnswParams params;
  auto* build = app.add_subcommand("index-build", "Embed a lexicon and write an ANN index snapshot");
  build->add_option("--lexicon", lexicon_path, "Lexicon file (.jsonl or .csv)")->required();
  build->add_option("--out", out_path, "Snapshot path to write")->required();
  build->add_option("--embedding-text", embedding_text, "Text embedded per entry: gloss, word or word+gloss")
      ->check(CLI::IsMember({"gloss", "word", "word+gloss"}));
  build->add_option("--m", params.m, "Graph degree");
  build->add_option("--ef-construction", params.ef_construction, "Beam width while inserting");
  build->add_option("--ef-search", params.ef_search, "Default beam width while querying");
  build->add_option("--seed", params.seed, "Level-assignment seed");
  add_embed_flags(build, build_embed);

  RunFlags rewrite_flags;
  std::string text_arg, user_arg, input_path, rewrite_out;
  auto* rewrite = app.add_subcommand("rewrite", "Run one condition over a text or a JSONL batch");
  add_run_flags(rewrite, rewrite_flags);
  rewrite->add_option("--text", text_arg, "Standard English response to rewrite (skips generation)");
  rewrite->add_option("--user", user_arg, "User message to respond to");
  rewrite->add_option("--input", input_path, "JSONL items with id and user, context and/or base");
  rewrite->add_option("--out", rewrite_out, "Output directory for traces.jsonl (default: stdout)");

  std::string traces_path, pairs_path, eval_out;
  EmbedFlags eval_embed;
  std::optional<double> x_axis_cap;
  auto* eval = app.add_subcommand("eval", "Score rewrites and write summary and scatter files");
  eval->add_option("--traces", traces_path, "Trace JSONL from `rewrite`");
  eval->add_option("--pairs", pairs_path, "Pairs file: id,mode,original,generated (.csv or .jsonl)");
  eval->add_option("--out", eval_out, "Output directory")->required();
  eval->add_option("--x-axis-cap", x_axis_cap, "Scatter plot x-axis cap recorded as metadata");
  add_embed_flags(eval, eval_embed);

  RunFlags chat_flags;
  auto* chat = app.add_subcommand("chat", "Interactive session; /trace shows the last trace, /quit exits");
  add_run_flags(chat, chat_flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_index_build(lexicon_path, out_path, build_embed, embedding_text, params, out);
    if (*rewrite) {
      if (input_path.empty() && text_arg.empty() && user_arg.empty())
        throw Error(ErrorKind::kInvalidArgument, "pass --text, --user or --input");
      return cmd_rewrite(rewrite_flags, text_arg, user_arg, input_path, rewrite_out, out, err);
    }
    if (*eval) return cmd_eval(traces_path, pairs_path, eval_out, eval_embed, x_axis_cap, out);
    if (*chat) return cmd_chat(chat_flags, in, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace lexiswitch
