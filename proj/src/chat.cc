#include "lexiswitch/chat.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "lexiswitch/error.h"
#include "lexiswitch/text.h"
#include "lexiswitch/tokenizer.h"

namespace lexiswitch {

std::string ChatProvider::complete(const ChatRequest& request) const {
  std::string reply = text::trim(do_complete(request));
  if (reply.empty()) throw Error(ErrorKind::kEmptyCompletion, "provider returned an empty completion");
  return reply;
}

void ChatProviderConfig::validate() const {
  if (kind == Kind::kRemote && endpoint.empty())
    throw Error(ErrorKind::kInvalidArgument, "remote chat provider requires an endpoint");
  if (kind == Kind::kScripted && !script)
    throw Error(ErrorKind::kInvalidArgument, "scripted chat provider requires a script");
}

// ---------------------------------------------------------------------------

RemoteChatProvider::RemoteChatProvider(ChatProviderConfig config, std::optional<std::string> api_key,
                                       std::shared_ptr<ProviderLimiter> limiter)
    : config_((config.validate(), std::move(config))),
      client_(config_.endpoint, config_.timeout, std::move(api_key), config_.retry,
              std::move(limiter)) {}

std::string RemoteChatProvider::do_complete(const ChatRequest& request) const {
  auto messages = nlohmann::json::array();
  for (const auto& m : request.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
  const nlohmann::json body = {
      {"model", config_.model_name}, {"messages", messages}, {"temperature", request.temperature}};
  const nlohmann::json reply = client_.post("/chat/completions", body);
  try {
    const auto& content = reply.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return {};
    return content.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(200, fmt::format("malformed chat reply: {}", e.what()));
  }
}

// ---------------------------------------------------------------------------

ChatScript ChatScript::from_json(const nlohmann::json& j) {
  ChatScript s;
  auto table = [&](const char* key, std::map<std::string, std::string>& out) {
    if (j.contains(key)) out = j.at(key).get<std::map<std::string, std::string>>();
  };
  try {
    table("base", s.base);
    table("rewrite", s.rewrite);
    table("zero_shot", s.zero_shot);
    s.base_fallback = j.value("base_fallback", s.base_fallback);
    s.rewrite_fallback = j.value("rewrite_fallback", s.rewrite_fallback);
    s.zero_shot_fallback = j.value("zero_shot_fallback", s.zero_shot_fallback);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, fmt::format("invalid chat script: {}", e.what()));
  }
  auto check = [](const std::string& value, std::initializer_list<std::string_view> allowed) {
    for (auto a : allowed)
      if (value == a) return;
    throw Error(ErrorKind::kParse, fmt::format("unknown chat script fallback '{}'", value));
  };
  check(s.base_fallback, {"error", "echo"});
  check(s.rewrite_fallback, {"error", "echo", "substitute"});
  check(s.zero_shot_fallback, {"error", "paraphrase_base"});
  return s;
}

ChatScript ChatScript::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kMissingFile, path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, fmt::format("{}: {}", path.string(), e.what()));
  }
}

ScriptedChatProvider::ScriptedChatProvider(ChatScript script, std::uint64_t seed)
    : script_(std::move(script)), seed_(seed) {}

namespace {

std::string last_user_message(const ChatRequest& request) {
  for (auto it = request.messages.rbegin(); it != request.messages.rend(); ++it)
    if (it->role == "user") return it->content;
  throw Error(ErrorKind::kInvalidArgument, "chat request has no user message");
}

Error unscripted(std::string_view table, std::string_view key) {
  return Error(ErrorKind::kProviderUnavailable,
               fmt::format("scripted provider has no {} reply for '{}'", table, key));
}

}  // namespace

std::string ScriptedChatProvider::do_complete(const ChatRequest& request) const {
  switch (request.purpose) {
    case ChatPurpose::kBaseResponse: {
      const std::string key = last_user_message(request);
      if (auto it = script_.base.find(key); it != script_.base.end()) return it->second;
      if (script_.base_fallback == "echo") return key;
      throw unscripted("base", key);
    }
    case ChatPurpose::kRewrite: {
      const std::string key = request.target.value_or(last_user_message(request));
      if (auto it = script_.rewrite.find(key); it != script_.rewrite.end()) return it->second;
      if (script_.rewrite_fallback == "echo") return key;
      if (script_.rewrite_fallback == "substitute") return substitute_first_cue(key, request.cues);
      throw unscripted("rewrite", key);
    }
    case ChatPurpose::kZeroShot: {
      const std::string key = last_user_message(request);
      if (auto it = script_.zero_shot.find(key); it != script_.zero_shot.end()) return it->second;
      if (script_.zero_shot_fallback == "paraphrase_base") {
        if (request.target) return paraphrase(*request.target, seed_);
        if (auto it = script_.base.find(key); it != script_.base.end())
          return paraphrase(it->second, seed_);
      }
      throw unscripted("zero_shot", key);
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown chat purpose");
}

std::unique_ptr<ChatProvider> make_chat_provider(const ChatProviderConfig& config,
                                                 std::shared_ptr<ProviderLimiter> limiter,
                                                 std::uint64_t seed) {
  config.validate();
  if (config.kind == ChatProviderConfig::Kind::kScripted)
    return std::make_unique<ScriptedChatProvider>(ChatScript::load(*config.script), seed);
  return std::make_unique<RemoteChatProvider>(config, env_value(kApiKeyEnv), std::move(limiter));
}

// ---------------------------------------------------------------------------
// Rule-based rewriters used by the scripted provider.

namespace {

std::string capitalize_like(std::string_view replacement, std::string_view original) {
  std::string out(replacement);
  if (original.empty() || out.empty()) return out;
  const auto first = text::decode(original, 0);
  if (first.valid && text::is_uppercase(first.code_point) && out[0] >= 'a' && out[0] <= 'z')
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

}  // namespace

std::string substitute_first_cue(std::string_view target, std::span<const DictionaryCue> cues) {
  const auto tokens = tokenize(target);
  for (const auto& cue : cues) {
    const auto needle = lowered_tokens(cue.token);
    if (needle.empty() || needle.size() > tokens.size()) continue;
    for (std::size_t i = 0; i + needle.size() <= tokens.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < needle.size() && match; ++j) match = tokens[i + j].lower == needle[j];
      if (!match) continue;
      const std::size_t begin = tokens[i].start;
      const std::size_t end = tokens[i + needle.size() - 1].end;
      std::string out(target.substr(0, begin));
      out += capitalize_like(cue.word, tokens[i].surface);
      out += target.substr(end);
      return out;
    }
  }
  return std::string(target);
}

namespace {

const std::unordered_map<std::string, std::string>& synonyms() {
  static const std::unordered_map<std::string, std::string> table{
      {"hi", "hey"}, {"hello", "hey"}, {"there", "friend"}, {"that", "this"},
      {"sounds", "seems"}, {"really", "truly"}, {"very", "super"}, {"exhausting", "draining"},
      {"tired", "worn out"}, {"meetings", "calls"}, {"meeting", "call"}, {"can", "may"},
      {"wear", "tire"}, {"anyone", "anybody"}, {"down", "out"}, {"and", "plus"},
      {"understandable", "reasonable"}, {"to", "you'd"}, {"feel", "be"},
      {"overwhelmed", "swamped"}, {"good", "great"}, {"great", "awesome"}, {"food", "grub"},
      {"eat", "have"}, {"try", "sample"}, {"must", "should"}, {"you", "ya"}, {"your", "ya"},
      {"i", "me"}, {"we", "us folks"}, {"is", "seems"}, {"are", "seem"}, {"the", "this"},
      {"a", "one"}, {"of", "from"}, {"for", "meant for"}, {"with", "alongside"},
      {"in", "inside"}, {"on", "upon"}, {"it", "this"}, {"my", "our"}, {"time", "moment"},
      {"work", "job"}, {"busy", "swamped"}, {"happy", "glad"}, {"sad", "down"},
      {"angry", "mad"}, {"help", "assist"}, {"make", "create"}, {"get", "grab"},
      {"go", "head"}, {"take", "grab"}, {"see", "check"}, {"know", "realise"},
      {"think", "reckon"}, {"want", "wish"}, {"need", "require"}, {"like", "enjoy"},
      {"just", "simply"}, {"so", "therefore"}, {"but", "though"}, {"if", "whenever"},
      {"not", "never"}, {"all", "every"}, {"some", "several"}, {"more", "extra"},
      {"friends", "mates"}, {"friend", "mate"}, {"money", "cash"}, {"home", "house"},
      {"today", "now"}, {"tomorrow", "next day"}, {"nice", "lovely"}, {"bad", "awful"},
      {"hard", "tough"}, {"easy", "simple"}, {"big", "huge"}, {"small", "tiny"},
      {"quickly", "fast"}, {"should", "ought to"}, {"will", "shall"}, {"be", "become"},
      {"have", "possess"}, {"do", "handle"}, {"this", "that"}, {"what", "which"},
      {"maybe", "perhaps"}, {"also", "too"}, {"well", "fine"}, {"sure", "certain"}};
  return table;
}

constexpr std::array<const char*, 12> kFillers{"stuff",  "matter", "thing",   "deal",
                                               "bit",    "affair", "item",    "piece",
                                               "aspect", "detail", "element", "issue"};

std::uint64_t word_hash(std::string_view w, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (unsigned char c : w) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string replacement_for(const std::string& lower, std::uint64_t seed) {
  if (auto it = synonyms().find(lower); it != synonyms().end()) return it->second;
  const std::uint64_t h = word_hash(lower, seed);
  for (std::size_t i = 0; i < kFillers.size(); ++i) {
    std::string candidate = kFillers[(h + i) % kFillers.size()];
    if (candidate != lower) return candidate;
  }
  return "thing";
}

bool is_clause_end(const Token& t) {
  return t.kind == TokenKind::kPunctuation &&
         (t.lower == "," || t.lower == ";" || t.lower == "." || t.lower == "!" || t.lower == "?");
}

bool attaches_left(const std::string& piece) {
  static const std::unordered_set<std::string> kLeft{",", ".", "!", "?", ";", ":", ")", "]", "-", "%"};
  return kLeft.contains(piece) || piece.starts_with("'") || piece.starts_with("’") ||
         piece == "n't" || piece == "n’t";
}

bool attaches_right(const std::string& piece) { return piece == "(" || piece == "[" || piece == "-"; }

}  // namespace

std::string paraphrase(std::string_view input, std::uint64_t seed) {
  const auto tokens = tokenize(input);
  if (tokens.empty()) return std::string(input);

  std::vector<std::vector<Token>> clauses(1);
  for (const auto& t : tokens) {
    clauses.back().push_back(t);
    if (is_clause_end(t)) clauses.emplace_back();
  }
  if (clauses.back().empty()) clauses.pop_back();
  if (clauses.size() > 1) std::rotate(clauses.begin(), clauses.begin() + 1, clauses.end());

  std::vector<std::string> pieces;
  std::size_t word_index = 0;
  for (const auto& clause : clauses) {
    for (const auto& t : clause) {
      if (t.kind != TokenKind::kWord) {
        pieces.push_back(t.surface);
        continue;
      }
      const std::size_t slot = word_index++ % 5;
      pieces.push_back((slot == 0 || slot == 1 || slot == 3) ? replacement_for(t.lower, seed) : t.lower);
    }
  }
  if (pieces.back() == "," || pieces.back() == ";") pieces.back() = ".";

  std::string out;
  bool capitalize = true;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& piece = pieces[i];
    if (i > 0 && !attaches_left(piece) && !attaches_right(pieces[i - 1])) out.push_back(' ');
    if (capitalize && !piece.empty() && piece[0] >= 'a' && piece[0] <= 'z') {
      out.push_back(static_cast<char>(piece[0] - 'a' + 'A'));
      out.append(piece, 1);
      capitalize = false;
    } else {
      out += piece;
      if (!piece.empty() && std::isalnum(static_cast<unsigned char>(piece[0]))) capitalize = false;
    }
    if (piece == "." || piece == "!" || piece == "?") capitalize = true;
  }
  return out;
}

}  // namespace lexiswitch
