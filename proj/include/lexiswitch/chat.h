#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lexiswitch/dictionary_cue.h"
#include "lexiswitch/http_client.h"

namespace lexiswitch {

struct ChatMessage {
  std::string role;
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

// Which pipeline step issued a request. Remote providers ignore it; the
// scripted provider uses it to pick a reply table.
enum class ChatPurpose { kBaseResponse, kRewrite, kZeroShot };

struct ChatRequest {
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  ChatPurpose purpose = ChatPurpose::kBaseResponse;
  // Rewrite requests: the TARGET text and the cues in the prompt. Zero-shot
  // requests: the Standard English reply the result is compared against.
  std::optional<std::string> target;
  std::vector<DictionaryCue> cues;
};

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;

  // Returns the completion text. Throws EmptyCompletion on a blank reply.
  std::string complete(const ChatRequest& request) const;

 protected:
  virtual std::string do_complete(const ChatRequest& request) const = 0;
};

struct ChatProviderConfig {
  enum class Kind { kRemote, kScripted };

  Kind kind = Kind::kScripted;
  std::string endpoint;
  std::string model_name = "gpt-4o-mini";
  double temperature = 0.0;
  std::chrono::milliseconds timeout{60000};
  std::optional<std::filesystem::path> script;
  RetryPolicy retry;

  void validate() const;
};

// Wire-compatible client for POST {endpoint}/chat/completions.
class RemoteChatProvider final : public ChatProvider {
 public:
  RemoteChatProvider(ChatProviderConfig config, std::optional<std::string> api_key,
                     std::shared_ptr<ProviderLimiter> limiter);

 protected:
  std::string do_complete(const ChatRequest& request) const override;

 private:
  ChatProviderConfig config_;
  JsonHttpClient client_;
};

// Reply tables for the scripted provider. Lookups use the last user message
// for base and zero-shot requests and the TARGET text for rewrites. When a key
// is missing the fallback policy decides:
//   base:      "error" | "echo" (repeat the user message)
//   rewrite:   "error" | "echo" (return TARGET unchanged) | "substitute"
//              (replace the first cue token found in TARGET by its word, once)
//   zero_shot: "error" | "paraphrase_base" (paraphrase the request's reference
//              reply, else the scripted base reply for the same user message)
struct ChatScript {
  std::map<std::string, std::string> base;
  std::map<std::string, std::string> rewrite;
  std::map<std::string, std::string> zero_shot;
  std::string base_fallback = "error";
  std::string rewrite_fallback = "echo";
  std::string zero_shot_fallback = "error";

  static ChatScript from_json(const nlohmann::json& j);
  static ChatScript load(const std::filesystem::path& path);
};

class ScriptedChatProvider final : public ChatProvider {
 public:
  explicit ScriptedChatProvider(ChatScript script, std::uint64_t seed = 42);

 protected:
  std::string do_complete(const ChatRequest& request) const override;

 private:
  ChatScript script_;
  std::uint64_t seed_;
};

std::unique_ptr<ChatProvider> make_chat_provider(const ChatProviderConfig& config,
                                                 std::shared_ptr<ProviderLimiter> limiter = nullptr,
                                                 std::uint64_t seed = 42);

// Replaces the first occurrence (by token order) of the first cue token present
// in `target` with the cue word; returns `target` unchanged if none occurs.
std::string substitute_first_cue(std::string_view target, std::span<const DictionaryCue> cues);

// Deterministic stand-in for free paraphrasing: moves the first clause to the
// end and rewrites at least 60% of word tokens.
std::string paraphrase(std::string_view text, std::uint64_t seed);

}  // namespace lexiswitch
