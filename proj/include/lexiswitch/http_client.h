#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <semaphore>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

namespace lexiswitch {

// Bounds the number of in-flight provider requests; shared by the embedding and
// chat clients of one run.
class ProviderLimiter {
 public:
  static constexpr std::ptrdiff_t kDefaultLimit = 4;

  explicit ProviderLimiter(std::ptrdiff_t max_in_flight = kDefaultLimit);

  class Permit {
   public:
    explicit Permit(ProviderLimiter& limiter) : limiter_(&limiter) { limiter_->slots_.acquire(); }
    ~Permit() {
      if (limiter_) limiter_->slots_.release();
    }
    Permit(Permit&& other) noexcept : limiter_(std::exchange(other.limiter_, nullptr)) {}
    Permit(const Permit&) = delete;
    Permit& operator=(const Permit&) = delete;
    Permit& operator=(Permit&&) = delete;

   private:
    ProviderLimiter* limiter_;
  };

  Permit acquire() { return Permit(*this); }
  std::ptrdiff_t limit() const noexcept { return limit_; }

 private:
  std::ptrdiff_t limit_;
  std::counting_semaphore<1024> slots_;
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{250};
  double multiplier = 2.0;
};

struct ParsedUrl {
  std::string scheme;  // "http" or "https"
  std::string host;
  int port = 0;
  std::string base_path;  // without trailing slash, may be empty

  static ParsedUrl parse(std::string_view url);
  std::string origin() const;
};

// POSTs JSON to `{endpoint}{path}` and returns the parsed JSON reply. Transient
// failures (connection errors, 408, 429, 5xx) are retried with exponential
// backoff; exhausting the attempts on a connection error raises
// ProviderUnavailable, on an HTTP status ProviderError.
class JsonHttpClient {
 public:
  JsonHttpClient(std::string endpoint, std::chrono::milliseconds timeout,
                 std::optional<std::string> bearer_token, RetryPolicy retry,
                 std::shared_ptr<ProviderLimiter> limiter);

  nlohmann::json post(std::string_view path, const nlohmann::json& body) const;

  const std::string& endpoint() const noexcept { return endpoint_; }

 private:
  std::string endpoint_;
  ParsedUrl url_;
  std::chrono::milliseconds timeout_;
  std::optional<std::string> bearer_token_;
  RetryPolicy retry_;
  std::shared_ptr<ProviderLimiter> limiter_;
};

inline constexpr const char* kApiKeyEnv = "LEXISWITCH_API_KEY";
inline constexpr const char* kBaseUrlEnv = "LEXISWITCH_BASE_URL";

std::optional<std::string> env_value(const char* name);

}  // namespace lexiswitch
