#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "lexiswitch/http_client.h"

#include <cstdlib>
#include <thread>

#include <fmt/format.h>
#include <httplib.h>

#include "lexiswitch/error.h"

namespace lexiswitch {

ProviderLimiter::ProviderLimiter(std::ptrdiff_t max_in_flight)
    : limit_(max_in_flight), slots_(max_in_flight) {
  if (max_in_flight < 1 || max_in_flight > 1024)
    throw Error(ErrorKind::kInvalidArgument, "provider concurrency must be in [1, 1024]");
}

ParsedUrl ParsedUrl::parse(std::string_view url) {
  ParsedUrl out;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos)
    throw Error(ErrorKind::kInvalidArgument, fmt::format("endpoint '{}' lacks a scheme", url));
  out.scheme = std::string(url.substr(0, scheme_end));
  if (out.scheme != "http" && out.scheme != "https")
    throw Error(ErrorKind::kInvalidArgument, fmt::format("unsupported scheme in '{}'", url));
  std::string_view rest = url.substr(scheme_end + 3);
  const auto slash = rest.find('/');
  std::string_view authority = rest.substr(0, slash);
  if (slash != std::string_view::npos) out.base_path = std::string(rest.substr(slash));
  while (!out.base_path.empty() && out.base_path.back() == '/') out.base_path.pop_back();

  out.port = out.scheme == "https" ? 443 : 80;
  if (const auto colon = authority.rfind(':'); colon != std::string_view::npos) {
    const std::string port_text(authority.substr(colon + 1));
    char* end = nullptr;
    const long port = std::strtol(port_text.c_str(), &end, 10);
    if (port_text.empty() || *end != '\0' || port <= 0 || port > 65535)
      throw Error(ErrorKind::kInvalidArgument, fmt::format("bad port in '{}'", url));
    out.port = static_cast<int>(port);
    authority = authority.substr(0, colon);
  }
  if (authority.empty()) throw Error(ErrorKind::kInvalidArgument, fmt::format("no host in '{}'", url));
  out.host = std::string(authority);
  return out;
}

std::string ParsedUrl::origin() const { return fmt::format("{}://{}:{}", scheme, host, port); }

JsonHttpClient::JsonHttpClient(std::string endpoint, std::chrono::milliseconds timeout,
                               std::optional<std::string> bearer_token, RetryPolicy retry,
                               std::shared_ptr<ProviderLimiter> limiter)
    : endpoint_(std::move(endpoint)),
      url_(ParsedUrl::parse(endpoint_)),
      timeout_(timeout),
      bearer_token_(std::move(bearer_token)),
      retry_(retry),
      limiter_(limiter ? std::move(limiter) : std::make_shared<ProviderLimiter>()) {
  if (retry_.max_attempts < 1) retry_.max_attempts = 1;
}

namespace {

bool is_transient_status(int status) { return status == 408 || status == 429 || status >= 500; }

}  // namespace

nlohmann::json JsonHttpClient::post(std::string_view path, const nlohmann::json& body) const {
  const std::string full_path = url_.base_path + std::string(path);
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (bearer_token_) headers.emplace("Authorization", "Bearer " + *bearer_token_);

  auto backoff = retry_.initial_backoff;
  std::string last_failure;
  int last_status = 0;
  std::string last_body;
  for (int attempt = 1; attempt <= retry_.max_attempts; ++attempt) {
    httplib::Result res;
    {
      auto permit = limiter_->acquire();
      httplib::Client client(url_.origin());
      const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
      const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
      client.set_connection_timeout(secs.count(), usecs.count());
      client.set_read_timeout(secs.count(), usecs.count());
      client.set_write_timeout(secs.count(), usecs.count());
      res = client.Post(full_path, headers, payload, "application/json");
    }

    if (!res) {
      last_status = 0;
      last_failure = httplib::to_string(res.error());
    } else if (res->status >= 200 && res->status < 300) {
      try {
        return nlohmann::json::parse(res->body);
      } catch (const nlohmann::json::parse_error& e) {
        throw ProviderError(res->status, fmt::format("invalid JSON reply: {}", e.what()));
      }
    } else if (!is_transient_status(res->status)) {
      throw ProviderError(res->status, res->body);
    } else {
      last_status = res->status;
      last_body = res->body;
    }

    if (attempt < retry_.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff = std::chrono::milliseconds(
          static_cast<std::chrono::milliseconds::rep>(backoff.count() * retry_.multiplier));
    }
  }
  if (last_status != 0) throw ProviderError(last_status, last_body);
  throw Error(ErrorKind::kProviderUnavailable,
              fmt::format("{}{}: {} after {} attempts", endpoint_, path, last_failure,
                          retry_.max_attempts));
}

std::optional<std::string> env_value(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace lexiswitch
