#pragma once

// Translator backends and reward-scorer clients.
//
// The HTTP translator speaks a chat-completions style protocol:
//   POST <endpoint> {"model", "messages": [{"role": "user", "content": prompt}], "temperature"}
//   -> {"choices": [{"message": {"content": "..."}}]}
// The reward scorer endpoint takes POST {"source", "candidate"} and answers
// {"score": x} with x in [0, 1].

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <thread>

#include <unistd.h>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "sftc/corpus.hpp"
#include "sftc/errors.hpp"
#include "sftc/ranking.hpp"
#include "sftc/tokenize.hpp"

namespace sftc {

enum class BackendKind { kHttpEndpoint, kMockIdentity, kMockTable };

inline std::optional<BackendKind> parse_backend_kind(std::string_view s) {
  if (s == "http-endpoint" || s == "http") return BackendKind::kHttpEndpoint;
  if (s == "mock-identity") return BackendKind::kMockIdentity;
  if (s == "mock-table") return BackendKind::kMockTable;
  return std::nullopt;
}

inline constexpr std::string_view kDefaultPromptTemplate = "Translate into {target_language}:\n{source}";

struct BackendConfig {
  std::string id = "mock-identity";
  BackendKind kind = BackendKind::kMockIdentity;
  std::string endpoint;
  std::string model;
  std::string api_key_env;  // name of the environment variable holding the key
  std::size_t max_input_tokens = 512;
  double temperature = 0.2;
  std::string prompt_template{kDefaultPromptTemplate};
  std::string target_language = "Arabic";
  std::map<std::string, std::string> table;  // mock-table lookups
  int max_attempts = 4;                      // HTTP attempts per chunk
  std::chrono::milliseconds backoff{500};    // doubled after every failed attempt
  std::chrono::milliseconds mock_delay{0};   // artificial latency for mocks

  void validate() const {
    if (max_input_tokens == 0) throw ConfigError("backend '" + id + "': max_input_tokens must be positive");
    if (temperature < 0.0 || temperature > 0.7) throw ConfigError("backend '" + id + "': temperature outside [0, 0.7]");
    if (max_attempts < 1) throw ConfigError("backend '" + id + "': max_attempts must be at least 1");
    if (kind == BackendKind::kHttpEndpoint && endpoint.empty()) {
      throw ConfigError("backend '" + id + "': http-endpoint needs an endpoint URL");
    }
  }
};

inline std::string render_prompt(std::string_view tmpl, std::string_view source, std::string_view target_language) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl.compare(i, 8, "{source}") == 0) {
      out += source;
      i += 8;
    } else if (tmpl.compare(i, 17, "{target_language}") == 0) {
      out += target_language;
      i += 17;
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

inline std::map<std::string, std::string> load_translation_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read translation table " + path.string());
  try {
    return nlohmann::json::parse(in).get<std::map<std::string, std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("translation table " + path.string() + " must be a JSON object of strings: " + e.what());
  }
}

namespace detail {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

inline SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("malformed URL '" + url + "'");
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

struct HttpOutcome {
  int status = 0;  // 0 when the connection failed
  std::string body;
  std::string error;
};

inline HttpOutcome post_json(const std::string& url, const std::string& body, const httplib::Headers& headers,
                             std::chrono::seconds timeout) {
  const auto parts = split_url(url);
  httplib::Client client(parts.origin);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  auto res = client.Post(parts.path, headers, body, "application/json");
  if (!res) return {0, {}, httplib::to_string(res.error())};
  return {res->status, res->body, {}};
}

}  // namespace detail

// One backend per worker; not shared across threads.
class TranslatorBackend {
 public:
  explicit TranslatorBackend(BackendConfig cfg, Tokenizer tokenizer = {})
      : cfg_(std::move(cfg)), tokenizer_(std::move(tokenizer)) {
    cfg_.validate();
  }

  const BackendConfig& config() const { return cfg_; }
  const std::string& id() const { return cfg_.id; }

  void set_log(std::function<void(const std::string&)> sink) { log_ = std::move(sink); }

  // HTTP attempts made by the most recent translate() call.
  int last_attempts() const { return last_attempts_; }

  std::string translate(const TranslationUnit& unit) {
    const auto prompt = render_prompt(cfg_.prompt_template, unit.source_text, cfg_.target_language);
    const auto used = tokenizer_.count_tokens(prompt);
    if (used > cfg_.max_input_tokens) {
      throw ArgumentError("unit " + unit.key().str() + " needs " + std::to_string(used) + " input tokens; backend '" +
                          cfg_.id + "' accepts " + std::to_string(cfg_.max_input_tokens) +
                          " (chunk budget not respected)");
    }
    last_attempts_ = 0;
    if (cfg_.mock_delay.count() > 0) std::this_thread::sleep_for(cfg_.mock_delay);
    switch (cfg_.kind) {
      case BackendKind::kMockIdentity:
        return unit.source_text;
      case BackendKind::kMockTable: {
        auto it = cfg_.table.find(unit.source_text);
        if (it == cfg_.table.end()) throw BackendError("mock table of '" + cfg_.id + "' has no entry for unit " + unit.key().str());
        return it->second;
      }
      case BackendKind::kHttpEndpoint:
        return translate_http(prompt);
    }
    throw BackendError("unknown backend kind");
  }

 private:
  std::string translate_http(const std::string& prompt) {
    nlohmann::json body = {
        {"model", cfg_.model},
        {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
        {"temperature", cfg_.temperature},
    };
    httplib::Headers headers;
    if (!cfg_.api_key_env.empty()) {
      if (const char* key = std::getenv(cfg_.api_key_env.c_str())) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
      }
    }
    auto delay = cfg_.backoff;
    std::string last_error;
    for (int attempt = 1; attempt <= cfg_.max_attempts; ++attempt) {
      last_attempts_ = attempt;
      const auto res = detail::post_json(cfg_.endpoint, body.dump(), headers, std::chrono::seconds(300));
      if (res.status == 200) {
        try {
          const auto doc = nlohmann::json::parse(res.body);
          return doc.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
          throw BackendError("backend '" + cfg_.id + "' returned an unexpected body: " + e.what());
        }
      }
      last_error = res.status == 0 ? res.error : "HTTP " + std::to_string(res.status);
      const bool retryable = res.status == 0 || res.status == 429 || res.status >= 500;
      if (log_) log_("backend '" + cfg_.id + "' attempt " + std::to_string(attempt) + " failed: " + last_error);
      if (!retryable) break;
      if (attempt < cfg_.max_attempts) {
        std::this_thread::sleep_for(delay);
        delay *= 2;
      }
    }
    throw BackendError("backend '" + cfg_.id + "' failed after " + std::to_string(last_attempts_) +
                       " attempt(s): " + last_error);
  }

  BackendConfig cfg_;
  Tokenizer tokenizer_;
  std::function<void(const std::string&)> log_;
  int last_attempts_ = 0;
};

inline std::string translate_chunk(TranslatorBackend& backend, const TranslationUnit& unit) {
  return backend.translate(unit);
}

// ---------------------------------------------------------------------------
// Reward scorers

class HttpRewardScorer : public RewardScorer {
 public:
  explicit HttpRewardScorer(std::string url, std::chrono::seconds timeout = std::chrono::seconds(60))
      : url_(std::move(url)), timeout_(timeout) {}

  double score(const Conversation& source, const Conversation& candidate) override {
    const nlohmann::json body = {{"source", to_json(source)}, {"candidate", to_json(candidate)}};
    const auto res = detail::post_json(url_, body.dump(), {}, timeout_);
    if (res.status != 200) {
      throw BackendError("reward scorer " + url_ + ": " + (res.status ? "HTTP " + std::to_string(res.status) : res.error));
    }
    try {
      return nlohmann::json::parse(res.body).at("score").get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw BackendError("reward scorer " + url_ + " returned an unexpected body: " + e.what());
    }
  }

 private:
  std::string url_;
  std::chrono::seconds timeout_;
};

// Runs `<command> <request.json>` and reads a single number from stdout.
class CommandRewardScorer : public RewardScorer {
 public:
  explicit CommandRewardScorer(std::string command) : command_(std::move(command)) {}

  double score(const Conversation& source, const Conversation& candidate) override {
    const auto path = std::filesystem::temp_directory_path() /
                      ("sftc-rm-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++) + ".json");
    {
      std::ofstream out(path);
      out << nlohmann::json{{"source", to_json(source)}, {"candidate", to_json(candidate)}}.dump();
    }
    const std::string cmd = command_ + " '" + path.string() + "'";
    std::string output;
    if (FILE* pipe = ::popen(cmd.c_str(), "r")) {
      char buf[256];
      while (std::fgets(buf, sizeof buf, pipe)) output += buf;
      const int rc = ::pclose(pipe);
      std::filesystem::remove(path);
      if (rc != 0) throw BackendError("reward command exited with status " + std::to_string(rc));
    } else {
      std::filesystem::remove(path);
      throw BackendError("cannot run reward command '" + command_ + "'");
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(output, &used);
      return v;
    } catch (const std::exception&) {
      throw BackendError("reward command printed '" + output + "', expected a number");
    }
  }

 private:
  std::string command_;
  std::size_t counter_ = 0;
};

}  // namespace sftc
