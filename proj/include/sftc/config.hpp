#pragma once

// Pipeline configuration read from an INI file:
//
//   [tokenizer]        chunking = builtin | <path to tokenizer.json>
//                      analysis = builtin | <path>
//   [chunking]         target_tokens, window_tokens, hard_cap_tokens, prompt_reserve
//   [metrics]          alpha, tau
//   [ranking]          weight_lr, weight_scr, weight_rm, reward_url, reward_command
//   [filter]           min_lr, min_scr, reject_cjk
//   [filter.<split>]   min_lr, min_scr        (per-split override)
//   [sample]           ratios = code:1,science:1,math:2; total; allow_shortfall; category_field
//   [queue]            dir, batch_size, ttl_seconds, max_attempts
//   [backend.<id>]     kind, endpoint, model, api_key_env, max_input_tokens, temperature,
//                      prompt_template, target_language, table, max_attempts, backoff_ms
//   [run]              seed, strict, skip_system
//
// Relative paths are resolved against the config file's directory.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "sftc/backend.hpp"
#include "sftc/chunking.hpp"
#include "sftc/errors.hpp"
#include "sftc/metrics.hpp"
#include "sftc/ranking.hpp"
#include "sftc/stats.hpp"
#include "sftc/tokenize.hpp"

namespace sftc {

inline constexpr double kMinAlpha = 1.0;
inline constexpr double kMaxAlpha = 1.5;

inline void validate_alpha(double alpha) {
  if (!(alpha >= kMinAlpha && alpha <= kMaxAlpha)) {
    throw ConfigError("alpha must lie in [1.0, 1.5], got " + std::to_string(alpha));
  }
}

struct PipelineConfig {
  TokenizerSpec chunking_tokenizer;
  TokenizerSpec analysis_tokenizer;
  ChunkPolicy chunk;
  std::size_t prompt_reserve = 6;
  MetricParams metrics;
  CombineWeights weights;
  std::string reward_url;
  std::string reward_command;
  FilterPolicy filter;
  StrataPolicy strata{{{"code", 1}, {"science", 1}, {"math", 2}}, 0, false};
  std::string category_field = "category";
  std::filesystem::path queue_dir;  // empty: chosen per subcommand
  std::size_t batch_size = 16;
  std::size_t ttl_seconds = 30 * 60;
  std::size_t max_attempts = 3;
  std::vector<BackendConfig> backends;
  std::uint64_t seed = 0;
  bool strict = true;
  bool skip_system = false;
  std::string source_text;  // raw file contents, hashed into run manifests

  void validate() const {
    chunk.validate();
    validate_alpha(metrics.alpha);
    if (!(metrics.tau > 0.0 && metrics.tau <= 1.0)) throw ConfigError("tau must lie in (0, 1]");
    try {
      weights.validate();
      strata.validate();
    } catch (const ArgumentError& e) {
      throw ConfigError(e.what());
    }
    filter.validate();
    if (batch_size == 0) throw ConfigError("queue batch_size must be positive");
    if (ttl_seconds == 0) throw ConfigError("queue ttl_seconds must be positive");
    if (max_attempts == 0) throw ConfigError("queue max_attempts must be positive");
    for (const auto& b : backends) {
      b.validate();
      if (b.max_input_tokens < chunk.hard_cap_tokens + prompt_reserve) {
        throw ConfigError("backend '" + b.id + "': max_input_tokens " + std::to_string(b.max_input_tokens) +
                          " is below hard_cap_tokens + prompt_reserve (" +
                          std::to_string(chunk.hard_cap_tokens + prompt_reserve) + ")");
      }
    }
  }
};

// "code:1,science:1,math:2", order preserved.
inline std::vector<std::pair<std::string, std::size_t>> parse_ratios(const std::string& text) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("ratio '" + item + "' is not of the form name:weight");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const auto name = trim(item.substr(0, colon));
    const auto weight = trim(item.substr(colon + 1));
    std::size_t used = 0;
    long long w = 0;
    try {
      w = std::stoll(weight, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (name.empty() || used != weight.size() || w <= 0) throw ConfigError("bad ratio '" + item + "'");
    out.emplace_back(name, static_cast<std::size_t>(w));
  }
  if (out.empty()) throw ConfigError("ratios must not be empty");
  return out;
}

namespace detail {

inline std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

inline TokenizerSpec tokenizer_spec(const std::string& value, const std::filesystem::path& base) {
  if (value.empty() || value == "builtin") return {};
  TokenizerSpec spec;
  spec.kind = TokenizerKind::kExternalVocab;
  spec.vocab_path = resolve(base, value);
  spec.name = spec.vocab_path->filename().string();
  if (!std::filesystem::exists(*spec.vocab_path)) {
    throw ConfigError("tokenizer file " + spec.vocab_path->string() + " does not exist");
  }
  return spec;
}

// The ptree default-value getters swallow conversion failures; parse by hand.
template <typename T>
T get(const boost::property_tree::ptree& tree, const std::string& key, T fallback) {
  const auto raw = tree.get_optional<std::string>(boost::property_tree::ptree::path_type(key, '/'));
  if (!raw) return fallback;
  if constexpr (std::is_same_v<T, std::string>) {
    return *raw;
  } else {
    std::istringstream in(*raw);
    T v{};
    if (raw->find('-') != std::string::npos && std::is_unsigned_v<T>) in.setstate(std::ios::failbit);
    if (!(in >> v) || !(in >> std::ws).eof()) {
      throw ConfigError("config key '" + key + "' has invalid value '" + *raw + "'");
    }
    return v;
  }
}

inline bool get_bool(const boost::property_tree::ptree& tree, const std::string& key, bool fallback) {
  const auto v = get<std::string>(tree, key, fallback ? "true" : "false");
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config key '" + key + "' must be a boolean, got '" + v + "'");
}

}  // namespace detail

inline PipelineConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = ".") {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  using detail::get;
  PipelineConfig c;
  c.source_text = text;
  c.chunking_tokenizer = detail::tokenizer_spec(get<std::string>(tree, "tokenizer/chunking", "builtin"), base_dir);
  c.analysis_tokenizer = detail::tokenizer_spec(get<std::string>(tree, "tokenizer/analysis", "builtin"), base_dir);
  c.chunk.target_tokens = get(tree, "chunking/target_tokens", c.chunk.target_tokens);
  c.chunk.window_tokens = get(tree, "chunking/window_tokens", c.chunk.window_tokens);
  c.chunk.hard_cap_tokens = get(tree, "chunking/hard_cap_tokens", c.chunk.hard_cap_tokens);
  c.prompt_reserve = get(tree, "chunking/prompt_reserve", c.prompt_reserve);
  c.metrics.alpha = get(tree, "metrics/alpha", c.metrics.alpha);
  c.metrics.tau = get(tree, "metrics/tau", c.metrics.tau);
  c.weights.lr = get(tree, "ranking/weight_lr", c.weights.lr);
  c.weights.scr = get(tree, "ranking/weight_scr", c.weights.scr);
  c.weights.rm = get(tree, "ranking/weight_rm", c.weights.rm);
  c.reward_url = get<std::string>(tree, "ranking/reward_url", "");
  c.reward_command = get<std::string>(tree, "ranking/reward_command", "");
  c.filter.thresholds.min_lr = get(tree, "filter/min_lr", c.filter.thresholds.min_lr);
  c.filter.thresholds.min_scr = get(tree, "filter/min_scr", c.filter.thresholds.min_scr);
  c.filter.reject_cjk = detail::get_bool(tree, "filter/reject_cjk", c.filter.reject_cjk);
  if (auto r = get<std::string>(tree, "sample/ratios", ""); !r.empty()) c.strata.ratios = parse_ratios(r);
  c.strata.total = get(tree, "sample/total", c.strata.total);
  c.strata.allow_shortfall = detail::get_bool(tree, "sample/allow_shortfall", c.strata.allow_shortfall);
  c.category_field = get<std::string>(tree, "sample/category_field", c.category_field);
  if (auto q = get<std::string>(tree, "queue/dir", ""); !q.empty()) c.queue_dir = detail::resolve(base_dir, q);
  c.batch_size = get(tree, "queue/batch_size", c.batch_size);
  c.ttl_seconds = get(tree, "queue/ttl_seconds", c.ttl_seconds);
  c.max_attempts = get(tree, "queue/max_attempts", c.max_attempts);
  c.seed = get<std::uint64_t>(tree, "run/seed", c.seed);
  c.strict = detail::get_bool(tree, "run/strict", c.strict);
  c.skip_system = detail::get_bool(tree, "run/skip_system", c.skip_system);

  try {
    for (const auto& [section, body] : tree) {
      const std::string prefix = "filter.";
      const std::string bprefix = "backend.";
      if (section.rfind(prefix, 0) == 0) {
        Thresholds t = c.filter.thresholds;
        t.min_lr = detail::get<double>(body, "min_lr", t.min_lr);
        t.min_scr = detail::get<double>(body, "min_scr", t.min_scr);
        c.filter.per_split_overrides[section.substr(prefix.size())] = t;
      } else if (section.rfind(bprefix, 0) == 0) {
        BackendConfig b;
        b.id = section.substr(bprefix.size());
        const auto kind = detail::get<std::string>(body, "kind", "mock-identity");
        const auto parsed = parse_backend_kind(kind);
        if (!parsed) throw ConfigError("backend '" + b.id + "': unknown kind '" + kind + "'");
        b.kind = *parsed;
        b.endpoint = detail::get<std::string>(body, "endpoint", "");
        b.model = detail::get<std::string>(body, "model", "");
        b.api_key_env = detail::get<std::string>(body, "api_key_env", "");
        b.max_input_tokens = detail::get<std::size_t>(body, "max_input_tokens", b.max_input_tokens);
        b.temperature = detail::get<double>(body, "temperature", b.temperature);
        b.prompt_template = detail::get<std::string>(body, "prompt_template", b.prompt_template);
        // INI values cannot hold raw newlines.
        for (std::size_t at; (at = b.prompt_template.find("\\n")) != std::string::npos;) {
          b.prompt_template.replace(at, 2, "\n");
        }
        b.target_language = detail::get<std::string>(body, "target_language", b.target_language);
        b.max_attempts = detail::get<int>(body, "max_attempts", b.max_attempts);
        b.backoff = std::chrono::milliseconds(detail::get<long>(body, "backoff_ms", static_cast<long>(b.backoff.count())));
        if (auto table = body.get_optional<std::string>("table")) {
          b.table = load_translation_table(detail::resolve(base_dir, *table));
        }
        c.backends.push_back(std::move(b));
      }
    }
  } catch (const pt::ptree_error& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  c.validate();
  return c;
}

inline PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

}  // namespace sftc
