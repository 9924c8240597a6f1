#pragma once

// Per-split aggregation, configuration summaries, filtering, stratified
// sampling and report rendering.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sftc/corpus.hpp"
#include "sftc/errors.hpp"
#include "sftc/metrics.hpp"

namespace sftc {

// ceil(p * n)-th smallest value, p given in percent.
template <typename T>
T nearest_rank(std::vector<T> values, unsigned percent) {
  if (values.empty()) throw ArgumentError("percentile of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const std::size_t rank = std::max<std::size_t>(1, (percent * n + 99) / 100);
  return values[rank - 1];
}

// Lower median: the floor((n+1)/2)-th smallest value.
template <typename T>
T lower_median(std::vector<T> values) {
  if (values.empty()) throw ArgumentError("median of an empty sample");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

struct SplitStats {
  std::string split;
  std::size_t num_examples = 0;
  double mean_lr = 0.0;
  double mean_scr = 0.0;
  double mean_turns = 0.0;
  double mean_total_tokens = 0.0;
  double p95_tokens = 0.0;
  // Per-example values kept for global percentiles and medians.
  std::vector<double> tokens;
  std::vector<double> turns;
};

inline SplitStats aggregate_split(std::span<const QualityScore> scores, const std::string& split) {
  if (scores.empty()) throw ArgumentError("cannot aggregate empty split '" + split + "'");
  SplitStats s;
  s.split = split;
  s.num_examples = scores.size();
  double lr = 0, scr = 0, turns = 0, tokens = 0;
  for (const auto& q : scores) {
    lr += q.lr;
    scr += q.scr;
    turns += static_cast<double>(q.turns);
    tokens += static_cast<double>(q.tokens);
    s.tokens.push_back(static_cast<double>(q.tokens));
    s.turns.push_back(static_cast<double>(q.turns));
  }
  const auto n = static_cast<double>(scores.size());
  s.mean_lr = lr / n;
  s.mean_scr = scr / n;
  s.mean_turns = turns / n;
  s.mean_total_tokens = tokens / n;
  s.p95_tokens = nearest_rank(s.tokens, 95);
  return s;
}

struct ConfigSummary {
  std::size_t total_examples = 0;
  double total_tokens = 0.0;
  double mean_lr = 0.0;
  double mean_scr = 0.0;
  double median_turns = 0.0;
  double mean_tokens = 0.0;
  double p95_tokens = 0.0;
};

inline ConfigSummary summarize_config(std::span<const SplitStats> splits) {
  if (splits.empty()) throw ArgumentError("no splits to summarize");
  ConfigSummary c;
  std::vector<double> tokens, turns;
  for (const auto& s : splits) {
    const auto n = static_cast<double>(s.num_examples);
    c.total_examples += s.num_examples;
    c.total_tokens += n * s.mean_total_tokens;
    c.mean_lr += n * s.mean_lr;
    c.mean_scr += n * s.mean_scr;
    // Splits built by hand carry no per-example values; their means stand in.
    if (s.tokens.size() == s.num_examples) {
      tokens.insert(tokens.end(), s.tokens.begin(), s.tokens.end());
    } else {
      tokens.insert(tokens.end(), s.num_examples, s.mean_total_tokens);
    }
    if (s.turns.size() == s.num_examples) {
      turns.insert(turns.end(), s.turns.begin(), s.turns.end());
    } else {
      turns.insert(turns.end(), s.num_examples, s.mean_turns);
    }
  }
  if (c.total_examples == 0) throw ArgumentError("splits hold no examples");
  const auto n = static_cast<double>(c.total_examples);
  c.mean_lr /= n;
  c.mean_scr /= n;
  c.mean_tokens = c.total_tokens / n;
  c.median_turns = lower_median(turns);
  c.p95_tokens = nearest_rank(tokens, 95);
  return c;
}

// ---------------------------------------------------------------------------
// Filtering

struct Thresholds {
  double min_lr = 0.3;
  double min_scr = 0.3;
};

struct FilterPolicy {
  Thresholds thresholds;
  bool reject_cjk = true;
  std::map<std::string, Thresholds> per_split_overrides;

  void validate() const {
    auto check = [](const Thresholds& t, const std::string& where) {
      if (t.min_lr < 0 || t.min_lr > 1 || t.min_scr < 0 || t.min_scr > 1) {
        throw ConfigError("filter thresholds for " + where + " must lie in [0, 1]");
      }
    };
    check(thresholds, "all splits");
    for (const auto& [split, t] : per_split_overrides) check(t, "split '" + split + "'");
  }
};

struct Rejection {
  std::size_t index = 0;
  std::vector<std::string> reasons;  // low_lr, low_scr, cjk
};

struct FilterOutcome {
  std::vector<std::size_t> kept;
  std::vector<Rejection> rejected;
};

inline FilterOutcome apply_filter(std::span<const Conversation> examples, std::span<const QualityScore> scores,
                                  const FilterPolicy& policy) {
  policy.validate();
  if (examples.size() != scores.size()) throw ArgumentError("every example needs a score");
  FilterOutcome out;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    auto it = policy.per_split_overrides.find(examples[i].split);
    const auto& t = it == policy.per_split_overrides.end() ? policy.thresholds : it->second;
    Rejection r{i, {}};
    if (scores[i].lr < t.min_lr) r.reasons.emplace_back("low_lr");
    if (scores[i].scr < t.min_scr) r.reasons.emplace_back("low_scr");
    if (policy.reject_cjk && contains_cjk(examples[i])) r.reasons.emplace_back("cjk");
    if (r.reasons.empty()) {
      out.kept.push_back(i);
    } else {
      out.rejected.push_back(std::move(r));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stratified sampling

struct StrataPolicy {
  std::vector<std::pair<std::string, std::size_t>> ratios{{"code", 1}, {"science", 1}, {"math", 2}};
  std::size_t total = 0;
  bool allow_shortfall = false;

  void validate() const {
    if (ratios.empty()) throw ArgumentError("strata ratios must not be empty");
    for (const auto& [cat, r] : ratios) {
      if (r == 0) throw ArgumentError("ratio for '" + cat + "' must be positive");
    }
  }
};

namespace detail {

// Largest-remainder apportionment of `total` seats; ties go to the earlier category.
inline std::vector<std::size_t> largest_remainder(const std::vector<std::size_t>& weights, std::size_t total) {
  const auto wsum = std::accumulate(weights.begin(), weights.end(), std::size_t{0});
  std::vector<std::size_t> seats(weights.size(), 0);
  if (wsum == 0) return seats;
  std::vector<std::pair<std::size_t, std::size_t>> rem;  // (remainder numerator, index)
  std::size_t given = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto num = static_cast<unsigned __int128>(total) * weights[i];
    seats[i] = static_cast<std::size_t>(num / wsum);
    rem.emplace_back(static_cast<std::size_t>(num % wsum), i);
    given += seats[i];
  }
  std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; given < total; ++k, ++given) ++seats[rem[k % rem.size()].second];
  return seats;
}

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling keeps draws uniform and identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace detail

// Per-category targets. Without shortfall every category must hold its
// share; with shortfall, exhausted categories are capped and the remainder is
// re-apportioned among the others.
inline std::map<std::string, std::size_t> allocate_strata(const StrataPolicy& policy,
                                                          const std::map<std::string, std::size_t>& available) {
  policy.validate();
  const std::size_t k = policy.ratios.size();
  std::vector<std::size_t> avail(k), alloc(k, 0);
  std::vector<bool> capped(k, false);
  std::size_t total_avail = 0;
  for (std::size_t i = 0; i < k; ++i) {
    auto it = available.find(policy.ratios[i].first);
    avail[i] = it == available.end() ? 0 : it->second;
    total_avail += avail[i];
  }
  if (!policy.allow_shortfall) {
    std::vector<std::size_t> w;
    for (const auto& r : policy.ratios) w.push_back(r.second);
    alloc = detail::largest_remainder(w, policy.total);
    for (std::size_t i = 0; i < k; ++i) {
      if (alloc[i] > avail[i]) {
        throw ValidationError("category '" + policy.ratios[i].first + "' needs " + std::to_string(alloc[i]) +
                              " examples but only " + std::to_string(avail[i]) + " are available");
      }
    }
  } else {
    std::size_t remaining = std::min(policy.total, total_avail);
    for (;;) {
      std::vector<std::size_t> w(k, 0);
      for (std::size_t i = 0; i < k; ++i) w[i] = capped[i] ? 0 : policy.ratios[i].second;
      const auto seats = detail::largest_remainder(w, remaining);
      bool changed = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (!capped[i] && seats[i] >= avail[i]) {
          capped[i] = true;
          alloc[i] = avail[i];
          remaining -= avail[i];
          changed = true;
        }
      }
      if (!changed) {
        for (std::size_t i = 0; i < k; ++i) {
          if (!capped[i]) alloc[i] = seats[i];
        }
        break;
      }
    }
  }
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < k; ++i) out[policy.ratios[i].first] = alloc[i];
  return out;
}

// Returns selected indices into `categories`, in input order.
inline std::vector<std::size_t> stratified_sample(std::span<const std::string> categories, const StrataPolicy& policy,
                                                  std::uint64_t seed) {
  std::map<std::string, std::vector<std::size_t>> pools;
  for (std::size_t i = 0; i < categories.size(); ++i) pools[categories[i]].push_back(i);
  std::map<std::string, std::size_t> available;
  for (const auto& [cat, idx] : pools) available[cat] = idx.size();
  const auto targets = allocate_strata(policy, available);

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> chosen;
  for (const auto& [cat, weight] : policy.ratios) {
    auto& pool = pools[cat];
    const auto want = targets.at(cat);
    // Partial Fisher-Yates over the category's pool.
    for (std::size_t i = 0; i < want; ++i) {
      const auto j = i + detail::bounded(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
      chosen.push_back(pool[i]);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// ---------------------------------------------------------------------------
// Reports

enum class ReportFormat { kMarkdown, kCsv, kJson };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "markdown" || s == "md") return ReportFormat::kMarkdown;
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "json") return ReportFormat::kJson;
  return std::nullopt;
}

struct ReportHeader {
  std::string tokenizer = "builtin";
  double alpha = kDefaultAlpha;
  double tau = kDefaultTau;
  std::string unicode_version{unicode::kVersion};
};

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols{"Split",      "Num Examples",      "Mean LR",   "Mean SCR",
                                             "Mean Turns", "Mean Total Tokens", "P95 Tokens"};
  return cols;
}

namespace detail {

inline std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline std::vector<std::string> report_cells(const SplitStats& s) {
  return {s.split,
          std::to_string(s.num_examples),
          fixed(s.mean_lr, 4),
          fixed(s.mean_scr, 4),
          fixed(s.mean_turns, 2),
          fixed(s.mean_total_tokens, 2),
          fixed(s.p95_tokens, 2)};
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string emit_report(std::vector<SplitStats> stats, const ReportHeader& header, ReportFormat format,
                               const std::optional<ConfigSummary>& summary = std::nullopt) {
  std::sort(stats.begin(), stats.end(), [](const SplitStats& a, const SplitStats& b) { return a.split < b.split; });
  const auto& cols = report_columns();
  std::ostringstream os;
  switch (format) {
    case ReportFormat::kMarkdown: {
      os << "# Per-split statistics\n\n";
      os << "tokenizer: " << header.tokenizer << " | alpha: " << header.alpha << " | tau: " << header.tau
         << " | unicode: " << header.unicode_version << "\n\n";
      os << "|";
      for (const auto& c : cols) os << " " << c << " |";
      os << "\n|---|";
      for (std::size_t i = 1; i < cols.size(); ++i) os << "---:|";
      os << "\n";
      for (const auto& s : stats) {
        os << "|";
        for (const auto& cell : detail::report_cells(s)) os << " " << cell << " |";
        os << "\n";
      }
      if (summary) {
        os << "\n## Configuration summary\n\n";
        os << "| Total Examples | Total Tokens | Mean LR | Mean SCR | Median Turns | Mean Tokens | P95 Tokens |\n";
        os << "|---:|---:|---:|---:|---:|---:|---:|\n";
        os << "| " << summary->total_examples << " | " << detail::fixed(summary->total_tokens, 0) << " | "
           << detail::fixed(summary->mean_lr, 4) << " | " << detail::fixed(summary->mean_scr, 4) << " | "
           << detail::fixed(summary->median_turns, 2) << " | " << detail::fixed(summary->mean_tokens, 2) << " | "
           << detail::fixed(summary->p95_tokens, 2) << " |\n";
      }
      break;
    }
    case ReportFormat::kCsv: {
      os << "# tokenizer=" << header.tokenizer << "\n# alpha=" << header.alpha << "\n# tau=" << header.tau
         << "\n# unicode=" << header.unicode_version << "\n";
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
      os << "\n";
      for (const auto& s : stats) {
        const auto cells = detail::report_cells(s);
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << detail::csv_escape(cells[i]);
        os << "\n";
      }
      break;
    }
    case ReportFormat::kJson: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::object();
      doc["tokenizer"] = header.tokenizer;
      doc["alpha"] = header.alpha;
      doc["tau"] = header.tau;
      doc["unicode_version"] = header.unicode_version;
      doc["columns"] = cols;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& s : stats) {
        const auto cells = detail::report_cells(s);
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        row[cols[0]] = cells[0];
        row[cols[1]] = s.num_examples;
        for (std::size_t i = 2; i < cols.size(); ++i) row[cols[i]] = std::stod(cells[i]);
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      if (summary) {
        doc["summary"] = {{"total_examples", summary->total_examples}, {"total_tokens", summary->total_tokens},
                          {"mean_lr", summary->mean_lr},               {"mean_scr", summary->mean_scr},
                          {"median_turns", summary->median_turns},     {"mean_tokens", summary->mean_tokens},
                          {"p95_tokens", summary->p95_tokens}};
      }
      os << doc.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace sftc
