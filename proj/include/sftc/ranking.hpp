#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sftc/corpus.hpp"
#include "sftc/errors.hpp"
#include "sftc/metrics.hpp"
#include "sftc/tokenize.hpp"

namespace sftc {

// ---------------------------------------------------------------------------
// Rank aggregation over metric columns

struct MetricRow {
  std::string system_id;
  std::map<std::string, double> values;
};

struct MetricTable {
  std::vector<MetricRow> rows;
};

using RankMap = std::map<std::string, double>;

// Rank 1 is best. Exact ties share the mean of the positions they occupy.
inline RankMap column_ranks(const MetricTable& table, const std::string& metric, bool higher_is_better) {
  std::vector<std::pair<double, const std::string*>> col;
  col.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    auto it = row.values.find(metric);
    if (it == row.values.end()) throw ValidationError("system '" + row.system_id + "' has no value for " + metric);
    if (std::isnan(it->second)) throw ValidationError("system '" + row.system_id + "' has NaN for " + metric);
    col.emplace_back(it->second, &row.system_id);
  }
  std::sort(col.begin(), col.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return higher_is_better ? a.first > b.first : a.first < b.first;
    return *a.second < *b.second;
  });
  RankMap ranks;
  for (std::size_t i = 0; i < col.size();) {
    std::size_t j = i;
    while (j < col.size() && col[j].first == col[i].first) ++j;
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[*col[k].second] = shared;
    i = j;
  }
  return ranks;
}

inline RankMap average_rank(const MetricTable& table, const std::vector<std::string>& metrics,
                            const std::vector<bool>& higher_is_better) {
  if (metrics.empty()) throw ArgumentError("average_rank needs at least one metric");
  if (metrics.size() != higher_is_better.size()) throw ArgumentError("one direction per metric is required");
  RankMap sum;
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    for (const auto& [id, r] : column_ranks(table, metrics[m], higher_is_better[m])) sum[id] += r;
  }
  for (auto& [id, total] : sum) total /= static_cast<double>(metrics.size());
  return sum;
}

// ---------------------------------------------------------------------------
// Candidate scoring

struct CombineWeights {
  double lr = 1.0;
  double scr = 1.0;
  double rm = 2.0;

  void validate() const {
    if (lr < 0 || scr < 0 || rm < 0) throw ArgumentError("combine weights must be non-negative");
    if (lr + scr + rm <= 0) throw ArgumentError("combine weights must not all be zero");
  }
};

// Weighted mean of the signals. Without a reward score its weight is spread
// over LR and SCR in proportion to theirs (equally when both are zero).
inline double combine_scores(double lr, double scr, std::optional<double> rm, const CombineWeights& w = {}) {
  w.validate();
  if (rm) return (w.lr * lr + w.scr * scr + w.rm * *rm) / (w.lr + w.scr + w.rm);
  if (w.lr + w.scr <= 0) return (lr + scr) / 2.0;
  return (w.lr * lr + w.scr * scr) / (w.lr + w.scr);
}

// External judgement of one candidate against its source, in [0, 1].
// Implementations throw on failure.
class RewardScorer {
 public:
  virtual ~RewardScorer() = default;
  virtual double score(const Conversation& source, const Conversation& candidate) = 0;
};

struct ScoredCandidate {
  std::string translator_id;
  QualityScore quality;
  std::optional<double> rm;
};

struct RankedEntry {
  std::string translator_id;
  double combined_score = 0.0;
  QualityScore quality;
  std::optional<double> rm;
};

struct RankedCandidateSet {
  std::string conversation_id;
  std::vector<RankedEntry> entries;  // best first
  std::vector<std::string> warnings;

  const RankedEntry& winner() const { return entries.front(); }
};

inline RankedCandidateSet rank_scored(const std::string& conversation_id, const std::vector<ScoredCandidate>& scored,
                                      const CombineWeights& weights = {}) {
  if (scored.empty()) throw ArgumentError("no candidates to rank for '" + conversation_id + "'");
  RankedCandidateSet out{conversation_id, {}, {}};
  for (const auto& s : scored) {
    out.entries.push_back({s.translator_id, combine_scores(s.quality.lr, s.quality.scr, s.rm, weights), s.quality, s.rm});
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.combined_score != b.combined_score) return a.combined_score > b.combined_score;
    return a.translator_id < b.translator_id;
  });
  return out;
}

inline RankedCandidateSet rank_candidates(const Conversation& source, const std::vector<Candidate>& candidates,
                                          RewardScorer* scorer, const CombineWeights& weights,
                                          const MetricParams& params, const Tokenizer& tokenizer) {
  if (candidates.empty()) throw ArgumentError("no candidates to rank for '" + source.id + "'");
  std::vector<ScoredCandidate> scored;
  std::vector<std::string> warnings;
  for (const auto& c : candidates) {
    ScoredCandidate s{c.translator_id, score_example(source, c, params, tokenizer), std::nullopt};
    if (scorer) {
      try {
        const double v = scorer->score(source, c.conversation);
        if (!(v >= 0.0 && v <= 1.0)) throw BackendError("score " + std::to_string(v) + " outside [0, 1]");
        s.rm = v;
      } catch (const std::exception& e) {
        warnings.push_back("reward scorer failed for '" + source.id + "' / " + c.translator_id + ": " + e.what());
      }
    }
    scored.push_back(std::move(s));
  }
  auto ranked = rank_scored(source.id, scored, weights);
  ranked.warnings = std::move(warnings);
  return ranked;
}

// ---------------------------------------------------------------------------
// Bradley-Terry

struct PreferenceRecord {
  std::string winner;
  std::string loser;
  std::size_t count = 1;
};

// P(i beats j) = exp(s_i) / (exp(s_i) + exp(s_j)).
inline double bt_prob(double s_i, double s_j) {
  const double d = s_i - s_j;
  if (d >= 0) return 1.0 / (1.0 + std::exp(-d));
  const double e = std::exp(d);
  return e / (1.0 + e);
}

struct BtOptions {
  double epsilon = 0.5;  // pseudo-wins added to every ordered pair
  double tol = 1e-10;
  std::size_t max_iters = 10000;
};

struct BtScores {
  std::map<std::string, double> scores;  // log-strengths, summing to 0
  bool converged = false;
  std::size_t iterations = 0;
  // Smoothed log-likelihood before the first update and after each one.
  std::vector<double> log_likelihood;
};

namespace detail {

inline bool strongly_connected(const std::vector<std::vector<double>>& wins) {
  const std::size_t n = wins.size();
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        const double w = forward ? wins[i][j] : wins[j][i];
        if (w > 0 && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(true) && reaches_all(false);
}

inline double bt_log_likelihood(const std::vector<std::vector<double>>& wins, const std::vector<double>& s) {
  double ll = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i != j && wins[i][j] > 0) ll += wins[i][j] * std::log(bt_prob(s[i], s[j]));
    }
  }
  return ll;
}

}  // namespace detail

// Maximum-likelihood fit by minorization-maximization (closed-form updates),
// which never decreases the likelihood.
inline BtScores bt_fit(const std::vector<PreferenceRecord>& prefs, const BtOptions& opts = {}) {
  if (opts.epsilon < 0) throw ArgumentError("epsilon must be non-negative");
  std::set<std::string> ids;
  for (const auto& p : prefs) {
    if (p.winner == p.loser) throw ValidationError("preference record with winner == loser ('" + p.winner + "')");
    ids.insert(p.winner);
    ids.insert(p.loser);
  }
  if (ids.size() < 2) throw ArgumentError("bt_fit needs at least two systems");
  const std::vector<std::string> names(ids.begin(), ids.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  const std::size_t n = names.size();

  std::vector<std::vector<double>> wins(n, std::vector<double>(n, 0.0));
  for (const auto& p : prefs) wins[index[p.winner]][index[p.loser]] += static_cast<double>(p.count);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) wins[i][j] += opts.epsilon;
    }
  }
  if (!detail::strongly_connected(wins)) {
    throw FitError("preference graph is not strongly connected; the maximum-likelihood scores diverge "
                   "(use a positive epsilon)");
  }

  std::vector<double> s(n, 0.0);
  BtScores out;
  out.log_likelihood.push_back(detail::bt_log_likelihood(wins, s));
  for (std::size_t iter = 0; iter < opts.max_iters; ++iter) {
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      double total_wins = 0.0;
      double denom = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        total_wins += wins[i][j];
        // (w_ij + w_ji) / (p_i + p_j), scaled by p_i to stay in log space.
        denom += (wins[i][j] + wins[j][i]) * bt_prob(s[i], s[j]);
      }
      next[i] = s[i] + std::log(total_wins) - std::log(denom);
    }
    const double mean = std::accumulate(next.begin(), next.end(), 0.0) / static_cast<double>(n);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] -= mean;
      delta = std::max(delta, std::abs(next[i] - s[i]));
    }
    s = std::move(next);
    out.iterations = iter + 1;
    out.log_likelihood.push_back(detail::bt_log_likelihood(wins, s));
    if (delta < opts.tol) {
      out.converged = true;
      break;
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.scores[names[i]] = s[i];
  return out;
}

}  // namespace sftc
