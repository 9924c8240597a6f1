#pragma once

// Stage glue shared by the CLI: record formats for scored candidates and
// rankings, candidate assembly from queue output, and the end-to-end run.

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "sftc/backend.hpp"
#include "sftc/chunking.hpp"
#include "sftc/config.hpp"
#include "sftc/corpus.hpp"
#include "sftc/errors.hpp"
#include "sftc/metrics.hpp"
#include "sftc/queue.hpp"
#include "sftc/ranking.hpp"
#include "sftc/stats.hpp"

namespace sftc {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Files

inline std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write to " + path.string() + " failed");
}

inline std::vector<Conversation> read_corpus_file(const fs::path& path, bool strict,
                                                  std::vector<LineDiagnostic>* diagnostics = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read corpus " + path.string());
  auto res = parse_corpus(in, ParseOptions{strict});
  if (diagnostics) *diagnostics = res.diagnostics;
  return std::move(res.conversations);
}

inline std::string corpus_text(std::span<const Conversation> convs) {
  std::ostringstream os;
  write_corpus(os, convs);
  return os.str();
}

// ---------------------------------------------------------------------------
// Scored records

struct ScoredRecord {
  std::string conversation_id;
  std::string split;
  std::string translator_id;
  QualityScore quality;
  std::optional<double> rm;
};

inline nlohmann::ordered_json to_json(const ScoredRecord& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["conversation_id"] = r.conversation_id;
  j["translator_id"] = r.translator_id;
  j["lr"] = r.quality.lr;
  j["scr"] = r.quality.scr;
  j["tokens"] = r.quality.tokens;
  j["turns"] = r.quality.turns;
  j["split"] = r.split;
  if (r.rm) j["rm"] = *r.rm;
  return j;
}

inline ScoredRecord scored_record_from_json(const nlohmann::ordered_json& j) {
  try {
    ScoredRecord r;
    r.conversation_id = j.at("conversation_id").get<std::string>();
    r.translator_id = j.at("translator_id").get<std::string>();
    r.quality.lr = j.at("lr").get<double>();
    r.quality.scr = j.at("scr").get<double>();
    r.quality.tokens = j.at("tokens").get<std::size_t>();
    r.quality.turns = j.at("turns").get<std::size_t>();
    if (auto it = j.find("split"); it != j.end()) r.split = it->get<std::string>();
    if (auto it = j.find("rm"); it != j.end() && !it->is_null()) r.rm = it->get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed scored record: ") + e.what());
  }
}

inline std::vector<ScoredRecord> read_scored(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scored file " + path.string());
  std::vector<ScoredRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(scored_record_from_json(nlohmann::ordered_json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

template <typename Range>
std::string jsonl(const Range& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json to_json(const RankedCandidateSet& set) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["conversation_id"] = set.conversation_id;
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < set.entries.size(); ++i) {
    const auto& e = set.entries[i];
    nlohmann::ordered_json row = {{"rank", i + 1},
                                  {"translator_id", e.translator_id},
                                  {"combined_score", e.combined_score},
                                  {"lr", e.quality.lr},
                                  {"scr", e.quality.scr}};
    row["rm"] = e.rm ? nlohmann::ordered_json(*e.rm) : nlohmann::ordered_json(nullptr);
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  if (!set.warnings.empty()) j["warnings"] = set.warnings;
  return j;
}

// Groups records by conversation (first-seen order) and ranks each group.
inline std::vector<RankedCandidateSet> rank_records(const std::vector<ScoredRecord>& records,
                                                    const CombineWeights& weights) {
  const auto groups = group_by_conversation(std::span<const ScoredRecord>(records),
                                            [](const ScoredRecord& r) -> const std::string& { return r.conversation_id; });
  std::vector<RankedCandidateSet> out;
  for (const auto& g : groups) {
    std::vector<ScoredCandidate> scored;
    std::set<std::string> seen;
    for (const auto& r : g) {
      if (!seen.insert(r.translator_id).second) {
        throw ValidationError("translator '" + r.translator_id + "' scored twice for '" + r.conversation_id + "'");
      }
      scored.push_back({r.translator_id, r.quality, r.rm});
    }
    out.push_back(rank_scored(g.front().conversation_id, scored, weights));
  }
  return out;
}

inline std::string winners_jsonl(const std::vector<RankedCandidateSet>& ranked) {
  std::string out;
  for (const auto& r : ranked) {
    nlohmann::ordered_json j = {{"conversation_id", r.conversation_id}, {"translator_id", r.winner().translator_id}};
    out += j.dump() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Candidates

// Candidate files are corpora whose lines carry a "translator_id" field; when
// absent, the id comes from the file name (candidates_<id>.jsonl or <id>.jsonl).
inline std::vector<Candidate> read_candidates(const fs::path& path, bool strict) {
  auto convs = read_corpus_file(path, strict);
  std::string fallback = path.stem().string();
  if (fallback.rfind("candidates_", 0) == 0) fallback = fallback.substr(11);
  std::vector<Candidate> out;
  for (auto& c : convs) {
    std::string tid = fallback;
    if (auto it = c.extra.find("translator_id"); it != c.extra.end() && it->is_string()) {
      tid = it->get<std::string>();
    }
    out.push_back({c.id, tid, std::move(c)});
  }
  return out;
}

inline Conversation candidate_line(const Candidate& c) {
  Conversation conv = c.conversation;
  conv.extra["translator_id"] = c.translator_id;
  return conv;
}

// Rebuilds conversations from translated units, restoring split and extra
// fields from the source. Output follows source order.
inline std::vector<Conversation> assemble(const std::vector<Conversation>& sources,
                                          const std::vector<TranslatedUnit>& units) {
  std::map<std::string, std::vector<TranslatedUnit>> by_id;
  for (const auto& u : units) by_id[u.unit.conversation_id].push_back(u);
  std::vector<Conversation> out;
  for (const auto& src : sources) {
    auto it = by_id.find(src.id);
    if (it == by_id.end()) throw IncompleteError("no translated units for conversation '" + src.id + "'");
    auto c = reconstruct(it->second);
    c.split = src.split;
    c.extra = src.extra;
    out.push_back(std::move(c));
    by_id.erase(it);
  }
  if (!by_id.empty()) {
    throw ConsistencyError("translated units for unknown conversation '" + by_id.begin()->first + "'");
  }
  return out;
}

// System-role units copied through untranslated.
inline std::vector<TranslatedUnit> passthrough_units(const std::vector<TranslationUnit>& units) {
  std::vector<TranslatedUnit> out;
  for (const auto& u : units) {
    if (u.role == Role::kSystem) out.push_back({u, u.source_text, "passthrough"});
  }
  return out;
}

inline std::vector<TranslationUnit> translatable_units(const std::vector<TranslationUnit>& units, bool skip_system) {
  if (!skip_system) return units;
  std::vector<TranslationUnit> out;
  for (const auto& u : units) {
    if (u.role != Role::kSystem) out.push_back(u);
  }
  return out;
}

inline std::vector<TranslationUnit> decompose_corpus(const std::vector<Conversation>& convs, const Tokenizer& tokenizer,
                                                     const ChunkPolicy& policy) {
  std::vector<TranslationUnit> units;
  for (const auto& c : convs) {
    auto u = decompose(c, plan_conversation(c, tokenizer, policy));
    units.insert(units.end(), std::make_move_iterator(u.begin()), std::make_move_iterator(u.end()));
  }
  return units;
}

inline std::unique_ptr<RewardScorer> make_reward_scorer(const PipelineConfig& cfg) {
  if (!cfg.reward_url.empty()) return std::make_unique<HttpRewardScorer>(cfg.reward_url);
  if (!cfg.reward_command.empty()) return std::make_unique<CommandRewardScorer>(cfg.reward_command);
  return nullptr;
}

// Scores every candidate against its source. Candidates for unknown ids are
// rejected; sources without candidates are skipped.
inline std::vector<ScoredRecord> score_candidates(const std::vector<Conversation>& sources,
                                                  const std::vector<Candidate>& candidates, const MetricParams& params,
                                                  const Tokenizer& tokenizer, RewardScorer* scorer,
                                                  std::vector<std::string>* warnings = nullptr) {
  std::map<std::string, const Conversation*> src;
  for (const auto& s : sources) src[s.id] = &s;
  std::vector<ScoredRecord> out;
  for (const auto& c : candidates) {
    auto it = src.find(c.conversation_id);
    if (it == src.end()) throw ValidationError("candidate for unknown conversation '" + c.conversation_id + "'");
    ScoredRecord r{c.conversation_id, it->second->split, c.translator_id, score_example(*it->second, c, params, tokenizer),
                   std::nullopt};
    if (scorer) {
      try {
        const double v = scorer->score(*it->second, c.conversation);
        if (!(v >= 0.0 && v <= 1.0)) throw BackendError("score " + std::to_string(v) + " outside [0, 1]");
        r.rm = v;
      } catch (const std::exception& e) {
        if (warnings) warnings->push_back("reward scorer failed for '" + c.conversation_id + "' / " + c.translator_id + ": " + e.what());
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Per-split statistics over one record per conversation.
inline std::vector<SplitStats> split_stats(const std::vector<ScoredRecord>& records) {
  std::map<std::string, std::vector<QualityScore>> by_split;
  for (const auto& r : records) by_split[r.split].push_back(r.quality);
  std::vector<SplitStats> out;
  for (const auto& [split, scores] : by_split) out.push_back(aggregate_split(scores, split));
  return out;
}

inline std::string render_stats_report(const std::vector<ScoredRecord>& records, const ReportHeader& header,
                                       ReportFormat format) {
  const auto stats = split_stats(records);
  std::optional<ConfigSummary> summary;
  if (!stats.empty()) summary = summarize_config(stats);
  return emit_report(stats, header, format, summary);
}

// ---------------------------------------------------------------------------
// Translation through the queue

struct TranslateOptions {
  std::size_t workers = 1;
  std::function<void(const std::string&)> log;
};

// Enqueues the units for one backend, drains the queue with in-process
// workers and returns the completed units (plus system passthrough).
inline std::vector<TranslatedUnit> translate_with_backend(const PipelineConfig& cfg, const BackendConfig& backend,
                                                          const std::vector<TranslationUnit>& units,
                                                          const TranslateOptions& opts = {}) {
  const fs::path qdir = (cfg.queue_dir.empty() ? fs::path("queue") : cfg.queue_dir) / backend.id;
  WorkQueue queue(qdir);
  const auto todo = translatable_units(units, cfg.skip_system);
  if (!todo.empty()) queue.enqueue(todo, backend.id, cfg.batch_size);

  const auto chunk_tok = Tokenizer::load(cfg.chunking_tokenizer);
  WorkerOptions wopts;
  wopts.ttl = static_cast<Millis>(cfg.ttl_seconds) * 1000;
  wopts.max_attempts = cfg.max_attempts;
  wopts.log = opts.log;
  std::vector<std::thread> pool;
  std::vector<std::string> errors(std::max<std::size_t>(1, opts.workers));
  for (std::size_t w = 0; w < errors.size(); ++w) {
    pool.emplace_back([&, w] {
      try {
        WorkQueue q(qdir);
        TranslatorBackend b(backend, chunk_tok);
        if (opts.log) b.set_log(opts.log);
        worker_loop(q, b, "pipeline-" + backend.id + "-" + std::to_string(w), wopts);
      } catch (const std::exception& e) {
        errors[w] = e.what();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (!e.empty()) throw BackendError("worker for '" + backend.id + "' stopped: " + e);
  }
  const auto st = queue.status();
  if (st.failed > 0) {
    throw BackendError("backend '" + backend.id + "': " + std::to_string(st.failed) + " task(s) failed; see " +
                       (qdir / "failed").string());
  }
  auto done = queue.collect();
  // The queue directory may hold results of earlier runs; keep only this run's units.
  std::set<UnitKey> wanted;
  for (const auto& u : todo) wanted.insert(u.key());
  std::vector<TranslatedUnit> out;
  for (auto& t : done) {
    if (wanted.erase(t.unit.key())) out.push_back(std::move(t));
  }
  if (!wanted.empty()) throw IncompleteError("backend '" + backend.id + "' left " + std::to_string(wanted.size()) + " unit(s) untranslated");
  if (cfg.skip_system) {
    auto pass = passthrough_units(units);
    out.insert(out.end(), pass.begin(), pass.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// End to end

struct PipelineResult {
  std::size_t conversations = 0;
  std::size_t units = 0;
  std::size_t kept = 0;
  std::size_t rejected = 0;
  std::vector<std::string> warnings;
  std::vector<fs::path> outputs;
};

// Writes into out_dir:
//   units.jsonl, candidates_<backend>.jsonl, scored.jsonl, ranking.jsonl,
//   winners.jsonl, winners_scored.jsonl, ranked.jsonl (winning translation per
//   conversation), filtered.jsonl, rejected.jsonl, report.md
inline PipelineResult run_pipeline(const PipelineConfig& cfg, const std::vector<Conversation>& sources,
                                   const fs::path& out_dir, const TranslateOptions& opts = {}) {
  if (cfg.backends.empty()) throw ConfigError("pipeline needs at least one backend");
  if (sources.empty()) throw ValidationError("pipeline input corpus is empty");
  PipelineResult res;
  res.conversations = sources.size();
  auto emit = [&](const std::string& name, const std::string& content) {
    write_text_file(out_dir / name, content);
    res.outputs.push_back(out_dir / name);
  };

  const auto chunk_tok = Tokenizer::load(cfg.chunking_tokenizer);
  const auto analysis_tok = Tokenizer::load(cfg.analysis_tokenizer);
  const auto units = decompose_corpus(sources, chunk_tok, cfg.chunk);
  res.units = units.size();
  emit("units.jsonl", jsonl(units));

  std::vector<Candidate> candidates;
  for (const auto& backend : cfg.backends) {
    const auto translated = translate_with_backend(cfg, backend, units, opts);
    const auto convs = assemble(sources, translated);
    std::vector<Conversation> lines;
    for (const auto& c : convs) {
      candidates.push_back({c.id, backend.id, c});
      lines.push_back(candidate_line(candidates.back()));
    }
    emit("candidates_" + backend.id + ".jsonl", corpus_text(lines));
  }

  const auto scorer = make_reward_scorer(cfg);
  auto scored = score_candidates(sources, candidates, cfg.metrics, analysis_tok, scorer.get(), &res.warnings);
  emit("scored.jsonl", jsonl(scored));
  const auto ranked = rank_records(scored, cfg.weights);
  emit("ranking.jsonl", jsonl(ranked));
  emit("winners.jsonl", winners_jsonl(ranked));

  std::map<std::pair<std::string, std::string>, const Candidate*> by_key;
  for (const auto& c : candidates) by_key[{c.conversation_id, c.translator_id}] = &c;
  std::map<std::pair<std::string, std::string>, const ScoredRecord*> score_of;
  for (const auto& r : scored) score_of[{r.conversation_id, r.translator_id}] = &r;
  std::vector<Conversation> winners;
  std::vector<ScoredRecord> winner_scores;
  std::vector<QualityScore> winner_quality;
  for (const auto& r : ranked) {
    const std::pair<std::string, std::string> key{r.conversation_id, r.winner().translator_id};
    winners.push_back(by_key.at(key)->conversation);
    winner_scores.push_back(*score_of.at(key));
    winner_quality.push_back(winner_scores.back().quality);
  }
  emit("winners_scored.jsonl", jsonl(winner_scores));
  emit("ranked.jsonl", corpus_text(winners));

  const auto filtered = apply_filter(winners, winner_quality, cfg.filter);
  std::vector<Conversation> kept;
  for (auto i : filtered.kept) kept.push_back(winners[i]);
  std::string rejected;
  for (const auto& r : filtered.rejected) {
    nlohmann::ordered_json j = {{"conversation_id", winners[r.index].id}, {"reasons", r.reasons}};
    rejected += j.dump() + "\n";
  }
  res.kept = kept.size();
  res.rejected = filtered.rejected.size();
  emit("filtered.jsonl", corpus_text(kept));
  emit("rejected.jsonl", rejected);

  ReportHeader header{analysis_tok.name(), cfg.metrics.alpha, cfg.metrics.tau, std::string(unicode::kVersion)};
  emit("report.md", render_stats_report(winner_scores, header, ReportFormat::kMarkdown));
  return res;
}

}  // namespace sftc
