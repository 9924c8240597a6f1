#pragma once

// The sftcurate command line. run_cli() is the whole program minus main(),
// so tests can drive it in-process.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 I/O, configuration or
// backend failure. Every invocation appends one JSON line to the run manifest.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sftc/sftc.hpp"

namespace sftc {

inline constexpr std::string_view kToolVersion = "0.1.0";

namespace cli {

namespace fs = std::filesystem;

struct Globals {
  std::string config_path;
  std::string manifest_path = "sftc-manifest.jsonl";
  std::optional<double> alpha;
  std::optional<double> tau;
  std::optional<std::size_t> target_tokens;
  std::optional<std::size_t> window_tokens;
  std::optional<std::size_t> hard_cap_tokens;
  std::optional<std::uint64_t> seed;
  bool lenient = false;
};

struct RunContext {
  PipelineConfig cfg;
  bool config_loaded = false;
  std::vector<fs::path> inputs;
  std::vector<fs::path> outputs;
  std::ostream* out = &std::cout;
  std::ostream* err = &std::cerr;

  void log(const std::string& m) const { *err << m << "\n"; }
};

inline void apply_overrides(const Globals& g, RunContext& ctx) {
  if (!g.config_path.empty()) {
    ctx.cfg = load_config(g.config_path);
    ctx.config_loaded = true;
  }
  auto& c = ctx.cfg;
  if (g.alpha) c.metrics.alpha = *g.alpha;
  if (g.tau) c.metrics.tau = *g.tau;
  if (g.target_tokens) c.chunk.target_tokens = *g.target_tokens;
  if (g.window_tokens) c.chunk.window_tokens = *g.window_tokens;
  if (g.hard_cap_tokens) c.chunk.hard_cap_tokens = *g.hard_cap_tokens;
  if (g.seed) c.seed = *g.seed;
  if (g.lenient) c.strict = false;
  c.validate();
}

// Backends named on the command line: ids from the config, or a mock kind.
inline std::vector<BackendConfig> select_backends(const PipelineConfig& cfg, const std::vector<std::string>& names) {
  if (names.empty()) {
    if (cfg.backends.empty()) throw ConfigError("no backend configured; pass --backend or add a [backend.<id>] section");
    return cfg.backends;
  }
  std::vector<BackendConfig> out;
  for (const auto& n : names) {
    auto it = std::find_if(cfg.backends.begin(), cfg.backends.end(), [&](const BackendConfig& b) { return b.id == n; });
    if (it != cfg.backends.end()) {
      out.push_back(*it);
      continue;
    }
    if (n == "mock-identity") {
      BackendConfig b;
      b.id = n;
      b.kind = BackendKind::kMockIdentity;
      out.push_back(b);
      continue;
    }
    throw ConfigError("unknown backend '" + n + "'");
  }
  return out;
}

inline nlohmann::ordered_json hash_paths(const std::vector<fs::path>& paths) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_regular_file(p, ec)) {
      j[p.string()] = sha256_file(p);
    } else if (fs::is_directory(p, ec)) {
      j[p.string()] = "directory";
    } else {
      j[p.string()] = nullptr;
    }
  }
  return j;
}

inline void append_manifest(const Globals& g, const RunContext& ctx, const std::string& subcommand,
                            const std::vector<std::string>& argv, int exit_code) {
  if (g.manifest_path.empty()) return;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  m["tool"] = "sftcurate";
  m["subcommand"] = subcommand;
  m["argv"] = argv;
  m["exit_code"] = exit_code;
  m["timestamp_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::system_clock::now().time_since_epoch())
                          .count();
  m["config_path"] = g.config_path.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(g.config_path);
  m["config_sha256"] = sha256_hex(ctx.cfg.source_text);
  m["seed"] = ctx.cfg.seed;
  m["inputs"] = hash_paths(ctx.inputs);
  m["outputs"] = hash_paths(ctx.outputs);
  m["versions"] = {{"sftcurate", kToolVersion},
                   {"unicode", unicode::kVersion},
                   {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
                   {"compiler", __VERSION__}};
  try {
    const fs::path p(g.manifest_path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::app);
    out << m.dump() << "\n";
  } catch (const std::exception& e) {
    *ctx.err << "warning: cannot append run manifest: " << e.what() << "\n";
  }
}

inline void write_output(RunContext& ctx, const fs::path& path, const std::string& content) {
  write_text_file(path, content);
  ctx.outputs.push_back(path);
}

inline std::vector<Conversation> read_input_corpus(RunContext& ctx, const fs::path& path) {
  ctx.inputs.push_back(path);
  std::vector<LineDiagnostic> diags;
  auto convs = read_corpus_file(path, ctx.cfg.strict, &diags);
  if (!diags.empty()) ctx.log("skipped " + std::to_string(diags.size()) + " line(s) of " + path.string() + ":\n" + detail::format_diagnostics(diags));
  return convs;
}

inline std::vector<TranslatedUnit> read_translated_file(RunContext& ctx, const fs::path& path) {
  ctx.inputs.push_back(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return read_translated_units(in);
}

inline fs::path queue_dir_or(const RunContext& ctx, const std::string& flag, const fs::path& fallback) {
  if (!flag.empty()) return flag;
  if (!ctx.cfg.queue_dir.empty()) return ctx.cfg.queue_dir;
  return fallback;
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli;
  CLI::App app{"Curation pipeline for translated SFT corpora: chunk, translate through a file queue, "
               "score, rank, filter, sample and report.",
               "sftcurate"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  Globals g;
  app.add_option("--config", g.config_path, "INI configuration file");
  app.add_option("--manifest", g.manifest_path, "Run manifest to append to (JSON lines; empty disables)");
  app.add_option("--alpha", g.alpha, "Language Ratio sharpness, in [1.0, 1.5]");
  app.add_option("--tau", g.tau, "Script Purity leeway threshold, in (0, 1]");
  app.add_option("--target-tokens", g.target_tokens, "Preferred chunk length in tokens");
  app.add_option("--window-tokens", g.window_tokens, "Boundary search window around the target");
  app.add_option("--hard-cap-tokens", g.hard_cap_tokens, "Maximum chunk length in tokens");
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_flag("--lenient", g.lenient, "Skip malformed corpus lines instead of failing");

  RunContext ctx;
  ctx.out = &out;
  ctx.err = &err;
  std::function<void()> action;

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Split conversations into translation units");
  std::string dec_in, dec_out, dec_tok;
  decompose_cmd->add_option("--input,-i", dec_in, "Source corpus (JSONL)")->required();
  decompose_cmd->add_option("--output,-o", dec_out, "Units file (JSONL)")->required();
  decompose_cmd->add_option("--tokenizer", dec_tok, "builtin or a tokenizer.json path (overrides the config)");
  decompose_cmd->callback([&] {
    action = [&] {
      if (!dec_tok.empty()) ctx.cfg.chunking_tokenizer = detail::tokenizer_spec(dec_tok, ".");
      const auto convs = read_input_corpus(ctx, dec_in);
      const auto units = decompose_corpus(convs, Tokenizer::load(ctx.cfg.chunking_tokenizer), ctx.cfg.chunk);
      write_output(ctx, dec_out, jsonl(units));
      ctx.log("wrote " + std::to_string(units.size()) + " units for " + std::to_string(convs.size()) + " conversations");
    };
  });

  // enqueue
  auto* enqueue_cmd = app.add_subcommand("enqueue", "Batch units into queue tasks for one translator");
  std::string enq_units, enq_queue, enq_translator;
  std::optional<std::size_t> enq_batch;
  bool enq_skip_system = false;
  enqueue_cmd->add_option("--units,-u", enq_units, "Units file from decompose")->required();
  enqueue_cmd->add_option("--queue,-q", enq_queue, "Queue directory");
  enqueue_cmd->add_option("--translator,-t", enq_translator, "Translator id the tasks are for")->required();
  enqueue_cmd->add_option("--batch-size", enq_batch, "Units per task");
  enqueue_cmd->add_flag("--skip-system", enq_skip_system, "Leave system messages untranslated");
  enqueue_cmd->callback([&] {
    action = [&] {
      ctx.inputs.push_back(enq_units);
      std::ifstream in(enq_units, std::ios::binary);
      if (!in) throw IoError("cannot read " + enq_units);
      const auto units = translatable_units(read_units(in), enq_skip_system || ctx.cfg.skip_system);
      WorkQueue q(queue_dir_or(ctx, enq_queue, "queue"));
      const auto tasks = q.enqueue(units, enq_translator, enq_batch.value_or(ctx.cfg.batch_size));
      ctx.outputs.push_back(q.dir());
      *ctx.out << tasks.size() << " task(s)\n";
    };
  });

  // work
  auto* work_cmd = app.add_subcommand("work", "Run one worker until the queue is drained");
  std::string work_queue, work_backend, work_id;
  std::optional<double> work_ttl;
  std::optional<std::size_t> work_attempts;
  work_cmd->add_option("--queue,-q", work_queue, "Queue directory");
  work_cmd->add_option("--backend,-b", work_backend, "Backend id from the config, or mock-identity")->required();
  work_cmd->add_option("--worker-id,-w", work_id, "Unique worker name")->required();
  work_cmd->add_option("--ttl", work_ttl, "Lease length in seconds");
  work_cmd->add_option("--max-attempts", work_attempts, "Attempts before a task moves to failed/");
  work_cmd->callback([&] {
    action = [&] {
      const auto backend = select_backends(ctx.cfg, {work_backend}).front();
      WorkQueue q(queue_dir_or(ctx, work_queue, "queue"));
      TranslatorBackend b(backend, Tokenizer::load(ctx.cfg.chunking_tokenizer));
      b.set_log([&](const std::string& m) { ctx.log(m); });
      WorkerOptions opts;
      opts.ttl = static_cast<Millis>(work_ttl.value_or(static_cast<double>(ctx.cfg.ttl_seconds)) * 1000.0);
      opts.max_attempts = work_attempts.value_or(ctx.cfg.max_attempts);
      opts.log = [&](const std::string& m) { ctx.log(m); };
      const auto n = worker_loop(q, b, work_id, opts);
      ctx.outputs.push_back(q.dir());
      *ctx.out << n << " task(s) completed by " << work_id << "\n";
    };
  });

  // queue-status
  auto* status_cmd = app.add_subcommand("queue-status", "Print task counts as JSON");
  std::string st_queue;
  status_cmd->add_option("--queue,-q", st_queue, "Queue directory");
  status_cmd->callback([&] {
    action = [&] {
      const fs::path dir = queue_dir_or(ctx, st_queue, "queue");
      if (!fs::is_directory(dir)) throw IoError("queue directory " + dir.string() + " does not exist");
      const auto s = WorkQueue(dir).status();
      nlohmann::ordered_json j = {{"pending", s.pending}, {"leased", s.leased}, {"expired", s.expired},
                                  {"done", s.done},       {"failed", s.failed}};
      *ctx.out << j.dump() << "\n";
    };
  });

  // reconstruct
  auto* recon_cmd = app.add_subcommand("reconstruct", "Reassemble conversations from translated units");
  std::string rec_units, rec_queue, rec_source, rec_out;
  bool rec_skip_system = false;
  auto* rec_units_opt = recon_cmd->add_option("--units,-u", rec_units, "Translated units (JSONL)");
  recon_cmd->add_option("--queue,-q", rec_queue, "Collect translated units from this queue instead")->excludes(rec_units_opt);
  recon_cmd->add_option("--source,-s", rec_source, "Source corpus; restores split and extra fields, keeps source order");
  recon_cmd->add_option("--output,-o", rec_out, "Output corpus (JSONL)")->required();
  recon_cmd->add_flag("--skip-system", rec_skip_system, "System messages were not enqueued; copy them from --source");
  recon_cmd->callback([&] {
    action = [&] {
      std::vector<TranslatedUnit> units;
      if (!rec_queue.empty()) {
        units = WorkQueue(rec_queue).collect();
        ctx.inputs.push_back(rec_queue);
      } else if (!rec_units.empty()) {
        units = read_translated_file(ctx, rec_units);
      } else {
        throw ArgumentError("reconstruct needs --units or --queue");
      }
      std::vector<Conversation> convs;
      if (!rec_source.empty()) {
        const auto sources = read_input_corpus(ctx, rec_source);
        if (rec_skip_system || ctx.cfg.skip_system) {
          const auto pass = passthrough_units(
              decompose_corpus(sources, Tokenizer::load(ctx.cfg.chunking_tokenizer), ctx.cfg.chunk));
          units.insert(units.end(), pass.begin(), pass.end());
        }
        convs = assemble(sources, units);
      } else {
        if (rec_skip_system) throw ArgumentError("--skip-system needs --source");
        for (auto& group : group_by_conversation(std::span<const TranslatedUnit>(units),
                                                 [](const TranslatedUnit& t) -> const std::string& {
                                                   return t.unit.conversation_id;
                                                 })) {
          convs.push_back(reconstruct(group));
        }
      }
      write_output(ctx, rec_out, corpus_text(convs));
    };
  });

  // score
  auto* score_cmd = app.add_subcommand("score", "Compute LR, SCR, tokens and turns for candidate translations");
  std::string sc_source, sc_out;
  std::vector<std::string> sc_candidates;
  score_cmd->add_option("--source,-s", sc_source, "Source corpus (JSONL)")->required();
  score_cmd->add_option("--candidates,-c", sc_candidates,
                        "Candidate corpora; translator id from a translator_id field or the file name")
      ->required();
  score_cmd->add_option("--output,-o", sc_out, "Scored records (JSONL)")->required();
  score_cmd->callback([&] {
    action = [&] {
      const auto sources = read_input_corpus(ctx, sc_source);
      std::vector<Candidate> cands;
      for (const auto& p : sc_candidates) {
        ctx.inputs.push_back(p);
        auto c = read_candidates(p, ctx.cfg.strict);
        cands.insert(cands.end(), c.begin(), c.end());
      }
      const auto scorer = make_reward_scorer(ctx.cfg);
      std::vector<std::string> warnings;
      const auto scored = score_candidates(sources, cands, ctx.cfg.metrics, Tokenizer::load(ctx.cfg.analysis_tokenizer),
                                           scorer.get(), &warnings);
      for (const auto& w : warnings) ctx.log("warning: " + w);
      write_output(ctx, sc_out, jsonl(scored));
    };
  });

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "Pick the best candidate per conversation");
  std::string rk_scored, rk_winners, rk_ranking;
  std::optional<double> rk_wlr, rk_wscr, rk_wrm;
  rank_cmd->add_option("--scored,-s", rk_scored, "Scored records from score")->required();
  rank_cmd->add_option("--winners,-o", rk_winners, "Winners (JSONL: conversation_id, translator_id)")->required();
  rank_cmd->add_option("--ranking", rk_ranking, "Full ranking per conversation (JSONL)");
  rank_cmd->add_option("--weight-lr", rk_wlr, "Weight of LR in the combined score");
  rank_cmd->add_option("--weight-scr", rk_wscr, "Weight of SCR in the combined score");
  rank_cmd->add_option("--weight-rm", rk_wrm, "Weight of the reward score");
  rank_cmd->callback([&] {
    action = [&] {
      auto w = ctx.cfg.weights;
      if (rk_wlr) w.lr = *rk_wlr;
      if (rk_wscr) w.scr = *rk_wscr;
      if (rk_wrm) w.rm = *rk_wrm;
      ctx.inputs.push_back(rk_scored);
      const auto ranked = rank_records(read_scored(rk_scored), w);
      write_output(ctx, rk_winners, winners_jsonl(ranked));
      if (!rk_ranking.empty()) write_output(ctx, rk_ranking, jsonl(ranked));
    };
  });

  // bt-fit
  auto* bt_cmd = app.add_subcommand("bt-fit", "Fit Bradley-Terry scores to pairwise preferences");
  std::string bt_in, bt_out;
  BtOptions bt_opts;
  bt_cmd->add_option("--preferences,-p", bt_in, "CSV with columns winner,loser,count")->required();
  bt_cmd->add_option("--output,-o", bt_out, "CSV with columns system,score")->required();
  bt_cmd->add_option("--epsilon", bt_opts.epsilon, "Pseudo-count added to every ordered pair")->capture_default_str();
  bt_cmd->add_option("--tol", bt_opts.tol, "Convergence tolerance on score changes")->capture_default_str();
  bt_cmd->add_option("--max-iters", bt_opts.max_iters, "Iteration limit")->capture_default_str();
  bt_cmd->callback([&] {
    action = [&] {
      ctx.inputs.push_back(bt_in);
      std::ifstream in(bt_in);
      if (!in) throw IoError("cannot read " + bt_in);
      std::vector<PreferenceRecord> prefs;
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
        if (lineno == 1 && cols.size() >= 2 && cols[0] == "winner") continue;
        if (cols.size() < 2 || cols.size() > 3) {
          throw ValidationError(bt_in + ":" + std::to_string(lineno) + ": expected winner,loser[,count]");
        }
        std::size_t count = 1;
        if (cols.size() == 3) {
          std::size_t used = 0;
          try {
            count = std::stoul(cols[2], &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used == 0 || used != cols[2].size()) {
            throw ValidationError(bt_in + ":" + std::to_string(lineno) + ": count '" + cols[2] + "' is not a number");
          }
        }
        prefs.push_back({cols[0], cols[1], count});
      }
      const auto fit = bt_fit(prefs, bt_opts);
      if (!fit.converged) ctx.log("warning: not converged after " + std::to_string(fit.iterations) + " iterations");
      std::string csv = "system,score\n";
      for (const auto& [id, s] : fit.scores) csv += id + "," + format_double(s) + "\n";
      write_output(ctx, bt_out, csv);
    };
  });

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Per-split statistics report");
  std::string stats_in, stats_out, stats_format = "markdown", stats_translator;
  stats_cmd->add_option("--scored,-s", stats_in, "Scored records (one per conversation, e.g. winners_scored.jsonl)")
      ->required();
  stats_cmd->add_option("--output,-o", stats_out, "Report file (stdout when omitted)");
  stats_cmd->add_option("--format,-f", stats_format, "markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "md", "csv", "json"}))
      ->capture_default_str();
  stats_cmd->add_option("--translator", stats_translator, "Only records of this translator");
  stats_cmd->callback([&] {
    action = [&] {
      ctx.inputs.push_back(stats_in);
      auto records = read_scored(stats_in);
      if (!stats_translator.empty()) {
        std::erase_if(records, [&](const ScoredRecord& r) { return r.translator_id != stats_translator; });
      }
      const ReportHeader header{Tokenizer::load(ctx.cfg.analysis_tokenizer).name(), ctx.cfg.metrics.alpha,
                                ctx.cfg.metrics.tau, std::string(unicode::kVersion)};
      const auto report = render_stats_report(records, header, *parse_report_format(stats_format));
      if (stats_out.empty()) {
        *ctx.out << report;
      } else {
        write_output(ctx, stats_out, report);
      }
    };
  });

  // filter
  auto* filter_cmd = app.add_subcommand("filter", "Drop examples below LR/SCR thresholds or containing CJK");
  std::string f_in, f_scored, f_out, f_rejected, f_translator;
  std::optional<double> f_min_lr, f_min_scr;
  std::optional<bool> f_reject_cjk;
  filter_cmd->add_option("--input,-i", f_in, "Corpus to filter")->required();
  filter_cmd->add_option("--scored,-s", f_scored, "Scored records for the corpus")->required();
  filter_cmd->add_option("--output,-o", f_out, "Kept examples (JSONL)")->required();
  filter_cmd->add_option("--rejected", f_rejected, "Rejected ids with reasons (JSONL)");
  filter_cmd->add_option("--min-lr", f_min_lr, "Minimum LR");
  filter_cmd->add_option("--min-scr", f_min_scr, "Minimum SCR");
  filter_cmd->add_option("--reject-cjk", f_reject_cjk, "Reject examples containing CJK ideographs (true/false)");
  filter_cmd->add_option("--translator", f_translator, "Use scores of this translator");
  filter_cmd->callback([&] {
    action = [&] {
      auto policy = ctx.cfg.filter;
      if (f_min_lr) policy.thresholds.min_lr = *f_min_lr;
      if (f_min_scr) policy.thresholds.min_scr = *f_min_scr;
      if (f_reject_cjk) policy.reject_cjk = *f_reject_cjk;
      try {
        policy.validate();
      } catch (const ConfigError& e) {
        throw ArgumentError(e.what());
      }
      const auto convs = read_input_corpus(ctx, f_in);
      ctx.inputs.push_back(f_scored);
      std::map<std::string, QualityScore> by_id;
      for (const auto& r : read_scored(f_scored)) {
        if (!f_translator.empty() && r.translator_id != f_translator) continue;
        if (!by_id.emplace(r.conversation_id, r.quality).second) {
          throw ValidationError("several scores for '" + r.conversation_id + "'; pass --translator");
        }
      }
      std::vector<QualityScore> scores;
      for (const auto& c : convs) {
        auto it = by_id.find(c.id);
        if (it == by_id.end()) throw ValidationError("no score for conversation '" + c.id + "'");
        scores.push_back(it->second);
      }
      const auto res = apply_filter(convs, scores, policy);
      std::vector<Conversation> kept;
      for (auto i : res.kept) kept.push_back(convs[i]);
      write_output(ctx, f_out, corpus_text(kept));
      if (!f_rejected.empty()) {
        std::string rej;
        for (const auto& r : res.rejected) {
          rej += nlohmann::ordered_json{{"conversation_id", convs[r.index].id}, {"reasons", r.reasons}}.dump() + "\n";
        }
        write_output(ctx, f_rejected, rej);
      }
      ctx.log("kept " + std::to_string(kept.size()) + ", rejected " + std::to_string(res.rejected.size()) +
              " (min_lr " + format_double(policy.thresholds.min_lr) + ", min_scr " +
              format_double(policy.thresholds.min_scr) + ", reject_cjk " + (policy.reject_cjk ? "true" : "false") + ")");
    };
  });

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Stratified sample by category in fixed ratios");
  std::string s_in, s_out, s_ratios, s_field;
  std::optional<std::size_t> s_total;
  bool s_shortfall = false;
  sample_cmd->add_option("--input,-i", s_in, "Corpus with a category field")->required();
  sample_cmd->add_option("--output,-o", s_out, "Sampled corpus (JSONL)")->required();
  sample_cmd->add_option("--total,-n", s_total, "Number of examples to draw");
  sample_cmd->add_option("--ratios", s_ratios, "Category weights, e.g. code:1,science:1,math:2");
  sample_cmd->add_option("--category-field", s_field, "Top-level field holding the category label");
  sample_cmd->add_flag("--allow-shortfall", s_shortfall, "Take what is available when a category runs short");
  sample_cmd->callback([&] {
    action = [&] {
      auto policy = ctx.cfg.strata;
      if (!s_ratios.empty()) {
        try {
          policy.ratios = parse_ratios(s_ratios);
        } catch (const ConfigError& e) {
          throw ArgumentError(e.what());
        }
      }
      if (s_total) policy.total = *s_total;
      if (s_shortfall) policy.allow_shortfall = true;
      const std::string field = s_field.empty() ? ctx.cfg.category_field : s_field;
      const auto convs = read_input_corpus(ctx, s_in);
      std::vector<std::string> cats;
      for (const auto& c : convs) {
        auto it = c.extra.find(field);
        if (it == c.extra.end() || !it->is_string()) {
          throw ValidationError("conversation '" + c.id + "' has no string field '" + field + "'");
        }
        cats.push_back(it->get<std::string>());
      }
      const auto picked = stratified_sample(cats, policy, ctx.cfg.seed);
      std::vector<Conversation> chosen;
      for (auto i : picked) chosen.push_back(convs[i]);
      write_output(ctx, s_out, corpus_text(chosen));
      std::map<std::string, std::size_t> counts;
      for (auto i : picked) ++counts[cats[i]];
      std::string summary = "sampled " + std::to_string(picked.size()) + ":";
      for (const auto& [cat, n] : counts) summary += " " + cat + "=" + std::to_string(n);
      ctx.log(summary);
    };
  });

  // pipeline
  auto* pipe_cmd = app.add_subcommand("pipeline", "Run decompose, translate, score, rank, filter and report");
  std::string p_in, p_out, p_queue;
  std::vector<std::string> p_backends;
  std::size_t p_workers = 1;
  pipe_cmd->add_option("--input,-i", p_in, "Source corpus (JSONL)")->required();
  pipe_cmd->add_option("--output-dir,-o", p_out, "Directory for all stage outputs")->required();
  pipe_cmd->add_option("--backend,-b", p_backends, "Backend ids from the config, or mock-identity (repeatable)");
  pipe_cmd->add_option("--queue,-q", p_queue, "Queue directory (default <output-dir>/queue)");
  pipe_cmd->add_option("--workers", p_workers, "In-process workers per backend")->capture_default_str();
  pipe_cmd->callback([&] {
    action = [&] {
      auto cfg = ctx.cfg;
      cfg.backends = select_backends(ctx.cfg, p_backends);
      cfg.queue_dir = queue_dir_or(ctx, p_queue, fs::path(p_out) / "queue");
      cfg.validate();
      const auto sources = read_input_corpus(ctx, p_in);
      TranslateOptions opts;
      opts.workers = p_workers;
      opts.log = [&](const std::string& m) { ctx.log(m); };
      const auto res = run_pipeline(cfg, sources, p_out, opts);
      for (const auto& p : res.outputs) ctx.outputs.push_back(p);
      for (const auto& w : res.warnings) ctx.log("warning: " + w);
      *ctx.out << res.conversations << " conversation(s), " << res.units << " unit(s), kept " << res.kept
               << ", rejected " << res.rejected << "\n";
    };
  });

  std::vector<std::string> args(argv + 1, argv + argc);
  std::string subcommand;
  int code = 0;
  try {
    app.parse(argc, argv);
    subcommand = app.get_subcommands().front()->get_name();
    apply_overrides(g, ctx);
    if (action) action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    code = 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  } catch (const FitError& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    code = 2;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    code = 2;
  } catch (const BackendError& e) {
    err << "backend error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  }
  append_manifest(g, ctx, subcommand, args, code);
  return code;
}

}  // namespace sftc
