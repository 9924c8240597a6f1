#include <catch_amalgamated.hpp>

#include <atomic>
#include <cstdlib>
#include <thread>

#include <sys/stat.h>

#include "sftc/backend.hpp"
#include "sftc/ranking.hpp"
#include "support.hpp"

using namespace sftc;

namespace {

TranslationUnit unit(const std::string& text) {
  TranslationUnit u;
  u.conversation_id = "c";
  u.split = "train";
  u.source_text = text;
  return u;
}

// Local HTTP server on an ephemeral port for the lifetime of the object.
class Stub {
 public:
  Stub() {
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~Stub() {
    server_.stop();
    thread_.join();
  }
  httplib::Server& server() { return server_; }
  std::string url(const std::string& path) const { return "http://127.0.0.1:" + std::to_string(port_) + path; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

std::string chat_reply(const std::string& content) {
  return nlohmann::json{{"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}}.dump();
}

BackendConfig http_config(const std::string& endpoint) {
  BackendConfig cfg;
  cfg.id = "stub";
  cfg.kind = BackendKind::kHttpEndpoint;
  cfg.endpoint = endpoint;
  cfg.model = "m";
  cfg.backoff = std::chrono::milliseconds(5);
  return cfg;
}

}  // namespace

TEST_CASE("mock backends") {
  TranslatorBackend identity(BackendConfig{});
  CHECK(identity.translate(unit("hello")) == "hello");
  CHECK(identity.translate(unit("")) == "");

  BackendConfig cfg;
  cfg.id = "table";
  cfg.kind = BackendKind::kMockTable;
  cfg.table = {{"hi", "مرحبا"}};
  TranslatorBackend table(cfg);
  CHECK(table.translate(unit("hi")) == "مرحبا");
  CHECK_THROWS_AS(table.translate(unit("bye")), BackendError);
}

TEST_CASE("translation tables load from JSON") {
  testing::TempDir dir;
  testing::write_file(dir / "t.json", R"({"hi":"مرحبا","x":"س"})");
  const auto t = load_translation_table(dir / "t.json");
  CHECK(t.at("hi") == "مرحبا");
  testing::write_file(dir / "bad.json", "[1,2]");
  CHECK_THROWS_AS(load_translation_table(dir / "bad.json"), ConfigError);
  CHECK_THROWS_AS(load_translation_table(dir / "none.json"), ConfigError);
}

TEST_CASE("prompt rendering") {
  CHECK(render_prompt(kDefaultPromptTemplate, "hi", "Arabic") == "Translate into Arabic:\nhi");
  CHECK(render_prompt("{source}|{source}", "a{source}", "x") == "a{source}|a{source}");
  CHECK(render_prompt("{target", "s", "x") == "{target");
}

TEST_CASE("configuration validation") {
  BackendConfig cfg;
  cfg.temperature = 0.9;
  CHECK_THROWS_AS(TranslatorBackend(cfg), ConfigError);
  cfg.temperature = 0.2;
  cfg.max_input_tokens = 0;
  CHECK_THROWS_AS(TranslatorBackend(cfg), ConfigError);
  CHECK_THROWS_AS(TranslatorBackend(http_config("")), ConfigError);
  CHECK(parse_backend_kind("mock-table") == BackendKind::kMockTable);
  CHECK_FALSE(parse_backend_kind("nope").has_value());
}

TEST_CASE("inputs over the backend budget are refused") {
  BackendConfig cfg;
  cfg.max_input_tokens = 10;
  TranslatorBackend b(cfg);
  std::string text;
  for (int i = 0; i < 20; ++i) text += "w ";
  CHECK_THROWS_AS(b.translate(unit(text)), ArgumentError);
  // the prompt template counts against the budget as well
  CHECK_NOTHROW(b.translate(unit("w w")));
}

TEST_CASE("HTTP backend retries server errors with backoff") {
  Stub stub;
  std::atomic<int> calls{0};
  std::string seen_auth;
  nlohmann::json seen_body;
  stub.server().Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
    if (++calls <= 3) {
      res.status = 500;
      return;
    }
    seen_auth = req.get_header_value("Authorization");
    seen_body = nlohmann::json::parse(req.body);
    res.set_content(chat_reply("نص"), "application/json");
  });
  ::setenv("SFTC_TEST_KEY", "sekret", 1);
  auto cfg = http_config(stub.url("/v1/chat/completions"));
  cfg.api_key_env = "SFTC_TEST_KEY";
  TranslatorBackend b(cfg);
  std::vector<std::string> log;
  b.set_log([&](const std::string& m) { log.push_back(m); });
  const auto start = std::chrono::steady_clock::now();
  CHECK(b.translate(unit("text")) == "نص");
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(b.last_attempts() == 4);
  CHECK(calls == 4);
  CHECK(log.size() == 3);
  // 5 + 10 + 20 ms of backoff
  CHECK(elapsed >= std::chrono::milliseconds(35));
  CHECK(seen_auth == "Bearer sekret");
  CHECK(seen_body.at("model") == "m");
  CHECK(seen_body.at("messages").at(0).at("content") == "Translate into Arabic:\ntext");
}

TEST_CASE("HTTP backend gives up") {
  Stub stub;
  std::atomic<int> calls{0};
  stub.server().Post("/always500", [&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 503;
  });
  stub.server().Post("/bad", [&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 400;
  });
  stub.server().Post("/garbage", [&](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"nope\":1}", "application/json");
  });
  TranslatorBackend busy(http_config(stub.url("/always500")));
  CHECK_THROWS_AS(busy.translate(unit("x")), BackendError);
  CHECK(calls == 4);
  calls = 0;
  TranslatorBackend bad(http_config(stub.url("/bad")));
  CHECK_THROWS_AS(bad.translate(unit("x")), BackendError);
  CHECK(calls == 1);  // client errors are not retried
  TranslatorBackend garbage(http_config(stub.url("/garbage")));
  CHECK_THROWS_AS(garbage.translate(unit("x")), BackendError);
}

TEST_CASE("reward scorer over HTTP") {
  Stub stub;
  stub.server().Post("/score", [&](const httplib::Request& req, httplib::Response& res) {
    const auto j = nlohmann::json::parse(req.body);
    const bool same = j.at("source") == j.at("candidate");
    res.set_content(nlohmann::json{{"score", same ? 0.1 : 0.8}}.dump(), "application/json");
  });
  Conversation src{"c", "s", {{Role::kUser, "hi", 0}}, {}};
  Conversation cand{"c", "s", {{Role::kUser, "مرحبا", 0}}, {}};
  HttpRewardScorer scorer(stub.url("/score"));
  CHECK(scorer.score(src, cand) == 0.8);
  CHECK(scorer.score(src, src) == 0.1);
  HttpRewardScorer missing(stub.url("/nothing"));
  CHECK_THROWS_AS(missing.score(src, cand), BackendError);
}

TEST_CASE("reward scorer as a command") {
  testing::TempDir dir;
  const auto script = dir / "rm.sh";
  testing::write_file(script, "#!/bin/sh\ngrep -q '\"candidate\"' \"$1\" && echo 0.6\n");
  ::chmod(script.c_str(), 0755);
  Conversation src{"c", "s", {{Role::kUser, "hi", 0}}, {}};
  CommandRewardScorer scorer(script.string());
  CHECK(scorer.score(src, src) == 0.6);
  CommandRewardScorer failing("false");
  CHECK_THROWS_AS(failing.score(src, src), BackendError);
  CommandRewardScorer chatty("echo nope");
  CHECK_THROWS_AS(chatty.score(src, src), BackendError);
}

TEST_CASE("failing or out-of-range reward scores become warnings") {
  struct Fixed : RewardScorer {
    double v;
    explicit Fixed(double x) : v(x) {}
    double score(const Conversation&, const Conversation&) override { return v; }
  };
  Conversation src{"c", "s", {{Role::kUser, "hello there", 0}}, {}};
  std::vector<Candidate> cands{{"c", "a", {"c", "s", {{Role::kUser, "مرحبا بك", 0}}, {}}},
                               {"c", "b", {"c", "s", {{Role::kUser, "hello there", 0}}, {}}}};
  Fixed bad(1.5);
  const auto r = rank_candidates(src, cands, &bad, {}, {}, Tokenizer{});
  CHECK(r.warnings.size() == 2);
  CHECK_FALSE(r.entries[0].rm.has_value());
  CHECK(r.winner().translator_id == "a");
  Fixed good(0.5);
  const auto g = rank_candidates(src, cands, &good, {}, {}, Tokenizer{});
  CHECK(g.warnings.empty());
  CHECK(g.entries[0].rm == 0.5);
}
