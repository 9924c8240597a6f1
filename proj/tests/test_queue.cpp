#include <catch_amalgamated.hpp>

#include "queue_harness.hpp"

using namespace sftc;

using testing::echo;
using testing::make_units;

TEST_CASE("enqueue batches units and is idempotent") {
  testing::TempDir dir;
  WorkQueue q(dir.path());
  const auto units = make_units(10);
  const auto tasks = q.enqueue(units, "mock", 4);
  REQUIRE(tasks.size() == 3);
  CHECK(tasks[0].units.size() == 4);
  CHECK(tasks[1].units.size() == 4);
  CHECK(tasks[2].units.size() == 2);
  CHECK(q.status().pending == 3);
  const auto again = q.enqueue(units, "mock", 4);
  CHECK(again[0].task_id == tasks[0].task_id);
  CHECK(q.status().pending == 3);
  // a different translator is a different task
  q.enqueue(units, "other", 4);
  CHECK(q.status().pending == 6);
  CHECK_THROWS_AS(q.enqueue({}, "mock", 4), ArgumentError);
  CHECK_THROWS_AS(q.enqueue(units, "mock", 0), ArgumentError);
}

TEST_CASE("acquire on an empty queue returns nothing") {
  testing::TempDir dir;
  WorkQueue q(dir.path());
  CHECK_FALSE(q.acquire("w", 1000).has_value());
  CHECK(q.drained());
}

TEST_CASE("expired leases are taken over with the next attempt") {
  testing::TempDir dir;
  Millis now = 1000;
  WorkQueue q(dir.path(), [&] { return now; });
  q.enqueue(make_units(2), "mock", 2);
  auto a = q.acquire("w1", 100);
  REQUIRE(a);
  CHECK(a->attempt == 0);
  CHECK_FALSE(q.acquire("w2", 100));
  CHECK(q.status().leased == 1);
  now += 99;
  CHECK_FALSE(q.acquire("w2", 100));
  now += 1;
  CHECK(q.status().expired == 1);
  auto b = q.acquire("w2", 100);
  REQUIRE(b);
  CHECK(b->attempt == 1);
  CHECK(b->task_id == a->task_id);
  now += 100;
  auto c = q.acquire("w3", 100);
  REQUIRE(c);
  CHECK(c->attempt == 2);
  // third expiry exhausts the default three attempts
  now += 100;
  CHECK_FALSE(q.acquire("w4", 100));
  CHECK(q.status().failed == 1);
  CHECK(q.status().pending == 0);
}

TEST_CASE("completion publishes once") {
  testing::TempDir dir;
  WorkQueue q(dir.path());
  q.enqueue(make_units(3), "mock", 3);
  auto t = q.acquire("w1", 60000);
  REQUIRE(t);

  auto partial = echo(*t);
  partial.erase(partial.begin());
  CHECK_THROWS_AS(q.complete(*t, "w1", partial), ValidationError);

  const auto first = q.complete(*t, "w1", echo(*t));
  CHECK(first.published);
  const auto second = q.complete(*t, "w2", echo(*t));
  CHECK_FALSE(second.published);
  CHECK(second.warning.find("already completed") != std::string::npos);

  const auto s = q.status();
  CHECK(s.done == 1);
  CHECK(s.pending == 0);
  const auto got = q.collect();
  REQUIRE(got.size() == 3);
  CHECK(got[0].translator_id == "mock");
  CHECK(got[2].translated_text == "text 2");
  // re-enqueueing finished work does not resurrect it
  q.enqueue(make_units(3), "mock", 3);
  CHECK(q.status().pending == 0);
}

TEST_CASE("a failing task ends up in failed after its attempts") {
  testing::TempDir dir;
  WorkQueue q(dir.path());
  auto units = make_units(2);
  units[1].source_text = "poison";
  q.enqueue(units, "table", 1);
  BackendConfig cfg;
  cfg.id = "table";
  cfg.kind = BackendKind::kMockTable;
  cfg.table = {{"text 0", "نص 0"}};
  TranslatorBackend backend(cfg);
  std::vector<std::string> log;
  WorkerOptions opts;
  opts.ttl = 60000;
  opts.log = [&](const std::string& m) { log.push_back(m); };
  const auto done = worker_loop(q, backend, "w", opts);
  CHECK(done == 1);
  const auto s = q.status();
  CHECK(s.done == 1);
  CHECK(s.failed == 1);
  CHECK(log.size() == 3);  // one line per failed attempt
  std::size_t failed_files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir / "failed")) {
    const auto j = nlohmann::json::parse(testing::read_file(e.path()));
    CHECK(j.at("reason").get<std::string>().find("no entry") != std::string::npos);
    ++failed_files;
  }
  CHECK(failed_files == 1);
}

TEST_CASE("two processes racing for one task never both win") {
  const auto r = testing::acquisition_races(1000);
  CHECK(r.double_wins == 0);
  CHECK(r.no_wins == 0);
  INFO((r.violations.empty() ? std::string() : r.violations.front()));
  CHECK(r.violations.empty());
}

TEST_CASE("killed workers lose nothing and duplicate nothing") {
  constexpr std::size_t kTasks = 100;
  const auto r = testing::kill_restart(kTasks, 4, 12, 99);
  CHECK(r.kills > 0);
  CHECK(r.bad_exits == 0);
  CHECK(r.status.done == kTasks);
  CHECK(r.status.failed == 0);
  CHECK(r.status.pending == 0);
  CHECK(r.results == kTasks);
  CHECK(r.duplicate_units == 0);
  CHECK(r.wrong_text == 0);
  INFO((r.trace.violations.empty() ? std::string() : r.trace.violations.front()));
  CHECK(r.trace.violations.empty());
  CHECK(r.trace.publishes.size() == kTasks);
  for (const auto& [id, n] : r.trace.publishes) CHECK(n == 1);
}
