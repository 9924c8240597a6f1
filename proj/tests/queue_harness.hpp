#pragma once

// Multi-process harness for the work queue: forked workers, fault
// injection and a replay check of the grant trace.

#include <chrono>
#include <csignal>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <sys/wait.h>
#include <unistd.h>

#include "sftc/queue.hpp"
#include "support.hpp"

namespace testing {

using namespace sftc;


inline std::vector<TranslationUnit> make_units(std::size_t n, const std::string& conv = "c") {
  std::vector<TranslationUnit> out;
  for (std::size_t i = 0; i < n; ++i) {
    TranslationUnit u;
    u.conversation_id = conv;
    u.split = "train";
    u.message_index = i;
    u.source_text = "text " + std::to_string(i);
    out.push_back(u);
  }
  return out;
}

inline std::map<UnitKey, std::string> echo(const Task& t) {
  std::map<UnitKey, std::string> r;
  for (const auto& u : t.units) r[u.key()] = u.source_text;
  return r;
}

struct TraceCheck {
  std::size_t grants = 0;
  std::map<std::string, std::size_t> publishes;
  std::vector<std::string> violations;
};

// Replays the trace: a task may be granted again only once the previous
// holder released it or its lease ran out.
inline TraceCheck check_trace(const std::filesystem::path& trace) {
  struct Holder {
    std::string worker;
    Millis expires;
  };
  TraceCheck out;
  std::map<std::string, Holder> held;
  std::ifstream in(trace);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string ev, id, worker;
    ls >> ev >> id;
    if (ev == "grant") {
      Millis at = 0, expires = 0;
      ls >> worker >> at >> expires;
      ++out.grants;
      if (auto it = held.find(id); it != held.end() && at < it->second.expires) {
        out.violations.push_back(id + " granted to " + worker + " while held by " + it->second.worker);
      }
      held[id] = {worker, expires};
    } else if (ev == "release") {
      ls >> worker;
      if (auto it = held.find(id); it != held.end() && it->second.worker == worker) held.erase(it);
    } else if (ev == "publish") {
      ++out.publishes[id];
    }
  }
  return out;
}

inline pid_t spawn(const std::function<int()>& body) {
  const pid_t pid = ::fork();
  if (pid == 0) {
    int rc = 3;
    try {
      rc = body();
    } catch (...) {
    }
    ::_exit(rc);
  }
  if (pid < 0) throw std::runtime_error("fork failed");
  return pid;
}

inline int wait_exit(pid_t pid) {
  int status = 0;
  ::waitpid(pid, &status, 0);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}


struct RaceOutcome {
  int double_wins = 0;
  int no_wins = 0;
  std::vector<std::string> violations;
};

// Two processes released at once from a pipe both try to lease the only task.
inline RaceOutcome acquisition_races(int rounds) {
  RaceOutcome out;
  for (int round = 0; round < rounds; ++round) {
    TempDir dir("race");
    {
      WorkQueue q(dir.path());
      q.enqueue(make_units(1, "r" + std::to_string(round)), "mock", 1);
    }
    int gate[2];
    if (::pipe(gate) != 0) throw std::runtime_error("pipe failed");
    std::vector<pid_t> kids;
    for (int k = 0; k < 2; ++k) {
      kids.push_back(spawn([&, k] {
        ::close(gate[1]);
        char c;
        [[maybe_unused]] auto n = ::read(gate[0], &c, 1);  // blocks until the parent closes the pipe
        WorkQueue q(dir.path());
        q.set_trace(dir / "trace.log");
        return q.acquire("p" + std::to_string(k), 60000) ? 0 : 1;
      }));
    }
    ::close(gate[0]);
    ::close(gate[1]);
    int winners = 0;
    for (auto pid : kids) winners += wait_exit(pid) == 0;
    if (winners > 1) ++out.double_wins;
    if (winners == 0) ++out.no_wins;
    const auto tc = check_trace(dir / "trace.log");
    if (tc.grants != 1) out.violations.push_back("round " + std::to_string(round) + ": " + std::to_string(tc.grants) + " grants");
    out.violations.insert(out.violations.end(), tc.violations.begin(), tc.violations.end());
  }
  return out;
}

struct KillOutcome {
  int kills = 0;
  int bad_exits = 0;
  QueueStatus status;
  std::size_t results = 0;
  std::size_t duplicate_units = 0;
  std::size_t wrong_text = 0;
  TraceCheck trace;
};

// Worker processes drain `tasks` single-unit tasks while the parent SIGKILLs
// a random one every few milliseconds and starts a replacement.
inline KillOutcome kill_restart(std::size_t tasks, int workers, int rounds, std::uint64_t seed) {
  TempDir dir("kill");
  {
    WorkQueue q(dir.path());
    q.enqueue(make_units(tasks), "mock", 1);
  }
  auto worker = [&](int slot) {
    return spawn([&, slot] {
      WorkQueue q(dir.path());
      q.set_trace(dir / "trace.log");
      BackendConfig cfg;
      cfg.id = "mock";
      cfg.mock_delay = std::chrono::milliseconds(3);
      TranslatorBackend backend(cfg);
      WorkerOptions opts;
      opts.ttl = 250;
      opts.max_attempts = 1000;
      opts.idle_poll = std::chrono::milliseconds(20);
      worker_loop(q, backend, "w" + std::to_string(slot) + "-" + std::to_string(::getpid()), opts);
      return 0;
    });
  };
  KillOutcome out;
  std::vector<pid_t> pids;
  for (int i = 0; i < workers; ++i) pids.push_back(worker(i));
  std::mt19937_64 rng(seed);
  for (int round = 0; round < rounds; ++round) {
    std::this_thread::sleep_for(std::chrono::milliseconds(10 + rng() % 40));
    const auto slot = rng() % pids.size();
    if (::kill(pids[slot], SIGKILL) == 0) ++out.kills;
    wait_exit(pids[slot]);
    pids[slot] = worker(static_cast<int>(slot));
  }
  for (auto pid : pids) out.bad_exits += wait_exit(pid) != 0;

  WorkQueue q(dir.path());
  out.status = q.status();
  std::set<UnitKey> seen;
  const auto results = q.collect();
  out.results = results.size();
  for (const auto& r : results) {
    if (!seen.insert(r.unit.key()).second) ++out.duplicate_units;
    if (r.translated_text != r.unit.source_text) ++out.wrong_text;
  }
  out.trace = check_trace(dir / "trace.log");
  return out;
}

}  // namespace testing
