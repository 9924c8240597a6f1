#pragma once

// Multi-process work queue over a shared directory.
//
//   <dir>/pending/<task_id>.json   tasks waiting for (or under) a lease
//   <dir>/leases/<task_id>.lock    current lease: worker, timestamp, ttl, attempt
//   <dir>/done/<task_id>.json      exactly one completion record per task
//   <dir>/failed/<task_id>.json    tasks that exhausted their attempts
//
// Every file appears atomically: content is written to a private temp file
// and then linked (exclusive: fails if the name exists) or renamed into
// place. A lease is granted by linking a fresh lock file. An expired lease
// with attempt k may be taken over only by the worker that first creates
// `leases/<task_id>.takeover.<k>`, so two workers can never both replace the
// same stale lock.

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>
#include <vector>

#include <fcntl.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "sftc/backend.hpp"
#include "sftc/corpus.hpp"
#include "sftc/errors.hpp"
#include "sftc/hashing.hpp"

namespace sftc {

namespace fs = std::filesystem;

using Millis = std::int64_t;
using Clock = std::function<Millis()>;

inline Millis system_now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
      .count();
}

struct Task {
  std::string task_id;
  std::string translator_id;
  std::vector<TranslationUnit> units;
  std::size_t attempt = 0;

  std::vector<UnitKey> unit_refs() const {
    std::vector<UnitKey> keys;
    for (const auto& u : units) keys.push_back(u.key());
    return keys;
  }
};

struct Lease {
  std::string task_id;
  std::string worker_id;
  Millis acquired_at = 0;
  Millis ttl = 0;
  std::size_t attempt = 0;

  Millis expires_at() const { return acquired_at + ttl; }
};

struct QueueStatus {
  std::size_t pending = 0;  // not yet done or failed, including leased ones
  std::size_t leased = 0;   // with an unexpired lease
  std::size_t expired = 0;  // with an expired lease
  std::size_t done = 0;
  std::size_t failed = 0;
};

struct CompleteResult {
  bool published = false;
  std::string warning;
};

namespace detail {

inline nlohmann::json lease_to_json(const Lease& l) {
  return {{"task_id", l.task_id},
          {"worker_id", l.worker_id},
          {"acquired_at", l.acquired_at},
          {"ttl", l.ttl},
          {"attempt", l.attempt}};
}

inline std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string unique_suffix() {
  static std::atomic<std::uint64_t> counter{0};
  thread_local std::mt19937_64 rng{std::random_device{}()};
  return std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" + std::to_string(rng());
}

inline fs::path write_temp(const fs::path& dir, std::string_view content) {
  const auto tmp = dir / (".tmp-" + unique_suffix());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write in " + dir.string());
    out << content;
    out.flush();
    if (!out) throw IoError("short write to " + tmp.string());
  }
  return tmp;
}

// Publishes content at `target` only if no file of that name exists.
inline bool publish_exclusive(const fs::path& target, std::string_view content) {
  const auto tmp = write_temp(target.parent_path(), content);
  const int rc = ::link(tmp.c_str(), target.c_str());
  const int err = errno;
  std::error_code ec;
  fs::remove(tmp, ec);
  if (rc == 0) return true;
  if (err == EEXIST) return false;
  throw IoError("cannot create " + target.string() + ": " + std::generic_category().message(err));
}

inline void publish_replace(const fs::path& target, std::string_view content) {
  const auto tmp = write_temp(target.parent_path(), content);
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot replace " + target.string());
  }
}

inline bool create_exclusive_marker(const fs::path& p) {
  const int fd = ::open(p.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd >= 0) {
    ::close(fd);
    return true;
  }
  if (errno == EEXIST) return false;
  throw IoError("cannot create " + p.string() + ": " + std::generic_category().message(errno));
}

inline void append_line(const fs::path& p, const std::string& line) {
  const int fd = ::open(p.c_str(), O_CREAT | O_WRONLY | O_APPEND, 0644);
  if (fd < 0) return;
  const std::string l = line + "\n";
  [[maybe_unused]] auto n = ::write(fd, l.data(), l.size());
  ::close(fd);
}

}  // namespace detail

class WorkQueue {
 public:
  explicit WorkQueue(fs::path dir, Clock clock = system_now_ms) : dir_(std::move(dir)), clock_(std::move(clock)) {
    std::error_code ec;
    for (const char* sub : {"pending", "leases", "done", "failed"}) {
      fs::create_directories(dir_ / sub, ec);
      if (ec) throw IoError("cannot create queue directory " + (dir_ / sub).string() + ": " + ec.message());
    }
  }

  const fs::path& dir() const { return dir_; }

  // Appends grant/release/publish events to this file (one line each).
  void set_trace(fs::path trace) { trace_ = std::move(trace); }

  static std::string task_id_for(const std::string& translator_id, const std::vector<TranslationUnit>& units) {
    Sha256 h;
    h.update(translator_id).update("\n");
    for (const auto& u : units) h.update(to_json(u).dump()).update("\n");
    return h.hex().substr(0, 32);
  }

  std::vector<Task> enqueue(const std::vector<TranslationUnit>& units, const std::string& translator_id,
                            std::size_t batch_size) {
    if (units.empty()) throw ArgumentError("enqueue needs at least one unit");
    if (batch_size == 0) throw ArgumentError("batch_size must be positive");
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < units.size(); i += batch_size) {
      Task t;
      t.translator_id = translator_id;
      t.units.assign(units.begin() + static_cast<std::ptrdiff_t>(i),
                     units.begin() + static_cast<std::ptrdiff_t>(std::min(units.size(), i + batch_size)));
      t.task_id = task_id_for(translator_id, t.units);
      if (!exists_anywhere(t.task_id)) detail::publish_replace(pending_path(t.task_id), task_json(t).dump());
      tasks.push_back(std::move(t));
    }
    return tasks;
  }

  // Grants a lease on some available task, or returns nullopt when every
  // pending task is leased, done or failed. Tasks whose expired lease would
  // exceed `max_attempts` are moved to failed/ instead.
  std::optional<Task> acquire(const std::string& worker_id, Millis ttl, std::size_t max_attempts = 3) {
    for (const auto& id : pending_ids()) {
      if (is_finished(id)) {
        remove_quietly(pending_path(id));
        continue;
      }
      const auto now = clock_();
      Lease fresh{id, worker_id, now, ttl, 0};
      if (detail::publish_exclusive(lock_path(id), detail::lease_to_json(fresh).dump())) {
        if (auto t = claim(id, fresh)) return t;
        continue;
      }
      const auto held = read_lease(id);
      if (!held || now < held->expires_at()) continue;

      // Expired: only the creator of the takeover marker for this attempt may replace it.
      const auto marker = dir_ / "leases" / (id + ".takeover." + std::to_string(held->attempt));
      if (!detail::create_exclusive_marker(marker)) continue;
      const auto current = read_lease(id);
      if (!current || current->attempt != held->attempt || current->worker_id != held->worker_id) continue;
      if (held->attempt + 1 >= max_attempts) {
        fail_task(id, "lease expired on attempt " + std::to_string(held->attempt) + " (worker " + held->worker_id +
                          "); max attempts " + std::to_string(max_attempts) + " reached");
        continue;
      }
      Lease next{id, worker_id, clock_(), ttl, held->attempt + 1};
      detail::publish_replace(lock_path(id), detail::lease_to_json(next).dump());
      if (auto t = claim(id, next)) return t;
    }
    return std::nullopt;
  }

  // Publishes the results of a leased task. Exactly one completion per task
  // id is kept; later ones are discarded with a warning.
  CompleteResult complete(const Task& task, const std::string& worker_id,
                          const std::map<UnitKey, std::string>& results) {
    std::vector<std::string> missing;
    for (const auto& u : task.units) {
      if (!results.count(u.key())) missing.push_back(u.key().str());
    }
    if (!missing.empty()) {
      std::string msg = "task " + task.task_id + " is missing results for:";
      for (const auto& m : missing) msg += " " + m;
      throw ValidationError(msg);
    }
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    rec["task_id"] = task.task_id;
    rec["translator_id"] = task.translator_id;
    rec["worker_id"] = worker_id;
    rec["attempt"] = task.attempt;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& u : task.units) arr.push_back(to_json(TranslatedUnit{u, results.at(u.key()), task.translator_id}));
    rec["results"] = std::move(arr);

    CompleteResult out;
    out.published = detail::publish_exclusive(done_path(task.task_id), rec.dump());
    if (!out.published) {
      out.warning = "task " + task.task_id + " already completed; discarding result from " + worker_id;
    } else {
      trace("publish " + task.task_id + " " + worker_id + " " + std::to_string(clock_()));
    }
    remove_quietly(pending_path(task.task_id));
    release(task.task_id, worker_id);
    if (out.published) remove_takeover_markers(task.task_id);
    return out;
  }

  // Gives a task back after a failure. Once `max_attempts` is exhausted the
  // task moves to failed/ with the diagnostics; otherwise the lease is marked
  // expired so the next acquire retries it with attempt + 1.
  void fail(const Task& task, const std::string& worker_id, const std::string& reason, std::size_t max_attempts = 3) {
    const auto lease = read_lease(task.task_id);
    if (!lease || lease->worker_id != worker_id) return;  // lease already lost
    // Too close to expiry: another worker may be taking over; let it lapse.
    if (clock_() + std::min<Millis>(lease->ttl / 10, 5000) >= lease->expires_at()) return;
    if (task.attempt + 1 >= max_attempts) {
      fail_task(task.task_id, reason);
      return;
    }
    Lease expired = *lease;
    expired.acquired_at = 0;
    trace("release " + task.task_id + " " + worker_id + " " + std::to_string(clock_()));
    detail::publish_replace(lock_path(task.task_id), detail::lease_to_json(expired).dump());
  }

  QueueStatus status() const {
    QueueStatus s;
    s.done = count_json(dir_ / "done");
    s.failed = count_json(dir_ / "failed");
    const auto now = clock_();
    for (const auto& id : pending_ids()) {
      if (is_finished(id)) continue;
      ++s.pending;
      if (auto l = read_lease(id)) {
        if (now < l->expires_at()) {
          ++s.leased;
        } else {
          ++s.expired;
        }
      }
    }
    return s;
  }

  bool drained() const { return status().pending == 0; }

  std::vector<TranslatedUnit> collect() const {
    std::vector<TranslatedUnit> out;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir_ / "done")) {
      if (e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      const auto text = detail::read_file(f);
      if (!text) throw IoError("cannot read " + f.string());
      const auto rec = nlohmann::ordered_json::parse(*text);
      for (const auto& r : rec.at("results")) {
        out.push_back(translated_unit_from_json(r));
      }
    }
    return out;
  }

  std::optional<Lease> read_lease(const std::string& id) const {
    const auto text = detail::read_file(lock_path(id));
    if (!text) return std::nullopt;
    try {
      const auto j = nlohmann::json::parse(*text);
      return Lease{j.at("task_id"), j.at("worker_id"), j.at("acquired_at"), j.at("ttl"), j.at("attempt")};
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;
    }
  }

 private:
  fs::path pending_path(const std::string& id) const { return dir_ / "pending" / (id + ".json"); }
  fs::path lock_path(const std::string& id) const { return dir_ / "leases" / (id + ".lock"); }
  fs::path done_path(const std::string& id) const { return dir_ / "done" / (id + ".json"); }
  fs::path failed_path(const std::string& id) const { return dir_ / "failed" / (id + ".json"); }

  bool is_finished(const std::string& id) const { return fs::exists(done_path(id)) || fs::exists(failed_path(id)); }
  bool exists_anywhere(const std::string& id) const { return fs::exists(pending_path(id)) || is_finished(id); }

  static std::size_t count_json(const fs::path& d) {
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(d)) n += e.path().extension() == ".json";
    return n;
  }

  std::vector<std::string> pending_ids() const {
    std::vector<std::string> ids;
    std::error_code ec;
    for (fs::directory_iterator it(dir_ / "pending", ec), end; !ec && it != end; it.increment(ec)) {
      const auto& p = it->path();
      if (p.extension() == ".json") ids.push_back(p.stem().string());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  static nlohmann::ordered_json task_json(const Task& t) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["task_id"] = t.task_id;
    j["translator_id"] = t.translator_id;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& u : t.units) arr.push_back(to_json(u));
    j["units"] = std::move(arr);
    return j;
  }

  std::optional<Task> load_task(const std::string& id) const {
    const auto text = detail::read_file(pending_path(id));
    if (!text) return std::nullopt;
    const auto j = nlohmann::ordered_json::parse(*text);
    Task t;
    t.task_id = j.at("task_id").get<std::string>();
    t.translator_id = j.at("translator_id").get<std::string>();
    for (const auto& u : j.at("units")) t.units.push_back(unit_from_json(u));
    return t;
  }

  // Called with a freshly granted lease; backs out if the task finished meanwhile.
  std::optional<Task> claim(const std::string& id, const Lease& lease) {
    auto task = is_finished(id) ? std::nullopt : load_task(id);
    if (!task) {
      release(id, lease.worker_id);
      return std::nullopt;
    }
    task->attempt = lease.attempt;
    trace("grant " + id + " " + lease.worker_id + " " + std::to_string(lease.acquired_at) + " " +
          std::to_string(lease.expires_at()) + " " + std::to_string(lease.attempt));
    return task;
  }

  void release(const std::string& id, const std::string& worker_id) {
    const auto lease = read_lease(id);
    if (lease && lease->worker_id == worker_id) {
      // Trace first so a grant racing in behind us is logged after the release.
      trace("release " + id + " " + worker_id + " " + std::to_string(clock_()));
      remove_quietly(lock_path(id));
    }
  }

  void fail_task(const std::string& id, const std::string& reason) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    rec["task_id"] = id;
    rec["reason"] = reason;
    if (auto l = read_lease(id)) rec["last_lease"] = detail::lease_to_json(*l);
    if (auto text = detail::read_file(pending_path(id))) rec["task"] = nlohmann::ordered_json::parse(*text);
    detail::publish_exclusive(failed_path(id), rec.dump());
    remove_quietly(pending_path(id));
    remove_quietly(lock_path(id));
    remove_takeover_markers(id);
    trace("failed " + id + " " + std::to_string(clock_()));
  }

  void remove_takeover_markers(const std::string& id) const {
    std::error_code ec;
    const auto prefix = id + ".takeover.";
    for (fs::directory_iterator it(dir_ / "leases", ec), end; !ec && it != end; it.increment(ec)) {
      if (it->path().filename().string().rfind(prefix, 0) == 0) remove_quietly(it->path());
    }
  }

  static void remove_quietly(const fs::path& p) {
    std::error_code ec;
    fs::remove(p, ec);
  }

  void trace(const std::string& line) const {
    if (!trace_.empty()) detail::append_line(trace_, line);
  }

  fs::path dir_;
  Clock clock_;
  fs::path trace_;
};

struct WorkerOptions {
  Millis ttl = 30 * 60 * 1000;
  std::size_t max_attempts = 3;
  std::chrono::milliseconds idle_poll{200};
  std::function<void(const std::string&)> log;
};

// Acquire, translate, complete until no pending task remains. While other
// workers still hold leases the loop polls, so expired leases of crashed
// workers are picked up. Returns the number of tasks this worker published.
inline std::size_t worker_loop(WorkQueue& queue, TranslatorBackend& backend, const std::string& worker_id,
                               const WorkerOptions& opts = {}) {
  std::size_t processed = 0;
  auto log = [&](const std::string& m) {
    if (opts.log) opts.log(m);
  };
  for (;;) {
    auto task = queue.acquire(worker_id, opts.ttl, opts.max_attempts);
    if (!task) {
      if (queue.drained()) return processed;
      std::this_thread::sleep_for(opts.idle_poll);
      continue;
    }
    std::map<UnitKey, std::string> results;
    try {
      for (const auto& u : task->units) results[u.key()] = backend.translate(u);
    } catch (const std::exception& e) {
      log("task " + task->task_id + " attempt " + std::to_string(task->attempt) + " failed: " + e.what());
      queue.fail(*task, worker_id, e.what(), opts.max_attempts);
      continue;
    }
    const auto res = queue.complete(*task, worker_id, results);
    if (res.published) {
      ++processed;
    } else {
      log(res.warning);
    }
  }
}

}  // namespace sftc
