#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sftc/ranking.hpp"

using namespace sftc;
using Catch::Matchers::WithinAbs;

namespace {

struct Published {
  const char* name;
  double lr;
  double scr;
  double avg_rank;
};

// Length ratio, script consistency and the average rank published for them.
const Published kPublished[] = {
    {"GPT 4.1", 0.8995, 0.9318, 1.00},     {"Gemma3 27B", 0.8903, 0.9162, 2.50},
    {"Qwen3 32B", 0.8883, 0.8956, 3.50},   {"Qwen3 235B", 0.8984, 0.8795, 4.50},
    {"OSS 120B", 0.8617, 0.8848, 4.50},    {"Kimi k2", 0.8467, 0.8842, 6.00},
    {"Seed-X 7B", 0.8539, 0.8829, 6.00},   {"Qwen2.5 3B", 0.1893, 0.8157, 8.00},
    {"Qwen2.5 1.5B", 0.1639, 0.7518, 9.50}, {"Falcon3 3B", 0.0843, 0.7568, 10.00},
    {"Qwen2.5 0.5B", 0.1379, 0.7001, 10.50},
};

std::vector<PreferenceRecord> pairs(const std::vector<std::tuple<std::string, std::string, std::size_t>>& v) {
  std::vector<PreferenceRecord> out;
  for (const auto& [w, l, c] : v) out.push_back({w, l, c});
  return out;
}

}  // namespace

TEST_CASE("published average ranks are reproduced") {
  MetricTable table;
  for (const auto& p : kPublished) table.rows.push_back({p.name, {{"lr", p.lr}, {"scr", p.scr}}});
  const auto ranks = average_rank(table, {"lr", "scr"}, {true, true});
  for (const auto& p : kPublished) {
    INFO(p.name);
    CHECK_THAT(ranks.at(p.name), WithinAbs(p.avg_rank, 1e-12));
  }
}

TEST_CASE("ties share the mean position") {
  MetricTable t;
  t.rows = {{"a", {{"m", 0.5}}}, {"b", {{"m", 0.9}}}, {"c", {{"m", 0.5}}}, {"d", {{"m", 0.1}}}};
  const auto r = column_ranks(t, "m", true);
  CHECK(r.at("b") == 1.0);
  CHECK(r.at("a") == 2.5);
  CHECK(r.at("c") == 2.5);
  CHECK(r.at("d") == 4.0);
  const auto low = column_ranks(t, "m", false);
  CHECK(low.at("d") == 1.0);
  t.rows[0].values.clear();
  CHECK_THROWS_AS(column_ranks(t, "m", true), ValidationError);
  CHECK_THROWS_AS(average_rank(t, {}, {}), ArgumentError);
}

TEST_CASE("average rank stays within bounds and respects dominance") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    MetricTable t;
    const std::size_t n = 2 + rng() % 12;
    for (std::size_t i = 0; i < n; ++i) t.rows.push_back({"s" + std::to_string(i), {{"x", u(rng)}, {"y", u(rng)}}});
    // a system better on both columns than all others ranks 1
    t.rows.push_back({"top", {{"x", 2.0}, {"y", 2.0}}});
    const auto r = average_rank(t, {"x", "y"}, {true, true});
    CHECK(r.at("top") == 1.0);
    double total = 0;
    for (const auto& [id, v] : r) {
      CHECK(v >= 1.0);
      CHECK(v <= static_cast<double>(n + 1));
      total += v;
    }
    // ranks in each column sum to n(n+1)/2
    CHECK_THAT(total, WithinAbs((n + 1) * (n + 2) / 2.0, 1e-9));
  }
}

TEST_CASE("combining scores") {
  CHECK_THAT(combine_scores(0.8, 0.6, 0.9), WithinAbs((0.8 + 0.6 + 2 * 0.9) / 4, 1e-12));
  CHECK_THAT(combine_scores(0.8, 0.6, std::nullopt), WithinAbs(0.7, 1e-12));
  CHECK_THAT(combine_scores(0.8, 0.6, std::nullopt, {3, 1, 2}), WithinAbs(0.75, 1e-12));
  CHECK_THAT(combine_scores(0.8, 0.6, std::nullopt, {0, 0, 1}), WithinAbs(0.7, 1e-12));
  CHECK_THROWS_AS(combine_scores(0.8, 0.6, 0.5, {-1, 1, 1}), ArgumentError);
  CHECK_THROWS_AS(combine_scores(0.8, 0.6, 0.5, {0, 0, 0}), ArgumentError);
}

TEST_CASE("ranking candidates orders by combined score then id") {
  const std::vector<ScoredCandidate> scored{
      {"b", {0.9, 0.9, 10, 1}, std::nullopt},
      {"a", {0.9, 0.9, 10, 1}, std::nullopt},
      {"c", {0.2, 0.3, 10, 1}, std::nullopt},
      {"d", {0.5, 0.5, 10, 1}, 1.0},
  };
  const auto r = rank_scored("conv", scored);
  REQUIRE(r.entries.size() == 4);
  // d: (0.5 + 0.5 + 2) / 4 = 0.75 < 0.9
  CHECK(r.winner().translator_id == "a");
  CHECK(r.entries[1].translator_id == "b");
  CHECK(r.entries[2].translator_id == "d");
  CHECK(r.entries[3].translator_id == "c");
  CHECK_THROWS_AS(rank_scored("conv", {}), ArgumentError);
}

TEST_CASE("win probability") {
  CHECK_THAT(bt_prob(0, 0), WithinAbs(0.5, 1e-15));
  CHECK_THAT(bt_prob(std::log(3.0), 0), WithinAbs(0.75, 1e-15));
  CHECK_THAT(bt_prob(800, 0), WithinAbs(1.0, 1e-15));
  CHECK_THAT(bt_prob(0, 800), WithinAbs(0.0, 1e-15));
  CHECK_THAT(bt_prob(1.3, -0.4) + bt_prob(-0.4, 1.3), WithinAbs(1.0, 1e-15));
}

TEST_CASE("two-system fit has the closed form") {
  // 3 wins against 1: maximum likelihood puts P = 3/4, so the gap is ln 3.
  const auto fit = bt_fit(pairs({{"A", "B", 3}, {"B", "A", 1}}), {0.0, 1e-13, 10000});
  CHECK(fit.converged);
  CHECK_THAT(fit.scores.at("A") - fit.scores.at("B"), WithinAbs(std::log(3.0), 1e-9));
  CHECK_THAT(bt_prob(fit.scores.at("A"), fit.scores.at("B")), WithinAbs(0.75, 1e-9));
  CHECK_THAT(fit.scores.at("A") + fit.scores.at("B"), WithinAbs(0.0, 1e-12));
  // with smoothing: (3 + e) / (1 + e)
  const auto smooth = bt_fit(pairs({{"A", "B", 3}, {"B", "A", 1}}));
  CHECK_THAT(smooth.scores.at("A") - smooth.scores.at("B"), WithinAbs(std::log(3.5 / 1.5), 1e-8));
}

TEST_CASE("log-likelihood never decreases") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PreferenceRecord> prefs;
    const int n = 3 + static_cast<int>(rng() % 6);
    for (int k = 0; k < 40; ++k) {
      const int i = static_cast<int>(rng() % n);
      int j = static_cast<int>(rng() % n);
      if (i == j) j = (j + 1) % n;
      prefs.push_back({"s" + std::to_string(i), "s" + std::to_string(j), 1 + rng() % 5});
    }
    const auto fit = bt_fit(prefs, {0.5, 1e-10, 500});
    REQUIRE(fit.log_likelihood.size() >= 2);
    for (std::size_t k = 1; k < fit.log_likelihood.size(); ++k) {
      CHECK(fit.log_likelihood[k] >= fit.log_likelihood[k - 1] - 1e-9);
    }
  }
}

TEST_CASE("fit recovers simulated strengths") {
  const std::map<std::string, double> truth{{"p", 1.0}, {"q", 0.3}, {"r", -0.2}, {"s", -1.1}};
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<PreferenceRecord> prefs;
  for (auto i = truth.begin(); i != truth.end(); ++i) {
    for (auto j = std::next(i); j != truth.end(); ++j) {
      const double p = bt_prob(i->second, j->second);
      std::size_t wi = 0;
      for (int k = 0; k < 1000; ++k) wi += u(rng) < p;
      prefs.push_back({i->first, j->first, wi});
      prefs.push_back({j->first, i->first, 1000 - wi});
    }
  }
  const auto fit = bt_fit(prefs, {0.0, 1e-12, 10000});
  CHECK(fit.converged);
  const double mean = (1.0 + 0.3 - 0.2 - 1.1) / 4;
  for (const auto& [id, s] : truth) {
    INFO(id);
    CHECK_THAT(fit.scores.at(id), WithinAbs(s - mean, 0.1));
  }
}

TEST_CASE("disconnected preferences cannot be fit without smoothing") {
  const auto prefs = pairs({{"A", "B", 2}, {"C", "D", 2}});
  CHECK_THROWS_AS(bt_fit(prefs, {0.0, 1e-10, 100}), FitError);
  // A beats everyone and is never beaten: unbounded without smoothing
  CHECK_THROWS_AS(bt_fit(pairs({{"A", "B", 2}, {"B", "C", 1}, {"C", "B", 1}}), {0.0, 1e-10, 100}), FitError);
  CHECK_NOTHROW(bt_fit(prefs));
  CHECK_THROWS_AS(bt_fit(pairs({{"A", "A", 1}})), ValidationError);
  CHECK_THROWS_AS(bt_fit({}), ArgumentError);
  CHECK_THROWS_AS(bt_fit(prefs, {-1.0, 1e-10, 100}), ArgumentError);
}
