#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "sftc/stats.hpp"

using namespace sftc;
using Catch::Matchers::WithinAbs;

namespace {

QualityScore q(double lr, double scr, std::size_t tokens, std::size_t turns) { return {lr, scr, tokens, turns}; }

// Smallest k with k / n >= p / 100, found by counting up.
double p95_oracle(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t k = 1;
  while (100 * k < 95 * v.size()) ++k;
  return v[k - 1];
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::vector<std::string> split_md_row(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line.substr(1));
  std::string cell;
  while (std::getline(ss, cell, '|')) {
    const auto b = cell.find_first_not_of(' ');
    const auto e = cell.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

TEST_CASE("percentiles and medians") {
  CHECK(nearest_rank(std::vector<double>{5}, 95) == 5);
  CHECK(nearest_rank(std::vector<double>{1, 2, 3, 4}, 95) == 4);
  std::vector<double> hundred;
  for (int i = 100; i >= 1; --i) hundred.push_back(i);
  CHECK(nearest_rank(hundred, 95) == 95);
  CHECK(nearest_rank(hundred, 50) == 50);
  CHECK(lower_median(std::vector<std::size_t>{4, 1, 3, 2}) == 2);
  CHECK(lower_median(std::vector<std::size_t>{3, 1, 2}) == 2);
  CHECK_THROWS_AS(nearest_rank(std::vector<double>{}, 95), ArgumentError);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    std::vector<double> v(1 + rng() % 300);
    for (auto& x : v) x = static_cast<double>(rng() % 1000);
    CHECK(nearest_rank(v, 95) == p95_oracle(v));
  }
}

TEST_CASE("aggregating one split") {
  const std::vector<QualityScore> s{q(1.0, 0.5, 100, 2), q(0.5, 1.0, 300, 4), q(0.0, 0.0, 200, 6)};
  const auto st = aggregate_split(s, "train");
  CHECK(st.num_examples == 3);
  CHECK_THAT(st.mean_lr, WithinAbs(0.5, 1e-12));
  CHECK_THAT(st.mean_scr, WithinAbs(0.5, 1e-12));
  CHECK_THAT(st.mean_turns, WithinAbs(4.0, 1e-12));
  CHECK_THAT(st.mean_total_tokens, WithinAbs(200.0, 1e-12));
  CHECK(st.p95_tokens == 300.0);
  CHECK_THROWS_AS(aggregate_split({}, "x"), ArgumentError);
}

TEST_CASE("configuration summary weights splits by size") {
  const std::vector<QualityScore> one{q(1.0, 1.0, 10, 1)};
  const std::vector<QualityScore> three{q(0.6, 0.2, 30, 3), q(0.6, 0.2, 30, 5), q(0.6, 0.2, 30, 7)};
  const std::vector<SplitStats> splits{aggregate_split(one, "a"), aggregate_split(three, "b")};
  const auto c = summarize_config(splits);
  CHECK(c.total_examples == 4);
  CHECK_THAT(c.total_tokens, WithinAbs(100.0, 1e-12));
  CHECK_THAT(c.mean_lr, WithinAbs(0.7, 1e-12));
  CHECK_THAT(c.mean_scr, WithinAbs(0.4, 1e-12));
  CHECK(c.median_turns == 3.0);
  CHECK_THAT(c.mean_tokens, WithinAbs(25.0, 1e-12));
  CHECK(c.p95_tokens == 30.0);
}

TEST_CASE("summary of splits equals statistics of the union") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::vector<QualityScore>> parts(1 + rng() % 4);
    std::vector<QualityScore> all;
    for (auto& p : parts) {
      p.resize(1 + rng() % 50);
      for (auto& x : p) {
        x = q(u(rng), u(rng), rng() % 2000, 1 + rng() % 9);
        all.push_back(x);
      }
    }
    std::vector<SplitStats> stats;
    for (std::size_t i = 0; i < parts.size(); ++i) stats.push_back(aggregate_split(parts[i], "s" + std::to_string(i)));
    const auto c = summarize_config(stats);
    const auto whole = aggregate_split(all, "all");
    CHECK(c.total_examples == all.size());
    CHECK_THAT(c.mean_lr, WithinAbs(whole.mean_lr, 1e-12));
    CHECK_THAT(c.mean_scr, WithinAbs(whole.mean_scr, 1e-12));
    CHECK_THAT(c.mean_tokens, WithinAbs(whole.mean_total_tokens, 1e-9));
    CHECK(c.p95_tokens == whole.p95_tokens);
  }
}

TEST_CASE("filtering by thresholds and script") {
  std::vector<Conversation> ex(4);
  for (std::size_t i = 0; i < ex.size(); ++i) {
    ex[i].id = std::to_string(i);
    ex[i].split = i == 3 ? "lenient" : "train";
    ex[i].messages = {{Role::kUser, "مرحبا", 0}};
  }
  ex[2].messages[0].content = "مرحبا 你好";
  const std::vector<QualityScore> sc{q(0.9, 0.9, 1, 1), q(0.2, 0.9, 1, 1), q(0.9, 0.9, 1, 1), q(0.2, 0.1, 1, 1)};
  FilterPolicy p;
  auto out = apply_filter(ex, sc, p);
  CHECK(out.kept == std::vector<std::size_t>{0});
  REQUIRE(out.rejected.size() == 3);
  CHECK(out.rejected[0].reasons == std::vector<std::string>{"low_lr"});
  CHECK(out.rejected[1].reasons == std::vector<std::string>{"cjk"});
  CHECK(out.rejected[2].reasons == std::vector<std::string>{"low_lr", "low_scr"});

  p.per_split_overrides["lenient"] = {0.1, 0.05};
  p.reject_cjk = false;
  out = apply_filter(ex, sc, p);
  CHECK(out.kept == std::vector<std::size_t>{0, 2, 3});

  // scores exactly at the threshold are kept
  const std::vector<QualityScore> edge{q(0.3, 0.3, 1, 1)};
  CHECK(apply_filter(std::span(ex).first(1), edge, FilterPolicy{}).kept.size() == 1);

  p.thresholds.min_lr = 1.5;
  CHECK_THROWS_AS(apply_filter(ex, sc, p), ConfigError);
  CHECK_THROWS_AS(apply_filter(ex, std::span(sc).first(2), FilterPolicy{}), ArgumentError);
}

TEST_CASE("strata apportionment") {
  StrataPolicy p;
  const std::map<std::string, std::size_t> plenty{{"code", 500}, {"science", 500}, {"math", 500}};
  p.total = 200;
  auto a = allocate_strata(p, plenty);
  CHECK(a.at("code") == 50);
  CHECK(a.at("science") == 50);
  CHECK(a.at("math") == 100);
  p.total = 5;
  a = allocate_strata(p, plenty);
  CHECK(a.at("code") == 1);
  CHECK(a.at("science") == 1);
  CHECK(a.at("math") == 3);
  p.total = 2;
  a = allocate_strata(p, plenty);
  // quotas 0.5 / 0.5 / 1: the tied remainder goes to the earlier category
  CHECK(a.at("code") == 1);
  CHECK(a.at("science") == 0);
  CHECK(a.at("math") == 1);
  CHECK(a.at("code") + a.at("science") + a.at("math") == 2);

  p.total = 200;
  const std::map<std::string, std::size_t> short_science{{"code", 500}, {"science", 10}, {"math", 500}};
  try {
    allocate_strata(p, short_science);
    FAIL("expected a shortfall error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("science") != std::string::npos);
  }
  p.allow_shortfall = true;
  a = allocate_strata(p, short_science);
  CHECK(a.at("science") == 10);
  CHECK(a.at("code") + a.at("math") == 190);
  CHECK(a.at("math") == 127);  // 190 split 1:2 by largest remainder
  CHECK(a.at("code") == 63);

  StrataPolicy bad;
  bad.ratios = {{"x", 0}};
  CHECK_THROWS_AS(allocate_strata(bad, plenty), ArgumentError);
}

TEST_CASE("apportionment sums to the total and stays within one seat of the quota") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    std::vector<std::size_t> w(1 + rng() % 6);
    for (auto& x : w) x = 1 + rng() % 9;
    const std::size_t total = rng() % 1000;
    const auto seats = detail::largest_remainder(w, total);
    const double wsum = std::accumulate(w.begin(), w.end(), 0.0);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double quota = static_cast<double>(total) * static_cast<double>(w[i]) / wsum;
      CHECK(static_cast<double>(seats[i]) >= std::floor(quota) - 1e-9);
      CHECK(static_cast<double>(seats[i]) <= std::ceil(quota) + 1e-9);
      sum += seats[i];
    }
    CHECK(sum == total);
  }
}

TEST_CASE("stratified sampling") {
  std::vector<std::string> cats;
  for (int i = 0; i < 300; ++i) cats.push_back(i % 3 == 0 ? "code" : i % 3 == 1 ? "science" : "math");
  cats.push_back("other");
  StrataPolicy p;
  p.total = 200;
  const auto a = stratified_sample(cats, p, 42);
  const auto b = stratified_sample(cats, p, 42);
  const auto c = stratified_sample(cats, p, 43);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  std::map<std::string, std::size_t> counts;
  for (auto i : a) ++counts[cats[i]];
  CHECK(counts["code"] == 50);
  CHECK(counts["science"] == 50);
  CHECK(counts["math"] == 100);
  CHECK(counts.count("other") == 0);
}

TEST_CASE("stratified sampling draws uniformly within a category") {
  const std::vector<std::string> cats{"code", "code", "code", "code", "math", "math", "science"};
  StrataPolicy p;
  p.ratios = {{"code", 1}};
  p.total = 1;
  std::map<std::size_t, int> hits;
  constexpr int kDraws = 8000;
  for (int s = 0; s < kDraws; ++s) hits[stratified_sample(cats, p, static_cast<std::uint64_t>(s)).at(0)]++;
  REQUIRE(hits.size() == 4);
  double chi2 = 0;
  for (const auto& [i, n] : hits) chi2 += (n - kDraws / 4.0) * (n - kDraws / 4.0) / (kDraws / 4.0);
  CHECK(chi2 < 16.27);  // 3 degrees of freedom, p = 0.001
}

TEST_CASE("report formats") {
  const std::vector<QualityScore> a{q(0.91234, 0.5, 100, 2), q(0.8, 0.25, 51, 3)};
  const std::vector<QualityScore> b{q(0.1, 0.7, 7, 1)};
  const std::vector<SplitStats> st{aggregate_split(b, "test"), aggregate_split(a, "train")};
  ReportHeader h;
  const auto csv = emit_report(st, h, ReportFormat::kCsv);
  const auto md = emit_report(st, h, ReportFormat::kMarkdown, summarize_config(st));
  const auto js = nlohmann::json::parse(emit_report(st, h, ReportFormat::kJson));

  CHECK(csv.find("# alpha=1.25") != std::string::npos);
  CHECK(csv.find("# tau=0.9") != std::string::npos);
  CHECK(csv.find("# unicode=13.0.0") != std::string::npos);
  CHECK(md.find("alpha: 1.25") != std::string::npos);
  CHECK(md.find("## Configuration summary") != std::string::npos);
  CHECK(js.at("columns").size() == 7);

  std::vector<std::vector<std::string>> csv_rows, md_rows;
  std::istringstream cs(csv), ms(md);
  std::string line;
  while (std::getline(cs, line)) {
    if (!line.empty() && line[0] != '#') csv_rows.push_back(split_csv_row(line));
  }
  while (std::getline(ms, line)) {
    if (line.rfind("## ", 0) == 0) break;
    if (line.rfind("| ", 0) == 0) md_rows.push_back(split_md_row(line));
  }
  REQUIRE(csv_rows.size() == 3);
  CHECK(csv_rows == md_rows);
  CHECK(csv_rows[0] == report_columns());
  CHECK(csv_rows[1][0] == "test");  // sorted by split
  CHECK(csv_rows[2] == std::vector<std::string>{"train", "2", "0.8562", "0.3750", "2.50", "75.50", "100.00"});
  CHECK(js.at("rows").at(1).at("Mean LR").get<double>() == 0.8562);
}

TEST_CASE("empty input yields a header-only report") {
  const auto csv = emit_report({}, ReportHeader{}, ReportFormat::kCsv);
  std::istringstream in(csv);
  std::string line, last;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line[0] != '#') ++rows, last = line;
  }
  CHECK(rows == 1);
  CHECK(last.rfind("Split,", 0) == 0);
  const auto md = emit_report({}, ReportHeader{}, ReportFormat::kMarkdown);
  CHECK(md.find("| Split |") != std::string::npos);
  CHECK(parse_report_format("md") == ReportFormat::kMarkdown);
  CHECK_FALSE(parse_report_format("xml").has_value());
}
