#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sftc/metrics.hpp"
#include "support.hpp"

using namespace sftc;
using Catch::Matchers::WithinAbs;

namespace {

// Independent evaluation: exp(-a|ln r|) == min(r, 1/r)^a.
double factor_oracle(double source, double target, double alpha) {
  if (source == 0 && target == 0) return 1.0;
  if (source == 0 || target == 0) return 0.0;
  const double r = target / source;
  return std::pow(std::min(r, 1.0 / r), alpha);
}

Conversation conv(std::vector<std::pair<Role, std::string>> msgs) {
  Conversation c;
  c.id = "c";
  c.split = "s";
  for (std::size_t i = 0; i < msgs.size(); ++i) c.messages.push_back({msgs[i].first, msgs[i].second, i});
  return c;
}

}  // namespace

TEST_CASE("length ratio hand values") {
  CHECK(language_ratio(LrInputs{2, 1, 10, 10, 1.0}) == Catch::Approx(0.5).margin(1e-12));
  CHECK_THAT(language_ratio(LrInputs{3, 6, 7, 14, 1.5}), WithinAbs(0.35355339059327373, 1e-9));
  CHECK_THAT(language_ratio(LrInputs{1, 4, 5, 5, 1.5}), WithinAbs(0.125, 1e-12));
  CHECK_THAT(language_ratio(LrInputs{4, 1, 5, 5, 1.5}), WithinAbs(0.125, 1e-12));
  CHECK_THAT(language_ratio(LrInputs{1, 9, 1, 1, 1.5}), WithinAbs(1.0 / 27.0, 1e-12));
  CHECK_THAT(language_ratio(LrInputs{10, 10, 100, 125, 1.0}), WithinAbs(0.8, 1e-12));
  CHECK(language_ratio(LrInputs{5, 5, 9, 9, 1.25}) == 1.0);
}

TEST_CASE("length ratio matches an independent power-form oracle") {
  const std::pair<std::size_t, std::size_t> pairs[] = {{1, 1}, {1, 2}, {2, 1}, {3, 7}, {7, 3}, {10, 13},
                                                        {13, 10}, {100, 37}, {1, 1000}, {64, 8}};
  for (double alpha : {1.0, 1.1, 1.25, 1.4, 1.5}) {
    for (auto [wx, wy] : pairs) {
      for (auto [cx, cy] : pairs) {
        const double want = std::min(factor_oracle(wx, wy, alpha), factor_oracle(cx, cy, alpha));
        CHECK_THAT(language_ratio(LrInputs{wx, wy, cx, cy, alpha}), WithinAbs(want, 1e-9));
      }
    }
  }
}

TEST_CASE("length ratio zero-count convention") {
  CHECK(length_ratio_factor(0, 0, 1.25) == 1.0);
  CHECK(length_ratio_factor(0, 3, 1.25) == 0.0);
  CHECK(length_ratio_factor(3, 0, 1.25) == 0.0);
  CHECK(language_ratio("", "") == 1.0);
  CHECK(language_ratio("abc", "") == 0.0);
  // No whitespace on either side: only the character factor matters.
  CHECK_THAT(language_ratio("abcd", "ab", 1.0), WithinAbs(0.5, 1e-12));
}

TEST_CASE("length ratio symmetry and monotonicity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> count(1, 500);
  std::uniform_real_distribution<double> a(1.0, 1.5);
  for (int i = 0; i < 2000; ++i) {
    const auto x = count(rng), y = count(rng), u = count(rng), v = count(rng);
    const double alpha = a(rng);
    CHECK(language_ratio(LrInputs{x, y, u, v, alpha}) == Catch::Approx(language_ratio(LrInputs{y, x, v, u, alpha})));
    const double lr = language_ratio(LrInputs{x, y, u, v, alpha});
    CHECK(lr >= 0.0);
    CHECK(lr <= 1.0);
    if (x != y || u != v) CHECK(language_ratio(LrInputs{x, y, u, v, alpha + 0.1}) <= lr);
  }
  double prev = 1.0;
  for (std::size_t t = 10; t < 100; ++t) {
    const double lr = language_ratio(LrInputs{10, t, 10, 10, 1.25});
    CHECK(lr <= prev);
    prev = lr;
  }
}

TEST_CASE("length counts use Unicode whitespace") {
  const auto c = length_counts("a b c　d\n");
  CHECK(c.whitespace == 4);
  CHECK(c.non_whitespace == 4);
  CHECK(language_ratio("مرحبا بالعالم", "مرحبا بالعالم") == 1.0);
  CHECK_THROWS_AS(language_ratio(LrInputs{1, 1, 1, 1, 0.0}), ArgumentError);
}

TEST_CASE("whitelist stripping examples") {
  CHECK(strip_whitelisted("زر https://a.b الآن") == "زر  الآن");
  CHECK(strip_whitelisted("no specials") == "no specials");
  CHECK(strip_whitelisted("x `code` y") == "x  y");
  CHECK(strip_whitelisted("mail me: a.b@example.com ok") == "mail me:  ok");
  CHECK(strip_whitelisted("see www.example.org/x?y now") == "see  now");
  CHECK(strip_whitelisted("a ```\nint x;\n``` b") == "a  b");
  CHECK(strip_whitelisted("a ```\nunterminated") == "a ");
  CHECK(strip_whitelisted("m $x^2$ n") == "m  n");
  CHECK(strip_whitelisted("m $$x$$ n") == "m  n");
  CHECK(strip_whitelisted("m \\(x\\) n \\[y\\] o") == "m  n  o");
  CHECK(strip_whitelisted("m \\[ unterminated") == "m ");
  CHECK(strip_whitelisted("m $$ unterminated") == "m ");
  // Currency is not math.
  CHECK(strip_whitelisted("costs $5 and $10 today") == "costs $5 and $10 today");
  CHECK(strip_whitelisted("pay $ 5 now") == "pay $ 5 now");
  // Unclosed inline code stays literal.
  CHECK(strip_whitelisted("a `b c") == "a `b c");
  // Any RFC 3986 scheme counts, not only http.
  CHECK(strip_whitelisted("xhttp://a.b") == "");
  CHECK(strip_whitelisted("git+ssh://h/r ok") == " ok");
  CHECK(strip_whitelisted("ftp://host/x y") == " y");
}

TEST_CASE("stripping is idempotent") {
  std::mt19937_64 rng(11);
  const std::string pieces[] = {"`", "```", "$", "$$", "\\(", "\\)", "\\[", "\\]", "http://", "www.", "@", ".com",
                                " ", "a", "ب", "1", "\n", "x@y.org", "https://a.b/c"};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pieces) - 1);
  std::uniform_int_distribution<int> len(0, 40);
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += pieces[pick(rng)];
    const auto once = strip_whitelisted(s);
    CHECK(strip_whitelisted(once) == once);
  }
  for (int i = 0; i < 2000; ++i) {
    const auto s = testing::random_utf8(rng, 60);
    const auto once = strip_whitelisted(s);
    CHECK(strip_whitelisted(once) == once);
  }
}

TEST_CASE("character classification examples") {
  CHECK(classify_char(U'ب') == ScriptClass::kArabic);
  CHECK(classify_char(U'7') == ScriptClass::kAsciiDigit);
  CHECK(classify_char(U'٧') == ScriptClass::kArabic);
  CHECK(classify_char(U'۴') == ScriptClass::kArabic);
  CHECK(classify_char(U'َ', ScriptClass::kArabic) == ScriptClass::kArabic);
  CHECK(classify_char(U'َ') == ScriptClass::kIgnore);
  CHECK(classify_char(U'́', ScriptClass::kOtherLetter) == ScriptClass::kOtherLetter);
  CHECK(classify_char(U'a') == ScriptClass::kOtherLetter);
  CHECK(classify_char(U'Ж') == ScriptClass::kOtherLetter);
  CHECK(classify_char(U'漢') == ScriptClass::kOtherLetter);
  CHECK(classify_char(U' ') == ScriptClass::kIgnore);
  CHECK(classify_char(U'،') == ScriptClass::kIgnore);  // Arabic comma is punctuation
  CHECK(classify_char(U'ﭐ') == ScriptClass::kArabic);
  CHECK(classify_char(U'ﻼ') == ScriptClass::kArabic);
  CHECK(classify_char(U'﻿') == ScriptClass::kIgnore);  // BOM in the presentation block
  CHECK(classify_char(U'ـ') == ScriptClass::kArabic);  // tatweel, Arabic by extension
  CHECK(classify_char(U'०') == ScriptClass::kIgnore);  // Devanagari digit
}

TEST_CASE("script tallies and purity") {
  const std::string text = "مرحبا بكما abcdefgh 123";
  CHECK(tally_scripts(text) == ScriptTally{9, 8, 3});
  CHECK(tally_scripts(text).arabic_ratio() == Catch::Approx(0.45));
  CHECK_THAT(script_purity(text), WithinAbs(0.5, 1e-12));
  CHECK(script_purity("مرحبا بالعالم") == 1.0);
  CHECK(script_purity("abc123") == 0.0);
  CHECK(script_purity("") == 1.0);
  CHECK(script_purity("... !!!") == 1.0);
  // Marks follow their base.
  CHECK(tally_scripts("بَ") == ScriptTally{2, 0, 0});
  CHECK(tally_scripts("َب") == ScriptTally{1, 0, 0});
  // Whitelisted spans do not count.
  CHECK(script_purity("مرحبا `code here` https://example.com/abc") == 1.0);
  CHECK_THROWS_AS(script_purity("x", {0.0}), ArgumentError);
  CHECK_THROWS_AS(script_purity("x", {1.5}), ArgumentError);
}

TEST_CASE("purity saturates at tau") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> n(0, 60);
  for (int i = 0; i < 3000; ++i) {
    const int a = n(rng), l = n(rng), d = n(rng);
    std::string s;
    for (int k = 0; k < a; ++k) s += "ب";
    s += ' ';
    for (int k = 0; k < l; ++k) s += 'x';
    s += ' ';
    for (int k = 0; k < d; ++k) s += '4';
    const int denom = a + l + d;
    const double asr = denom == 0 ? 1.0 : static_cast<double>(a) / denom;
    const double scr = script_purity(s);
    if (asr >= 0.9) {
      CHECK(scr == 1.0);
    } else {
      CHECK_THAT(scr, WithinAbs(asr / 0.9, 1e-12));
    }
  }
}

TEST_CASE("CJK detection") {
  CHECK_FALSE(contains_cjk("hello"));
  CHECK(contains_cjk("漢"));
  CHECK(contains_cjk("abc \U00020000"));
  CHECK(contains_cjk("豈"));
  CHECK_FALSE(contains_cjk("مرحبا hello"));
  CHECK_FALSE(contains_cjk("かな"));  // kana are not ideographs
}

TEST_CASE("per-example scores") {
  Tokenizer tok;
  const auto src = conv({{Role::kUser, "مرحبا بالعالم"}, {Role::kAssistant, "أهلا وسهلا"}});
  const auto q = score_example(src, Candidate{"c", "t", src}, {}, tok);
  CHECK(q.lr == 1.0);
  CHECK(q.scr == 1.0);
  CHECK(q.turns == 2);
  CHECK(q.tokens == tok.count_tokens("مرحبا بالعالم") + tok.count_tokens("أهلا وسهلا"));

  auto empty = src;
  empty.messages[1].content = "";
  const auto qe = score_example(src, Candidate{"c", "t", empty}, {}, tok);
  CHECK(qe.lr < 1.0);
  const auto both_empty = conv({{Role::kUser, ""}});
  CHECK(score_example(both_empty, Candidate{"c", "t", both_empty}, {}, tok).lr == 1.0);

  const auto one = conv({{Role::kUser, "abc def"}});
  const auto blank = conv({{Role::kUser, ""}});
  CHECK(score_example(one, Candidate{"c", "t", blank}, {}, tok).lr == 0.0);

  auto wrong = src;
  wrong.messages.pop_back();
  CHECK_THROWS_AS(score_example(src, Candidate{"c", "t", wrong}, {}, tok), ValidationError);
}
