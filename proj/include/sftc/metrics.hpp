#pragma once

// Intrinsic translation-quality signals: Language Ratio (length isometry of
// source and target) and Script Purity (share of Arabic-script characters
// after whitelisted spans are removed), plus the CJK contamination check.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sftc/corpus.hpp"
#include "sftc/errors.hpp"
#include "sftc/tokenize.hpp"
#include "sftc/unicode.hpp"
#include "sftc/utf8.hpp"

namespace sftc {

inline constexpr double kDefaultAlpha = 1.25;
inline constexpr double kDefaultTau = 0.90;

// ---------------------------------------------------------------------------
// Language Ratio

struct LengthCounts {
  std::size_t whitespace = 0;
  std::size_t non_whitespace = 0;
};

inline LengthCounts length_counts(std::string_view text) {
  LengthCounts c;
  utf8::for_each(text, [&](char32_t cp, std::size_t, std::size_t) {
    if (unicode::is_whitespace(cp)) {
      ++c.whitespace;
    } else {
      ++c.non_whitespace;
    }
  });
  return c;
}

struct LrInputs {
  std::size_t source_whitespace = 0;
  std::size_t target_whitespace = 0;
  std::size_t source_chars = 0;
  std::size_t target_chars = 0;
  double alpha = kDefaultAlpha;
};

// exp(-alpha * |log(target/source)|); 1 when both are zero, 0 when only one is.
inline double length_ratio_factor(std::size_t source, std::size_t target, double alpha) {
  if (source == 0 && target == 0) return 1.0;
  if (source == 0 || target == 0) return 0.0;
  const double log_ratio = std::log(static_cast<double>(target) / static_cast<double>(source));
  return std::exp(-alpha * std::abs(log_ratio));
}

inline double language_ratio(const LrInputs& in) {
  if (!(in.alpha > 0.0)) throw ArgumentError("alpha must be positive");
  return std::min(length_ratio_factor(in.source_whitespace, in.target_whitespace, in.alpha),
                  length_ratio_factor(in.source_chars, in.target_chars, in.alpha));
}

inline double language_ratio(std::string_view source, std::string_view target, double alpha = kDefaultAlpha) {
  const auto s = length_counts(source);
  const auto t = length_counts(target);
  return language_ratio(LrInputs{s.whitespace, t.whitespace, s.non_whitespace, t.non_whitespace, alpha});
}

// ---------------------------------------------------------------------------
// Whitelist stripping

namespace detail {

inline bool is_ascii_alnum(unsigned char b) { return std::isalnum(b) != 0 && b < 0x80; }

inline bool is_email_local(unsigned char b) {
  return is_ascii_alnum(b) || b == '.' || b == '_' || b == '%' || b == '+' || b == '-';
}

inline bool is_domain_char(unsigned char b) { return is_ascii_alnum(b) || b == '.' || b == '-'; }

inline bool starts_with_ci(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[pos + i])) != prefix[i]) return false;
  }
  return true;
}

inline std::size_t skip_to_whitespace(std::string_view s, std::size_t pos) {
  while (pos < s.size()) {
    const auto d = utf8::decode(s, pos);
    if (unicode::is_whitespace(d.cp)) break;
    pos += d.length;
  }
  return pos;
}

// End of a URL starting at `pos`, or npos.
inline std::size_t match_url(std::string_view s, std::size_t pos) {
  if (starts_with_ci(s, pos, "www.")) return skip_to_whitespace(s, pos);
  if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) return std::string_view::npos;
  std::size_t i = pos + 1;
  while (i < s.size()) {
    const auto b = static_cast<unsigned char>(s[i]);
    if (!(is_ascii_alnum(b) || b == '+' || b == '.' || b == '-')) break;
    ++i;
  }
  if (s.substr(i, 3) != "://") return std::string_view::npos;
  return skip_to_whitespace(s, i + 3);
}

// End of an email address whose local part starts at `pos`, or npos.
inline std::size_t match_email(std::string_view s, std::size_t pos) {
  std::size_t i = pos;
  while (i < s.size() && is_email_local(static_cast<unsigned char>(s[i]))) ++i;
  if (i == pos || i >= s.size() || s[i] != '@') return std::string_view::npos;
  std::size_t j = i + 1;
  while (j < s.size() && is_domain_char(static_cast<unsigned char>(s[j]))) ++j;
  while (j > i + 1 && (s[j - 1] == '.' || s[j - 1] == '-')) --j;
  const auto domain = s.substr(i + 1, j - i - 1);
  const auto dot = domain.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return std::string_view::npos;
  const auto tld = domain.substr(dot + 1);
  if (tld.size() < 2) return std::string_view::npos;
  for (unsigned char b : tld) {
    if (!std::isalpha(b)) return std::string_view::npos;
  }
  return j;
}

// Single-dollar math: the closing `$` must follow within this many characters.
inline constexpr std::size_t kInlineMathReach = 200;

inline std::size_t match_inline_math(std::string_view s, std::size_t pos) {
  // `$` followed by whitespace or a digit-led closing is treated as currency.
  if (pos + 1 >= s.size() || std::isspace(static_cast<unsigned char>(s[pos + 1])) || s[pos + 1] == '$') {
    return std::string_view::npos;
  }
  std::size_t chars = 0;
  for (std::size_t i = pos + 1; i < s.size() && chars <= kInlineMathReach;) {
    if (s[i] == '$') {
      const bool space_before = std::isspace(static_cast<unsigned char>(s[i - 1])) != 0;
      const bool digit_after = i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]));
      if (space_before || digit_after) return std::string_view::npos;
      return i + 1;
    }
    i += utf8::decode(s, i).length;
    ++chars;
  }
  return std::string_view::npos;
}

inline std::size_t find_close(std::string_view s, std::size_t from, std::string_view close) {
  const auto at = s.find(close, from);
  return at == std::string_view::npos ? s.size() : at + close.size();
}

inline std::string strip_once(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const bool word_start = i == 0 || !is_email_local(static_cast<unsigned char>(s[i - 1]));
    if (s.compare(i, 3, "```") == 0) {
      i = find_close(s, i + 3, "```");
      continue;
    }
    if (c == '`') {
      const auto close = s.find('`', i + 1);
      if (close != std::string_view::npos) {
        i = close + 1;
        continue;
      }
    }
    if (s.compare(i, 2, "$$") == 0) {
      i = find_close(s, i + 2, "$$");
      continue;
    }
    if (c == '$') {
      if (const auto end = match_inline_math(s, i); end != std::string_view::npos) {
        i = end;
        continue;
      }
    }
    if (s.compare(i, 2, "\\(") == 0) {
      i = find_close(s, i + 2, "\\)");
      continue;
    }
    if (s.compare(i, 2, "\\[") == 0) {
      i = find_close(s, i + 2, "\\]");
      continue;
    }
    if (word_start) {
      if (const auto end = match_url(s, i); end != std::string_view::npos) {
        i = end;
        continue;
      }
      if (const auto end = match_email(s, i); end != std::string_view::npos) {
        i = end;
        continue;
      }
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

}  // namespace detail

// Removes URLs, emails, fenced and inline code, and math spans. Applied until
// nothing changes, so the result is a fixpoint. Unterminated fences and math
// openers other than a single `$` run to the end of the text.
inline std::string strip_whitelisted(std::string_view text) {
  std::string cur(text);
  for (;;) {
    auto next = detail::strip_once(cur);
    if (next.size() == cur.size()) return next;
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Script classification

enum class ScriptClass { kArabic, kOtherLetter, kAsciiDigit, kIgnore };

inline std::string_view to_string(ScriptClass c) {
  switch (c) {
    case ScriptClass::kArabic: return "arabic";
    case ScriptClass::kOtherLetter: return "other_letter";
    case ScriptClass::kAsciiDigit: return "ascii_digit";
    case ScriptClass::kIgnore: return "ignore";
  }
  return "?";
}

inline bool is_arabic_indic_digit(char32_t cp) {
  return (cp >= 0x0660 && cp <= 0x0669) || (cp >= 0x06F0 && cp <= 0x06F9);
}

inline bool is_arabic_presentation_form(char32_t cp) {
  return (cp >= 0xFB50 && cp <= 0xFDFF) || (cp >= 0xFE70 && cp <= 0xFEFF);
}

// Combining marks take the class of the preceding base character.
inline ScriptClass classify_char(char32_t cp, std::optional<ScriptClass> prev_base_class = std::nullopt) {
  using unicode::CategoryBucket;
  using unicode::ScriptBucket;
  if (cp >= U'0' && cp <= U'9') return ScriptClass::kAsciiDigit;
  if (is_arabic_indic_digit(cp)) return ScriptClass::kArabic;
  const auto p = unicode::properties(cp);
  if (p.category == CategoryBucket::kMark) return prev_base_class.value_or(ScriptClass::kIgnore);
  const bool letter_or_number = p.category == CategoryBucket::kLetter ||
                                p.category == CategoryBucket::kDecimalNumber ||
                                p.category == CategoryBucket::kOtherNumber;
  if (is_arabic_presentation_form(cp) && letter_or_number) return ScriptClass::kArabic;
  if (p.category != CategoryBucket::kLetter) return ScriptClass::kIgnore;
  if (p.script == ScriptBucket::kArabic || p.extensions_include_arabic) return ScriptClass::kArabic;
  return ScriptClass::kOtherLetter;
}

struct ScriptTally {
  std::size_t arabic = 0;        // A
  std::size_t other_letter = 0;  // L
  std::size_t ascii_digit = 0;   // D

  double arabic_ratio() const {
    const auto denom = arabic + other_letter + ascii_digit;
    return denom == 0 ? 1.0 : static_cast<double>(arabic) / static_cast<double>(denom);
  }
  bool operator==(const ScriptTally&) const = default;
};

// Tallies text as-is; script_purity strips whitelisted spans first.
inline ScriptTally tally_scripts(std::string_view text) {
  ScriptTally t;
  std::optional<ScriptClass> prev_base;
  utf8::for_each(text, [&](char32_t cp, std::size_t, std::size_t) {
    const auto cls = classify_char(cp, prev_base);
    if (!unicode::is_mark(cp)) prev_base = cls;
    switch (cls) {
      case ScriptClass::kArabic: ++t.arabic; break;
      case ScriptClass::kOtherLetter: ++t.other_letter; break;
      case ScriptClass::kAsciiDigit: ++t.ascii_digit; break;
      case ScriptClass::kIgnore: break;
    }
  });
  return t;
}

struct ScrParams {
  double tau = kDefaultTau;
};

inline double script_purity(std::string_view target, const ScrParams& params = {}) {
  if (!(params.tau > 0.0) || params.tau > 1.0) throw ArgumentError("tau must lie in (0, 1]");
  const auto asr = tally_scripts(strip_whitelisted(target)).arabic_ratio();
  return std::min(1.0, asr / params.tau);
}

// ---------------------------------------------------------------------------
// CJK contamination

inline bool is_cjk_ideograph(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF)       // CJK Unified Ideographs
         || (cp >= 0x3400 && cp <= 0x4DBF)    // Extension A
         || (cp >= 0x20000 && cp <= 0x2A6DF)  // Extension B
         || (cp >= 0x2A700 && cp <= 0x2EE5F)  // Extensions C-F, I
         || (cp >= 0x30000 && cp <= 0x323AF)  // Extensions G-H
         || (cp >= 0xF900 && cp <= 0xFAFF)    // Compatibility Ideographs
         || (cp >= 0x2F800 && cp <= 0x2FA1F);  // Compatibility Ideographs Supplement
}

inline bool contains_cjk(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    const auto d = utf8::decode(text, i);
    if (is_cjk_ideograph(d.cp)) return true;
    i += d.length;
  }
  return false;
}

inline bool contains_cjk(const Conversation& c) {
  return std::any_of(c.messages.begin(), c.messages.end(),
                     [](const Message& m) { return contains_cjk(m.content); });
}

// ---------------------------------------------------------------------------
// Per-example scores

struct QualityScore {
  double lr = 0.0;
  double scr = 0.0;
  std::size_t tokens = 0;
  std::size_t turns = 0;

  bool operator==(const QualityScore&) const = default;
};

struct MetricParams {
  double alpha = kDefaultAlpha;
  double tau = kDefaultTau;
};

inline std::string concatenated_content(const Conversation& c) {
  std::string out;
  for (std::size_t i = 0; i < c.messages.size(); ++i) {
    if (i) out += '\n';
    out += c.messages[i].content;
  }
  return out;
}

inline QualityScore score_example(const Conversation& source, const Candidate& candidate, const MetricParams& params,
                                  const Tokenizer& tokenizer) {
  validate_structure(source, candidate.conversation);
  const auto translated = concatenated_content(candidate.conversation);
  QualityScore q;
  q.lr = language_ratio(concatenated_content(source), translated, params.alpha);
  q.scr = script_purity(translated, {params.tau});
  for (const auto& m : candidate.conversation.messages) q.tokens += tokenizer.count_tokens(m.content);
  q.turns = candidate.conversation.messages.size();
  return q;
}

}  // namespace sftc
