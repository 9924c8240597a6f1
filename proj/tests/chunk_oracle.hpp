#pragma once

// Brute-force chunk planner used as an oracle for plan_chunks.

#include <algorithm>
#include <cstdlib>
#include <string_view>
#include <vector>

#include "sftc/chunking.hpp"

namespace testing {

using sftc::BoundaryKind;
using sftc::ChunkPolicy;
using sftc::TokenSpan;
namespace unicode = sftc::unicode;
namespace utf8 = sftc::utf8;

// Boundary scan written against the raw token text, separate from the planner.
inline bool ends_sentence(std::string_view text, const TokenSpan& t) {
  for (std::size_t i = t.start; i < t.end; ++i) {
    const char c = text[i];
    if (c == '.' || c == '?' || c == '!') return true;
    if (c == '\n' && i > 0 && text[i - 1] == '\n') return true;
  }
  const auto s = text.substr(t.start, t.size());
  return s.find("؟") != std::string_view::npos || s.find("۔") != std::string_view::npos;
}

inline bool has_space(std::string_view text, const TokenSpan& t) {
  bool found = false;
  utf8::for_each(text.substr(t.start, t.size()), [&](char32_t cp, std::size_t, std::size_t) {
    if (unicode::is_whitespace(cp)) found = true;
  });
  return found;
}

struct OracleCut {
  std::size_t end;
  BoundaryKind kind;
};

// Every candidate in the window is scored; the closest to the ideal wins,
// the earlier one on a tie.
inline std::vector<OracleCut> oracle_plan(std::string_view text, const std::vector<TokenSpan>& toks, const ChunkPolicy& p) {
  std::vector<OracleCut> out;
  const std::size_t n = toks.size();
  std::size_t pos = 0;
  while (n - pos > p.target_tokens) {
    const long ideal = static_cast<long>(pos + p.target_tokens);
    const long lo = ideal - static_cast<long>(p.window_tokens);
    const long hi = static_cast<long>(std::min({pos + p.target_tokens + p.window_tokens, pos + p.hard_cap_tokens, n}));
    auto best = [&](auto pred) {
      long pick = -1;
      for (long k = lo; k <= hi; ++k) {
        if (k <= static_cast<long>(pos) || !pred(toks[k - 1])) continue;
        if (pick < 0 || std::labs(k - ideal) < std::labs(pick - ideal)) pick = k;
      }
      return pick;
    };
    long cut = best([&](const TokenSpan& t) { return ends_sentence(text, t); });
    BoundaryKind kind = BoundaryKind::kSentence;
    if (cut < 0) {
      cut = best([&](const TokenSpan& t) { return has_space(text, t); });
      kind = BoundaryKind::kWhitespace;
    }
    if (cut < 0) {
      cut = ideal;
      kind = BoundaryKind::kHard;
    }
    out.push_back({static_cast<std::size_t>(cut), kind});
    pos = static_cast<std::size_t>(cut);
  }
  out.push_back({n, BoundaryKind::kEndOfText});
  return out;
}

}  // namespace testing
