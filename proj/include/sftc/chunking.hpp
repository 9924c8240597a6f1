#pragma once

// Token-budgeted chunking that prefers sentence boundaries, then whitespace,
// then a hard cut.
//
// At each step the ideal cut is `target_tokens` past the chunk start. Cut
// candidates are token offsets k where token k-1 contains a boundary
// character; those within [ideal - window, min(ideal + window, hard_cap)]
// compete and the one closest to the ideal wins, ties going to the earlier
// offset. Sentence candidates (. ? ! ؟ ۔ and the end of a blank line) are
// tried first, then whitespace, then a hard cut at min(ideal, hard_cap).

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sftc/corpus.hpp"
#include "sftc/errors.hpp"
#include "sftc/tokenize.hpp"
#include "sftc/unicode.hpp"
#include "sftc/utf8.hpp"

namespace sftc {

struct ChunkPolicy {
  std::size_t target_tokens = 490;
  std::size_t window_tokens = 50;
  std::size_t hard_cap_tokens = 506;

  void validate() const {
    if (target_tokens == 0) throw ArgumentError("target_tokens must be positive");
    if (target_tokens > hard_cap_tokens) throw ArgumentError("target_tokens must not exceed hard_cap_tokens");
    if (window_tokens >= target_tokens) throw ArgumentError("window_tokens must be smaller than target_tokens");
  }
};

enum class BoundaryKind { kSentence, kWhitespace, kHard, kEndOfText };

inline std::string_view to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::kSentence: return "sentence";
    case BoundaryKind::kWhitespace: return "whitespace";
    case BoundaryKind::kHard: return "hard";
    case BoundaryKind::kEndOfText: return "end-of-text";
  }
  return "?";
}

struct Chunk {
  std::string text;
  std::size_t token_count = 0;
  BoundaryKind boundary_kind = BoundaryKind::kEndOfText;
  std::size_t begin_token = 0;  // offset of the first token in the source

  bool operator==(const Chunk&) const = default;
};

inline bool is_sentence_punct(char32_t cp) {
  return cp == U'.' || cp == U'?' || cp == U'!' || cp == U'؟' || cp == U'۔';
}

namespace detail {

struct TokenBoundaryFlags {
  bool sentence = false;
  bool whitespace = false;
};

inline std::vector<TokenBoundaryFlags> boundary_flags(std::string_view text, const std::vector<TokenSpan>& tokens) {
  std::vector<TokenBoundaryFlags> flags(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    for (std::size_t pos = t.start; pos < t.end;) {
      const auto d = utf8::decode(text, pos);
      if (is_sentence_punct(d.cp)) flags[i].sentence = true;
      if (d.cp == U'\n' && pos > 0 && text[pos - 1] == '\n') flags[i].sentence = true;
      if (unicode::is_whitespace(d.cp)) flags[i].whitespace = true;
      pos += d.length;
    }
  }
  return flags;
}

}  // namespace detail

inline std::vector<Chunk> plan_chunks(std::string_view text, const Tokenizer& tokenizer,
                                      const ChunkPolicy& policy = {}) {
  policy.validate();
  const auto tokens = tokenizer.tokenize(text);
  const auto flags = detail::boundary_flags(text, tokens);
  const std::size_t n = tokens.size();

  std::vector<Chunk> chunks;
  auto emit = [&](std::size_t from, std::size_t to, BoundaryKind kind) {
    const std::size_t b = from < n ? tokens[from].start : text.size();
    const std::size_t e = to < n ? tokens[to].start : text.size();
    chunks.push_back({std::string(text.substr(b, e - b)), to - from, kind, from});
  };

  std::size_t pos = 0;
  while (n - pos > policy.target_tokens) {
    const std::size_t ideal = pos + policy.target_tokens;
    const std::size_t lo = ideal - policy.window_tokens;
    const std::size_t hi = std::min({ideal + policy.window_tokens, pos + policy.hard_cap_tokens, n});
    // Cut offset k is a candidate when token k-1 carries the boundary.
    auto search = [&](auto has_boundary) -> std::size_t {
      const std::size_t reach = std::max(ideal - lo, hi - ideal);
      for (std::size_t d = 0; d <= reach; ++d) {
        if (ideal - d >= lo && has_boundary(flags[ideal - d - 1])) return ideal - d;
        if (d > 0 && ideal + d <= hi && has_boundary(flags[ideal + d - 1])) return ideal + d;
      }
      return 0;
    };
    BoundaryKind kind = BoundaryKind::kSentence;
    std::size_t cut = search([](const detail::TokenBoundaryFlags& f) { return f.sentence; });
    if (cut == 0) {
      kind = BoundaryKind::kWhitespace;
      cut = search([](const detail::TokenBoundaryFlags& f) { return f.whitespace; });
    }
    if (cut == 0) {
      kind = BoundaryKind::kHard;
      cut = pos + std::min(policy.target_tokens, policy.hard_cap_tokens);
    }
    emit(pos, cut, kind);
    pos = cut;
  }
  if (pos < n || chunks.empty()) emit(pos, n, BoundaryKind::kEndOfText);
  return chunks;
}

// Chunk plan for every part of every message of a conversation.
inline ChunkPlan plan_conversation(const Conversation& c, const Tokenizer& tokenizer, const ChunkPolicy& policy = {}) {
  ChunkPlan plan;
  for (std::size_t mi = 0; mi < c.messages.size(); ++mi) {
    auto& mp = plan.emplace_back();
    for (const auto& part :
         split_parts(c.messages[mi].content, "conversation '" + c.id + "' message " + std::to_string(mi))) {
      auto& texts = mp.emplace_back();
      for (auto& ch : plan_chunks(part.text, tokenizer, policy)) texts.push_back(std::move(ch.text));
    }
  }
  return plan;
}

}  // namespace sftc
