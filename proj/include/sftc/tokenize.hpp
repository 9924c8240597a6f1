#pragma once

// Offset-preserving tokenizers used for chunk budgeting and token statistics.
//
// Builtin rule (frozen; tests depend on it): a token is
//   - a maximal run of letters and combining marks, or
//   - a maximal run of decimal digits, or
//   - any other single codepoint,
// together with the run of Unicode whitespace that directly follows it.
// Whitespace at the very start of the text is a token of its own.
// "a b" therefore has two tokens, "a " and "b".
//
// External rule: byte-level BPE from a tokenizer-definition JSON
// (model.vocab + model.merges), applied to GPT-2 style pre-tokens.
// Spans are widened so that none ends inside a UTF-8 sequence.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "sftc/errors.hpp"
#include "sftc/unicode.hpp"
#include "sftc/utf8.hpp"

namespace sftc {

enum class TokenizerKind { kBuiltinRegex, kExternalVocab };

struct TokenizerSpec {
  std::string name = "builtin";
  TokenizerKind kind = TokenizerKind::kBuiltinRegex;
  std::optional<std::filesystem::path> vocab_path;
};

struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive

  std::size_t size() const { return end - start; }
  bool operator==(const TokenSpan&) const = default;
};

namespace detail {

enum class CharClass { kSpace, kWord, kDigit, kOther };

inline CharClass char_class(char32_t cp) {
  if (unicode::is_whitespace(cp)) return CharClass::kSpace;
  const auto cat = unicode::properties(cp).category;
  if (cat == unicode::CategoryBucket::kLetter || cat == unicode::CategoryBucket::kMark) return CharClass::kWord;
  if (cat == unicode::CategoryBucket::kDecimalNumber) return CharClass::kDigit;
  return CharClass::kOther;
}

inline std::vector<TokenSpan> builtin_tokenize(std::string_view text) {
  std::vector<TokenSpan> spans;
  std::size_t pos = 0;
  auto run = [&](auto pred) {
    while (pos < text.size()) {
      const auto d = utf8::decode(text, pos);
      if (!pred(char_class(d.cp))) break;
      pos += d.length;
    }
  };
  while (pos < text.size()) {
    const std::size_t start = pos;
    const auto first = utf8::decode(text, pos);
    const auto cls = char_class(first.cp);
    pos += first.length;
    if (cls == CharClass::kWord || cls == CharClass::kDigit) {
      run([cls](CharClass c) { return c == cls; });
    }
    run([](CharClass c) { return c == CharClass::kSpace; });
    spans.push_back({start, pos});
  }
  return spans;
}

// GPT-2 byte to printable-codepoint table.
inline const std::vector<std::string>& byte_symbols() {
  static const std::vector<std::string> table = [] {
    std::vector<std::string> t(256);
    int extra = 0;
    for (int b = 0; b < 256; ++b) {
      const bool printable = (b >= '!' && b <= '~') || (b >= 0xA1 && b <= 0xAC) || (b >= 0xAE && b <= 0xFF);
      t[b] = utf8::encode(printable ? static_cast<char32_t>(b) : static_cast<char32_t>(256 + extra++));
    }
    return t;
  }();
  return table;
}

struct BpeModel {
  bool byte_level = true;
  std::unordered_map<std::string, int> merge_rank;

  static std::string pair_key(std::string_view a, std::string_view b) {
    std::string k = std::to_string(a.size());
    k += ':';
    k += a;
    k += b;
    return k;
  }

  // Pre-tokens: ` ?\p{L}+| ?\p{N}+| ?[^\s\p{L}\p{N}]+|\s+(?!\S)|\s+`
  static std::vector<TokenSpan> pre_tokenize(std::string_view text) {
    std::vector<TokenSpan> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t start = pos;
      auto d = utf8::decode(text, pos);
      auto cls = char_class(d.cp);
      if (cls == CharClass::kSpace) {
        const bool lone_space = d.cp == U' ' && pos + 1 < text.size() &&
                                char_class(utf8::decode(text, pos + 1).cp) != CharClass::kSpace;
        if (!lone_space) {
          std::size_t last = pos;
          std::size_t end = pos;
          while (end < text.size()) {
            const auto e = utf8::decode(text, end);
            if (char_class(e.cp) != CharClass::kSpace) break;
            last = end;
            end += e.length;
          }
          if (end < text.size() && last > start) end = last;
          out.push_back({start, end});
          pos = end;
          continue;
        }
        pos += d.length;
        d = utf8::decode(text, pos);
        cls = char_class(d.cp);
      }
      pos += d.length;
      while (pos < text.size()) {
        const auto e = utf8::decode(text, pos);
        const auto c = char_class(e.cp);
        if (c != cls || c == CharClass::kSpace) break;
        pos += e.length;
      }
      out.push_back({start, pos});
    }
    return out;
  }

  // Returns byte lengths of the BPE pieces of one pre-token.
  std::vector<std::size_t> encode_word(std::string_view word) const {
    std::vector<std::string> symbols;
    std::vector<std::size_t> bytes;
    if (byte_level) {
      const auto& table = byte_symbols();
      for (unsigned char b : word) {
        symbols.push_back(table[b]);
        bytes.push_back(1);
      }
    } else {
      utf8::for_each(word, [&](char32_t, std::size_t off, std::size_t len) {
        symbols.emplace_back(word.substr(off, len));
        bytes.push_back(len);
      });
    }
    while (symbols.size() > 1) {
      int best = -1;
      std::size_t at = 0;
      for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
        auto it = merge_rank.find(pair_key(symbols[i], symbols[i + 1]));
        if (it != merge_rank.end() && (best < 0 || it->second < best)) {
          best = it->second;
          at = i;
        }
      }
      if (best < 0) break;
      // Merge every occurrence of the best pair, left to right.
      const std::string a = symbols[at];
      const std::string b = symbols[at + 1];
      std::vector<std::string> next_symbols;
      std::vector<std::size_t> next_bytes;
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i + 1 < symbols.size() && symbols[i] == a && symbols[i + 1] == b) {
          next_symbols.push_back(a + b);
          next_bytes.push_back(bytes[i] + bytes[i + 1]);
          ++i;
        } else {
          next_symbols.push_back(std::move(symbols[i]));
          next_bytes.push_back(bytes[i]);
        }
      }
      symbols = std::move(next_symbols);
      bytes = std::move(next_bytes);
    }
    return bytes;
  }

  std::vector<TokenSpan> tokenize(std::string_view text) const {
    std::vector<TokenSpan> spans;
    for (const auto& word : pre_tokenize(text)) {
      std::size_t off = word.start;
      for (auto len : encode_word(text.substr(word.start, word.size()))) {
        spans.push_back({off, off + len});
        off += len;
      }
    }
    // Keep spans on codepoint boundaries.
    std::vector<TokenSpan> aligned;
    for (const auto& s : spans) {
      if (!aligned.empty() && aligned.back().end == s.start && s.start < text.size() &&
          utf8::is_continuation(static_cast<unsigned char>(text[s.start]))) {
        aligned.back().end = s.end;
      } else {
        aligned.push_back(s);
      }
    }
    return aligned;
  }

  static std::shared_ptr<const BpeModel> load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read tokenizer file " + path.string());
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("tokenizer file " + path.string() + " is not valid JSON: " + e.what());
    }
    const auto model = doc.find("model");
    if (model == doc.end() || !model->is_object()) throw ConfigError(path.string() + ": missing 'model' object");
    if (auto t = model->find("type"); t != model->end() && *t != "BPE") {
      throw ConfigError(path.string() + ": only BPE models are supported");
    }
    const auto vocab = model->find("vocab");
    const auto merges = model->find("merges");
    if (vocab == model->end() || !vocab->is_object()) throw ConfigError(path.string() + ": missing model.vocab");
    if (merges == model->end() || !merges->is_array()) throw ConfigError(path.string() + ": missing model.merges");

    auto m = std::make_shared<BpeModel>();
    m->byte_level = doc.dump().find("\"ByteLevel\"") != std::string::npos;
    int rank = 0;
    for (const auto& entry : *merges) {
      std::string a, b;
      if (entry.is_string()) {
        const auto s = entry.get<std::string>();
        const auto sp = s.find(' ');
        if (sp == std::string::npos) throw ConfigError(path.string() + ": malformed merge '" + s + "'");
        a = s.substr(0, sp);
        b = s.substr(sp + 1);
      } else if (entry.is_array() && entry.size() == 2 && entry[0].is_string() && entry[1].is_string()) {
        a = entry[0].get<std::string>();
        b = entry[1].get<std::string>();
      } else {
        throw ConfigError(path.string() + ": malformed merge entry");
      }
      m->merge_rank.try_emplace(pair_key(a, b), rank++);
    }
    return m;
  }
};

}  // namespace detail

// Immutable once constructed; safe to share across threads.
class Tokenizer {
 public:
  Tokenizer() = default;

  static Tokenizer load(const TokenizerSpec& spec) {
    Tokenizer t;
    t.name_ = spec.name;
    if (spec.kind == TokenizerKind::kExternalVocab) {
      if (!spec.vocab_path) throw ConfigError("tokenizer '" + spec.name + "' needs a vocab path");
      t.bpe_ = detail::BpeModel::load(*spec.vocab_path);
    }
    return t;
  }

  const std::string& name() const { return name_; }
  bool is_builtin() const { return !bpe_; }

  std::vector<TokenSpan> tokenize(std::string_view text) const {
    return bpe_ ? bpe_->tokenize(text) : detail::builtin_tokenize(text);
  }

  std::size_t count_tokens(std::string_view text) const { return tokenize(text).size(); }

 private:
  std::string name_ = "builtin";
  std::shared_ptr<const detail::BpeModel> bpe_;
};

inline std::vector<TokenSpan> tokenize(std::string_view text, const TokenizerSpec& spec) {
  return Tokenizer::load(spec).tokenize(text);
}

inline std::size_t count_tokens(std::string_view text, const TokenizerSpec& spec) {
  return Tokenizer::load(spec).count_tokens(text);
}

}  // namespace sftc
