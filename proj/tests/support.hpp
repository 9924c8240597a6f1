#pragma once

// Helpers shared by the test binaries.

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <unistd.h>

#include "sftc/corpus.hpp"
#include "sftc/utf8.hpp"

namespace testing {

class TempDir {
 public:
  explicit TempDir(const std::string& tag = "sftc") {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" +
             std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::filesystem::path data_path(const std::string& name) { return std::filesystem::path(SFTC_TEST_DATA) / name; }

// Random valid UTF-8 drawn from a mix of ASCII, Arabic, CJK, marks,
// whitespace and astral codepoints.
inline std::string random_utf8(std::mt19937_64& rng, std::size_t max_codepoints) {
  static const char32_t pool[] = {U'a', U'b', U'Z', U'0', U'7', U' ', U'\n', U'\t', U'.', U'?', U'!', U',',
                                  U'؟', U'۔', U'ب', U'م', U'َ', U'٠', U'漢',
                                  U' ', U'　', U' ', U'\U0001F600', U'\U00020000', U'`', U'$',
                                  U'́', U'‍', U'﻿', U'ﭐ'};
  std::uniform_int_distribution<std::size_t> len(0, max_codepoints);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  std::uniform_int_distribution<int> mode(0, 9);
  std::uniform_int_distribution<std::uint32_t> any(0x20, 0x10FFFF);
  std::string out;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    char32_t cp = pool[pick(rng)];
    if (mode(rng) == 0) {
      do {
        cp = any(rng);
      } while (cp >= 0xD800 && cp <= 0xDFFF);
    }
    sftc::utf8::append(out, cp);
  }
  return out;
}

// Sentences built from a mixed Arabic/Latin word list, `words` words long.
inline std::string random_prose(std::mt19937_64& rng, std::size_t words) {
  static const char* pool[] = {"the", "model", "translates", "every", "turn", "carefully", "مرحبا", "بالعالم",
                               "كتاب", "العربية", "x", "42", "3.14", "`code`", "$x^2$", "https://example.com/a",
                               "naïve", "café", "漢字", "🙂", "(see)", "don't", "e-mail", "٣٤"};
  static const char* seps[] = {" ", " ", " ", " ", ", ", ". ", "? ", "! ", "؟ ", "\n", "\n\n", "\t", "  "};
  std::uniform_int_distribution<std::size_t> w(0, std::size(pool) - 1);
  std::uniform_int_distribution<std::size_t> sp(0, std::size(seps) - 1);
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    out += pool[w(rng)];
    if (i + 1 < words) out += seps[sp(rng)];
  }
  return out;
}

// A conversation with an optional system turn, alternating user/assistant
// turns, assistant think spans and occasional long (multi-chunk) parts.
inline sftc::Conversation random_conversation(std::mt19937_64& rng, const std::string& id) {
  std::uniform_int_distribution<int> turns(1, 6);
  std::uniform_int_distribution<int> coin(0, 9);
  std::uniform_int_distribution<std::size_t> short_len(0, 40);
  std::uniform_int_distribution<std::size_t> long_len(600, 1400);
  auto text = [&] { return random_prose(rng, coin(rng) == 0 ? long_len(rng) : short_len(rng)); };
  sftc::Conversation c;
  c.id = id;
  c.split = coin(rng) < 5 ? "train" : "smol-" + std::to_string(coin(rng));
  if (coin(rng) < 2) c.messages.push_back({sftc::Role::kSystem, text(), 0});
  const int n = turns(rng);
  for (int i = 0; i < n; ++i) {
    const auto role = i % 2 == 0 ? sftc::Role::kUser : sftc::Role::kAssistant;
    std::string content;
    if (role == sftc::Role::kAssistant && coin(rng) < 6) {
      content = "<think>" + text() + "</think>" + text();
    } else if (coin(rng) == 0) {
      content = text() + "<think>" + text() + "</think>";
    } else {
      content = text();
    }
    c.messages.push_back({role, content, c.messages.size()});
  }
  if (coin(rng) < 3) c.messages.push_back({sftc::Role::kTool, "{\"result\": 7}", c.messages.size()});
  if (coin(rng) < 3) c.extra["category"] = coin(rng) < 5 ? "math" : "code";
  return c;
}

}  // namespace testing
