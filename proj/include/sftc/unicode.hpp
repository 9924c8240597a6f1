#pragma once

#include <algorithm>
#include <string_view>

#include "sftc/detail/unicode_data.hpp"
#include "sftc/detail/unicode_types.hpp"

namespace sftc::unicode {

using detail::CategoryBucket;
using detail::ScriptBucket;

inline constexpr std::string_view kVersion = detail::kUnicodeVersion;

struct Properties {
  ScriptBucket script;
  bool extensions_include_arabic;
  CategoryBucket category;
};

inline Properties properties(char32_t cp) {
  const auto& table = detail::kPropertyRanges;
  auto it = std::upper_bound(table.begin(), table.end(), cp,
                             [](char32_t c, const detail::PropertyRange& r) { return c < r.first; });
  if (it == table.begin() || cp > 0x10FFFF) return {ScriptBucket::kOther, false, CategoryBucket::kUnassigned};
  --it;
  return {it->script, it->extensions_include_arabic, it->category};
}

// The White_Space property; stable since Unicode 6.3.
inline constexpr bool is_whitespace(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

inline bool is_letter(char32_t cp) { return properties(cp).category == CategoryBucket::kLetter; }
inline bool is_mark(char32_t cp) { return properties(cp).category == CategoryBucket::kMark; }
inline bool is_decimal_digit(char32_t cp) {
  return properties(cp).category == CategoryBucket::kDecimalNumber;
}

}  // namespace sftc::unicode
