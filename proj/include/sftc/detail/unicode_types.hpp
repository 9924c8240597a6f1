#pragma once

#include <cstdint>

namespace sftc::detail {

enum class ScriptBucket : std::uint8_t { kArabic, kInherited, kCommon, kOther };

enum class CategoryBucket : std::uint8_t {
  kLetter,
  kMark,
  kDecimalNumber,
  kOtherNumber,
  kOther,
  kUnassigned,
};

// One run of codepoints sharing the same bucketed properties; the run ends
// where the next entry starts.
struct PropertyRange {
  char32_t first;
  ScriptBucket script;
  bool extensions_include_arabic;
  CategoryBucket category;
};

}  // namespace sftc::detail
