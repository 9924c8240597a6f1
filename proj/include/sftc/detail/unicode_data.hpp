// Generated by tools/gen_unicode_data.pl. Do not edit.
// Unicode 13.0.0: Script, Script_Extensions (Arabic membership) and
// General_Category, collapsed to the buckets used by script classification.
#pragma once

#include <array>
#include <cstdint>

#include "sftc/detail/unicode_types.hpp"

namespace sftc::detail {

inline constexpr const char* kUnicodeVersion = "13.0.0";

inline constexpr std::array<PropertyRange, 2131> kPropertyRanges = {{
    {0x00000, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00030, ScriptBucket::kCommon, false, CategoryBucket::kDecimalNumber},
    {0x0003A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00041, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0005B, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00061, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0007B, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x000AA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x000AB, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x000B2, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x000B4, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x000B5, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x000B6, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x000B9, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x000BA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x000BB, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x000BC, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x000BF, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x000C0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x000D7, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x000D8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x000F7, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x000F8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x002B9, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x002C2, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x002C6, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x002D2, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x002E0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x002E5, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x002EA, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x002EC, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x002ED, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x002EE, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x002EF, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00300, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x00370, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00374, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x00375, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00376, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00378, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0037A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0037E, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0037F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00380, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00384, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00385, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00386, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00387, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00388, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0038B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0038C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0038D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0038E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x003A2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x003A3, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x003F6, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x003F7, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00482, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00483, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00485, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x00487, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0048A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00530, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00531, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00557, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00559, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0055A, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00560, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00589, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0058B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0058D, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00590, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00591, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x005BE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x005BF, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x005C0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x005C1, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x005C3, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x005C4, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x005C6, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x005C7, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x005C8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x005D0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x005EB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x005EF, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x005F3, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x005F5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00600, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x00605, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00606, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x0060C, ScriptBucket::kCommon, true, CategoryBucket::kOther},
    {0x0060D, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x00610, ScriptBucket::kArabic, true, CategoryBucket::kMark},
    {0x0061B, ScriptBucket::kCommon, true, CategoryBucket::kOther},
    {0x0061C, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x0061D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0061E, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x0061F, ScriptBucket::kCommon, true, CategoryBucket::kOther},
    {0x00620, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x00640, ScriptBucket::kCommon, true, CategoryBucket::kLetter},
    {0x00641, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x0064B, ScriptBucket::kInherited, true, CategoryBucket::kMark},
    {0x00656, ScriptBucket::kArabic, true, CategoryBucket::kMark},
    {0x00660, ScriptBucket::kArabic, true, CategoryBucket::kDecimalNumber},
    {0x0066A, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x0066E, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x00670, ScriptBucket::kInherited, true, CategoryBucket::kMark},
    {0x00671, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x006D4, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x006D5, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x006D6, ScriptBucket::kArabic, true, CategoryBucket::kMark},
    {0x006DD, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x006DE, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x006DF, ScriptBucket::kArabic, true, CategoryBucket::kMark},
    {0x006E5, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x006E7, ScriptBucket::kArabic, true, CategoryBucket::kMark},
    {0x006E9, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x006EA, ScriptBucket::kArabic, true, CategoryBucket::kMark},
    {0x006EE, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x006F0, ScriptBucket::kArabic, true, CategoryBucket::kDecimalNumber},
    {0x006FA, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x006FD, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x006FF, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x00700, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0070E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0070F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00710, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00711, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00712, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00730, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0074B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0074D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00750, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x00780, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x007A6, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x007B1, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x007B2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x007C0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x007CA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x007EB, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x007F4, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x007F6, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x007FA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x007FB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x007FD, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x007FE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00800, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00816, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0081A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0081B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00824, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00825, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00828, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00829, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0082E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00830, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0083F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00840, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00859, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0085C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0085E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0085F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00860, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0086B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x008A0, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x008B5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x008B6, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x008C8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x008D3, ScriptBucket::kArabic, true, CategoryBucket::kMark},
    {0x008E2, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x008E3, ScriptBucket::kArabic, true, CategoryBucket::kMark},
    {0x00900, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00904, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0093A, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0093D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0093E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00950, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00951, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x00955, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00958, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00962, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00964, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00966, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00970, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00971, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00981, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00984, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00985, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0098D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0098F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00991, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00993, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009A9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009AA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009B1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009B2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009B3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009B6, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009BA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009BC, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x009BD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009BE, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x009C5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009C7, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x009C9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009CB, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x009CE, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009CF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009D7, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x009D8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009DC, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009DE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009DF, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009E2, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x009E4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x009E6, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x009F0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009F2, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x009F4, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x009FA, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x009FC, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x009FD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x009FE, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x009FF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A01, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A04, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A05, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A0B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A0F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A11, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A13, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A29, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A2A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A31, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A32, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A34, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A35, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A37, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A38, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A3A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A3C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A3D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A3E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A43, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A47, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A49, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A4B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A4E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A51, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A52, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A59, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A5D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A5E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A5F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A66, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00A70, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A72, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A75, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A76, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00A77, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A81, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00A84, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A85, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A8E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A8F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00A92, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00A93, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00AA9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00AAA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00AB1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00AB2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00AB4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00AB5, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00ABA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00ABC, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00ABD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00ABE, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00AC6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00AC7, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00ACA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00ACB, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00ACE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00AD0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00AD1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00AE0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00AE2, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00AE4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00AE6, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00AF0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00AF2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00AF9, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00AFA, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B00, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B01, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B04, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B05, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B0D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B0F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B11, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B13, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B29, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B2A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B31, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B32, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B34, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B35, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B3A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B3C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B3D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B3E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B45, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B47, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B49, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B4B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B4E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B55, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B58, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B5C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B5E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B5F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B62, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B64, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B66, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00B70, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00B71, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B72, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x00B78, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B82, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00B83, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B84, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B85, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B8B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B8E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B91, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B92, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B96, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B99, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B9B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B9C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00B9D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00B9E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00BA0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BA3, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00BA5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BA8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00BAB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BAE, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00BBA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BBE, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00BC3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BC6, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00BC9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BCA, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00BCE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BD0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00BD1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BD7, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00BD8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00BE6, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00BF0, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x00BF3, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00BFB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C00, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00C05, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C0D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C0E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C11, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C12, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C29, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C2A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C3A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C3D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C3E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00C45, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C46, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00C49, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C4A, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00C4E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C55, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00C57, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C58, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C5B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C60, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C62, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00C64, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C66, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00C70, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C77, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00C78, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x00C7F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00C80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C81, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00C84, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00C85, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C8D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C8E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00C91, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00C92, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00CA9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CAA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00CB4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CB5, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00CBA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CBC, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00CBD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00CBE, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00CC5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CC6, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00CC9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CCA, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00CCE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CD5, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00CD7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CDE, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00CDF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CE0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00CE2, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00CE4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CE6, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00CF0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00CF1, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00CF3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D00, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00D04, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D0D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D0E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D11, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D12, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D3B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00D3D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D3E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00D45, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D46, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00D49, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D4A, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00D4E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D4F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00D50, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D54, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D57, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00D58, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x00D5F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D62, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00D64, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D66, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00D70, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x00D79, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00D7A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D80, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D81, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00D84, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D85, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00D97, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00D9A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00DB2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DB3, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00DBC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DBD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00DBE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DC0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00DC7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DCA, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00DCB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DCF, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00DD5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DD6, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00DD7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DD8, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00DE0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DE6, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00DF0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00DF2, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00DF4, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00DF5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00E01, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00E31, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00E32, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00E34, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00E3B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00E3F, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00E40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00E47, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00E4F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00E50, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00E5A, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00E5C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00E81, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00E83, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00E84, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00E85, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00E86, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00E8B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00E8C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00EA4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00EA5, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00EA6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00EA7, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00EB1, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00EB2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00EB4, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00EBD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00EBE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00EC0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00EC5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00EC6, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00EC7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00EC8, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00ECE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00ED0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00EDA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00EDC, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00EE0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00F00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00F01, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00F18, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00F1A, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00F20, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x00F2A, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x00F34, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00F35, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00F36, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00F37, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00F38, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00F39, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00F3A, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00F3E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00F40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00F48, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00F49, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00F6D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00F71, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00F85, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00F86, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00F88, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x00F8D, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00F98, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00F99, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00FBD, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00FBE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00FC6, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x00FC7, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00FCD, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x00FCE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00FD5, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x00FD9, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x00FDB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0102B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0103F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01040, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0104A, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01050, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01056, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0105A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0105E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01061, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01062, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01065, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01067, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0106E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01071, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01075, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01082, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0108E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0108F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01090, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0109A, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0109E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x010A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x010C6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x010C7, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x010C8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x010CD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x010CE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x010D0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x010FB, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x010FC, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01249, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0124A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0124E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01250, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01257, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01258, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01259, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0125A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0125E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01260, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01289, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0128A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0128E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01290, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x012B1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x012B2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x012B6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x012B8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x012BF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x012C0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x012C1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x012C2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x012C6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x012C8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x012D7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x012D8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01311, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01312, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01316, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01318, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0135B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0135D, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01360, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01369, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x0137D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01380, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01390, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0139A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x013A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x013F6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x013F8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x013FE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01400, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01401, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0166D, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0166F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01680, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01681, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0169B, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0169D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x016A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x016EB, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x016EE, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x016F1, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x016F9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01700, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0170D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0170E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01712, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01715, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01720, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01732, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01735, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x01737, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01740, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01752, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01754, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01760, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0176D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0176E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01771, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01772, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01774, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01780, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x017B4, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x017D4, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x017D7, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x017D8, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x017DC, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x017DD, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x017DE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x017E0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x017EA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x017F0, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x017FA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01800, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01802, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x01804, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01805, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x01806, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0180B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0180E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0180F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01810, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0181A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01820, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01879, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01880, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01885, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01887, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x018A9, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x018AA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x018AB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x018B0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x018F6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01900, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0191F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01920, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0192C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01930, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0193C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01940, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01941, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01944, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01946, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x01950, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0196E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01970, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01975, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01980, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x019AC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x019B0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x019CA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x019D0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x019DA, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x019DB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x019DE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01A00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01A17, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01A1C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01A1E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01A20, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01A55, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01A5F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01A60, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01A7D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01A7F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01A80, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x01A8A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01A90, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x01A9A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01AA0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01AA7, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01AA8, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01AAE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01AB0, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01AC1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01B00, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01B05, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01B34, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01B45, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01B4C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01B50, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x01B5A, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01B6B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01B74, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01B7D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01B80, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01B83, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01BA1, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01BAE, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01BB0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x01BBA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01BE6, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01BF4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01BFC, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01C00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01C24, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x01C38, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01C3B, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01C40, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x01C4A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01C4D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01C50, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x01C5A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01C7E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01C80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01C89, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01C90, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01CBB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01CBD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01CC0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01CC8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01CD0, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01CD3, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x01CD4, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01CE1, ScriptBucket::kCommon, false, CategoryBucket::kMark},
    {0x01CE2, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01CE9, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x01CED, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01CEE, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x01CF4, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01CF5, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x01CF7, ScriptBucket::kCommon, false, CategoryBucket::kMark},
    {0x01CF8, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01CFA, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x01CFB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01D00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01DC0, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01DFA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01DFB, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x01E00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F16, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F18, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F1E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F20, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F46, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F48, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F4E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F50, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F58, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F59, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F5A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F5B, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F5C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F5D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F5E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F5F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01F7E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01F80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FB5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01FB6, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FBD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01FBE, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FBF, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01FC2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FC5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01FC6, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FCD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01FD0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FD4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01FD6, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FDC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01FDD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01FE0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FED, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01FF0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01FF2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FF5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x01FF6, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x01FFD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x01FFF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02000, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0200C, ScriptBucket::kInherited, false, CategoryBucket::kOther},
    {0x0200E, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02065, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02066, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02070, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x02071, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02072, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02074, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x0207A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0207F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02080, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x0208A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0208F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02090, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0209D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x020A0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x020C0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x020D0, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x020F1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02100, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02102, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02103, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02107, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02108, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0210A, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02114, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02115, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02116, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02119, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0211E, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02124, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02125, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02126, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02127, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02128, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02129, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0212A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0212C, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0212E, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0212F, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02132, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02133, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0213A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0213C, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02140, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02145, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0214A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0214E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0214F, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02150, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x02160, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x02183, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02185, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x02189, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x0218A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0218C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02190, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02427, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02440, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0244B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02460, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x0249C, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x024EA, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x02500, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02776, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x02794, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02800, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x02900, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02B74, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02B76, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02B96, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02B97, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02C00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02C2F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02C30, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02C5F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02C60, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02CE5, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x02CEB, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02CEF, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x02CF2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02CF4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02CF9, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x02CFD, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x02CFE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x02D00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02D26, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02D27, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02D28, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02D2D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02D2E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02D30, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02D68, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02D6F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02D70, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x02D71, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02D7F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x02D80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02D97, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DA0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02DA7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DA8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02DAF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DB0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02DB7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DB8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02DBF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DC0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02DC7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DC8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02DCF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DD0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02DD7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DD8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x02DDF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02DE0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x02E00, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02E2F, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x02E30, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02E53, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02E80, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x02E9A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02E9B, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x02EF4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02F00, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x02FD6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x02FF0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x02FFC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x03000, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03005, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x03006, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x03007, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x03008, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03021, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x0302A, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x0302E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x03030, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03031, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x03036, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03038, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x0303B, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0303C, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0303D, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03040, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x03041, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x03097, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x03099, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x0309B, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0309D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x030A0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x030A1, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x030FB, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x030FC, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x030FD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x03100, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x03105, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x03130, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x03131, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0318F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x03190, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03192, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x03196, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x031A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x031C0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x031E4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x031F0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x03200, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0321F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x03220, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x0322A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03248, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x03250, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03251, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x03260, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0327F, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03280, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x0328A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x032B1, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x032C0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x032D0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x032FF, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03300, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x03358, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x03400, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x04DC0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x04E00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x09FFD, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A48D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A490, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A4C7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A4D0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A4FE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A500, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A60D, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A610, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A620, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0A62A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A62C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A640, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A66F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A673, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A674, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A67E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A67F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A69E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A6A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A6E6, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x0A6F0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A6F2, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A6F8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A700, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0A717, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0A720, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0A722, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A788, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0A789, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0A78B, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A7C0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A7C2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A7CB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A7F5, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A802, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A803, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A806, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A807, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A80B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A80C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A823, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A828, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A82C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A82D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A830, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x0A836, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0A83A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A840, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A874, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A878, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A880, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A882, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A8B4, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A8C6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A8CE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A8D0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0A8DA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A8E0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A8F2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A8F8, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A8FB, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A8FC, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A8FD, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A8FF, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A900, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0A90A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A926, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A92E, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0A92F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A930, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A947, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A954, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A95F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A960, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A97D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A980, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A984, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A9B3, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A9C1, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A9CE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A9CF, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0A9D0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0A9DA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0A9DE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0A9E0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A9E5, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0A9E6, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A9F0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0A9FA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0A9FF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AA00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AA29, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AA37, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AA40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AA43, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AA44, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AA4C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AA4E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AA50, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0AA5A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AA5C, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0AA60, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AA77, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0AA7A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AA7B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AA7E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AAB0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AAB1, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AAB2, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AAB5, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AAB7, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AAB9, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AABE, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AAC0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AAC1, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AAC2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AAC3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AADB, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AADE, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0AAE0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AAEB, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AAF0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0AAF2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AAF5, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0AAF7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AB01, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AB07, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AB09, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AB0F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AB11, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AB17, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AB20, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AB27, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AB28, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AB2F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AB30, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AB5B, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0AB5C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0AB6A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0AB6C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AB70, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0ABE3, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0ABEB, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0ABEC, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0ABEE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0ABF0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x0ABFA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0AC00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0D7A4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0D7B0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0D7C7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0D7CB, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0D7FC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0D800, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0F900, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FA6E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FA70, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FADA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FB00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB07, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FB13, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB18, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FB1D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB1E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0FB1F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB29, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x0FB2A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB37, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FB38, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB3D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FB3E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB3F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FB40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB42, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FB43, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB45, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FB46, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FB50, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x0FBB2, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x0FBC2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FBD3, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x0FD3E, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FD40, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FD50, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x0FD90, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FD92, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x0FDC8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FDF0, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x0FDFC, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x0FDFE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FE00, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x0FE10, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FE1A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FE20, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x0FE2E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x0FE30, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FE53, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FE54, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FE67, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FE68, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FE6C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FE70, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x0FE75, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FE76, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x0FEFD, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FEFF, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FF00, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FF01, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FF10, ScriptBucket::kCommon, false, CategoryBucket::kDecimalNumber},
    {0x0FF1A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FF21, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FF3B, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FF41, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FF5B, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FF66, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FF70, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0FF71, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FF9E, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x0FFA0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FFBF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FFC2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FFC8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FFCA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FFD0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FFD2, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FFD8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FFDA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x0FFDD, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FFE0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FFE7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FFE8, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FFEF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x0FFF9, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x0FFFE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1000C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1000D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10027, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10028, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1003B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1003C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1003E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1003F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1004E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10050, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1005E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10080, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x100FB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10100, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x10103, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10107, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x10134, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10137, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x10140, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10179, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1018A, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x1018C, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1018F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10190, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1019D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x101A0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x101A1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x101D0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x101FD, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x101FE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10280, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1029D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x102A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x102D1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x102E0, ScriptBucket::kInherited, true, CategoryBucket::kMark},
    {0x102E1, ScriptBucket::kCommon, true, CategoryBucket::kOtherNumber},
    {0x102FC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10300, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10320, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10324, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1032D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10341, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10342, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1034A, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x1034B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10350, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10376, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1037B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10380, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1039E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1039F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x103A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x103C4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x103C8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x103D0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x103D1, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x103D6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10400, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1049E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x104A0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x104AA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x104B0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x104D4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x104D8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x104FC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10500, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10528, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10530, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10564, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1056F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10570, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10600, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10737, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10740, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10756, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10760, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10768, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10800, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10806, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10808, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10809, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1080A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10836, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10837, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10839, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1083C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1083D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1083F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10856, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10857, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10858, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10860, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10877, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10879, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10880, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1089F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x108A7, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x108B0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x108E0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x108F3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x108F4, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x108F6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x108FB, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10900, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10916, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x1091C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1091F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10920, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1093A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1093F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10940, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10980, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x109B8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x109BC, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x109BE, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x109C0, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x109D0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x109D2, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10A00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10A01, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10A04, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10A05, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10A07, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10A0C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10A10, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10A14, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10A15, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10A18, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10A19, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10A36, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10A38, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10A3B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10A3F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10A40, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10A49, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10A50, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10A59, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10A60, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10A7D, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10A7F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10A80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10A9D, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10AA0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10AC0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10AC8, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10AC9, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10AE5, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10AE7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10AEB, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10AF0, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10AF7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10B00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10B36, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10B39, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10B40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10B56, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10B58, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10B60, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10B73, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10B78, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10B80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10B92, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10B99, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10B9D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10BA9, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10BB0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10C00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10C49, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10C80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10CB3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10CC0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10CF3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10CFA, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10D00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10D24, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10D28, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10D30, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x10D3A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10E60, ScriptBucket::kArabic, true, CategoryBucket::kOtherNumber},
    {0x10E7F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10E80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10EAA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10EAB, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10EAD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10EAE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10EB0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10EB2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10F00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10F1D, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10F27, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10F28, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10F30, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10F46, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x10F51, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10F55, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10F5A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10FB0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10FC5, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x10FCC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x10FE0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x10FF7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11000, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11003, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11038, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11047, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1104E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11052, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x11066, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x11070, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1107F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11083, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x110B0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x110BB, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x110C2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x110CD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x110CE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x110D0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x110E9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x110F0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x110FA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11100, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11103, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11127, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11135, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11136, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x11140, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11144, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11145, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11147, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11148, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11150, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11173, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11174, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11176, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11177, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11180, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11183, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x111B3, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x111C1, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x111C5, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x111C9, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x111CD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x111CE, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x111D0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x111DA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x111DB, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x111DC, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x111DD, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x111E0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x111E1, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x111F5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11200, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11212, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11213, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1122C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11238, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1123E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1123F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11280, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11287, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11288, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11289, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1128A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1128E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1128F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1129E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1129F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x112A9, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x112AA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x112B0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x112DF, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x112EB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x112F0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x112FA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11300, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11304, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11305, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1130D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1130F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11311, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11313, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11329, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1132A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11331, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11332, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11334, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11335, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1133A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1133B, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x1133C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1133D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1133E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11345, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11347, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11349, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1134B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1134E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11350, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11351, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11357, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11358, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1135D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11362, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11364, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11366, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1136D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11370, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11375, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11400, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11435, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11447, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1144B, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11450, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x1145A, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1145C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1145D, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1145E, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1145F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11462, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11480, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x114B0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x114C4, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x114C6, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x114C7, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x114C8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x114D0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x114DA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11580, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x115AF, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x115B6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x115B8, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x115C1, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x115D8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x115DC, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x115DE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11600, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11630, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11641, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11644, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11645, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11650, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x1165A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11660, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1166D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11680, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x116AB, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x116B8, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x116B9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x116C0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x116CA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11700, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1171B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1171D, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1172C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11730, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x1173A, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x1173C, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11740, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11800, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1182C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1183B, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1183C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x118A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x118E0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x118EA, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x118F3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x118FF, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11907, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11909, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1190A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1190C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11914, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11915, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11917, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11918, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11930, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11936, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11937, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11939, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1193B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1193F, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11940, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11941, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11942, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11944, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11947, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11950, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x1195A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x119A0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x119A8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x119AA, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x119D1, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x119D8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x119DA, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x119E1, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x119E2, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x119E3, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x119E4, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x119E5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11A00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11A01, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11A0B, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11A33, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11A3A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11A3B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11A3F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11A47, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11A48, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11A50, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11A51, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11A5C, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11A8A, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11A9A, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11A9D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11A9E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11AA3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11AC0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11AF9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11C00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11C09, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11C0A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11C2F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11C37, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11C38, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11C40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11C41, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11C46, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11C50, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x11C5A, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x11C6D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11C70, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11C72, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11C90, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11C92, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11CA8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11CA9, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11CB7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11D07, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D08, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11D0A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D0B, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11D31, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11D37, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D3A, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11D3B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D3C, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11D3E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D3F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11D46, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11D47, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11D48, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D50, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x11D5A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D60, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11D66, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D67, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11D69, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D6A, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11D8A, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11D8F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D90, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11D92, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11D93, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11D98, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11D99, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11DA0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x11DAA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11EE0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11EF3, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x11EF7, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11EF9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11FB0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x11FB1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11FC0, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x11FD5, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x11FF2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x11FFF, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x12000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1239A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x12400, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x1246F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x12470, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x12475, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x12480, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x12544, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x13000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1342F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x13430, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x13439, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x14400, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x14647, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16800, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16A39, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16A40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16A5F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16A60, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x16A6A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16A6E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x16A70, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16AD0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16AEE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16AF0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x16AF5, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x16AF6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16B00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16B30, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x16B37, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x16B40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16B44, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x16B46, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16B50, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x16B5A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16B5B, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x16B62, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16B63, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16B78, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16B7D, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16B90, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16E40, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16E80, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x16E97, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x16E9B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16F00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16F4B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16F4F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x16F50, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16F51, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x16F88, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16F8F, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x16F93, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16FA0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16FE0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x16FE2, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x16FE3, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x16FE4, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x16FE5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x16FF0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x16FF2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x17000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x187F8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x18800, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x18CD6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x18D00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x18D09, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1B000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1B11F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1B150, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1B153, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1B164, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1B168, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1B170, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1B2FC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1BC00, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1BC6B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1BC70, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1BC7D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1BC80, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1BC89, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1BC90, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1BC9A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1BC9C, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1BC9D, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1BC9F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1BCA0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1BCA4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D000, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D0F6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D100, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D127, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D129, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D165, ScriptBucket::kCommon, false, CategoryBucket::kMark},
    {0x1D167, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x1D16A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D16D, ScriptBucket::kCommon, false, CategoryBucket::kMark},
    {0x1D173, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D17B, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x1D183, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D185, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x1D18C, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D1AA, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0x1D1AE, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D1E9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D200, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1D242, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1D245, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1D246, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D2E0, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x1D2F4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D300, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D357, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D360, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x1D379, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D400, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D455, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D456, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D49D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D49E, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D4A0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D4A2, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D4A3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D4A5, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D4A7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D4A9, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D4AD, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D4AE, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D4BA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D4BB, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D4BC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D4BD, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D4C4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D4C5, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D506, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D507, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D50B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D50D, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D515, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D516, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D51D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D51E, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D53A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D53B, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D53F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D540, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D545, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D546, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D547, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D54A, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D551, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D552, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D6A6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D6A8, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D6C1, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D6C2, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D6DB, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D6DC, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D6FB, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D6FC, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D715, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D716, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D735, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D736, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D74F, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D750, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D76F, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D770, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D789, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D78A, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D7A9, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D7AA, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D7C3, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1D7C4, ScriptBucket::kCommon, false, CategoryBucket::kLetter},
    {0x1D7CC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1D7CE, ScriptBucket::kCommon, false, CategoryBucket::kDecimalNumber},
    {0x1D800, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1DA00, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1DA37, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1DA3B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1DA6D, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1DA75, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1DA76, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1DA84, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1DA85, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1DA8C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1DA9B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1DAA0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1DAA1, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1DAB0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E000, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E007, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E008, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E019, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E01B, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E022, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E023, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E025, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E026, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E02B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E100, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1E12D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E130, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E137, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1E13E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E140, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x1E14A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E14E, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1E14F, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1E150, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E2C0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1E2EC, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E2F0, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x1E2FA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E2FF, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1E300, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E800, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1E8C5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E8C7, ScriptBucket::kOther, false, CategoryBucket::kOtherNumber},
    {0x1E8D0, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E8D7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E900, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1E944, ScriptBucket::kOther, false, CategoryBucket::kMark},
    {0x1E94B, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x1E94C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E950, ScriptBucket::kOther, false, CategoryBucket::kDecimalNumber},
    {0x1E95A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1E95E, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1E960, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EC71, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x1ECAC, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1ECAD, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x1ECB0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1ECB1, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x1ECB5, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1ED01, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x1ED2E, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1ED2F, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x1ED3E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE00, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE04, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE05, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE20, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE21, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE23, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE24, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE25, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE27, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE28, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE29, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE33, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE34, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE38, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE39, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE3A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE3B, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE3C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE42, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE43, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE47, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE48, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE49, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE4A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE4B, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE4C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE4D, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE50, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE51, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE53, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE54, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE55, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE57, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE58, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE59, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE5A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE5B, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE5C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE5D, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE5E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE5F, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE60, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE61, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE63, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE64, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE65, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE67, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE6B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE6C, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE73, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE74, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE78, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE79, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE7D, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE7E, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE7F, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE80, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE8A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EE8B, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EE9C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EEA1, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EEA4, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EEA5, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EEAA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EEAB, ScriptBucket::kArabic, true, CategoryBucket::kLetter},
    {0x1EEBC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1EEF0, ScriptBucket::kArabic, true, CategoryBucket::kOther},
    {0x1EEF2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F000, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F02C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F030, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F094, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F0A0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F0AF, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F0B1, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F0C0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F0C1, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F0D0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F0D1, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F0F6, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F100, ScriptBucket::kCommon, false, CategoryBucket::kOtherNumber},
    {0x1F10D, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F1AE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F1E6, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F200, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x1F201, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F203, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F210, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F23C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F240, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F249, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F250, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F252, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F260, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F266, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F300, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F6D8, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F6E0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F6ED, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F6F0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F6FD, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F700, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F774, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F780, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F7D9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F7E0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F7EC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F800, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F80C, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F810, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F848, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F850, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F85A, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F860, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F888, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F890, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F8AE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F8B0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F8B2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F900, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F979, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F97A, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1F9CC, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1F9CD, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FA54, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FA60, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FA6E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FA70, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FA75, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FA78, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FA7B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FA80, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FA87, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FA90, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FAA9, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FAB0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FAB7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FAC0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FAC3, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FAD0, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FAD7, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FB00, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FB93, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FB94, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0x1FBCB, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x1FBF0, ScriptBucket::kCommon, false, CategoryBucket::kDecimalNumber},
    {0x1FBFA, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x20000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x2A6DE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x2A700, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x2B735, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x2B740, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x2B81E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x2B820, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x2CEA2, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x2CEB0, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x2EBE1, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x2F800, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x2FA1E, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x30000, ScriptBucket::kOther, false, CategoryBucket::kLetter},
    {0x3134B, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0xE0001, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0xE0002, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0xE0020, ScriptBucket::kCommon, false, CategoryBucket::kOther},
    {0xE0080, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0xE0100, ScriptBucket::kInherited, false, CategoryBucket::kMark},
    {0xE01F0, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0xF0000, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0xFFFFE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
    {0x100000, ScriptBucket::kOther, false, CategoryBucket::kOther},
    {0x10FFFE, ScriptBucket::kOther, false, CategoryBucket::kUnassigned},
}};

}  // namespace sftc::detail
