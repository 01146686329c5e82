// Copyright 2026 The Acro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "acro/unicode.hpp"

#include <cstdint>

#include "acro/error.hpp"

namespace acro::uni {

namespace {

constexpr bool in(CodePoint cp, CodePoint lo, CodePoint hi) {
  return cp >= lo && cp <= hi;
}

// Latin Extended-A alternates upper/lower in pairs, but the parity
// flips after U+0138 (kra) and a few singletons break the pattern.
CharClass latin_ext_a(CodePoint cp) {
  switch (cp) {
    case 0x0130: return CharClass::UpperLetter;  // İ
    case 0x0131: return CharClass::LowerLetter;  // ı
    case 0x0138: return CharClass::LowerLetter;  // ĸ
    case 0x0149: return CharClass::LowerLetter;  // ŉ
    case 0x0178: return CharClass::UpperLetter;  // Ÿ
    case 0x017F: return CharClass::LowerLetter;  // ſ
    default: break;
  }
  if (in(cp, 0x0100, 0x0137))
    return (cp % 2 == 0) ? CharClass::UpperLetter : CharClass::LowerLetter;
  if (in(cp, 0x0139, 0x0148))
    return (cp % 2 == 1) ? CharClass::UpperLetter : CharClass::LowerLetter;
  if (in(cp, 0x014A, 0x0177))
    return (cp % 2 == 0) ? CharClass::UpperLetter : CharClass::LowerLetter;
  // 0x0179..0x017E: Ź ź Ż ż Ž ž
  return (cp % 2 == 1) ? CharClass::UpperLetter : CharClass::LowerLetter;
}

// Latin Extended Additional (Vietnamese) is even=upper / odd=lower
// except for the 1E96..1E9F block.
CharClass latin_ext_additional(CodePoint cp) {
  if (in(cp, 0x1E96, 0x1E9D)) return CharClass::LowerLetter;
  if (cp == 0x1E9E) return CharClass::UpperLetter;  // ẞ
  if (cp == 0x1E9F) return CharClass::LowerLetter;
  return (cp % 2 == 0) ? CharClass::UpperLetter : CharClass::LowerLetter;
}

CharClass arabic(CodePoint cp) {
  if (cp == 0x060C || cp == 0x060D || cp == 0x061B || cp == 0x061E ||
      cp == 0x061F || in(cp, 0x066A, 0x066D) || cp == 0x06D4)
    return CharClass::PunctSymbol;
  if (in(cp, 0x0610, 0x061A) || in(cp, 0x064B, 0x065F) || cp == 0x0670 ||
      in(cp, 0x06D6, 0x06DC) || in(cp, 0x06DF, 0x06E4) ||
      in(cp, 0x06E7, 0x06E8) || in(cp, 0x06EA, 0x06ED))
    return CharClass::CombiningMark;
  if (in(cp, 0x0660, 0x0669) || in(cp, 0x06F0, 0x06F9))
    return CharClass::Digit;
  if (in(cp, 0x0620, 0x064A) || in(cp, 0x066E, 0x066F) ||
      in(cp, 0x0671, 0x06D3) || cp == 0x06D5 || in(cp, 0x06E5, 0x06E6) ||
      in(cp, 0x06EE, 0x06EF) || in(cp, 0x06FA, 0x06FF))
    return CharClass::OtherLetter;
  return CharClass::Other;
}

}  // namespace

CharClass classify(CodePoint cp) {
  // ASCII fast path.
  if (cp < 0x80) {
    if (cp == 0x20 || in(cp, 0x09, 0x0D)) return CharClass::Space;
    if (in(cp, '0', '9')) return CharClass::Digit;
    if (in(cp, 'A', 'Z')) return CharClass::UpperLetter;
    if (in(cp, 'a', 'z')) return CharClass::LowerLetter;
    if (in(cp, 0x21, 0x7E)) return CharClass::PunctSymbol;
    return CharClass::Other;
  }
  if (cp == 0x85 || cp == 0xA0 || cp == 0x1680 || in(cp, 0x2000, 0x200A) ||
      cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
      cp == 0x3000)
    return CharClass::Space;
  // Latin-1 supplement.
  if (cp < 0x100) {
    if (cp == 0xB5) return CharClass::LowerLetter;            // µ
    if (cp == 0xAA || cp == 0xBA) return CharClass::OtherLetter;
    if (in(cp, 0xA1, 0xBF) || cp == 0xD7 || cp == 0xF7)
      return CharClass::PunctSymbol;
    if (in(cp, 0xC0, 0xDE)) return CharClass::UpperLetter;
    if (in(cp, 0xDF, 0xFF)) return CharClass::LowerLetter;
    return CharClass::Other;
  }
  if (in(cp, 0x0100, 0x017F)) return latin_ext_a(cp);
  if (in(cp, 0x0180, 0x024F)) {
    // Latin Extended-B: only the Vietnamese horn letters are cased here;
    // the rest are treated as caseless letters.
    if (cp == 0x01A0 || cp == 0x01AF) return CharClass::UpperLetter;
    if (cp == 0x01A1 || cp == 0x01B0) return CharClass::LowerLetter;
    return CharClass::OtherLetter;
  }
  if (in(cp, 0x0300, 0x036F)) return CharClass::CombiningMark;
  if (in(cp, 0x0391, 0x03A9) && cp != 0x03A2) return CharClass::UpperLetter;
  if (in(cp, 0x03B1, 0x03C9)) return CharClass::LowerLetter;
  if (in(cp, 0x0370, 0x03FF)) return CharClass::OtherLetter;
  if (in(cp, 0x0400, 0x040F)) return CharClass::UpperLetter;
  if (in(cp, 0x0410, 0x042F)) return CharClass::UpperLetter;
  if (in(cp, 0x0430, 0x044F)) return CharClass::LowerLetter;
  if (in(cp, 0x0450, 0x045F)) return CharClass::LowerLetter;
  if (in(cp, 0x0460, 0x04FF)) return CharClass::OtherLetter;
  if (in(cp, 0x0600, 0x06FF)) return arabic(cp);
  if (in(cp, 0x1E00, 0x1EFF)) return latin_ext_additional(cp);
  if (in(cp, 0x2010, 0x2027) || in(cp, 0x2030, 0x205E))
    return CharClass::PunctSymbol;
  if (in(cp, 0x20A0, 0x20BF)) return CharClass::PunctSymbol;  // currency
  return CharClass::Other;
}

bool is_space(CodePoint cp) { return classify(cp) == CharClass::Space; }

bool is_letter(CodePoint cp) {
  CharClass c = classify(cp);
  return c == CharClass::UpperLetter || c == CharClass::LowerLetter ||
         c == CharClass::OtherLetter;
}

bool is_upper(CodePoint cp) { return classify(cp) == CharClass::UpperLetter; }
bool is_lower(CodePoint cp) { return classify(cp) == CharClass::LowerLetter; }
bool is_digit(CodePoint cp) { return classify(cp) == CharClass::Digit; }

bool is_punct_or_symbol(CodePoint cp) {
  return classify(cp) == CharClass::PunctSymbol;
}

CodePoint to_lower(CodePoint cp) {
  if (in(cp, 'A', 'Z')) return cp + 0x20;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  if (cp == 0x0130) return 'i';                     // İ
  if (cp == 0x0178) return 0xFF;                    // Ÿ -> ÿ
  if (cp == 0x017F) return 's';                     // ſ
  if (cp == 0x1E9E) return 0xDF;                    // ẞ -> ß
  if (cp == 0x01A0 || cp == 0x01AF) return cp + 1;  // Ơ Ư
  if (in(cp, 0x0391, 0x03A9)) return cp + 0x20;
  if (in(cp, 0x0400, 0x040F)) return cp + 0x50;
  if (in(cp, 0x0410, 0x042F)) return cp + 0x20;
  if (classify(cp) != CharClass::UpperLetter) return cp;
  if (in(cp, 0x0100, 0x017E) || in(cp, 0x1E00, 0x1EFF)) return cp + 1;
  return cp;
}

std::u32string decode_utf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  const std::size_t n = utf8.size();
  while (i < n) {
    const auto b0 = static_cast<std::uint8_t>(utf8[i]);
    std::size_t len = 0;
    CodePoint cp = 0;
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw ParseError("invalid UTF-8 byte at offset " + std::to_string(i));
    }
    if (i + len > n)
      throw ParseError("truncated UTF-8 sequence at offset " +
                       std::to_string(i));
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<std::uint8_t>(utf8[i + k]);
      if ((b & 0xC0) != 0x80)
        throw ParseError("invalid UTF-8 continuation at offset " +
                         std::to_string(i + k));
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
        cp > 0x10FFFF)
      throw ParseError("invalid UTF-8 code point at offset " +
                       std::to_string(i));
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(CodePoint cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (CodePoint cp : cps) out += encode_utf8(cp);
  return out;
}

std::size_t length(std::string_view utf8) { return decode_utf8(utf8).size(); }

std::u32string lowercase(std::u32string_view cps) {
  std::u32string out(cps);
  for (auto& cp : out) cp = to_lower(cp);
  return out;
}

std::string lowercase_utf8(std::string_view utf8) {
  return encode_utf8(lowercase(decode_utf8(utf8)));
}

}  // namespace acro::uni
