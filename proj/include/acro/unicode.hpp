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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace acro::uni {

using CodePoint = char32_t;

// Character classes needed by the pipeline. Deliberately self-contained:
// all classification is table-driven and locale-independent, so results
// are identical on every platform. Covers Latin (incl. Danish, French,
// Spanish and Vietnamese letters), Greek, Cyrillic and Arabic/Persian;
// unlisted code points fall back to Other.
enum class CharClass {
  UpperLetter,
  LowerLetter,
  OtherLetter,    // caseless letters (Arabic script, ordinals, ...)
  Digit,          // decimal digits, incl. Arabic-Indic
  CombiningMark,
  Space,
  PunctSymbol,    // Unicode categories P and S
  Other,
};

CharClass classify(CodePoint cp);

bool is_space(CodePoint cp);
bool is_letter(CodePoint cp);
bool is_upper(CodePoint cp);
bool is_lower(CodePoint cp);
bool is_digit(CodePoint cp);
bool is_punct_or_symbol(CodePoint cp);

// Lowercases cased letters covered by the tables; identity otherwise.
CodePoint to_lower(CodePoint cp);

// Strict UTF-8 decoding; throws acro::ParseError on invalid input.
std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view cps);
std::string encode_utf8(CodePoint cp);

// Number of Unicode scalar values in a UTF-8 string.
std::size_t length(std::string_view utf8);

std::u32string lowercase(std::u32string_view cps);
std::string lowercase_utf8(std::string_view utf8);

}  // namespace acro::uni
