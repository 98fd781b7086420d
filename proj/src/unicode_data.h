// src/unicode_data.h -- internal lookups over the generated Unicode tables.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIER_SRC_UNICODE_DATA_H_
#define PIER_SRC_UNICODE_DATA_H_

#include <cstdint>
#include <span>
#include <string>

namespace pier::uni {

bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_alnum(char32_t cp);  // categories L*, M*, N*

bool is_latin_letter(char32_t cp);
bool is_han_letter(char32_t cp);
bool is_arabic_letter(char32_t cp);

char32_t simple_lower(char32_t cp);
std::uint8_t combining_class(char32_t cp);

// Canonical composition (NFC) over a code point buffer.
std::u32string nfc(std::u32string_view cps);

}  // namespace pier::uni

#endif  // PIER_SRC_UNICODE_DATA_H_
