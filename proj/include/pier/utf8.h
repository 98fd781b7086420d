// include/pier/utf8.h
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

#ifndef PIER_UTF8_H_
#define PIER_UTF8_H_

#include <string>
#include <string_view>

namespace pier {

// Strict UTF-8 decode. Rejects overlong forms, surrogates and values beyond
// U+10FFFF; throws pier::Error with the byte offset of the offending unit.
std::u32string utf8_decode(std::string_view s);

std::string utf8_encode(std::u32string_view cps);
void utf8_append(std::string* out, char32_t cp);

// Number of code points in a valid UTF-8 string.
std::size_t utf8_length(std::string_view s);

}  // namespace pier

#endif  // PIER_UTF8_H_
