// include/pier/textnorm.h
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

#ifndef PIER_TEXTNORM_H_
#define PIER_TEXTNORM_H_

#include <string>
#include <string_view>
#include <vector>

namespace pier {

// Writing-script class of a token. Only Latin, Han and Arabic are tracked;
// letters of any other script count as script-neutral, like digits, so a
// pure-Cyrillic or pure-Kana token classifies as Common.
enum class Script { Latin, Han, Arabic, Common, Mixed };

std::string_view script_name(Script s);

struct NormConfig {
  bool lowercase = true;
  bool strip_punct = true;
  // Canonical composition (NFC) is always applied and not configurable.
};

struct Token {
  std::string text;          // never empty, never contains whitespace
  Script script = Script::Common;
  std::size_t begin = 0;     // code point offsets into the normalized line,
  std::size_t end = 0;       // half-open [begin, end)
};

// Canonical composition of a UTF-8 string (Hangul handled algorithmically).
std::string nfc(std::string_view utf8);

// NFC, optional lowercasing, optional punctuation stripping (apostrophes and
// hyphens between two alphanumeric characters survive), whitespace runs
// collapsed to single spaces, ends trimmed. Idempotent.
std::string normalize(std::string_view raw, const NormConfig& config);

// Maximal non-whitespace runs, in order.
std::vector<Token> tokenize_words(std::string_view normalized);

// One token per code point, whitespace removed.
std::vector<Token> tokenize_chars(std::string_view normalized);

// Han code points become single-character tokens; maximal runs of other
// non-whitespace characters become word tokens. The token rule behind MER.
std::vector<Token> tokenize_mixed(std::string_view normalized);

Script classify_script(std::string_view token_text);

// True when the token contains at least one letter of `s`
// (s must be Latin, Han or Arabic).
bool contains_script(std::string_view token_text, Script s);

}  // namespace pier

#endif  // PIER_TEXTNORM_H_
