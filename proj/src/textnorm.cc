// src/textnorm.cc
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

#include "pier/textnorm.h"

#include "pier/error.h"
#include "pier/utf8.h"
#include "unicode_data.h"

namespace pier {

std::string_view script_name(Script s) {
  switch (s) {
    case Script::Latin: return "Latin";
    case Script::Han: return "Han";
    case Script::Arabic: return "Arabic";
    case Script::Common: return "Common";
    case Script::Mixed: return "Mixed";
  }
  return "?";
}

std::string nfc(std::string_view utf8) {
  return utf8_encode(uni::nfc(utf8_decode(utf8)));
}

std::string normalize(std::string_view raw, const NormConfig& config) {
  std::u32string cps = uni::nfc(utf8_decode(raw));

  if (config.lowercase) {
    for (char32_t& cp : cps) cp = uni::simple_lower(cp);
  }

  if (config.strip_punct) {
    std::u32string kept;
    kept.reserve(cps.size());
    for (std::size_t i = 0; i < cps.size(); ++i) {
      const char32_t cp = cps[i];
      if (!uni::is_punct(cp)) {
        kept.push_back(cp);
        continue;
      }
      // Apostrophes and hyphens survive between two alphanumeric characters
      // so contractions and compounds stay single tokens.
      if (cp == U'\'' || cp == U'-') {
        const bool left = i > 0 && uni::is_alnum(cps[i - 1]);
        const bool right = i + 1 < cps.size() && uni::is_alnum(cps[i + 1]);
        if (left && right) kept.push_back(cp);
      }
    }
    cps = std::move(kept);
  }

  // Collapse whitespace runs and trim.
  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (uni::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  // Stripping can remove a starter between a base and its combining marks,
  // which exposes new composition opportunities; re-composing keeps the
  // result canonical and the whole pipeline idempotent.
  return utf8_encode(uni::nfc(out));
}

namespace {

struct ScriptEvidence {
  bool latin = false;
  bool han = false;
  bool arabic = false;

  void add(char32_t cp) {
    latin = latin || uni::is_latin_letter(cp);
    han = han || uni::is_han_letter(cp);
    arabic = arabic || uni::is_arabic_letter(cp);
  }
  int count() const { return int(latin) + int(han) + int(arabic); }
  Script script() const {
    if (count() >= 2) return Script::Mixed;
    if (latin) return Script::Latin;
    if (han) return Script::Han;
    if (arabic) return Script::Arabic;
    return Script::Common;
  }
};

Token make_token(std::u32string_view cps, std::size_t begin, std::size_t end) {
  ScriptEvidence ev;
  for (std::size_t i = begin; i < end; ++i) ev.add(cps[i]);
  return Token{utf8_encode(cps.substr(begin, end - begin)), ev.script(), begin, end};
}

}  // namespace

std::vector<Token> tokenize_words(std::string_view normalized) {
  const std::u32string cps = utf8_decode(normalized);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (uni::is_space(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && !uni::is_space(cps[j])) ++j;
    out.push_back(make_token(cps, i, j));
    i = j;
  }
  return out;
}

std::vector<Token> tokenize_chars(std::string_view normalized) {
  const std::u32string cps = utf8_decode(normalized);
  std::vector<Token> out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (uni::is_space(cps[i])) continue;
    out.push_back(make_token(cps, i, i + 1));
  }
  return out;
}

std::vector<Token> tokenize_mixed(std::string_view normalized) {
  const std::u32string cps = utf8_decode(normalized);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (uni::is_space(cps[i])) {
      ++i;
      continue;
    }
    if (uni::is_han_letter(cps[i])) {
      out.push_back(make_token(cps, i, i + 1));
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && !uni::is_space(cps[j]) && !uni::is_han_letter(cps[j])) ++j;
    out.push_back(make_token(cps, i, j));
    i = j;
  }
  return out;
}

Script classify_script(std::string_view token_text) {
  if (token_text.empty()) throw Error("classify_script: empty token");
  ScriptEvidence ev;
  for (char32_t cp : utf8_decode(token_text)) ev.add(cp);
  return ev.script();
}

bool contains_script(std::string_view token_text, Script s) {
  for (char32_t cp : utf8_decode(token_text)) {
    switch (s) {
      case Script::Latin:
        if (uni::is_latin_letter(cp)) return true;
        break;
      case Script::Han:
        if (uni::is_han_letter(cp)) return true;
        break;
      case Script::Arabic:
        if (uni::is_arabic_letter(cp)) return true;
        break;
      default:
        throw Error("contains_script: expected Latin, Han or Arabic");
    }
  }
  return false;
}

}  // namespace pier
