// src/poi.cc
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

#include "pier/poi.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pier/error.h"
#include "pier/utf8.h"
#include "unicode_data.h"

namespace pier {

namespace {

// Names are annotated in the source corpora but never scored by default;
// the lang:NE selector opts back in.
constexpr std::string_view kNameLabel = "NE";

bool valid_label(std::string_view label) {
  if (label.empty() || label.size() > 8) return false;
  if (label[0] < 'A' || label[0] > 'Z') return false;
  for (char c : label.substr(1)) {
    if ((c < 'A' || c > 'Z') && c != '+' && c != '-') return false;
  }
  return true;
}

SwitchType switch_type_for_label(std::string_view label) {
  if (label == kNameLabel) return SwitchType::None;
  if (label.find('+') != std::string_view::npos) return SwitchType::IntraWord;
  return SwitchType::InterWord;
}

std::string_view script_label(Script s) {
  switch (s) {
    case Script::Latin: return "LAT";
    case Script::Han: return "HAN";
    case Script::Arabic: return "ARA";
    default: throw Error("script_label: expected Latin, Han or Arabic");
  }
}

}  // namespace

std::string_view switch_type_name(SwitchType t) {
  switch (t) {
    case SwitchType::InterWord: return "inter_word";
    case SwitchType::IntraWord: return "intra_word";
    case SwitchType::None: return "none";
  }
  return "?";
}

bool InterestSet::contains(std::uint32_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

Selector Selector::parse(std::string_view text) {
  Selector s;
  if (text == "all") {
    s.kind = Kind::All;
  } else if (text == "inter" || text == "inter_word") {
    s.kind = Kind::InterWord;
  } else if (text == "intra" || text == "intra_word") {
    s.kind = Kind::IntraWord;
  } else if (text.rfind("lang:", 0) == 0) {
    s.kind = Kind::Lang;
    s.label = std::string(text.substr(5));
    if (!valid_label(s.label)) {
      throw ConfigError("invalid selector label: " + std::string(text));
    }
  } else {
    throw ConfigError("unknown selector: " + std::string(text) +
                      " (expected all, inter, intra or lang:<LABEL>)");
  }
  return s;
}

std::string Selector::str() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::InterWord: return "inter_word";
    case Kind::IntraWord: return "intra_word";
    case Kind::Lang: return "lang:" + label;
  }
  return "?";
}

MarkupParse parse_markup(std::string_view line) {
  const std::u32string cps = utf8_decode(line);
  MarkupParse out;

  auto fail = [](std::string_view what, std::size_t col) -> void {
    std::ostringstream msg;
    msg << "markup error at column " << col << ": " << what;
    throw ParseError(msg.str(), 0, col);
  };

  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    if (uni::is_space(cps[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (cps[i] == U'<') {
      ++i;  // consume '<'
      std::string label;
      while (i < n && ((cps[i] >= U'A' && cps[i] <= U'Z') || cps[i] == U'+' || cps[i] == U'-')) {
        label.push_back(static_cast<char>(cps[i]));
        ++i;
      }
      if (!valid_label(label)) fail("bad tag label", start + 1);
      if (i >= n || cps[i] != U' ') fail("expected a space after the tag label", i + 1);
      ++i;  // consume the separator
      std::u32string word;
      while (i < n && cps[i] != U'>' && !uni::is_space(cps[i])) {
        word.push_back(cps[i]);
        ++i;
      }
      if (i >= n) fail("unclosed tag", start + 1);
      if (uni::is_space(cps[i])) fail("tag payload must be a single word", i + 1);
      if (word.empty()) fail("empty tag payload", i + 1);
      ++i;  // consume '>'
      if (i < n && !uni::is_space(cps[i])) fail("unexpected text after '>'", i + 1);
      out.tokens.push_back(utf8_encode(word));
      out.tags.push_back(TokenTag{static_cast<std::uint32_t>(out.tokens.size()), label,
                                  switch_type_for_label(label), TagSource::Markup});
    } else {
      std::u32string word;
      while (i < n && !uni::is_space(cps[i])) {
        word.push_back(cps[i]);
        ++i;
      }
      // "\<..." is an escaped literal '<' at the start of a plain token.
      if (word.size() >= 2 && word[0] == U'\\' && word[1] == U'<') {
        word.erase(word.begin());
      }
      out.tokens.push_back(utf8_encode(word));
    }
  }
  return out;
}

std::string render_markup(const MarkupParse& parse) {
  std::string out;
  for (std::size_t i = 0; i < parse.tokens.size(); ++i) {
    if (!out.empty()) out.push_back(' ');
    const std::uint32_t index = static_cast<std::uint32_t>(i + 1);
    const TokenTag* tag = nullptr;
    for (const TokenTag& t : parse.tags) {
      if (t.index == index) {
        tag = &t;
        break;
      }
    }
    if (tag != nullptr) {
      out.push_back('<');
      out += tag->lang;
      out.push_back(' ');
      out += parse.tokens[i];
      out.push_back('>');
    } else if (!parse.tokens[i].empty() && parse.tokens[i][0] == '<') {
      out.push_back('\\');
      out += parse.tokens[i];
    } else {
      out += parse.tokens[i];
    }
  }
  return out;
}

std::vector<TokenTag> auto_tag_by_script(std::span<const Token> tokens,
                                         Script matrix, Script embedded) {
  auto trackable = [](Script s) {
    return s == Script::Latin || s == Script::Han || s == Script::Arabic;
  };
  if (!trackable(matrix) || !trackable(embedded)) {
    throw ConfigError("script auto-tagging needs Latin, Han or Arabic scripts");
  }
  if (matrix == embedded) {
    throw ConfigError("matrix and embedded script must differ; same-script pairs "
                      "need markup or annotations");
  }

  std::vector<TokenTag> tags;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    const auto index = static_cast<std::uint32_t>(i + 1);
    if (tok.script == embedded) {
      tags.push_back(TokenTag{index, std::string(script_label(embedded)),
                              SwitchType::InterWord, TagSource::ScriptAuto});
    } else if (tok.script == Script::Mixed && contains_script(tok.text, embedded)) {
      std::string lang = std::string(script_label(embedded)) + "+" +
                         std::string(script_label(matrix));
      tags.push_back(TokenTag{index, std::move(lang), SwitchType::IntraWord,
                              TagSource::ScriptAuto});
    }
  }
  return tags;
}

std::map<std::string, std::vector<TokenTag>> load_annotations(std::istream& in) {
  std::map<std::string, std::vector<TokenTag>> out;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&lineno](std::string_view what) -> void {
    std::ostringstream msg;
    msg << "annotation error at line " << lineno << ": " << what;
    throw ParseError(msg.str(), lineno, 0);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos ||
        line.find('\t', t2 + 1) != std::string::npos) {
      fail("expected utt_id<TAB>token_index<TAB>label");
    }
    const std::string id = line.substr(0, t1);
    const std::string index_text = line.substr(t1 + 1, t2 - t1 - 1);
    const std::string label = line.substr(t2 + 1);

    if (id.empty()) fail("empty utterance id");
    std::uint32_t index = 0;
    const auto [ptr, ec] = std::from_chars(index_text.data(),
                                           index_text.data() + index_text.size(), index);
    if (ec != std::errc() || ptr != index_text.data() + index_text.size() || index == 0) {
      fail("token_index must be a positive integer, got '" + index_text + "'");
    }
    if (!valid_label(label)) fail("bad label '" + label + "'");

    auto& tags = out[id];
    for (const TokenTag& t : tags) {
      if (t.index == index) fail("duplicate annotation for " + id + " index " + index_text);
    }
    tags.push_back(TokenTag{index, label, switch_type_for_label(label),
                            TagSource::Annotation});
  }

  for (auto& [id, tags] : out) {
    std::sort(tags.begin(), tags.end(),
              [](const TokenTag& a, const TokenTag& b) { return a.index < b.index; });
  }
  return out;
}

std::map<std::string, std::vector<TokenTag>> load_annotations_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open annotation file: " + path);
  return load_annotations(in);
}

InterestSet build_interest_set(std::span<const TokenTag> tags,
                               std::uint32_t ref_len, const Selector& selector) {
  InterestSet set;
  set.ref_len = ref_len;
  set.selector = selector.str();
  for (const TokenTag& tag : tags) {
    if (tag.index == 0 || tag.index > ref_len) {
      throw Error("tag index " + std::to_string(tag.index) +
                  " outside reference of length " + std::to_string(ref_len));
    }
    bool pass = false;
    switch (selector.kind) {
      case Selector::Kind::All:
        pass = tag.switch_type != SwitchType::None;
        break;
      case Selector::Kind::InterWord:
        pass = tag.switch_type == SwitchType::InterWord;
        break;
      case Selector::Kind::IntraWord:
        pass = tag.switch_type == SwitchType::IntraWord;
        break;
      case Selector::Kind::Lang:
        pass = tag.lang == selector.label;
        break;
    }
    if (pass) set.indices.push_back(tag.index);
  }
  std::sort(set.indices.begin(), set.indices.end());
  set.indices.erase(std::unique(set.indices.begin(), set.indices.end()), set.indices.end());
  return set;
}

}  // namespace pier
