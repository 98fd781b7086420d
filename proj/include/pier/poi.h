// include/pier/poi.h
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

#ifndef PIER_POI_H_
#define PIER_POI_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pier/align.h"
#include "pier/textnorm.h"

namespace pier {

enum class SwitchType { InterWord, IntraWord, None };
enum class TagSource { Markup, ScriptAuto, Annotation };

std::string_view switch_type_name(SwitchType t);

struct TokenTag {
  std::uint32_t index = 0;   // 1-based reference token index
  std::string lang;          // label, e.g. "EN", "EN+DE", "LAT"
  SwitchType switch_type = SwitchType::InterWord;
  TagSource source = TagSource::Markup;

  bool operator==(const TokenTag&) const = default;
};

// The ordered set of reference indices whose recognition is evaluated.
struct InterestSet {
  std::vector<std::uint32_t> indices;  // strictly increasing, 1-based
  std::uint32_t ref_len = 0;
  std::string selector;

  bool empty() const { return indices.empty(); }
  std::size_t size() const { return indices.size(); }
  std::uint32_t max_index() const { return indices.empty() ? 0 : indices.back(); }
  bool contains(std::uint32_t i) const;
};

// Which tags feed the interest set.
struct Selector {
  enum class Kind { All, InterWord, IntraWord, Lang };
  Kind kind = Kind::All;
  std::string label;  // for Kind::Lang

  // Accepts "all", "inter", "inter_word", "intra", "intra_word", "lang:L".
  static Selector parse(std::string_view text);
  std::string str() const;
};

// Result of stripping inline markup from a reference line.
struct MarkupParse {
  std::vector<std::string> tokens;  // clean token texts, pre-normalization
  std::vector<TokenTag> tags;
};

// Parses `<LABEL word>` markup. LABEL matches [A-Z][A-Z+-]{0,7}; a literal
// '<' at the start of a plain token is written "\<". Labels containing '+'
// mark intra-word switches; the reserved label NE (names) yields
// switch_type None. Throws ParseError with a 1-based column on bad input.
MarkupParse parse_markup(std::string_view line);

// Inverse of parse_markup for canonically spaced lines; used for round-trip
// checks and for publishing tagged references.
std::string render_markup(const MarkupParse& parse);

// Tags every token whose script equals `embedded` (inter-word) and every
// Mixed-script token containing embedded-script letters (intra-word).
// Tokens without script evidence (digits, symbols) are never tagged.
std::vector<TokenTag> auto_tag_by_script(std::span<const Token> tokens,
                                         Script matrix, Script embedded);

// Sidecar TSV: utt_id<TAB>token_index<TAB>label, no header. Throws ParseError
// with the offending line number.
std::map<std::string, std::vector<TokenTag>> load_annotations(std::istream& in);
std::map<std::string, std::vector<TokenTag>> load_annotations_file(const std::string& path);

InterestSet build_interest_set(std::span<const TokenTag> tags,
                               std::uint32_t ref_len, const Selector& selector);

}  // namespace pier

#endif  // PIER_POI_H_
