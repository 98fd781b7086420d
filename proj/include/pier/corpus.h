// include/pier/corpus.h
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

#ifndef PIER_CORPUS_H_
#define PIER_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pier/poi.h"
#include "pier/textnorm.h"

namespace pier {

enum class TokenizerMode { Word, Char, Mixed };

TokenizerMode tokenizer_mode_from(std::string_view name);
std::string_view tokenizer_mode_name(TokenizerMode m);
std::vector<Token> run_tokenizer(std::string_view normalized, TokenizerMode m);

// How points of interest are attached to references.
struct PoiMode {
  enum class Kind { Markup, ScriptAuto, Annotation, None };
  Kind kind = Kind::Markup;
  Script matrix = Script::Latin;    // ScriptAuto only
  Script embedded = Script::Latin;  // ScriptAuto only
  std::string annot_path;           // Annotation only

  // "markup" | "script:<MATRIX>-<EMBEDDED>" | "annot:<path>" | "none"
  static PoiMode parse(std::string_view text);
  std::string str() const;
};

struct CorpusSpec {
  std::string ref_path;
  std::string hyp_path;
  TokenizerMode tokenizer = TokenizerMode::Word;
  NormConfig norm;
  PoiMode poi;
  Selector selector;

  void validate() const;  // throws ConfigError on impossible combinations
};

struct Utterance {
  std::string id;
  std::string raw_ref;
  std::string raw_hyp;
  std::string norm_ref;  // normalized, markup stripped
  std::string norm_hyp;
  std::vector<Token> ref_tokens;
  std::vector<Token> hyp_tokens;
  std::vector<TokenTag> tags;            // all tags, pre-selector
  std::optional<InterestSet> interest;   // absent iff poi mode is None
};

struct LoadResult {
  std::vector<Utterance> utterances;     // reference file order
  std::uint32_t missing_hyp_warnings = 0;
};

// Reads both TSV files (utt_id<TAB>text, LF, UTF-8), pairs by id, normalizes,
// tokenizes and attaches interest sets. A reference id missing from the
// hypothesis file scores against the empty hypothesis and bumps the warning
// counter; a hypothesis id absent from the references is an error.
LoadResult load_pairs(const CorpusSpec& spec);

// Reference side only; used by tagging inspection and the perturbation tool.
std::vector<Utterance> load_reference_side(const CorpusSpec& spec);

struct FilterResult {
  std::vector<Utterance> kept;
  std::uint32_t skipped_monolingual = 0;
  std::uint32_t skipped_empty_ref = 0;
};

// Drops utterances with an empty reference and, when interest sets are
// attached, utterances whose interest set is empty (monolingual).
FilterResult filter_scoreable(std::vector<Utterance> utterances);

// One parsed TSV line.
struct TsvRecord {
  std::string id;
  std::string text;
};
std::vector<TsvRecord> parse_corpus_tsv(std::istream& in, std::string_view what);

}  // namespace pier

#endif  // PIER_CORPUS_H_
