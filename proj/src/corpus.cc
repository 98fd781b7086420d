// src/corpus.cc
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

#include "pier/corpus.h"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "pier/error.h"

namespace pier {

TokenizerMode tokenizer_mode_from(std::string_view name) {
  if (name == "word") return TokenizerMode::Word;
  if (name == "char") return TokenizerMode::Char;
  if (name == "mixed") return TokenizerMode::Mixed;
  throw ConfigError("unknown tokenizer mode: " + std::string(name));
}

std::string_view tokenizer_mode_name(TokenizerMode m) {
  switch (m) {
    case TokenizerMode::Word: return "word";
    case TokenizerMode::Char: return "char";
    case TokenizerMode::Mixed: return "mixed";
  }
  return "?";
}

std::vector<Token> run_tokenizer(std::string_view normalized, TokenizerMode m) {
  switch (m) {
    case TokenizerMode::Word: return tokenize_words(normalized);
    case TokenizerMode::Char: return tokenize_chars(normalized);
    case TokenizerMode::Mixed: return tokenize_mixed(normalized);
  }
  throw ConfigError("bad tokenizer mode");
}

namespace {

Script script_from_name(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "latin") return Script::Latin;
  if (lower == "han") return Script::Han;
  if (lower == "arabic") return Script::Arabic;
  throw ConfigError("unknown script name: " + std::string(name) +
                    " (expected Latin, Han or Arabic)");
}

}  // namespace

PoiMode PoiMode::parse(std::string_view text) {
  PoiMode mode;
  if (text == "markup") {
    mode.kind = Kind::Markup;
  } else if (text == "none") {
    mode.kind = Kind::None;
  } else if (text.rfind("script:", 0) == 0) {
    mode.kind = Kind::ScriptAuto;
    const std::string_view rest = text.substr(7);
    const std::size_t dash = rest.find('-');
    if (dash == std::string_view::npos) {
      throw ConfigError("script poi mode must look like script:<MATRIX>-<EMBEDDED>");
    }
    mode.matrix = script_from_name(rest.substr(0, dash));
    mode.embedded = script_from_name(rest.substr(dash + 1));
    if (mode.matrix == mode.embedded) {
      throw ConfigError("matrix and embedded script must differ in " + std::string(text));
    }
  } else if (text.rfind("annot:", 0) == 0) {
    mode.kind = Kind::Annotation;
    mode.annot_path = std::string(text.substr(6));
    if (mode.annot_path.empty()) {
      throw ConfigError("annot poi mode needs a path: annot:<path>");
    }
  } else {
    throw ConfigError("unknown poi mode: " + std::string(text) +
                      " (expected markup, script:X-Y, annot:PATH or none)");
  }
  return mode;
}

std::string PoiMode::str() const {
  switch (kind) {
    case Kind::Markup: return "markup";
    case Kind::None: return "none";
    case Kind::ScriptAuto:
      return "script:" + std::string(script_name(matrix)) + "-" +
             std::string(script_name(embedded));
    case Kind::Annotation: return "annot:" + annot_path;
  }
  return "?";
}

void CorpusSpec::validate() const {
  if ((poi.kind == PoiMode::Kind::Markup || poi.kind == PoiMode::Kind::Annotation) &&
      tokenizer != TokenizerMode::Word) {
    throw ConfigError("markup and annotation interest tagging index word positions; "
                      "use --tokenizer word or script-based tagging");
  }
  if (poi.kind == PoiMode::Kind::ScriptAuto && poi.matrix == poi.embedded) {
    throw ConfigError("matrix and embedded script must differ");
  }
}

std::vector<TsvRecord> parse_corpus_tsv(std::istream& in, std::string_view what) {
  std::vector<TsvRecord> records;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      std::ostringstream msg;
      msg << what << " line " << lineno << ": expected utt_id<TAB>text";
      throw ParseError(msg.str(), lineno, 0);
    }
    if (line.find('\t', tab + 1) != std::string::npos) {
      std::ostringstream msg;
      msg << what << " line " << lineno << ": tabs are not allowed inside the text";
      throw ParseError(msg.str(), lineno, 0);
    }
    TsvRecord rec{line.substr(0, tab), line.substr(tab + 1)};
    if (rec.id.empty()) {
      std::ostringstream msg;
      msg << what << " line " << lineno << ": empty utterance id";
      throw ParseError(msg.str(), lineno, 0);
    }
    if (!seen.insert(rec.id).second) {
      std::ostringstream msg;
      msg << what << " line " << lineno << ": duplicate utterance id '" << rec.id << "'";
      throw ParseError(msg.str(), lineno, 0);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

namespace {

std::vector<TsvRecord> read_tsv_file(const std::string& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + std::string(what) + " file: " + path);
  return parse_corpus_tsv(in, what);
}

// Strips markup, normalizes each clean token and drops tokens that normalize
// to nothing (pure punctuation), keeping tag indices aligned.
void build_markup_ref(const std::string& raw, const NormConfig& norm,
                      const std::string& utt_id, Utterance* utt) {
  MarkupParse parsed;
  try {
    parsed = parse_markup(raw);
  } catch (const ParseError& e) {
    throw ParseError("utterance '" + utt_id + "': " + e.what(), e.line, e.column);
  }

  std::vector<std::uint32_t> remap(parsed.tokens.size() + 1, 0);
  std::string joined;
  std::uint32_t kept = 0;
  for (std::size_t i = 0; i < parsed.tokens.size(); ++i) {
    const std::string text = normalize(parsed.tokens[i], norm);
    if (text.empty()) continue;
    ++kept;
    remap[i + 1] = kept;
    if (!joined.empty()) joined.push_back(' ');
    joined += text;
  }
  utt->norm_ref = joined;
  utt->ref_tokens = tokenize_words(joined);
  for (const TokenTag& tag : parsed.tags) {
    const std::uint32_t index = remap[tag.index];
    if (index == 0) continue;  // the tagged token vanished under normalization
    TokenTag moved = tag;
    moved.index = index;
    utt->tags.push_back(moved);
  }
}

Utterance build_utterance_impl(const CorpusSpec& spec, const std::string& id,
                               const std::string& ref_text, const std::string& hyp_text,
                               const std::map<std::string, std::vector<TokenTag>>* annotations) {
  Utterance utt;
  utt.id = id;
  utt.raw_ref = ref_text;
  utt.raw_hyp = hyp_text;

  if (spec.poi.kind == PoiMode::Kind::Markup) {
    build_markup_ref(ref_text, spec.norm, id, &utt);
  } else {
    utt.norm_ref = normalize(ref_text, spec.norm);
    utt.ref_tokens = run_tokenizer(utt.norm_ref, spec.tokenizer);
  }
  utt.norm_hyp = normalize(hyp_text, spec.norm);
  utt.hyp_tokens = run_tokenizer(utt.norm_hyp, spec.tokenizer);

  const auto ref_len = static_cast<std::uint32_t>(utt.ref_tokens.size());
  if (ref_len > 0) {
    switch (spec.poi.kind) {
      case PoiMode::Kind::Markup:
        break;  // tags already collected
      case PoiMode::Kind::ScriptAuto:
        utt.tags = auto_tag_by_script(utt.ref_tokens, spec.poi.matrix, spec.poi.embedded);
        break;
      case PoiMode::Kind::Annotation: {
        const auto it = annotations->find(id);
        if (it != annotations->end()) {
          for (const TokenTag& tag : it->second) {
            if (tag.index > ref_len) {
              throw Error("annotation references token " + std::to_string(tag.index) +
                          " but the reference has only " + std::to_string(ref_len) +
                          " tokens");
            }
          }
          utt.tags = it->second;
        }
        break;
      }
      case PoiMode::Kind::None:
        break;
    }
  }

  if (spec.poi.kind != PoiMode::Kind::None) {
    utt.interest = build_interest_set(utt.tags, ref_len, spec.selector);
  }
  return utt;
}

Utterance build_utterance(const CorpusSpec& spec, const std::string& id,
                          const std::string& ref_text, const std::string& hyp_text,
                          const std::map<std::string, std::vector<TokenTag>>* annotations) {
  try {
    return build_utterance_impl(spec, id, ref_text, hyp_text, annotations);
  } catch (const ParseError&) {
    throw;  // already carries position context
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw Error("utterance '" + id + "': " + e.what());
  }
}

}  // namespace

LoadResult load_pairs(const CorpusSpec& spec) {
  spec.validate();

  const std::vector<TsvRecord> refs = read_tsv_file(spec.ref_path, "reference");
  const std::vector<TsvRecord> hyps = read_tsv_file(spec.hyp_path, "hypothesis");
  if (refs.empty()) throw Error("reference file has no utterances: " + spec.ref_path);

  std::unordered_map<std::string, const std::string*> hyp_by_id;
  std::unordered_set<std::string> ref_ids;
  for (const TsvRecord& r : refs) ref_ids.insert(r.id);
  for (const TsvRecord& h : hyps) {
    if (!ref_ids.contains(h.id)) {
      throw Error("hypothesis id '" + h.id + "' is not present in the references");
    }
    hyp_by_id.emplace(h.id, &h.text);
  }

  std::map<std::string, std::vector<TokenTag>> annotations;
  if (spec.poi.kind == PoiMode::Kind::Annotation) {
    annotations = load_annotations_file(spec.poi.annot_path);
  }

  LoadResult result;
  static const std::string kEmpty;
  for (const TsvRecord& r : refs) {
    const auto it = hyp_by_id.find(r.id);
    const std::string& hyp_text = it == hyp_by_id.end() ? kEmpty : *it->second;
    if (it == hyp_by_id.end()) ++result.missing_hyp_warnings;
    result.utterances.push_back(build_utterance(spec, r.id, r.text, hyp_text, &annotations));
  }
  return result;
}

std::vector<Utterance> load_reference_side(const CorpusSpec& spec) {
  spec.validate();
  const std::vector<TsvRecord> refs = read_tsv_file(spec.ref_path, "reference");

  std::map<std::string, std::vector<TokenTag>> annotations;
  if (spec.poi.kind == PoiMode::Kind::Annotation) {
    annotations = load_annotations_file(spec.poi.annot_path);
  }

  std::vector<Utterance> out;
  out.reserve(refs.size());
  for (const TsvRecord& r : refs) {
    out.push_back(build_utterance(spec, r.id, r.text, "", &annotations));
  }
  return out;
}

FilterResult filter_scoreable(std::vector<Utterance> utterances) {
  FilterResult result;
  for (Utterance& utt : utterances) {
    if (utt.ref_tokens.empty()) {
      ++result.skipped_empty_ref;
    } else if (utt.interest.has_value() && utt.interest->empty()) {
      ++result.skipped_monolingual;
    } else {
      result.kept.push_back(std::move(utt));
    }
  }
  return result;
}

}  // namespace pier
