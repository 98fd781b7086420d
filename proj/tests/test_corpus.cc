// tests/test_corpus.cc
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

#include <doctest.h>

#include <sstream>

#include "pier/corpus.h"
#include "pier/error.h"
#include "tempdir.h"

using namespace pier;

namespace {

CorpusSpec markup_spec(const std::string& ref, const std::string& hyp) {
  CorpusSpec spec;
  spec.ref_path = ref;
  spec.hyp_path = hyp;
  spec.poi = PoiMode::parse("markup");
  spec.selector = Selector::parse("all");
  return spec;
}

}  // namespace

TEST_CASE("parse_corpus_tsv") {
  {
    std::istringstream in("u1\tdas mit\nu2\t\n");
    const auto recs = parse_corpus_tsv(in, "test");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].id == "u1");
    CHECK(recs[0].text == "das mit");
    CHECK(recs[1].text.empty());
  }
  auto throws_parse = [](const char* content) {
    std::istringstream in(content);
    CHECK_THROWS_AS(parse_corpus_tsv(in, "test"), ParseError);
  };
  throws_parse("no tab here\n");
  throws_parse("u1\ttext\twith tab\n");
  throws_parse("u1\ta\nu1\tb\n");   // duplicate id
  throws_parse("\ttext\n");        // empty id
}

TEST_CASE("load_pairs pairs by id and builds interest sets") {
  testutil::TempDir dir;
  const std::string ref = dir.write(
      "ref.tsv", "u1\tdas mit den <EN bots> glaub ich nicht\nu2\tkein tag\n");
  const std::string hyp =
      dir.write("hyp.tsv", "u1\tdas mit den bots glaub ich nicht\nu2\tkein tag\n");

  const LoadResult r = load_pairs(markup_spec(ref, hyp));
  CHECK(r.missing_hyp_warnings == 0);
  REQUIRE(r.utterances.size() == 2);

  const Utterance& u1 = r.utterances[0];
  CHECK(u1.id == "u1");
  CHECK(u1.norm_ref == "das mit den bots glaub ich nicht");
  CHECK(u1.ref_tokens.size() == 7);
  CHECK(u1.hyp_tokens.size() == 7);
  REQUIRE(u1.interest.has_value());
  CHECK(u1.interest->indices == std::vector<std::uint32_t>{4});

  const Utterance& u2 = r.utterances[1];
  REQUIRE(u2.interest.has_value());
  CHECK(u2.interest->empty());
}

TEST_CASE("load_pairs missing hypothesis and unknown id") {
  testutil::TempDir dir;
  const std::string ref = dir.write("ref.tsv", "u1\ta b\nu2\tc d\n");
  {
    const std::string hyp = dir.write("hyp1.tsv", "u1\ta b\n");
    const LoadResult r = load_pairs(markup_spec(ref, hyp));
    CHECK(r.missing_hyp_warnings == 1);
    REQUIRE(r.utterances.size() == 2);
    CHECK(r.utterances[1].hyp_tokens.empty());  // scored against the empty string
  }
  {
    const std::string hyp = dir.write("hyp2.tsv", "u1\ta b\nu9\tx\n");
    CHECK_THROWS_WITH_AS(load_pairs(markup_spec(ref, hyp)),
                         doctest::Contains("u9"), Error);
  }
  {
    CHECK_THROWS_AS(load_pairs(markup_spec(ref, dir.path() + "/absent.tsv")), IoError);
  }
}

TEST_CASE("load_pairs applies normalization before tokenization") {
  testutil::TempDir dir;
  const std::string ref = dir.write("ref.tsv", "u1\tDas  MIT, den <EN Bots!> ja\n");
  const std::string hyp = dir.write("hyp.tsv", "u1\tdas mit den bots ja\n");
  const LoadResult r = load_pairs(markup_spec(ref, hyp));
  const Utterance& u = r.utterances[0];
  CHECK(u.norm_ref == "das mit den bots ja");
  REQUIRE(u.interest.has_value());
  CHECK(u.interest->indices == std::vector<std::uint32_t>{4});
}

TEST_CASE("markup tokens that normalize away shift tag indices") {
  testutil::TempDir dir;
  // "!!" disappears under punctuation stripping; the tag index must follow
  const std::string ref = dir.write("ref.tsv", "u1\t!! das <EN bots> ja\n");
  const std::string hyp = dir.write("hyp.tsv", "u1\tdas bots ja\n");
  const LoadResult r = load_pairs(markup_spec(ref, hyp));
  const Utterance& u = r.utterances[0];
  CHECK(u.norm_ref == "das bots ja");
  REQUIRE(u.interest.has_value());
  CHECK(u.interest->indices == std::vector<std::uint32_t>{2});
}

TEST_CASE("script poi mode tags by token script") {
  testutil::TempDir dir;
  const std::string ref = dir.write("ref.tsv",
                                    "u1\tأنا like ذلك\n"
                                    "u2\tأنا أحب ذلك\n");
  const std::string hyp = dir.write("hyp.tsv", "u1\tأنا like ذلك\nu2\tأنا أحب ذلك\n");
  CorpusSpec spec = markup_spec(ref, hyp);
  spec.poi = PoiMode::parse("script:Arabic-Latin");
  const LoadResult r = load_pairs(spec);
  CHECK(r.utterances[0].interest->indices == std::vector<std::uint32_t>{2});
  CHECK(r.utterances[1].interest->empty());
}

TEST_CASE("annotation poi mode attaches sidecar tags") {
  testutil::TempDir dir;
  const std::string ref = dir.write("ref.tsv", "u1\tdas mit den bots\n");
  const std::string hyp = dir.write("hyp.tsv", "u1\tdas mit den bots\n");
  const std::string annot = dir.write("tags.tsv", "u1\t4\tEN\n");
  CorpusSpec spec = markup_spec(ref, hyp);
  spec.poi = PoiMode::parse("annot:" + annot);
  const LoadResult r = load_pairs(spec);
  CHECK(r.utterances[0].interest->indices == std::vector<std::uint32_t>{4});

  // out-of-range annotation index is a data error
  const std::string bad = dir.write("bad.tsv", "u1\t9\tEN\n");
  spec.poi = PoiMode::parse("annot:" + bad);
  CHECK_THROWS_AS(load_pairs(spec), Error);
}

TEST_CASE("poi mode parsing and config validation") {
  CHECK(PoiMode::parse("markup").kind == PoiMode::Kind::Markup);
  CHECK(PoiMode::parse("none").kind == PoiMode::Kind::None);
  const PoiMode script = PoiMode::parse("script:Han-Latin");
  CHECK(script.matrix == Script::Han);
  CHECK(script.embedded == Script::Latin);
  CHECK(script.str() == "script:Han-Latin");
  CHECK_THROWS_AS(PoiMode::parse("script:Latin-Latin"), ConfigError);
  CHECK_THROWS_AS(PoiMode::parse("script:Latin"), ConfigError);
  CHECK_THROWS_AS(PoiMode::parse("annot:"), ConfigError);
  CHECK_THROWS_AS(PoiMode::parse("whatever"), ConfigError);

  CorpusSpec spec;
  spec.poi = PoiMode::parse("markup");
  spec.tokenizer = TokenizerMode::Char;
  CHECK_THROWS_AS(spec.validate(), ConfigError);  // markup needs word tokens
  spec.poi = PoiMode::parse("script:Han-Latin");
  spec.tokenizer = TokenizerMode::Mixed;
  spec.validate();  // script tagging works on any tokenizer
}

TEST_CASE("filter_scoreable") {
  auto utt = [](const char* id, std::size_t n_tokens, bool with_interest,
                bool interest_empty) {
    Utterance u;
    u.id = id;
    for (std::size_t i = 0; i < n_tokens; ++i) {
      u.ref_tokens.push_back(Token{"t" + std::to_string(i), Script::Latin, 0, 0});
    }
    if (with_interest) {
      InterestSet set;
      set.ref_len = static_cast<std::uint32_t>(n_tokens);
      set.selector = "all";
      if (!interest_empty) set.indices = {1};
      u.interest = set;
    }
    return u;
  };

  {
    std::vector<Utterance> utts{utt("a", 3, true, false), utt("b", 3, true, true),
                                utt("c", 3, true, false)};
    const FilterResult r = filter_scoreable(std::move(utts));
    CHECK(r.kept.size() == 2);
    CHECK(r.skipped_monolingual == 1);
    CHECK(r.skipped_empty_ref == 0);
    CHECK(r.kept.size() + r.skipped_monolingual + r.skipped_empty_ref == 3);
  }
  {
    std::vector<Utterance> utts{utt("a", 0, true, true), utt("b", 2, true, false)};
    const FilterResult r = filter_scoreable(std::move(utts));
    CHECK(r.skipped_empty_ref == 1);
    CHECK(r.skipped_monolingual == 0);
  }
  {
    // poi mode none: no interest sets, no monolingual skipping
    std::vector<Utterance> utts{utt("a", 2, false, false), utt("b", 0, false, false)};
    const FilterResult r = filter_scoreable(std::move(utts));
    CHECK(r.kept.size() == 1);
    CHECK(r.skipped_monolingual == 0);
    CHECK(r.skipped_empty_ref == 1);
  }
}

TEST_CASE("loading is idempotent") {
  testutil::TempDir dir;
  const std::string ref =
      dir.write("ref.tsv", "u1\tdas <EN bots> ja\nu2\tkein tag\nu3\t\n");
  const std::string hyp = dir.write("hyp.tsv", "u1\tdas bots ja\nu2\tkein tag\nu3\tx\n");
  const CorpusSpec spec = markup_spec(ref, hyp);
  const LoadResult a = load_pairs(spec);
  const LoadResult b = load_pairs(spec);
  REQUIRE(a.utterances.size() == b.utterances.size());
  for (std::size_t i = 0; i < a.utterances.size(); ++i) {
    CHECK(a.utterances[i].id == b.utterances[i].id);
    CHECK(a.utterances[i].norm_ref == b.utterances[i].norm_ref);
    CHECK(a.utterances[i].norm_hyp == b.utterances[i].norm_hyp);
    CHECK(a.utterances[i].tags == b.utterances[i].tags);
  }
}
