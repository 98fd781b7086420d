// tests/test_perturb.cc
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

#include <cmath>
#include <sstream>

#include "pier/error.h"
#include "pier/perturb.h"
#include "tempdir.h"

using namespace pier;

namespace {

Utterance make_utt(const std::string& id, std::size_t n_tokens,
                   std::vector<std::uint32_t> interest) {
  Utterance u;
  u.id = id;
  for (std::size_t i = 0; i < n_tokens; ++i) {
    const std::string text = id + "_t" + std::to_string(i);
    u.ref_tokens.push_back(Token{text, Script::Latin, 0, 0});
    if (!u.norm_ref.empty()) u.norm_ref.push_back(' ');
    u.norm_ref += text;
  }
  InterestSet set;
  set.indices = std::move(interest);
  set.ref_len = static_cast<std::uint32_t>(n_tokens);
  set.selector = "all";
  u.interest = set;
  return u;
}

std::vector<std::string> lexicon() {
  std::vector<std::string> out;
  for (int i = 0; i < 20; ++i) out.push_back("zz_lex" + std::to_string(i));
  return out;
}

std::vector<std::string> ref_texts(const Utterance& u) {
  std::vector<std::string> out;
  for (const Token& t : u.ref_tokens) out.push_back(t.text);
  return out;
}

}  // namespace

TEST_CASE("perturb spec validation") {
  PerturbSpec spec;
  spec.lexicon = lexicon();
  spec.p_sub = 0.6;
  spec.p_del = 0.6;
  CHECK_THROWS_AS(spec.validate(true), ConfigError);  // p_sub + p_del > 1
  spec.p_del = 0.2;
  spec.validate(true);
  spec.p_ins = 1.5;
  CHECK_THROWS_AS(spec.validate(true), ConfigError);
  spec.p_ins = 0.0;
  spec.lexicon.clear();
  CHECK_THROWS_AS(spec.validate(true), ConfigError);  // needs lexicon for subs
  spec.p_sub = 0.0;
  spec.validate(true);
  spec.target = PerturbTarget::InterestOnly;
  CHECK_THROWS_AS(spec.validate(false), ConfigError);  // no interest available
}

TEST_CASE("zero rates reproduce the reference") {
  const Utterance u = make_utt("u1", 7, {4});
  PerturbSpec spec;
  spec.seed = 123;
  CHECK(inject_errors(u, spec) == ref_texts(u));
}

TEST_CASE("forced deletions hit exactly the interest tokens") {
  const Utterance u = make_utt("u1", 7, {4});
  PerturbSpec spec;
  spec.p_del = 1.0;
  spec.target = PerturbTarget::InterestOnly;
  spec.seed = 9;
  const auto hyp = inject_errors(u, spec);
  std::vector<std::string> expected = ref_texts(u);
  expected.erase(expected.begin() + 3);
  CHECK(hyp == expected);
}

TEST_CASE("forced substitutions leave the interest token intact") {
  const Utterance u = make_utt("u1", 7, {4});
  PerturbSpec spec;
  spec.p_sub = 1.0;
  spec.target = PerturbTarget::NonInterestOnly;
  spec.seed = 77;
  spec.lexicon = lexicon();
  const auto hyp = inject_errors(u, spec);
  REQUIRE(hyp.size() == 7);
  CHECK(hyp[3] == u.ref_tokens[3].text);
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    if (i == 3) continue;
    CHECK(hyp[i] != u.ref_tokens[i].text);
    CHECK(hyp[i].rfind("zz_lex", 0) == 0);
  }
}

TEST_CASE("same seed gives byte-identical output, different seed differs") {
  const Utterance u = make_utt("u1", 12, {3, 7});
  PerturbSpec spec;
  spec.p_sub = 0.4;
  spec.p_del = 0.2;
  spec.p_ins = 0.3;
  spec.seed = 42;
  spec.lexicon = lexicon();
  const auto a = inject_errors(u, spec);
  const auto b = inject_errors(u, spec);
  CHECK(a == b);
  spec.seed = 43;
  CHECK(inject_errors(u, spec) != a);
}

TEST_CASE("combined specs partition positions") {
  const Utterance u = make_utt("u1", 10, {5});
  PerturbSpec on_interest;
  on_interest.p_del = 1.0;
  on_interest.target = PerturbTarget::InterestOnly;
  on_interest.seed = 5;
  PerturbSpec on_rest;
  on_rest.p_sub = 1.0;
  on_rest.target = PerturbTarget::NonInterestOnly;
  on_rest.seed = 5;
  on_rest.lexicon = lexicon();
  const std::vector<PerturbSpec> specs{on_interest, on_rest};
  const auto hyp = inject_errors(u, specs);
  REQUIRE(hyp.size() == 9);  // interest token deleted
  for (const auto& tok : hyp) CHECK(tok.rfind("zz_lex", 0) == 0);

  PerturbSpec all;
  all.target = PerturbTarget::All;
  all.seed = 5;
  const std::vector<PerturbSpec> overlapping{all, on_rest};
  CHECK_THROWS_AS(inject_errors(u, overlapping), ConfigError);
  PerturbSpec other_seed = on_interest;
  other_seed.seed = 6;
  const std::vector<PerturbSpec> mixed_seeds{other_seed, on_rest};
  CHECK_THROWS_AS(inject_errors(u, mixed_seeds), ConfigError);
}

TEST_CASE("sampled rates converge to the configured probabilities") {
  // 3-sigma binomial bound over >= 10^4 eligible positions
  const double p_sub = 0.25;
  const std::size_t n_utts = 1250;
  const std::size_t len = 8;
  PerturbSpec spec;
  spec.p_sub = p_sub;
  spec.seed = 2718;
  spec.lexicon = lexicon();

  std::size_t fired = 0, total = 0;
  for (std::size_t k = 0; k < n_utts; ++k) {
    const Utterance u = make_utt("utt" + std::to_string(k), len, {1});
    const auto hyp = inject_errors(u, spec);
    REQUIRE(hyp.size() == len);
    for (std::size_t i = 0; i < len; ++i) {
      ++total;
      if (hyp[i] != u.ref_tokens[i].text) ++fired;
    }
  }
  const double expected = p_sub * static_cast<double>(total);
  const double sigma = std::sqrt(static_cast<double>(total) * p_sub * (1 - p_sub));
  CHECK(std::abs(static_cast<double>(fired) - expected) <= 3.0 * sigma);
}

TEST_CASE("divergence demo spec examples") {
  std::vector<Utterance> corpus;
  for (int i = 0; i < 60; ++i) {
    corpus.push_back(make_utt("u" + std::to_string(i), 10, {4}));
  }

  PerturbSpec zero;
  zero.seed = 1;
  const std::vector<PerturbSpec> zero_profile{zero};

  // identical profiles give zero deltas; all-zero rates give zero metrics
  const DivergenceResult same = divergence_demo(corpus, zero_profile, zero_profile);
  CHECK(same.delta_wer_pct() == 0.0);
  CHECK(same.delta_pier_pct() == 0.0);
  CHECK(same.a.wer.rate() == 0.0);
  CHECK(same.a.pier.rate() == 0.0);

  // uniform errors vs errors concentrated on interest positions
  PerturbSpec uniform;
  uniform.p_sub = 0.10;
  uniform.seed = 11;
  uniform.lexicon = lexicon();
  PerturbSpec rest;
  rest.p_sub = 0.05;
  rest.target = PerturbTarget::NonInterestOnly;
  rest.seed = 12;
  rest.lexicon = lexicon();
  PerturbSpec focus;
  focus.p_sub = 0.30;
  focus.target = PerturbTarget::InterestOnly;
  focus.seed = 12;
  focus.lexicon = lexicon();

  const std::vector<PerturbSpec> profile_a{uniform};
  const std::vector<PerturbSpec> profile_b{rest, focus};
  const DivergenceResult r = divergence_demo(corpus, profile_a, profile_b);
  CHECK(r.b.wer.rate() < r.a.wer.rate());
  CHECK(r.b.pier.rate() > r.a.pier.rate());

  const std::string table = format_divergence_table(r);
  CHECK(table.find("WER%") != std::string::npos);
  CHECK(table.find("delta") != std::string::npos);
}

TEST_CASE("perturb config file parsing") {
  testutil::TempDir dir;
  const std::string lex = dir.write("lex.txt", "aaa\nbbb\n");
  const std::string cfg = dir.write(
      "p.cfg", "# profile\np_sub=0.25\np_del=0.1\nseed=77\ntarget=interest\nlexicon=" +
                   lex + "\n");
  std::ifstream in(cfg);
  const PerturbSpec spec = PerturbSpec::parse_config(in);
  CHECK(spec.p_sub == 0.25);
  CHECK(spec.p_del == 0.1);
  CHECK(spec.seed == 77);
  CHECK(spec.target == PerturbTarget::InterestOnly);
  CHECK(spec.lexicon == std::vector<std::string>{"aaa", "bbb"});

  std::istringstream bad("nope\n");
  CHECK_THROWS_AS(PerturbSpec::parse_config(bad), ConfigError);
  std::istringstream bad2("p_sub=abc\n");
  CHECK_THROWS_AS(PerturbSpec::parse_config(bad2), ConfigError);

  CHECK_THROWS_AS(load_lexicon_file(dir.path() + "/absent.txt"), IoError);
  const std::string bad_lex = dir.write("bad_lex.txt", "two words\n");
  CHECK_THROWS_AS(load_lexicon_file(bad_lex), ConfigError);
}
