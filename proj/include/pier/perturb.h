// include/pier/perturb.h
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

#ifndef PIER_PERTURB_H_
#define PIER_PERTURB_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pier/corpus.h"
#include "pier/metrics.h"

namespace pier {

enum class PerturbTarget { InterestOnly, NonInterestOnly, All };

PerturbTarget perturb_target_from(std::string_view name);
std::string_view perturb_target_name(PerturbTarget t);

// Synthetic error profile. Substitution and deletion are mutually exclusive
// per position (p_sub + p_del <= 1); insertion after a position is an
// independent draw. Replacement tokens come from `lexicon`, which callers
// keep disjoint from the corpus vocabulary so minimal alignments stay unique.
struct PerturbSpec {
  double p_sub = 0.0;
  double p_del = 0.0;
  double p_ins = 0.0;
  PerturbTarget target = PerturbTarget::All;
  std::uint64_t seed = 0;
  std::vector<std::string> lexicon;

  void validate(bool has_interest) const;  // throws ConfigError

  // key=value lines: p_sub, p_del, p_ins, seed, target, lexicon (a path).
  static PerturbSpec parse_config(std::istream& in);
};

// Applies the spec to the utterance's reference tokens. The random stream is
// keyed by (seed, utt id), so generation is reproducible per utterance and
// independent of corpus order or parallel scheduling.
std::vector<std::string> inject_errors(const Utterance& utt, const PerturbSpec& spec);

// Several specs with pairwise-disjoint targets and equal seeds applied in one
// pass, e.g. one rate profile for interest positions and another for the rest.
std::vector<std::string> inject_errors(const Utterance& utt,
                                       std::span<const PerturbSpec> specs);

struct DivergenceSide {
  MetricValue wer;   // pooled over all utterances
  MetricValue pier;  // pooled over utterances with a non-empty interest set
};

struct DivergenceResult {
  DivergenceSide a;
  DivergenceSide b;
  double delta_wer_pct() const { return b.wer.rate_pct() - a.wer.rate_pct(); }
  double delta_pier_pct() const { return b.pier.rate_pct() - a.pier.rate_pct(); }
};

// Scores the corpus against hypotheses generated under two perturbation
// profiles; the library-level reproduction of the WER-down/PIER-up scissors.
DivergenceResult divergence_demo(const std::vector<Utterance>& corpus,
                                 std::span<const PerturbSpec> profile_a,
                                 std::span<const PerturbSpec> profile_b);

std::string format_divergence_table(const DivergenceResult& r);

// One token per line; rejects entries containing whitespace.
std::vector<std::string> load_lexicon_file(const std::string& path);

}  // namespace pier

#endif  // PIER_PERTURB_H_
