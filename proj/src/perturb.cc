// src/perturb.cc
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

#include "pier/perturb.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "pier/error.h"

namespace pier {

PerturbTarget perturb_target_from(std::string_view name) {
  if (name == "interest" || name == "interest_only") return PerturbTarget::InterestOnly;
  if (name == "non-interest" || name == "non_interest_only") {
    return PerturbTarget::NonInterestOnly;
  }
  if (name == "all") return PerturbTarget::All;
  throw ConfigError("unknown perturbation target: " + std::string(name) +
                    " (expected interest, non-interest or all)");
}

std::string_view perturb_target_name(PerturbTarget t) {
  switch (t) {
    case PerturbTarget::InterestOnly: return "interest_only";
    case PerturbTarget::NonInterestOnly: return "non_interest_only";
    case PerturbTarget::All: return "all";
  }
  return "?";
}

void PerturbSpec::validate(bool has_interest) const {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(p_sub) || !in_unit(p_del) || !in_unit(p_ins)) {
    throw ConfigError("perturbation rates must lie in [0, 1]");
  }
  if (p_sub + p_del > 1.0) {
    throw ConfigError("p_sub + p_del must not exceed 1 (exclusive per position)");
  }
  if ((p_sub > 0.0 || p_ins > 0.0) && lexicon.empty()) {
    throw ConfigError("substitutions and insertions need a non-empty lexicon");
  }
  if (target != PerturbTarget::All && !has_interest) {
    throw ConfigError("target '" + std::string(perturb_target_name(target)) +
                      "' needs an interest set; configure a poi mode");
  }
}

namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Platform-stable uniform draws on top of the standard mt19937_64 sequence;
// std::uniform_real_distribution is not bit-stable across implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view utt_id)
      : engine_(splitmix64(seed ^ fnv1a64(utt_id))) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

const PerturbSpec* spec_for_position(std::span<const PerturbSpec> specs,
                                     const InterestSet* interest, std::uint32_t index) {
  for (const PerturbSpec& spec : specs) {
    switch (spec.target) {
      case PerturbTarget::All:
        return &spec;
      case PerturbTarget::InterestOnly:
        if (interest != nullptr && interest->contains(index)) return &spec;
        break;
      case PerturbTarget::NonInterestOnly:
        if (interest == nullptr || !interest->contains(index)) return &spec;
        break;
    }
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> inject_errors(const Utterance& utt,
                                       std::span<const PerturbSpec> specs) {
  if (specs.empty()) throw ConfigError("no perturbation spec given");
  for (const PerturbSpec& spec : specs) {
    spec.validate(utt.interest.has_value());
    if (spec.seed != specs.front().seed) {
      throw ConfigError("combined perturbation specs must share one seed");
    }
  }
  if (specs.size() > 1) {
    bool interest_seen = false, non_interest_seen = false;
    for (const PerturbSpec& spec : specs) {
      if (spec.target == PerturbTarget::All) {
        throw ConfigError("an 'all' spec cannot be combined with others");
      }
      bool& seen = spec.target == PerturbTarget::InterestOnly ? interest_seen
                                                              : non_interest_seen;
      if (seen) throw ConfigError("overlapping perturbation targets");
      seen = true;
    }
  }

  const InterestSet* interest =
      utt.interest.has_value() ? &*utt.interest : nullptr;
  Rng rng(specs.front().seed, utt.id);

  std::vector<std::string> hyp;
  hyp.reserve(utt.ref_tokens.size() + 4);
  for (std::size_t i = 0; i < utt.ref_tokens.size(); ++i) {
    const auto index = static_cast<std::uint32_t>(i + 1);
    // Two base draws per position keep the stream position-indexed.
    const double u_action = rng.uniform();
    const double u_insert = rng.uniform();
    const PerturbSpec* spec = spec_for_position(specs, interest, index);
    if (spec == nullptr) {
      hyp.push_back(utt.ref_tokens[i].text);
      continue;
    }
    if (u_action < spec->p_sub) {
      hyp.push_back(spec->lexicon[rng.index(spec->lexicon.size())]);
    } else if (u_action < spec->p_sub + spec->p_del) {
      // deleted
    } else {
      hyp.push_back(utt.ref_tokens[i].text);
    }
    if (u_insert < spec->p_ins) {
      hyp.push_back(spec->lexicon[rng.index(spec->lexicon.size())]);
    }
  }
  return hyp;
}

std::vector<std::string> inject_errors(const Utterance& utt, const PerturbSpec& spec) {
  return inject_errors(utt, std::span<const PerturbSpec>(&spec, 1));
}

PerturbSpec PerturbSpec::parse_config(std::istream& in) {
  PerturbSpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("perturbation config line " + std::to_string(lineno) +
                        ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    auto as_double = [&]() {
      try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return d;
      } catch (const std::exception&) {
        throw ConfigError("perturbation config line " + std::to_string(lineno) +
                          ": bad number '" + value + "'");
      }
    };
    if (key == "p_sub") {
      spec.p_sub = as_double();
    } else if (key == "p_del") {
      spec.p_del = as_double();
    } else if (key == "p_ins") {
      spec.p_ins = as_double();
    } else if (key == "seed") {
      std::uint64_t seed = 0;
      const auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), seed);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError("perturbation config line " + std::to_string(lineno) +
                          ": bad seed '" + value + "'");
      }
      spec.seed = seed;
    } else if (key == "target") {
      spec.target = perturb_target_from(value);
    } else if (key == "lexicon") {
      spec.lexicon = load_lexicon_file(value);
    } else {
      throw ConfigError("perturbation config line " + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
    }
  }
  return spec;
}

std::vector<std::string> load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.find_first_of(" \t") != std::string::npos) {
      throw ConfigError("lexicon entries must be single tokens: '" + line + "'");
    }
    out.push_back(line);
  }
  if (out.empty()) throw ConfigError("lexicon file is empty: " + path);
  return out;
}

namespace {

DivergenceSide score_profile(const std::vector<Utterance>& corpus,
                             std::span<const PerturbSpec> profile) {
  std::uint64_t wer_num = 0, wer_den = 0, pier_num = 0, pier_den = 0;
  OpBreakdown wer_b, pier_b;
  for (const Utterance& utt : corpus) {
    if (utt.ref_tokens.empty()) continue;
    const std::vector<std::string> hyp = inject_errors(utt, profile);
    std::vector<std::string> ref;
    ref.reserve(utt.ref_tokens.size());
    for (const Token& t : utt.ref_tokens) ref.push_back(t.text);
    const AlignmentTrace trace = align(ref, hyp);
    const MetricValue w = wer(trace);
    wer_num += w.numerator;
    wer_den += w.denominator;
    wer_b += w.breakdown;
    if (utt.interest.has_value() && !utt.interest->empty()) {
      const MetricValue p = pier_metric(trace, *utt.interest);
      pier_num += p.numerator;
      pier_den += p.denominator;
      pier_b += p.breakdown;
    }
  }
  if (wer_den == 0 || pier_den == 0) {
    throw Error("divergence demo needs non-empty references with interest sets");
  }
  return DivergenceSide{MetricValue{wer_num, wer_den, wer_b},
                        MetricValue{pier_num, pier_den, pier_b}};
}

}  // namespace

DivergenceResult divergence_demo(const std::vector<Utterance>& corpus,
                                 std::span<const PerturbSpec> profile_a,
                                 std::span<const PerturbSpec> profile_b) {
  DivergenceResult r;
  r.a = score_profile(corpus, profile_a);
  r.b = score_profile(corpus, profile_b);
  return r;
}

std::string format_divergence_table(const DivergenceResult& r) {
  auto pct = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "profile      WER%     PIER%\n";
  out << "A         " << pct(r.a.wer.rate_pct()) << "    " << pct(r.a.pier.rate_pct())
      << "\n";
  out << "B         " << pct(r.b.wer.rate_pct()) << "    " << pct(r.b.pier.rate_pct())
      << "\n";
  out << "delta     " << pct(r.delta_wer_pct()) << "    " << pct(r.delta_pier_pct())
      << "\n";
  return out.str();
}

}  // namespace pier
