// tools/pier_main.cc -- scoring CLI for code-switching ASR evaluation.
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

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pier/corpus.h"
#include "pier/error.h"
#include "pier/perturb.h"
#include "pier/report.h"

namespace {

using namespace pier;

struct CommonOpts {
  std::string ref;
  std::string hyp;
  std::string tokenizer = "word";
  std::string poi = "markup";
  std::string select = "all";
  bool lowercase = true;
  bool strip_punct = true;
};

void add_norm_flags(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--tokenizer", opts->tokenizer, "Token unit: word, char or mixed")
      ->default_str(opts->tokenizer);
  cmd->add_option("--poi", opts->poi,
                  "Interest tagging: markup, script:<MATRIX>-<EMBEDDED>, "
                  "annot:<path> or none")
      ->default_str(opts->poi);
  cmd->add_option("--select", opts->select,
                  "Interest selector: all, inter, intra or lang:<LABEL>")
      ->default_str(opts->select);
  cmd->add_flag("--lowercase,!--no-lowercase", opts->lowercase,
                "Lowercase during normalization");
  cmd->add_flag("--strip-punct,!--no-strip-punct", opts->strip_punct,
                "Strip punctuation during normalization");
}

CorpusSpec build_spec(const CommonOpts& opts) {
  CorpusSpec spec;
  spec.ref_path = opts.ref;
  spec.hyp_path = opts.hyp;
  spec.tokenizer = tokenizer_mode_from(opts.tokenizer);
  spec.norm.lowercase = opts.lowercase;
  spec.norm.strip_punct = opts.strip_punct;
  spec.poi = PoiMode::parse(opts.poi);
  spec.selector = Selector::parse(opts.select);
  spec.validate();
  return spec;
}

bool want_color() {
  return isatty(fileno(stdout)) != 0 && std::getenv("PIER_NO_COLOR") == nullptr;
}

struct ScoreOpts {
  CommonOpts common;
  std::string metrics = "wer,pier";
  std::string format = "text";
  bool per_utt = false;
  unsigned jobs = 1;
};

void run_score(const ScoreOpts& opts) {
  const MetricSet metrics = MetricSet::parse(opts.metrics);
  const ReportFormat format = report_format_from(opts.format);
  const CorpusSpec spec = build_spec(opts.common);
  if (metrics.pier && spec.poi.kind == PoiMode::Kind::None) {
    throw ConfigError("PIER needs points of interest; drop pier from --metrics "
                      "or choose a --poi mode other than none");
  }

  LoadResult loaded = load_pairs(spec);
  if (loaded.missing_hyp_warnings > 0) {
    std::cerr << "warning: " << loaded.missing_hyp_warnings
              << " reference utterance(s) had no hypothesis; scored against the "
                 "empty string\n";
  }
  FilterResult filtered = filter_scoreable(std::move(loaded.utterances));
  std::vector<UtteranceScore> scores =
      score_corpus(filtered.kept, metrics, std::max(1u, opts.jobs));
  const SkipStats skips{filtered.skipped_monolingual, filtered.skipped_empty_ref,
                        loaded.missing_hyp_warnings};
  const CorpusReport report = aggregate(std::move(scores), skips, spec, metrics);

  RenderOptions render_opts;
  render_opts.per_utt = opts.per_utt;
  render_opts.color = format == ReportFormat::Text && want_color();
  std::cout << render(report, format, render_opts);
}

struct InspectOpts {
  CommonOpts common;
  std::vector<std::string> utt_ids;
  unsigned worst = 0;
};

void run_inspect(const InspectOpts& opts) {
  if (opts.utt_ids.empty() && opts.worst == 0) {
    throw ConfigError("inspect needs --utt <id> or --worst <n>");
  }
  const CorpusSpec spec = build_spec(opts.common);
  if (opts.worst > 0 && spec.poi.kind == PoiMode::Kind::None) {
    throw ConfigError("--worst ranks by PIER and needs a --poi mode");
  }

  MetricSet metrics;
  metrics.wer = true;
  metrics.pier = spec.poi.kind != PoiMode::Kind::None;

  LoadResult loaded = load_pairs(spec);
  FilterResult filtered = filter_scoreable(std::move(loaded.utterances));
  const std::vector<UtteranceScore> scores = score_corpus(filtered.kept, metrics, 1);

  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < scores.size(); ++i) by_id.emplace(scores[i].id, i);

  std::vector<std::size_t> selected;
  if (!opts.utt_ids.empty()) {
    for (const std::string& id : opts.utt_ids) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw Error("unknown or skipped utterance id: " + id);
      }
      selected.push_back(it->second);
    }
  } else {
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i].pier.has_value()) selected.push_back(i);
    }
    // Highest PIER first, ties broken by id.
    std::stable_sort(selected.begin(), selected.end(), [&](std::size_t a, std::size_t b) {
      const double ra = scores[a].pier->rate();
      const double rb = scores[b].pier->rate();
      if (ra != rb) return ra > rb;
      return scores[a].id < scores[b].id;
    });
    if (selected.size() > opts.worst) selected.resize(opts.worst);
  }

  bool first = true;
  for (const std::size_t i : selected) {
    const UtteranceScore& score = scores[i];
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "utt " << score.id;
    auto show = [](const char* name, const std::optional<MetricValue>& v) {
      if (!v.has_value()) return std::string();
      char buf[96];
      std::snprintf(buf, sizeof(buf), "  %s %.2f (%llu/%llu)", name, v->rate_pct(),
                    static_cast<unsigned long long>(v->numerator),
                    static_cast<unsigned long long>(v->denominator));
      return std::string(buf);
    };
    std::cout << show("WER", score.wer) << show("PIER", score.pier) << "\n";
    std::cout << dump_alignment(score, filtered.kept[i]);
  }
}

void run_tag(const CommonOpts& opts) {
  const CorpusSpec spec = build_spec(opts);
  if (spec.poi.kind == PoiMode::Kind::None) {
    throw ConfigError("tag inspection needs a --poi mode other than none");
  }
  const std::vector<Utterance> utts = load_reference_side(spec);

  std::size_t tagged_utts = 0, monolingual = 0;
  std::size_t inter = 0, intra = 0, names = 0;
  for (const Utterance& utt : utts) {
    for (const TokenTag& tag : utt.tags) {
      std::cout << utt.id << '\t' << tag.index << '\t' << tag.lang << '\t'
                << switch_type_name(tag.switch_type) << '\n';
      switch (tag.switch_type) {
        case SwitchType::InterWord: ++inter; break;
        case SwitchType::IntraWord: ++intra; break;
        case SwitchType::None: ++names; break;
      }
    }
    if (!utt.tags.empty()) ++tagged_utts;
    if (!utt.interest.has_value() || utt.interest->empty()) ++monolingual;
  }
  std::cout << "# utterances " << utts.size() << ", tagged " << tagged_utts
            << ", monolingual " << monolingual << ", points " << (inter + intra + names)
            << " (inter_word " << inter << ", intra_word " << intra << ", none "
            << names << ")\n";
}

struct PerturbOpts {
  CommonOpts common;
  std::string config_path;
  std::string lexicon_path;
  std::string target = "all";
  double p_sub = 0.0;
  double p_del = 0.0;
  double p_ins = 0.0;
  std::uint64_t seed = 0;
};

void run_perturb(const PerturbOpts& opts, const CLI::App* cmd) {
  PerturbSpec spec;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path, std::ios::binary);
    if (!in) throw IoError("cannot open perturbation config: " + opts.config_path);
    spec = PerturbSpec::parse_config(in);
  }
  // Explicit flags override config file values.
  if (cmd->count("--p-sub") > 0) spec.p_sub = opts.p_sub;
  if (cmd->count("--p-del") > 0) spec.p_del = opts.p_del;
  if (cmd->count("--p-ins") > 0) spec.p_ins = opts.p_ins;
  if (cmd->count("--seed") > 0) spec.seed = opts.seed;
  if (cmd->count("--target") > 0) spec.target = perturb_target_from(opts.target);
  if (cmd->count("--lexicon") > 0) spec.lexicon = load_lexicon_file(opts.lexicon_path);

  const CorpusSpec corpus_spec = build_spec(opts.common);
  if (spec.target != PerturbTarget::All &&
      corpus_spec.poi.kind == PoiMode::Kind::None) {
    throw ConfigError("targeted perturbation needs a --poi mode to define interest");
  }

  const std::vector<Utterance> utts = load_reference_side(corpus_spec);
  std::string line;
  for (const Utterance& utt : utts) {
    const std::vector<std::string> hyp = inject_errors(utt, spec);
    line.clear();
    for (const std::string& tok : hyp) {
      if (!line.empty()) line.push_back(' ');
      line += tok;
    }
    std::cout << utt.id << '\t' << line << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scores code-switching ASR output with WER, CER, MER and PIER"};
  app.require_subcommand(1);

  ScoreOpts score_opts;
  CLI::App* score_cmd = app.add_subcommand("score", "Score a hypothesis corpus");
  score_cmd->add_option("--ref", score_opts.common.ref, "Reference TSV (utt_id<TAB>text)")
      ->required();
  score_cmd->add_option("--hyp", score_opts.common.hyp, "Hypothesis TSV")->required();
  add_norm_flags(score_cmd, &score_opts.common);
  score_cmd->add_option("--metrics", score_opts.metrics,
                        "Comma separated subset of wer,cer,mer,pier")
      ->default_str(score_opts.metrics);
  score_cmd->add_option("--format", score_opts.format, "Output: text, tsv or structured")
      ->default_str(score_opts.format);
  score_cmd->add_flag("--per-utt", score_opts.per_utt,
                      "Include the per-utterance table in text output");
  score_cmd->add_option("--jobs", score_opts.jobs,
                        "Utterance-level scoring parallelism (output order is fixed)");

  InspectOpts inspect_opts;
  CLI::App* inspect_cmd =
      app.add_subcommand("inspect", "Dump REF/HYP/OPS alignments for utterances");
  inspect_cmd->add_option("--ref", inspect_opts.common.ref, "Reference TSV")->required();
  inspect_cmd->add_option("--hyp", inspect_opts.common.hyp, "Hypothesis TSV")->required();
  add_norm_flags(inspect_cmd, &inspect_opts.common);
  inspect_cmd->add_option("--utt", inspect_opts.utt_ids, "Utterance id (repeatable)");
  inspect_cmd->add_option("--worst", inspect_opts.worst,
                          "Show the N highest-PIER utterances (ties by id)");

  CommonOpts tag_opts;
  CLI::App* tag_cmd =
      app.add_subcommand("tag", "Audit interest tagging for a reference corpus");
  tag_cmd->add_option("--ref", tag_opts.ref, "Reference TSV")->required();
  add_norm_flags(tag_cmd, &tag_opts);

  PerturbOpts perturb_opts;
  perturb_opts.common.poi = "none";
  perturb_opts.common.lowercase = false;
  perturb_opts.common.strip_punct = false;
  CLI::App* perturb_cmd = app.add_subcommand(
      "perturb", "Emit a synthetic hypothesis TSV with controlled errors");
  perturb_cmd->add_option("--ref", perturb_opts.common.ref, "Reference TSV")->required();
  add_norm_flags(perturb_cmd, &perturb_opts.common);
  perturb_cmd->add_option("--p-sub", perturb_opts.p_sub, "Substitution rate per token");
  perturb_cmd->add_option("--p-del", perturb_opts.p_del, "Deletion rate per token");
  perturb_cmd->add_option("--p-ins", perturb_opts.p_ins,
                          "Insertion rate after each token");
  perturb_cmd->add_option("--seed", perturb_opts.seed, "Random seed");
  perturb_cmd->add_option("--target", perturb_opts.target,
                          "Positions to perturb: interest, non-interest or all")
      ->default_str(perturb_opts.target);
  perturb_cmd->add_option("--lexicon", perturb_opts.lexicon_path,
                          "Replacement token file, one token per line");
  perturb_cmd->add_option("--config", perturb_opts.config_path,
                          "key=value file: p_sub, p_del, p_ins, seed, target, lexicon");

  score_cmd->callback([&]() { run_score(score_opts); });
  inspect_cmd->callback([&]() { run_inspect(inspect_opts); });
  tag_cmd->callback([&]() { run_tag(tag_opts); });
  perturb_cmd->callback([&]() { run_perturb(perturb_opts, perturb_cmd); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
