// include/pier/report.h
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

#ifndef PIER_REPORT_H_
#define PIER_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pier/corpus.h"
#include "pier/metrics.h"

namespace pier {

struct MetricSet {
  bool wer = false;
  bool cer = false;
  bool mer = false;
  bool pier = false;

  // Comma separated subset of {wer,cer,mer,pier}; throws ConfigError.
  static MetricSet parse(std::string_view csv);
  std::vector<std::string> names() const;
  bool any() const { return wer || cer || mer || pier; }
};

struct UtteranceScore {
  std::string id;
  std::optional<MetricValue> wer;
  std::optional<MetricValue> cer;
  std::optional<MetricValue> mer;
  std::optional<MetricValue> pier;
  std::vector<EditOp> interest_ops;  // the filtered op set behind pier
  AlignmentTrace alignment;          // over the active tokenizer's tokens
};

struct SkipStats {
  std::uint32_t skipped_monolingual = 0;
  std::uint32_t skipped_empty_ref = 0;
  std::uint32_t missing_hyp_warnings = 0;
};

struct CorpusReport {
  std::vector<UtteranceScore> per_utt;       // input order
  std::optional<MetricValue> pooled_wer;     // sum num / sum den
  std::optional<MetricValue> pooled_cer;
  std::optional<MetricValue> pooled_mer;
  std::optional<MetricValue> pooled_pier;
  SkipStats skips;
  OpBreakdown breakdown_at_poi;
  CorpusSpec config_echo;
  MetricSet metrics;
};

// Scores one utterance that already passed filter_scoreable. WER and PIER
// share one alignment over the active tokens; CER and MER run their own
// tokenizations of the normalized text.
UtteranceScore score_utterance(const Utterance& utt, const MetricSet& metrics);

// Pure fan-out of score_utterance over `jobs` workers; output order equals
// input order regardless of the worker count.
std::vector<UtteranceScore> score_corpus(const std::vector<Utterance>& utts,
                                         const MetricSet& metrics, unsigned jobs);

CorpusReport aggregate(std::vector<UtteranceScore> scores, const SkipStats& skips,
                       const CorpusSpec& spec, const MetricSet& metrics);

enum class ReportFormat { Text, Tsv, Structured };
ReportFormat report_format_from(std::string_view name);

struct RenderOptions {
  bool per_utt = false;  // text format: include the per-utterance table
  bool color = false;    // text format: ANSI styling
};

// Byte-deterministic rendering. Structured output is a JSON document with
// top-level keys config, pooled, per_utt, skipped, breakdown_at_poi.
std::string render(const CorpusReport& report, ReportFormat format,
                   const RenderOptions& options = {});

// Three-row REF/HYP/OPS visualization with interest columns starred.
std::string dump_alignment(const UtteranceScore& score, const Utterance& utt);

}  // namespace pier

#endif  // PIER_REPORT_H_
