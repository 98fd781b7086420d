// include/pier/metrics.h
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

#ifndef PIER_METRICS_H_
#define PIER_METRICS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pier/align.h"
#include "pier/poi.h"

namespace pier {

struct OpBreakdown {
  std::uint64_t n_sub = 0;
  std::uint64_t n_ins = 0;
  std::uint64_t n_del = 0;

  std::uint64_t total() const { return n_sub + n_ins + n_del; }
  OpBreakdown& operator+=(const OpBreakdown& o);
  bool operator==(const OpBreakdown&) const = default;
};

// Exact rational error rate. rate() may exceed 1.0 (insertions).
struct MetricValue {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;  // always > 0
  OpBreakdown breakdown;

  double rate() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  double rate_pct() const { return 100.0 * rate(); }
  bool operator==(const MetricValue&) const = default;
};

// (sub + ins + del) / |REF|. Throws UndefinedMetricError when ref_len == 0.
MetricValue wer(const AlignmentTrace& trace);

// WER formula over character tokens of the normalized texts.
MetricValue cer(std::string_view norm_ref, std::string_view norm_hyp);

// WER formula over mixed tokens (Han characters + other-script words).
MetricValue mer(std::string_view norm_ref, std::string_view norm_hyp);

// Error operations attributed to interest positions: ops with i_src in the
// interest set, plus every op with i_src > |REF| when the last interest index
// is the last reference word. Order preserved.
std::vector<EditOp> filter_ops_by_interest(std::span<const EditOp> ops,
                                           const InterestSet& interest);

// |filtered ops| / |interest|. Throws UndefinedMetricError on empty interest.
MetricValue pier_metric(const AlignmentTrace& trace, const InterestSet& interest);

}  // namespace pier

#endif  // PIER_METRICS_H_
