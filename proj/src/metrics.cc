// src/metrics.cc
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

#include "pier/metrics.h"

#include "pier/error.h"

namespace pier {

OpBreakdown& OpBreakdown::operator+=(const OpBreakdown& o) {
  n_sub += o.n_sub;
  n_ins += o.n_ins;
  n_del += o.n_del;
  return *this;
}

namespace {

OpBreakdown breakdown_of(std::span<const EditOp> ops) {
  OpBreakdown b;
  for (const EditOp& op : ops) {
    switch (op.kind) {
      case OpKind::Substitution: ++b.n_sub; break;
      case OpKind::Insertion: ++b.n_ins; break;
      case OpKind::Deletion: ++b.n_del; break;
      case OpKind::Match: break;
    }
  }
  return b;
}

}  // namespace

MetricValue wer(const AlignmentTrace& trace) {
  if (trace.ref_len == 0) {
    throw UndefinedMetricError("WER undefined for an empty reference");
  }
  MetricValue v;
  v.numerator = trace.error_count();
  v.denominator = trace.ref_len;
  v.breakdown = OpBreakdown{trace.n_sub, trace.n_ins, trace.n_del};
  return v;
}

MetricValue cer(std::string_view norm_ref, std::string_view norm_hyp) {
  const std::vector<Token> ref = tokenize_chars(norm_ref);
  if (ref.empty()) {
    throw UndefinedMetricError("CER undefined: reference empty after whitespace removal");
  }
  const std::vector<Token> hyp = tokenize_chars(norm_hyp);
  return wer(align(ref, hyp));
}

MetricValue mer(std::string_view norm_ref, std::string_view norm_hyp) {
  const std::vector<Token> ref = tokenize_mixed(norm_ref);
  if (ref.empty()) {
    throw UndefinedMetricError("MER undefined: reference empty after tokenization");
  }
  const std::vector<Token> hyp = tokenize_mixed(norm_hyp);
  return wer(align(ref, hyp));
}

std::vector<EditOp> filter_ops_by_interest(std::span<const EditOp> ops,
                                           const InterestSet& interest) {
  if (interest.empty()) {
    throw UndefinedMetricError("interest filtering undefined for an empty interest set");
  }
  // When the last interest index is the last reference word, operations past
  // the end of the reference (trailing insertions) belong to it as well.
  const bool tail = interest.max_index() == interest.ref_len;
  std::vector<EditOp> out;
  for (const EditOp& op : ops) {
    if (interest.contains(op.i_src) || (tail && op.i_src > interest.ref_len)) {
      out.push_back(op);
    }
  }
  return out;
}

MetricValue pier_metric(const AlignmentTrace& trace, const InterestSet& interest) {
  if (interest.empty()) {
    throw UndefinedMetricError("PIER undefined for an empty interest set");
  }
  const std::vector<EditOp> ops = error_ops(trace);
  const std::vector<EditOp> filtered = filter_ops_by_interest(ops, interest);
  MetricValue v;
  v.numerator = filtered.size();
  v.denominator = interest.size();
  v.breakdown = breakdown_of(filtered);
  return v;
}

}  // namespace pier
