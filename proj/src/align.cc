// src/align.cc
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

#include "pier/align.h"

#include <algorithm>
#include <stdexcept>
#include <string_view>

namespace pier {

std::string_view op_name(OpKind k) {
  switch (k) {
    case OpKind::Match: return "match";
    case OpKind::Substitution: return "substitution";
    case OpKind::Insertion: return "insertion";
    case OpKind::Deletion: return "deletion";
  }
  return "?";
}

char op_code(OpKind k) {
  switch (k) {
    case OpKind::Match: return 'C';
    case OpKind::Substitution: return 'S';
    case OpKind::Insertion: return 'I';
    case OpKind::Deletion: return 'D';
  }
  return '?';
}

namespace {

AlignmentTrace align_views(std::span<const std::string_view> ref,
                           std::span<const std::string_view> hyp) {
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();

  // Full DP table of minimal error counts plus the chosen predecessor per
  // cell. Tie-breaking is fixed at fill time: match > substitution >
  // deletion > insertion, which makes the backtrace deterministic.
  std::vector<std::uint32_t> cost((m + 1) * (n + 1));
  std::vector<OpKind> choice((m + 1) * (n + 1));
  auto at = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };

  cost[at(0, 0)] = 0;
  choice[at(0, 0)] = OpKind::Match;
  for (std::size_t j = 1; j <= n; ++j) {
    cost[at(0, j)] = static_cast<std::uint32_t>(j);
    choice[at(0, j)] = OpKind::Insertion;
  }
  for (std::size_t i = 1; i <= m; ++i) {
    cost[at(i, 0)] = static_cast<std::uint32_t>(i);
    choice[at(i, 0)] = OpKind::Deletion;
  }

  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const bool equal = ref[i - 1] == hyp[j - 1];
      std::uint32_t best = cost[at(i - 1, j - 1)] + (equal ? 0u : 1u);
      OpKind kind = equal ? OpKind::Match : OpKind::Substitution;
      if (const auto del = cost[at(i - 1, j)] + 1; del < best) {
        best = del;
        kind = OpKind::Deletion;
      }
      if (const auto ins = cost[at(i, j - 1)] + 1; ins < best) {
        best = ins;
        kind = OpKind::Insertion;
      }
      cost[at(i, j)] = best;
      choice[at(i, j)] = kind;
    }
  }

  AlignmentTrace trace;
  trace.ref_len = static_cast<std::uint32_t>(m);
  trace.hyp_len = static_cast<std::uint32_t>(n);
  trace.steps.reserve(std::max(m, n));

  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 || j > 0) {
    switch (choice[at(i, j)]) {
      case OpKind::Match:
        trace.steps.push_back({OpKind::Match, static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j)});
        ++trace.n_match;
        --i;
        --j;
        break;
      case OpKind::Substitution:
        trace.steps.push_back({OpKind::Substitution, static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j)});
        ++trace.n_sub;
        --i;
        --j;
        break;
      case OpKind::Deletion:
        // i_res points at the next hypothesis token.
        trace.steps.push_back({OpKind::Deletion, static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j + 1)});
        ++trace.n_del;
        --i;
        break;
      case OpKind::Insertion:
        // i_src points at the next reference token.
        trace.steps.push_back({OpKind::Insertion, static_cast<std::uint32_t>(i + 1),
                               static_cast<std::uint32_t>(j)});
        ++trace.n_ins;
        --j;
        break;
    }
  }
  std::reverse(trace.steps.begin(), trace.steps.end());
  return trace;
}

}  // namespace

AlignmentTrace align(std::span<const std::string> ref, std::span<const std::string> hyp) {
  std::vector<std::string_view> r(ref.begin(), ref.end());
  std::vector<std::string_view> h(hyp.begin(), hyp.end());
  return align_views(r, h);
}

AlignmentTrace align(std::span<const Token> ref, std::span<const Token> hyp) {
  std::vector<std::string_view> r;
  std::vector<std::string_view> h;
  r.reserve(ref.size());
  h.reserve(hyp.size());
  for (const Token& t : ref) r.push_back(t.text);
  for (const Token& t : hyp) h.push_back(t.text);
  return align_views(r, h);
}

std::vector<EditOp> error_ops(const AlignmentTrace& trace) {
  std::vector<EditOp> out;
  out.reserve(trace.error_count());
  for (const EditOp& op : trace.steps) {
    if (op.kind != OpKind::Match) out.push_back(op);
  }
  return out;
}

namespace {

unsigned brute_force_rec(std::span<const std::string> ref, std::span<const std::string> hyp,
                         std::size_t i, std::size_t j) {
  if (i == ref.size()) return static_cast<unsigned>(hyp.size() - j);
  if (j == hyp.size()) return static_cast<unsigned>(ref.size() - i);
  unsigned best = brute_force_rec(ref, hyp, i + 1, j + 1) + (ref[i] == hyp[j] ? 0 : 1);
  best = std::min(best, brute_force_rec(ref, hyp, i + 1, j) + 1);
  best = std::min(best, brute_force_rec(ref, hyp, i, j + 1) + 1);
  return best;
}

}  // namespace

unsigned brute_force_distance(std::span<const std::string> ref,
                              std::span<const std::string> hyp) {
  if (ref.size() > 8 || hyp.size() > 8) {
    throw std::invalid_argument("brute_force_distance: sequences longer than 8");
  }
  return brute_force_rec(ref, hyp, 0, 0);
}

}  // namespace pier
