// include/pier/align.h
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

#ifndef PIER_ALIGN_H_
#define PIER_ALIGN_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pier/textnorm.h"

namespace pier {

enum class OpKind : std::uint8_t { Match, Substitution, Insertion, Deletion };

std::string_view op_name(OpKind k);
char op_code(OpKind k);  // C, S, I, D

// One alignment step. Indices are 1-based.
//   match/substitution: i_src in [1,|REF|], i_res in [1,|HYP|].
//   insertion: i_src is the index of the NEXT reference token (may be |REF|+1).
//   deletion:  i_res is the index of the next hypothesis token (may be |HYP|+1).
struct EditOp {
  OpKind kind;
  std::uint32_t i_src;
  std::uint32_t i_res;

  bool operator==(const EditOp&) const = default;
};

struct AlignmentTrace {
  std::vector<EditOp> steps;   // i_src and i_res are non-decreasing
  std::uint32_t n_sub = 0;
  std::uint32_t n_ins = 0;
  std::uint32_t n_del = 0;
  std::uint32_t n_match = 0;
  std::uint32_t ref_len = 0;
  std::uint32_t hyp_len = 0;

  std::uint32_t error_count() const { return n_sub + n_ins + n_del; }
  bool operator==(const AlignmentTrace&) const = default;
};

// Minimal-cost edit alignment under unit costs, with deterministic backtrace
// tie-breaking: match > substitution > deletion > insertion.
AlignmentTrace align(std::span<const std::string> ref, std::span<const std::string> hyp);
AlignmentTrace align(std::span<const Token> ref, std::span<const Token> hyp);

// The steps whose kind is not Match, in order.
std::vector<EditOp> error_ops(const AlignmentTrace& trace);

// Exhaustive-recursion edit distance, usable as an independent oracle.
// Rejects |ref| > 8 or |hyp| > 8.
unsigned brute_force_distance(std::span<const std::string> ref,
                              std::span<const std::string> hyp);

}  // namespace pier

#endif  // PIER_ALIGN_H_
