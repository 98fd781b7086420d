// tests/test_align.cc
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

#include <random>

#include "oracle.h"
#include "pier/align.h"

using namespace pier;
using V = std::vector<std::string>;

namespace {

// Replays a trace: match/sub consume one token of each side, deletion one
// reference token, insertion emits one hypothesis token. The rebuilt
// sequence must equal hyp exactly.
V replay(const AlignmentTrace& trace, const V& ref, const V& hyp) {
  V out;
  std::size_t consumed_ref = 0;
  for (const EditOp& op : trace.steps) {
    switch (op.kind) {
      case OpKind::Match:
        CHECK(ref[op.i_src - 1] == hyp[op.i_res - 1]);
        out.push_back(hyp[op.i_res - 1]);
        ++consumed_ref;
        break;
      case OpKind::Substitution:
        CHECK(ref[op.i_src - 1] != hyp[op.i_res - 1]);
        out.push_back(hyp[op.i_res - 1]);
        ++consumed_ref;
        break;
      case OpKind::Deletion:
        ++consumed_ref;
        break;
      case OpKind::Insertion:
        out.push_back(hyp[op.i_res - 1]);
        break;
    }
  }
  CHECK(consumed_ref == ref.size());
  return out;
}

void check_trace_invariants(const AlignmentTrace& t) {
  CHECK(t.n_sub + t.n_del + t.n_match == t.ref_len);
  CHECK(t.n_sub + t.n_ins + t.n_match == t.hyp_len);
  std::uint32_t prev_src = 0, prev_res = 0;
  for (const EditOp& op : t.steps) {
    CHECK(op.i_src >= prev_src);
    CHECK(op.i_res >= prev_res);
    prev_src = op.i_src;
    prev_res = op.i_res;
    switch (op.kind) {
      case OpKind::Match:
      case OpKind::Substitution:
        CHECK(op.i_src >= 1);
        CHECK(op.i_src <= t.ref_len);
        CHECK(op.i_res >= 1);
        CHECK(op.i_res <= t.hyp_len);
        break;
      case OpKind::Insertion:
        CHECK(op.i_src >= 1);
        CHECK(op.i_src <= t.ref_len + 1);
        break;
      case OpKind::Deletion:
        CHECK(op.i_res >= 1);
        CHECK(op.i_res <= t.hyp_len + 1);
        break;
    }
  }
}

}  // namespace

TEST_CASE("align identity") {
  const V ref{"a", "b", "c"};
  const AlignmentTrace t = align(ref, ref);
  CHECK(t.n_match == 3);
  CHECK(t.error_count() == 0);
  CHECK(error_ops(t).empty());
}

TEST_CASE("align deletion carries the next hypothesis index") {
  // expected steps derived from the exhaustive minimal-script oracle:
  // the single minimal script is match, deletion, match
  const V ref{"a", "b", "c"};
  const V hyp{"a", "c"};
  const auto scripts = oracle::minimal_scripts(ref, hyp);
  REQUIRE(scripts.size() == 1);

  const AlignmentTrace t = align(ref, hyp);
  CHECK(t.steps == scripts[0]);
  CHECK(t.steps == std::vector<EditOp>{{OpKind::Match, 1, 1},
                                       {OpKind::Deletion, 2, 2},
                                       {OpKind::Match, 3, 2}});
}

TEST_CASE("align empty reference yields insertions at i_src 1") {
  const AlignmentTrace t = align(V{}, V{"x", "y"});
  CHECK(t.steps == std::vector<EditOp>{{OpKind::Insertion, 1, 1},
                                       {OpKind::Insertion, 1, 2}});
  CHECK(t.n_ins == 2);
}

TEST_CASE("error_ops spec examples") {
  {
    const auto scripts = oracle::minimal_scripts({"a", "b", "c"}, {"a", "x", "c"});
    REQUIRE(scripts.size() == 1);
    const AlignmentTrace t = align(V{"a", "b", "c"}, V{"a", "x", "c"});
    CHECK(error_ops(t) == oracle::errors_of(scripts[0]));
    CHECK(error_ops(t) == std::vector<EditOp>{{OpKind::Substitution, 2, 2}});
  }
  {
    const auto scripts = oracle::minimal_scripts({"a"}, {"a", "b"});
    REQUIRE(scripts.size() == 1);
    const AlignmentTrace t = align(V{"a"}, V{"a", "b"});
    // trailing insertion: i_src == |REF|+1
    CHECK(error_ops(t) == std::vector<EditOp>{{OpKind::Insertion, 2, 2}});
  }
}

TEST_CASE("brute_force_distance basics") {
  CHECK(brute_force_distance(V{"a", "b"}, V{"a", "b"}) == 0);
  CHECK(brute_force_distance(V{"a", "b"}, V{"b", "a"}) == 2);
  CHECK(brute_force_distance(V{}, V{"x"}) == 1);
  V nine(9, "a");
  CHECK_THROWS_AS(brute_force_distance(nine, V{}), std::invalid_argument);
}

TEST_CASE("align equals brute force exhaustively (lengths <= 4, 3 symbols)") {
  const std::array<std::string, 3> alpha{"a", "b", "c"};
  std::vector<V> seqs;
  seqs.push_back({});
  std::size_t start = 0;
  for (int len = 1; len <= 4; ++len) {
    const std::size_t end = seqs.size();
    for (std::size_t k = start; k < end; ++k) {
      for (const auto& s : alpha) {
        V next = seqs[k];
        next.push_back(s);
        seqs.push_back(std::move(next));
      }
    }
    start = end;
  }
  for (const V& ref : seqs) {
    for (const V& hyp : seqs) {
      CHECK(align(ref, hyp).error_count() == brute_force_distance(ref, hyp));
    }
  }
}

TEST_CASE("align properties over random pairs") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 2000; ++iter) {
    const V ref = oracle::random_tokens(&rng, rng() % 9, 4);
    const V hyp = oracle::random_tokens(&rng, rng() % 9, 4);
    const AlignmentTrace t = align(ref, hyp);
    check_trace_invariants(t);

    // symmetry of the error count; the sub/ins/del split of a minimal
    // alignment is not unique under ties, but del - ins is pinned by the
    // length difference on each side
    const AlignmentTrace back = align(hyp, ref);
    CHECK(back.error_count() == t.error_count());
    CHECK(static_cast<long>(t.n_del) - static_cast<long>(t.n_ins) ==
          static_cast<long>(ref.size()) - static_cast<long>(hyp.size()));
    CHECK(static_cast<long>(back.n_del) - static_cast<long>(back.n_ins) ==
          static_cast<long>(hyp.size()) - static_cast<long>(ref.size()));

    // determinism: byte-identical traces on repeat invocation
    CHECK(align(ref, hyp) == t);

    // replay: applying the steps to ref reconstructs hyp exactly
    CHECK(replay(t, ref, hyp) == hyp);

    // the oracle agrees on the distance
    CHECK(t.error_count() == brute_force_distance(ref, hyp));
  }
}

TEST_CASE("align trace is one of the oracle's minimal scripts") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 300; ++iter) {
    const V ref = oracle::random_tokens(&rng, rng() % 6, 3);
    const V hyp = oracle::random_tokens(&rng, rng() % 6, 3);
    const auto scripts = oracle::minimal_scripts(ref, hyp);
    const AlignmentTrace t = align(ref, hyp);
    bool found = false;
    for (const auto& s : scripts) {
      if (s == t.steps) {
        found = true;
        break;
      }
    }
    CHECK_MESSAGE(found, "trace must be a minimal edit script");
  }
}

TEST_CASE("tokens align by text") {
  std::vector<Token> ref{{"das", Script::Latin, 0, 3}, {"bots", Script::Latin, 4, 8}};
  std::vector<Token> hyp{{"das", Script::Latin, 0, 3}, {"boots", Script::Latin, 4, 9}};
  const AlignmentTrace t = align(ref, hyp);
  CHECK(t.n_sub == 1);
  CHECK(t.n_match == 1);
}
