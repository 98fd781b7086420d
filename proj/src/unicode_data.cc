// src/unicode_data.cc
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

#include "unicode_data.h"

#include <algorithm>
#include <span>

namespace pier::uni {

namespace {

struct CpRange {
  char32_t lo;
  char32_t hi;
};

struct CpPair {
  char32_t from;
  char32_t to;
};

struct CombiningClass {
  char32_t cp;
  std::uint8_t ccc;
};

struct Decomposition {
  char32_t cp;
  std::uint32_t offset;
  std::uint32_t length;
};

struct Composition {
  char32_t first;
  char32_t second;
  char32_t composed;
};

#include "unicode_data.inc"

bool in_ranges(std::span<const CpRange> ranges, char32_t cp) {
  auto it = std::upper_bound(ranges.begin(), ranges.end(), cp,
                             [](char32_t v, const CpRange& r) { return v < r.lo; });
  return it != ranges.begin() && cp <= std::prev(it)->hi;
}

// Hangul syllable composition constants (UAX #15).
constexpr char32_t kSBase = 0xAC00;
constexpr char32_t kLBase = 0x1100;
constexpr char32_t kVBase = 0x1161;
constexpr char32_t kTBase = 0x11A7;
constexpr int kLCount = 19;
constexpr int kVCount = 21;
constexpr int kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

void decompose_cp(char32_t cp, std::u32string* out) {
  if (cp >= kSBase && cp < kSBase + kSCount) {
    const int index = static_cast<int>(cp - kSBase);
    out->push_back(kLBase + index / kNCount);
    out->push_back(kVBase + (index % kNCount) / kTCount);
    if (index % kTCount != 0) out->push_back(kTBase + index % kTCount);
    return;
  }
  auto it = std::lower_bound(std::begin(kDecompIndex), std::end(kDecompIndex), cp,
                             [](const Decomposition& d, char32_t v) { return d.cp < v; });
  if (it != std::end(kDecompIndex) && it->cp == cp) {
    for (std::uint32_t k = 0; k < it->length; ++k) {
      out->push_back(kDecompData[it->offset + k]);
    }
  } else {
    out->push_back(cp);
  }
}

char32_t compose_pair(char32_t a, char32_t b) {
  if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount) {
    return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
  }
  if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 &&
      b > kTBase && b < kTBase + kTCount) {
    return a + (b - kTBase);
  }
  auto it = std::lower_bound(std::begin(kCompMap), std::end(kCompMap), std::pair{a, b},
                             [](const Composition& c, const std::pair<char32_t, char32_t>& v) {
                               return c.first != v.first ? c.first < v.first
                                                         : c.second < v.second;
                             });
  if (it != std::end(kCompMap) && it->first == a && it->second == b) return it->composed;
  return 0;
}

}  // namespace

bool is_space(char32_t cp) { return in_ranges(kSpaceRanges, cp); }
bool is_punct(char32_t cp) { return in_ranges(kPunctRanges, cp); }
bool is_alnum(char32_t cp) { return in_ranges(kAlnumRanges, cp); }
bool is_latin_letter(char32_t cp) { return in_ranges(kLatinRanges, cp); }
bool is_han_letter(char32_t cp) { return in_ranges(kHanRanges, cp); }
bool is_arabic_letter(char32_t cp) { return in_ranges(kArabicRanges, cp); }

char32_t simple_lower(char32_t cp) {
  auto it = std::lower_bound(std::begin(kLowerMap), std::end(kLowerMap), cp,
                             [](const CpPair& p, char32_t v) { return p.from < v; });
  if (it != std::end(kLowerMap) && it->from == cp) return it->to;
  return cp;
}

std::uint8_t combining_class(char32_t cp) {
  auto it = std::lower_bound(std::begin(kCccMap), std::end(kCccMap), cp,
                             [](const CombiningClass& c, char32_t v) { return c.cp < v; });
  if (it != std::end(kCccMap) && it->cp == cp) return it->ccc;
  return 0;
}

std::u32string nfc(std::u32string_view cps) {
  // Decompose.
  std::u32string buf;
  buf.reserve(cps.size());
  for (char32_t cp : cps) decompose_cp(cp, &buf);

  // Canonical ordering: stable sort of nonzero-ccc runs.
  for (std::size_t i = 1; i < buf.size(); ++i) {
    const std::uint8_t ccc = combining_class(buf[i]);
    if (ccc == 0) continue;
    std::size_t j = i;
    while (j > 0 && combining_class(buf[j - 1]) > ccc) {
      std::swap(buf[j - 1], buf[j]);
      --j;
    }
  }

  // Compose.
  std::u32string out;
  out.reserve(buf.size());
  std::ptrdiff_t last_starter = -1;
  for (char32_t cp : buf) {
    const std::uint8_t ccc = combining_class(cp);
    if (last_starter >= 0) {
      const bool adjacent = static_cast<std::size_t>(last_starter) + 1 == out.size();
      const bool unblocked = adjacent || combining_class(out.back()) < ccc;
      if (unblocked) {
        if (char32_t composed = compose_pair(out[last_starter], cp)) {
          out[last_starter] = composed;
          continue;
        }
      }
    }
    if (ccc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size());
    out.push_back(cp);
  }
  return out;
}

}  // namespace pier::uni
