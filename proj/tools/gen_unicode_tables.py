#!/usr/bin/env python3
# tools/gen_unicode_tables.py
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# Regenerates src/unicode_data.inc from the Python unicodedata module plus
# the `regex` package (for the Script property).  Also refreshes the frozen
# oracle fixtures under tests/data/.  Run from the repository root:
#
#   python3 tools/gen_unicode_tables.py

import random
import sys
import unicodedata
from pathlib import Path

try:
    import regex
except ImportError:
    sys.exit("the `regex` package is required: pip install regex")

MAX_CP = 0x110000
HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172

ROOT = Path(__file__).resolve().parent.parent


def is_assigned(cp):
    return unicodedata.category(chr(cp)) != "Cn"


def category(cp):
    return unicodedata.category(chr(cp))


def ranges_of(predicate):
    """Collapse {cp : predicate(cp)} into sorted inclusive ranges."""
    out = []
    lo = None
    prev = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = predicate(cp)
        if ok:
            if lo is None:
                lo = cp
            prev = cp
        elif lo is not None:
            out.append((lo, prev))
            lo = None
    if lo is not None:
        out.append((lo, prev))
    return out


def script_members(name):
    pat = regex.compile(r"\p{Script=%s}" % name)
    members = set()
    step = 0x800
    for base in range(0, MAX_CP, step):
        chunk = "".join(
            chr(cp)
            for cp in range(base, min(base + step, MAX_CP))
            if not 0xD800 <= cp <= 0xDFFF
        )
        for m in pat.finditer(chunk):
            members.add(ord(m.group()))
    return members


def canonical_decomposition(cp):
    """Raw canonical decomposition (None when there is none)."""
    d = unicodedata.decomposition(chr(cp))
    if not d or d.startswith("<"):
        return None
    return [int(x, 16) for x in d.split()]


def full_decomposition(cp, table):
    raw = table.get(cp)
    if raw is None:
        return [cp]
    out = []
    for c in raw:
        out.extend(full_decomposition(c, table))
    return out


def emit_ranges(f, name, ranges):
    f.write("inline constexpr CpRange %s[] = {\n" % name)
    for i in range(0, len(ranges), 4):
        row = ", ".join("{0x%X, 0x%X}" % r for r in ranges[i : i + 4])
        f.write("    %s,\n" % row)
    f.write("};\n\n")


def main():
    random.seed(20250810)

    # --- category driven tables -------------------------------------------
    space = ranges_of(
        lambda cp: category(cp).startswith("Z") or cp in (0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85)
    )
    punct = ranges_of(lambda cp: category(cp).startswith("P"))
    alnum = ranges_of(lambda cp: category(cp)[0] in "LMN")
    letterish = {cp for cp in range(MAX_CP) if not 0xD800 <= cp <= 0xDFFF and category(cp)[0] in "LM"}

    # --- script tables (letters and marks only) ---------------------------
    scripts = {}
    for name in ("Latin", "Han", "Arabic"):
        members = script_members(name) & letterish
        scripts[name] = ranges_of(lambda cp, m=members: cp in m)

    # --- simple lowercase map ---------------------------------------------
    lower = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF or not is_assigned(cp):
            continue
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            lower.append((cp, ord(lo)))

    # --- combining classes --------------------------------------------------
    ccc = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        k = unicodedata.combining(chr(cp))
        if k:
            ccc.append((cp, k))

    # --- canonical decompositions (fully expanded, Hangul excluded) --------
    raw = {}
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT:
            continue
        d = canonical_decomposition(cp)
        if d:
            raw[cp] = d
    decomp_data = []
    decomp_index = []
    for cp in sorted(raw):
        seq = full_decomposition(cp, raw)
        decomp_index.append((cp, len(decomp_data), len(seq)))
        decomp_data.extend(seq)

    # --- primary composites --------------------------------------------------
    # A pair (a, b) -> c is a primary composite iff NFC(a + b) == c.  This
    # bakes in the composition exclusions without shipping the exclusion list.
    comp = []
    for cp, seq in sorted(raw.items()):
        if len(seq) != 2:
            continue
        a, b = seq
        if unicodedata.combining(chr(a)) != 0:
            continue
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            comp.append((a, b, cp))
    comp.sort()

    # --- write the generated include ----------------------------------------
    inc = ROOT / "src" / "unicode_data.inc"
    with inc.open("w", encoding="utf-8") as f:
        f.write(
            "// src/unicode_data.inc -- generated by tools/gen_unicode_tables.py; do not edit.\n"
            "// Source: Python unicodedata %s plus the regex package Script property.\n\n"
            % unicodedata.unidata_version
        )
        emit_ranges(f, "kSpaceRanges", space)
        emit_ranges(f, "kPunctRanges", punct)
        emit_ranges(f, "kAlnumRanges", alnum)
        emit_ranges(f, "kLatinRanges", scripts["Latin"])
        emit_ranges(f, "kHanRanges", scripts["Han"])
        emit_ranges(f, "kArabicRanges", scripts["Arabic"])

        f.write("inline constexpr CpPair kLowerMap[] = {\n")
        for i in range(0, len(lower), 4):
            row = ", ".join("{0x%X, 0x%X}" % p for p in lower[i : i + 4])
            f.write("    %s,\n" % row)
        f.write("};\n\n")

        f.write("inline constexpr CombiningClass kCccMap[] = {\n")
        for i in range(0, len(ccc), 4):
            row = ", ".join("{0x%X, %d}" % p for p in ccc[i : i + 4])
            f.write("    %s,\n" % row)
        f.write("};\n\n")

        f.write("inline constexpr char32_t kDecompData[] = {\n")
        for i in range(0, len(decomp_data), 8):
            row = ", ".join("0x%X" % c for c in decomp_data[i : i + 8])
            f.write("    %s,\n" % row)
        f.write("};\n\n")

        f.write("inline constexpr Decomposition kDecompIndex[] = {\n")
        for i in range(0, len(decomp_index), 4):
            row = ", ".join("{0x%X, %d, %d}" % e for e in decomp_index[i : i + 4])
            f.write("    %s,\n" % row)
        f.write("};\n\n")

        f.write("inline constexpr Composition kCompMap[] = {\n")
        for i in range(0, len(comp), 3):
            row = ", ".join("{0x%X, 0x%X, 0x%X}" % e for e in comp[i : i + 3])
            f.write("    %s,\n" % row)
        f.write("};\n")

    # --- frozen NFC oracle fixtures ------------------------------------------
    cases = []

    def add(s):
        cases.append((s, unicodedata.normalize("NFC", s)))

    add("")
    add("hello world")
    add("é")                    # e + acute -> é
    add("é")                     # already composed
    add("ę́")              # ogonek + acute, needs ordering
    add("ę́")              # same marks, other order
    add("Å")                     # singleton: angstrom -> Å
    add("Ω")                     # singleton: ohm -> Ω
    add("ḍ̇")               # d-dot-above + dot-below
    add("q̣̇")              # q + two marks, no composite
    add("가")               # hangul L+V -> 가
    add("각")         # hangul L+V+T -> 각
    add("각")               # LV syllable + T
    add("شِّ")         # arabic sheen + kasra + shadda (reorders)
    add("ぱ゚")               # pa + combining handakuten
    add("ば゚")
    add("das mit den bots")
    add("Å")               # A + ring -> Å

    bases = [0x61, 0x65, 0x6F, 0x75, 0x41, 0x391, 0x3B1, 0x430, 0x627, 0x648,
             0x4E2D, 0x1100, 0x1102, 0xAC00, 0xD7A3, 0x31, 0x20]
    marks = [0x300, 0x301, 0x302, 0x303, 0x304, 0x306, 0x307, 0x308, 0x30A,
             0x30C, 0x323, 0x328, 0x334, 0x342, 0x650, 0x651, 0x652, 0x653,
             0x3099, 0x309A, 0x1161, 0x11A8]
    singles = [0x212B, 0x2126, 0x212A, 0x374, 0x1E9B, 0xF900, 0xFA10, 0x2000]
    for _ in range(600):
        n = random.randint(1, 8)
        cps = []
        for _ in range(n):
            pool = random.choice((bases, marks, singles))
            cps.append(random.choice(pool))
        add("".join(chr(c) for c in cps))

    data_dir = ROOT / "tests" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    with (data_dir / "nfc_cases.txt").open("w", encoding="utf-8") as f:
        f.write("# <input cps hex, space separated>\\t<nfc cps hex>; '-' for empty\n")
        for src, dst in cases:
            a = " ".join("%04X" % ord(c) for c in src) or "-"
            b = " ".join("%04X" % ord(c) for c in dst) or "-"
            f.write("%s\t%s\n" % (a, b))

    # --- frozen script classification fixtures -------------------------------
    latin = script_members("Latin") & letterish
    han = script_members("Han") & letterish
    arabic = script_members("Arabic") & letterish

    def classify(token):
        seen = set()
        for ch in token:
            cp = ord(ch)
            if cp in latin:
                seen.add("Latin")
            if cp in han:
                seen.add("Han")
            if cp in arabic:
                seen.add("Arabic")
        if len(seen) >= 2:
            return "Mixed"
        if len(seen) == 1:
            return seen.pop()
        return "Common"

    tokens = [
        "bots", "glaub", "nicht", "ABC", "naïve", "don't",
        "你好", "我", "是的", "發音",
        "كمبيوتر", "ذلك", "أنا",
        "كمبيوترhouse", "我like", "你abc好", "abc中def",
        "123", "3.14", "$%&", "--", "١٢٣", "2mp3",
        "привет", "こんにちは", "カタカナ", "한글",
        "mp3", "x2", "a你ب",
    ]
    with (data_dir / "script_cases.txt").open("w", encoding="utf-8") as f:
        f.write("# token<TAB>expected script class\n")
        for t in tokens:
            f.write("%s\t%s\n" % (t, classify(t)))

    counts = dict(
        space=len(space), punct=len(punct), alnum=len(alnum),
        latin=len(scripts["Latin"]), han=len(scripts["Han"]),
        arabic=len(scripts["Arabic"]), lower=len(lower), ccc=len(ccc),
        decomp=len(decomp_index), comp=len(comp), nfc_cases=len(cases),
    )
    print("wrote", inc)
    for k, v in sorted(counts.items()):
        print("  %-8s %d" % (k, v))


if __name__ == "__main__":
    main()
