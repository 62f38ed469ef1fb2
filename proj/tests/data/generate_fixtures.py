#!/usr/bin/env python3
# Copyright 2026 The amrkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the synthetic fixtures in this directory.

Deterministic: re-running produces byte-identical files.
"""

import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))

SYLLABLES = ["ka", "lo", "mi", "ne", "ru", "sa", "ti", "vo", "ze", "pa", "qu", "be", "do", "fi", "gu"]
WORDS = ["the", "a", "boy", "girl", "cat", "dog", "house", "city", "book", "car", "teacher",
         "student", "goes", "went", "wants", "makes", "made", "sees", "said", "big", "small",
         "quickly", "today", "and", "not", "to", "from", "with", "in", "on", "old", "new"]


def write(name, text):
    with open(os.path.join(HERE, name), "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def frames_200(rng):
    lines = ["# Synthetic 200-roleset fixture"]
    lemmas = set()
    while len(lemmas) < 80:
        lemmas.add("".join(rng.choice(SYLLABLES) for _ in range(rng.randint(1, 3))))
    lemmas = sorted(lemmas)
    ids = []
    for lemma in lemmas:
        for sense in range(1, rng.randint(1, 4) + 1):
            ids.append((f"{lemma}-{sense:02d}", lemma))
        if rng.random() < 0.3:
            ids.append((lemma, lemma))
    rng.shuffle(ids)
    ids = sorted(ids[:200])
    for rid, lemma in ids:
        if rid == lemma:
            lines.append(f"{rid}\t{lemma}\tconcept {lemma}")
            continue
        nroles = rng.randint(1, 5)
        roles = ";".join(f"ARG{k}:role {k} of {lemma}" for k in range(nroles))
        freq = f"\t{rng.randint(1, 500)}" if rng.random() < 0.2 else ""
        lines.append(f"{rid}\t{lemma}\tsense of {lemma}\t{roles}{freq}")
    write("frames_200.tsv", "\n".join(lines) + "\n")
    return [rid for rid, _ in ids]


def corpus_1000(rng, concepts):
    blocks = ["# Synthetic 1000-entry corpus"]
    for i in range(1, 1001):
        n = rng.randint(3, 14)
        sentence = " ".join(rng.choice(WORDS) for _ in range(n)).capitalize() + "."
        root = rng.choice(concepts)
        kids = rng.sample(concepts, rng.randint(0, 3))
        graph = f"(r / {root}"
        for k, c in enumerate(kids):
            graph += f"\n    :ARG{k} (c{k} / {c})"
        if rng.random() < 0.2 and kids:
            graph += "\n    :mod c0"
        graph += ")"
        blocks.append(f"# ::id syn.{i:04d} ::date 2026-01-01\n# ::snt {sentence}\n{graph}")
    write("corpus_1000.txt", "\n\n".join(blocks) + "\n")


def bench_sentences(rng):
    # 40 sentences in each of the 10-token buckets 0-9 .. 40-49.
    out = []
    for b in range(5):
        for _ in range(40):
            n = rng.randint(max(1, 10 * b), 10 * b + 9)
            out.append(" ".join(rng.choice(WORDS) for _ in range(n)).capitalize() + ".")
    rng.shuffle(out)
    write("bench_sentences.txt", "\n".join(out) + "\n")


# (file stem, expected code, expected line, text)
SEEDED = [
    ("unbalanced_1", "unbalanced-bracket", 1, "(b / boy\n"),
    ("unbalanced_2", "unbalanced-bracket", 3, "(w / want-01\n    :ARG0 (b / boy)\n    :ARG1 (g / go-02\n"),
    ("unbalanced_3", "unbalanced-bracket", 2, "(b / boy)\n)\n"),
    ("unbalanced_4", "unbalanced-bracket", 4,
     "(s / say-01\n    :ARG0 (m / man\n    :ARG1 (l / leave-11\n        :ARG0 (w / woman)))\n"),
    ("unbalanced_5", "unbalanced-bracket", 3, "# comment line\n(g / go-02\n    :ARG0 (b / boy)))\n"),
    ("redefined_1", "redefined-variable", 1, "(b / want-01 :ARG0 (b / boy))\n"),
    ("redefined_2", "redefined-variable", 3, "(w / want-01\n    :ARG0 (b / boy)\n    :ARG1 (b / go-02))\n"),
    ("redefined_3", "redefined-variable", 4,
     "(m / make-01\n    :ARG0 (g / girl)\n    :ARG1 (c / cake)\n    :ARG3 (g / boy))\n"),
    ("redefined_4", "redefined-variable", 2, "(s / sleep-01\n    :ARG0 (s / cat))\n"),
    ("redefined_5", "redefined-variable", 5,
     "(r / read-01\n    :ARG0 (t / teacher)\n    :ARG1 (b / book)\n    :ARG3 (s / student\n        :mod (t / other)))\n"),
    ("dangling_1", "dangling-reference", 1, "(w / want-01 :ARG0 (b / boy) :ARG1 x)\n"),
    ("dangling_2", "dangling-reference", 4, "(w / want-01\n    :ARG0 (b / boy)\n    :ARG1 (g / go-02\n        :ARG0 q))\n"),
    ("dangling_3", "dangling-reference", 2, "(s / sleep-01\n    :ARG0 c2\n    :location (h / house))\n"),
    ("dangling_4", "dangling-reference", 3, "(l / like-01\n    :ARG0 (c / child)\n    :ARG1 car)\n"),
    ("dangling_5", "dangling-reference", 5,
     "(s / say-01\n    :ARG0 (m / man)\n    :ARG1 (l / leave-11\n        :ARG0 (w / woman)\n        :ARG1 zz9))\n"),
    ("badrole_1", "bad-role-syntax", 1, "(b / boy ARG0 (c / cat))\n"),
    ("badrole_2", "bad-role-syntax", 2, "(w / want-01\n    : (b / boy))\n"),
    ("badrole_3", "bad-role-syntax", 3, "(g / go-02\n    :ARG0 (b / boy)\n    :ARG1% (c / city))\n"),
    ("badrole_4", "bad-role-syntax", 2, "(m / make-01\n    ::ARG0 (g / girl))\n"),
    ("badrole_5", "bad-role-syntax", 4,
     "(r / run-01\n    :ARG0 (d / dog)\n    :duration (t / temporal-quantity\n        quant 2))\n"),
    ("multiroot_1", "multiple-roots", 1, "(b / boy) (g / girl)\n"),
    ("multiroot_2", "multiple-roots", 3, "(b / boy)\n\n(g / girl)\n"),
    ("multiroot_3", "multiple-roots", 4, "(w / want-01\n    :ARG0 (b / boy))\n# second graph\n(c / cat)\n"),
    ("multiroot_4", "multiple-roots", 2, "(s / sleep-01 :ARG0 (c / cat))\n(d / dog :mod (b / big))\n"),
    ("multiroot_5", "multiple-roots", 5,
     "(r / read-01\n    :ARG0 (t / teacher)\n    :ARG1 (b / book))\n\n(x / extra)\n"),
]


def seeded_errors():
    d = os.path.join(HERE, "seeded_errors")
    os.makedirs(d, exist_ok=True)
    manifest = ["# file\tcode\tline"]
    for stem, code, line, text in SEEDED:
        with open(os.path.join(d, stem + ".penman"), "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        manifest.append(f"{stem}.penman\t{code}\t{line}")
    with open(os.path.join(d, "MANIFEST.tsv"), "w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(manifest) + "\n")


def main():
    rng = random.Random(20261014)
    ids = frames_200(rng)
    corpus_1000(rng, ids)
    bench_sentences(rng)
    seeded_errors()


if __name__ == "__main__":
    main()
