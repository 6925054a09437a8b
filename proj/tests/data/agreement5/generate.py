#!/usr/bin/env python3
# Copyright 2026 The cnarg Authors.
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
"""Writes a five-tweet, two-annotator fixture with planted disagreements and
the agreement values expected for it.

Texts are lowercase words separated by single spaces, so the word unit is a
plain split. Every expected number is computed here by enumerating the pooled
word labels and filling a confusion matrix, independently of the C++ code.
Rerunning overwrites the fixture with identical content.
"""

import json
import os
import shutil

HERE = os.path.dirname(os.path.abspath(__file__))

TEXTS = {
    "p1": "migrants are criminals so close the borders now",
    "p2": "refugees take our jobs and our homes so stop them",
    "p3": "the weather is nice today in rome",
    "p4": "these people are dangerous we must send them back",
    "p5": "illegal immigrants bring crime so deport them all",
}

# Spans are [first word, last word + 1). Annotator "b" disagrees on purpose.
A = {
    "p1": dict(arg=True, J=(0, 3), C=(4, 8), Collective=(0, 1), Property=(2, 3),
               PJ=(0, 1), PC=(7, 8), tj="Fact", tc="Policy"),
    "p2": dict(arg=True, J=(0, 7), C=(8, 10), Collective=(0, 1), Property=(1, 7),
               tj="Fact", tc="Policy"),
    "p3": dict(arg=False),
    "p4": dict(arg=True, J=(0, 4), C=(4, 9), Collective=(0, 2), Property=(3, 4),
               PJ=(0, 2), PC=(7, 8), tj="Value", tc="Policy"),
    "p5": dict(arg=True, J=(0, 4), C=(5, 8), Collective=(0, 2),
               tj="Fact", tc="Policy"),
}
B = {
    "p1": dict(arg=True, J=(0, 3), C=(4, 7), Collective=(0, 1), Property=(1, 3),
               PJ=(0, 1), PC=(6, 8), tj="Fact", tc="Policy"),
    "p2": dict(arg=True, J=(0, 4), C=(8, 10), Collective=(0, 1), Property=(2, 4),
               tj="Value", tc="Policy"),
    "p3": dict(arg=False),
    "p4": dict(arg=False),
    "p5": dict(arg=True, J=(0, 4), C=(4, 8), Collective=(0, 1), Property=(2, 4),
               PJ=(0, 2), PC=(7, 8), tj="Fact", tc="Fact"),
}
TYPES = ["Policy", "Fact", "Value"]


def char_span(text, span):
    words = text.split(" ")
    start = sum(len(w) + 1 for w in words[: span[0]])
    end = start + len(" ".join(words[span[0]: span[1]]))
    return start, end


def write_side(name, side):
    root = os.path.join(HERE, name)
    shutil.rmtree(root, ignore_errors=True)
    os.makedirs(root)
    for tid, text in TEXTS.items():
        ann = side[tid]
        lines = []
        n = 0
        ids = {}
        for key, label in [("C", "Conclusion"), ("J", "Justification"),
                           ("Collective", "Collective"), ("Property", "Property"),
                           ("PJ", "PivotJustificationSide"),
                           ("PC", "PivotConclusionSide")]:
            if key in ann:
                n += 1
                s, e = char_span(text, ann[key])
                lines.append(f"T{n}\t{label} {s} {e}\t{text[s:e]}")
                ids[key] = f"T{n}"
        if "tc" in ann:
            lines.append(f"A1\tType {ids['C']} {ann['tc']}")
            lines.append(f"A2\tType {ids['J']} {ann['tj']}")
        with open(os.path.join(root, tid + ".txt"), "w", encoding="utf-8") as f:
            f.write(text)
        with open(os.path.join(root, tid + ".ann"), "w", encoding="utf-8") as f:
            f.write("".join(line + "\n" for line in lines))


def word_labels(side, tid, keys):
    n = len(TEXTS[tid].split(" "))
    out = []
    for key in keys:
        labels = [0] * n
        if key == "Pivot":
            spans = [side[tid][k] for k in ("PJ", "PC") if k in side[tid]]
        else:
            spans = [side[tid][key]] if key in side[tid] else []
        for s, e in spans:
            for i in range(s, e):
                labels[i] = 1
        out += labels
    return out


def confusion(a, b, classes):
    m = [[0] * classes for _ in range(classes)]
    for x, y in zip(a, b):
        m[x][y] += 1
    return m


def kappa(a, b, classes):
    m = confusion(a, b, classes)
    n = len(a)
    p_o = sum(m[i][i] for i in range(classes)) / n
    if p_o == 1.0:
        return 1.0
    p_e = sum(sum(m[i]) * sum(r[i] for r in m) for i in range(classes)) / (n * n)
    return (p_o - p_e) / (1 - p_e)


def prf(m, c):
    tp = m[c][c]
    fp = sum(m[r][c] for r in range(len(m))) - tp
    fn = sum(m[c]) - tp
    p = tp / (tp + fp) if tp + fp else 0.0
    r = tp / (tp + fn) if tp + fn else 0.0
    f = 2 * p * r / (p + r) if p + r else 0.0
    return p, r, f, tp + fp + fn


def scores(a, b, classes):
    m = confusion(a, b, classes)
    if classes == 2:
        p, r, f, used = prf(m, 1)
        return (1.0, 1.0, 1.0) if used == 0 else (p, r, f)
    got = [prf(m, c) for c in range(classes)]
    got = [g for g in got if g[3] > 0]
    return tuple(sum(g[i] for g in got) / len(got) for i in range(3))


def rows():
    out = {}
    tids = sorted(TEXTS)
    for row, key in [("Collective", "Collective"), ("Property", "Property"),
                     ("Pivot", "Pivot"), ("Justification", "J"),
                     ("Conclusion", "C")]:
        a = sum((word_labels(A, t, [key]) for t in tids), [])
        b = sum((word_labels(B, t, [key]) for t in tids), [])
        out[row] = (a, b, 2)
    out["Argumentative"] = ([int(A[t]["arg"]) for t in tids],
                            [int(B[t]["arg"]) for t in tids], 2)
    for row, key in [("TypeConclusion", "tc"), ("TypeJustification", "tj")]:
        both = [t for t in tids if A[t]["arg"] and B[t]["arg"]]
        out[row] = ([TYPES.index(A[t][key]) for t in both],
                    [TYPES.index(B[t][key]) for t in both], 3)
    return out


def main():
    write_side("a", A)
    write_side("b", B)
    expected = {"tweets": len(TEXTS), "type_rows_excluded": 1, "rows": {}}
    for name, (a, b, classes) in rows().items():
        p, r, f = scores(a, b, classes)
        expected["rows"][name] = {
            "n_items": len(a), "kappa": kappa(a, b, classes),
            "precision": p, "recall": r, "f1": f,
        }
    # Mean of per-tweet kappas, which pooling deliberately does not report.
    per_tweet = []
    for t in sorted(TEXTS):
        a, b = word_labels(A, t, ["J"]), word_labels(B, t, ["J"])
        if len(set(a) | set(b)) > 1 or a != b:
            per_tweet.append(kappa(a, b, 2))
    expected["justification_per_tweet_mean_kappa"] = sum(per_tweet) / len(per_tweet)
    with open(os.path.join(HERE, "expected.json"), "w", encoding="utf-8") as f:
        json.dump(expected, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
