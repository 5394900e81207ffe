# Copyright 2026 The Synthbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled toy datasets under data/.

toy_mixed.csv       500 rows: 3 continuous, 3 binary, 2 multi-class columns
                    and a multi-class target.
toy_continuous.csv  100 rows: 11 continuous features and a continuous target,
                    with a few missing cells.

Output is fixed by the seeds below; rerun only to change the data.
"""

import csv
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(os.path.dirname(HERE), "data")


def clip(v, lo, hi):
    return max(lo, min(hi, v))


def toy_mixed(rng):
    header = ["gender", "lunch", "test_prep", "group", "parent_education",
              "math", "reading", "writing", "result"]
    groups = ["A", "B", "C", "D", "E"]
    education = ["high_school", "some_college", "associate", "bachelor",
                 "master"]
    rows = []
    for _ in range(500):
        gender = rng.choice(["female", "male"])
        lunch = "standard" if rng.random() < 0.65 else "reduced"
        prep = "completed" if rng.random() < 0.35 else "none"
        g = rng.choices(range(5), weights=[9, 19, 32, 26, 14])[0]
        e = rng.choices(range(5), weights=[20, 22, 22, 24, 12])[0]
        ability = rng.gauss(0, 1)
        bonus = (6 if lunch == "standard" else 0) + (5 if prep == "completed" else 0)
        bonus += 2 * g + 1.5 * e
        math = clip(round(55 + 12 * ability + bonus + rng.gauss(0, 6)
                          + (3 if gender == "male" else 0)), 0, 100)
        reading = clip(round(58 + 11 * ability + bonus + rng.gauss(0, 5)
                             + (4 if gender == "female" else 0)), 0, 100)
        writing = clip(round(0.8 * reading + 0.2 * math + rng.gauss(0, 3)), 0, 100)
        mean = (math + reading + writing) / 3
        result = "fail" if mean < 60 else ("distinction" if mean >= 82 else "pass")
        rows.append([gender, lunch, prep, groups[g], education[e],
                     math, reading, writing, result])
    return header, rows


def toy_continuous(rng):
    features = ["videos_watched", "quiz_attempts", "forum_posts", "forum_reads",
                "time_on_platform", "assignments_submitted", "avg_quiz_score",
                "login_days", "session_length", "late_submissions",
                "peer_reviews"]
    header = features + ["final_grade"]
    rows = []
    for _ in range(100):
        engagement = rng.gauss(0, 1)
        vals = [
            round(40 + 12 * engagement + rng.gauss(0, 5), 1),
            round(clip(8 + 2.5 * engagement + rng.gauss(0, 2), 0, 30), 1),
            round(clip(6 + 4 * engagement + rng.gauss(0, 3), 0, 40), 1),
            round(clip(60 + 25 * engagement + rng.gauss(0, 10), 0, 200), 1),
            round(clip(30 + 9 * engagement + rng.gauss(0, 4), 1, 90), 2),
            round(clip(7 + 1.8 * engagement + rng.gauss(0, 1.2), 0, 12), 1),
            round(clip(68 + 9 * engagement + rng.gauss(0, 7), 0, 100), 2),
            round(clip(35 + 10 * engagement + rng.gauss(0, 5), 1, 90), 1),
            round(clip(25 + 4 * engagement + rng.gauss(0, 6), 2, 80), 2),
            round(clip(3 - 1.2 * engagement + rng.gauss(0, 1.5), 0, 15), 1),
            round(clip(4 + 1.5 * engagement + rng.gauss(0, 1.5), 0, 15), 1),
        ]
        grade = round(clip(62 + 11 * engagement + 0.2 * (vals[6] - 68)
                           + rng.gauss(0, 5), 0, 100), 1)
        rows.append(vals + [grade])
    for r, c in [(7, 2), (23, 5), (41, 0), (58, 9), (76, 11)]:
        rows[r][c] = ""
    return header, rows


def write(name, header, rows):
    with open(os.path.join(OUT, name), "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def main():
    os.makedirs(OUT, exist_ok=True)
    write("toy_mixed.csv", *toy_mixed(random.Random(20240501)))
    write("toy_continuous.csv", *toy_continuous(random.Random(20240502)))


if __name__ == "__main__":
    main()
