#!/usr/bin/env python3
# Copyright 2026 The readacuity Authors. All Rights Reserved.
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
"""Writes placeholder sentence sets with the protocol's shape.

Each set holds 16 sentences from 1.0 down to -0.5 logMAR in 0.1 steps:
10 words (EN) or 12 characters (CN) per sentence, no text repeated within a
language. Replace these files with licensed chart sentences for real use.
"""

import csv
import itertools
import pathlib
import random

SETS_PER_LANGUAGE = 8
SIZES = [round(1.0 - 0.1 * i, 1) for i in range(16)]

EN_WORDS = (
    "the a old young small quiet bright green river garden window morning "
    "evening letter story friend mother father child teacher writer painter "
    "walked carried opened watched found brought kept left"
).split()
CN_CHARS = list("天地人山水日月风云花草木田禾火土石金门马牛羊鸟鱼书画茶米家国春夏秋冬")


def main() -> None:
    root = pathlib.Path(__file__).resolve().parent.parent / "data" / "sentences"
    root.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20260101)
    for language, unit, count in (("EN", EN_WORDS, 10), ("CN", CN_CHARS, 12)):
        seen = set()
        for set_index in range(1, SETS_PER_LANGUAGE + 1):
            path = root / f"{language.lower()}_set{set_index:02d}.csv"
            with path.open("w", newline="", encoding="utf-8") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(["language", "sentence_id", "logmar", "word_count", "text"])
                for sentence_index, size in enumerate(SIZES, start=1):
                    while True:
                        tokens = [rng.choice(unit) for _ in range(count)]
                        text = (" " if language == "EN" else "").join(tokens)
                        if text not in seen:
                            seen.add(text)
                            break
                    writer.writerow([language,
                                     f"{language}{set_index:02d}-{sentence_index:02d}",
                                     f"{size:.1f}", count, text])


if __name__ == "__main__":
    main()
