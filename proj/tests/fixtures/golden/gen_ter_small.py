#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates ter_small.txt with the sacreBLEU 2.0.0 tercom implementation.

    python3 gen_ter_small.py > ter_small.txt

Token sequences over the alphabet {a, b, c}, one character per token. Lines
are `hyp|ref|edits`. Every pair with at most 4 tokens per side is listed,
followed by 20000 seeded random pairs with 5 or 6 tokens on at least one side.
"""
import itertools
import random

import sacrebleu
from sacrebleu.metrics.lib_ter import translation_edit_rate

assert sacrebleu.__version__ == "2.0.0", sacrebleu.__version__

ALPHABET = "abc"


def seqs(max_len):
    for n in range(max_len + 1):
        for t in itertools.product(ALPHABET, repeat=n):
            yield "".join(t)


def main():
    small = list(seqs(4))
    for h in small:
        for r in small:
            if r:
                print(f"{h}|{r}|{translation_edit_rate(list(h), list(r))[0]}")
    rng = random.Random(20201223)
    for _ in range(20000):
        while True:
            nh, nr = rng.randint(0, 6), rng.randint(1, 6)
            if max(nh, nr) >= 5:
                break
        h = "".join(rng.choice(ALPHABET) for _ in range(nh))
        r = "".join(rng.choice(ALPHABET) for _ in range(nr))
        print(f"{h}|{r}|{translation_edit_rate(list(h), list(r))[0]}")


if __name__ == "__main__":
    main()
