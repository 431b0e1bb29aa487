#!/usr/bin/env python3
"""Benchmark the compiled alignment kernel against the pure-Python fallback.

Usage:
    python benchmarks/bench_alignment.py [--pairs 20000] [--max-len 25]

Generates synthetic noised sentence pairs, verifies both kernels agree, and
reports pairs/second for each backend.
"""

from __future__ import annotations

import argparse
import random
import time

from gecedit.alignment import available_backends
from gecedit.lexicon import load_lexicon
from gecedit.noiser import NoiseProfile, Noiser

WORDS = (
    "the a an of to in on at for with he she they we it this that city "
    "house school office team station morning evening quiet small busy "
    "lives works goes stays plays walks looks waits and but because when "
    "people children friends teachers students books letters pictures ."
).split()


def make_pairs(n_pairs: int, max_len: int, seed: int) -> list[tuple[list[str], list[str]]]:
    rng = random.Random(seed)
    noiser = Noiser(
        NoiseProfile(
            {
                "type_preposition": 1.0,
                "ngram_swap": 1.0,
                "ngram_insert": 1.0,
                "ngram_delete": 1.0,
                "similar_sound": 1.0,
            },
            expected_errors=2.0,
            rng_seed=seed,
        ),
        lexicon=load_lexicon(),
    )
    pairs = []
    for i in range(n_pairs):
        clean = [rng.choice(WORDS) for _ in range(rng.randrange(5, max_len))]
        corrupted, _ = noiser.corrupt(clean, i)
        pairs.append((corrupted, clean))
    return pairs


def bench(kernel, pairs) -> float:
    start = time.perf_counter()
    for src, tgt in pairs:
        kernel(src, tgt)
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=20000)
    parser.add_argument("--max-len", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(sorted(backends))}")
    pairs = make_pairs(args.pairs, args.max_len, args.seed)
    print(f"aligning {len(pairs)} pairs (max length {args.max_len})")

    sample = pairs[:500]
    if len(backends) == 2:
        mismatches = sum(
            backends["python"](s, t) != backends["cython"](s, t) for s, t in sample
        )
        print(f"agreement check on {len(sample)} pairs: {mismatches} mismatches")

    timings = {}
    for name in sorted(backends):
        elapsed = bench(backends[name], pairs)
        timings[name] = elapsed
        print(f"{name:>8}: {elapsed:8.3f}s  ({len(pairs) / elapsed:10.0f} pairs/s)")
    if len(timings) == 2:
        print(f"speedup: {timings['python'] / timings['cython']:.1f}x")


if __name__ == "__main__":
    main()
