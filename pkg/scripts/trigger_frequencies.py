#!/usr/bin/env python3
"""Measure empirical trigger-phrase frequencies across seeded recommendations.

For a negative emotion each targeted phrase should appear in about 2/3 of
recommendations (2 drawn from 3) and each generalized phrase in about 1/2
(1 drawn from 2). Positive emotions always get all three targeted phrases.

    python3 scripts/trigger_frequencies.py --emotion sadness --trials 10000
"""

import argparse
from collections import Counter

from peersupport.emoclass import LABELS
from peersupport.scaffold import default_phrase_bank, load_phrase_bank, recommend_triggers


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--emotion", choices=LABELS, default="sadness")
    parser.add_argument("--trials", type=int, default=10_000)
    parser.add_argument("--phrase-bank", default=None, help="phrase bank JSON (default: packaged)")
    args = parser.parse_args()
    bank = load_phrase_bank(args.phrase_bank) if args.phrase_bank else default_phrase_bank()
    counts: Counter[tuple[str, str]] = Counter()
    for seed in range(args.trials):
        rec = recommend_triggers(bank, args.emotion, seed)
        for phrase, provenance in zip(rec.phrases, rec.provenance):
            counts[(provenance, phrase)] += 1
    print(f"{args.trials} seeded recommendations for {args.emotion!r}:")
    for (provenance, phrase), count in sorted(counts.items()):
        print(f"  {count / args.trials:.4f}  {provenance:<11}  {phrase}")


if __name__ == "__main__":
    main()
