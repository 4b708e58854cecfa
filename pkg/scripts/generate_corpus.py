#!/usr/bin/env python3
"""Write a synthetic separable training corpus as label<TAB>text lines.

Useful for exercising the train/eval commands without real data:

    python3 scripts/generate_corpus.py --out corpus.tsv --docs-per-label 50
"""

import argparse

from peersupport.demo import make_separable_corpus
from peersupport.emoclass import save_corpus


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True, help="output path for the corpus file")
    parser.add_argument("--docs-per-label", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    corpus = make_separable_corpus(docs_per_label=args.docs_per_label, seed=args.seed)
    save_corpus(corpus, args.out)
    print(f"wrote {len(corpus)} records to {args.out}")


if __name__ == "__main__":
    main()
