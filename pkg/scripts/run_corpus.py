"""Run the invariant suite over a corpus and write a JSON report with timings.

    python scripts/run_corpus.py --out corpus_report.json
"""

import argparse
import json
import time
from importlib.resources import files

from qheegaard.checks import read_corpus, run_entry


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--corpus", default=str(files("qheegaard").joinpath("data", "corpus.txt")))
    ap.add_argument("--out", default="corpus_report.json")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rows = []
    for e in read_corpus(args.corpus):
        t0 = time.perf_counter()
        r = run_entry(e, seed=args.seed)
        r["seconds"] = round(time.perf_counter() - t0, 3)
        rows.append(r)
        print(f"{e.name:<20} {'ok' if r['ok'] else 'FAIL':<5} {r['seconds']:>7.2f}s  jones {r['oracles']['jones']}")
    with open(args.out, "w") as fh:
        json.dump(rows, fh, indent=2, sort_keys=True)
    print(f"{sum(r['ok'] for r in rows)}/{len(rows)} ok -> {args.out}")


if __name__ == "__main__":
    main()
