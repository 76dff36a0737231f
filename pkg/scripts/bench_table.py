"""Print the ednum timing table: both algorithms, alphabet sizes 2 and 254.

    python3 scripts/bench_table.py --n 100,500 --runs 5
"""

import argparse

from expanse.bench import BenchConfig, run, to_csv


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", default="100,500")
    p.add_argument("--alphabet-sizes", default="2,254")
    p.add_argument("--runs", type=int, default=5)
    args = p.parse_args()
    cfg = BenchConfig(ns=tuple(int(x) for x in args.n.split(",")),
                      alphabet_sizes=tuple(int(x) for x in args.alphabet_sizes.split(",")),
                      runs=args.runs)
    rows = run(cfg)
    print(to_csv(rows), end="")
    # ratio of the largest to the smallest alphabet, per algorithm and n
    lo, hi = min(cfg.alphabet_sizes), max(cfg.alphabet_sizes)
    by_key = {(r.algo, r.alphabet_size, r.n): r.millis for r in rows}
    print()
    for algo in cfg.algorithms:
        for n in cfg.ns:
            ratio = by_key[algo, hi, n] / by_key[algo, lo, n]
            print(f"{algo:>10}  n={n:<5} {hi}/{lo} ratio: {ratio:6.2f}")


if __name__ == "__main__":
    main()
