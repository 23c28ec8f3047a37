"""Print the variety census for n=2..6 and the length-6 classification."""

import argparse

from lingroupoid.identities import census
from lingroupoid.varieties import classify, classify_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    rows = [census(n) for n in range(2, args.max_n + 1)]
    ms = range(2, args.max_n + 1)
    print("s[n,m]  " + " ".join(f"{m:>5}" for m in ms))
    for c in rows:
        print(f"n={c.n:<5} " + " ".join(f"{c.s.get(m, 0) or '':>5}" for m in ms))
    print()
    print("n       " + " ".join(f"{c.n:>8}" for c in rows))
    print("C_n     " + " ".join(f"{c.catalan:>8}" for c in rows))
    print("L(n)    " + " ".join(f"{c.L:>8}" for c in rows))
    print()
    print(classify_table(classify(3)), end="")


if __name__ == "__main__":
    main()
