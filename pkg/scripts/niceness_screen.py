"""mAC-niceness of every nontrivial length-6 identity for several m."""

import argparse
import os

from lingroupoid.varieties import display_key
from lingroupoid.wreath import niceness_screen


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()
    rows = niceness_screen(3, args.m, ("group", "bfs"), args.jobs)
    table: dict = {}
    for r in rows:
        assert r.methods_agree, r.as_dict()
        table.setdefault(r.identity, {})[r.m] = r.nice
    print(f"{'identity':<14}" + "".join(f"  m={m}" for m in args.m))
    for ident in sorted(table, key=display_key):
        cells = "".join(f"  {'yes' if table[ident][m] else ' no':>3}" for m in args.m)
        print(f"{ident.surface():<14}{cells}")


if __name__ == "__main__":
    main()
