"""Smallest groupoid satisfying one length-6 identity and none of the other 13.

Compares the search result with the order of the shipped corpus table.
Orders above 4 can take a long time for the hardest identities.
"""

import argparse
import time

from lingroupoid.corpus import DISTINGUISHING
from lingroupoid.identities import enumerate_identities
from lingroupoid.models import format_table, parse_table, search_model
from lingroupoid.varieties import display_key


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=4)
    ap.add_argument("--show", action="store_true", help="print the tables found")
    args = ap.parse_args()
    ids = enumerate_identities(3, nontrivial_only=True)
    for phi in sorted(ids, key=display_key):
        shipped = parse_table(DISTINGUISHING[phi.name()]).order
        t = time.perf_counter()
        r = search_model([phi], [i for i in ids if i != phi], min(args.max_order, shipped))
        found = r.model.order if r.found else f">{r.exhausted[-1]}"
        print(f"{phi.name():<16}{phi.surface():<14} corpus={shipped}  smallest={found}  "
              f"nodes={r.nodes}  ({time.perf_counter() - t:.1f}s)", flush=True)
        if args.show and r.found:
            print(format_table(r.model))


if __name__ == "__main__":
    main()
