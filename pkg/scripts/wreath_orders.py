"""Order of the group generated by hedron arrows, and its index in the full wreath product."""

import argparse
import time

from lingroupoid.identities import parse_identity
from lingroupoid.wreath import full_wreath_order, wreath_generator_set, wreath_group_order


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("identity", nargs="?", default="(xy)z=y(zx)")
    ap.add_argument("--m", type=int, nargs="+", default=[3, 4, 5])
    args = ap.parse_args()
    phi = parse_identity(args.identity)
    for m in args.m:
        t = time.perf_counter()
        gs = wreath_generator_set(phi, m)
        order = wreath_group_order(phi, m)
        full = full_wreath_order(m)
        print(f"m={m}  arrows={gs.directed_arrows}  generators={len(gs.elements)}  "
              f"order={order}  index={full // order}  ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
