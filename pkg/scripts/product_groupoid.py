"""Check that A x B satisfies exactly the length-8 identities implied by (xy)z=y(zx)."""

import time

from lingroupoid.corpus import PRODUCT_A, PRODUCT_B
from lingroupoid.hedron import implied_names, implied_set
from lingroupoid.identities import enumerate_identities, parse_identity
from lingroupoid.models import direct_product, parse_table, satisfies


def main():
    ac_nice = parse_identity("(xy)z=y(zx)")
    t = time.perf_counter()
    ab = direct_product(parse_table(PRODUCT_A), parse_table(PRODUCT_B))
    sat = {i for i in enumerate_identities(4, True) if satisfies(ab, i)}
    implied = implied_set(ac_nice, 4)
    print(f"order of A x B: {ab.order}")
    print(f"satisfies (xy)z=y(zx): {satisfies(ab, ac_nice)}")
    print(f"canonical length-8 identities satisfied: {len(sat)}")
    print(f"canonical length-8 identities implied:   {len(implied)}")
    print(f"implied names counting both orientations: {len(implied_names(ac_nice, 4))}")
    print(f"satisfied == implied: {sat == implied}  ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
