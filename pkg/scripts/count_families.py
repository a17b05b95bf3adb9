#!/usr/bin/env python3
"""Enumerated versus predicted counts for lines, stars and cycles of Brauer graphs."""
import argparse
import time

from brauerkit.brauer import algebra_of_brauer_graph, brauer_cycle, brauer_line, brauer_star, predicted_count
from brauerkit.stt import InfiniteTypeError, support_tau_tilting

FAMILIES = {
    "line": brauer_line,
    "star": brauer_star,
    "star_m2": lambda n: brauer_star(n, center_multiplicity=2),
    "cycle": brauer_cycle,
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-edges", type=int, default=4)
    ap.add_argument("--families", nargs="*", default=list(FAMILIES))
    args = ap.parse_args()
    print(f"{'family':8} {'n':>2} {'predicted':>13} {'enumerated':>10} {'seconds':>8}")
    for fam in args.families:
        for n in range(1 if fam != "cycle" else 2, args.max_edges + 1):
            g = FAMILIES[fam](n)
            pred = predicted_count(g)
            shown = pred.value if pred.value is not None else pred.status.value
            t0 = time.perf_counter()
            try:
                got = str(len(support_tau_tilting(algebra_of_brauer_graph(g)).pairs))
            except InfiniteTypeError:
                got = "infinite"
            print(f"{fam:8} {n:>2} {shown!s:>13} {got:>10} {time.perf_counter() - t0:8.2f}")


if __name__ == "__main__":
    main()
