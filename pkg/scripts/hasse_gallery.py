#!/usr/bin/env python3
"""Write Hasse quivers of a few small symmetric algebras as DOT files."""
import argparse
from pathlib import Path

from brauerkit import load_fixture
from brauerkit.brauer import algebra_of_brauer_graph, brauer_cycle, brauer_line, brauer_star, gamma_of_gentle
from brauerkit.stt import hasse_dot, hasse_quiver, support_tau_tilting


def gallery():
    yield "line2", algebra_of_brauer_graph(brauer_line(2))
    yield "star3", algebra_of_brauer_graph(brauer_star(3))
    yield "cycle3", algebra_of_brauer_graph(brauer_cycle(3))
    yield "trivext_F3", algebra_of_brauer_graph(gamma_of_gentle(load_fixture("F3")))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="hasse_dot")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, pres in gallery():
        res = support_tau_tilting(pres)
        hq = hasse_quiver(res.catalog, res.pairs)
        (out / f"{name}.dot").write_text(hasse_dot(res.catalog, hq, name))
        print(f"{name}: {len(res.pairs)} pairs, {len(hq.edges)} arrows -> {out / (name + '.dot')}")


if __name__ == "__main__":
    main()
