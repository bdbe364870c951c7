"""Orbit sizes of the SL2(Z) tuples psi_{l,l'} under small braid subgroups.

Compares the full Hurwitz orbit under Br_n (capped) with the orbit under the
subgroup generated by the E family, which must be a single point.
"""

import argparse

from bpmono.generators import FamilySpec, generator_family
from bpmono.hurwitz import base_tuple, orbit_enumerate
from bpmono.words import BraidWord


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--cap", type=int, default=2000)
    args = ap.parse_args()

    print(f"{'l':>2} {'lp':>3} {'Br_n orbit':>12} {'E orbit':>8}")
    for n in range(2, args.max_n + 1):
        for l in range(0, n + 1):
            lp = n - l
            t = base_tuple("psi", l, lp)
            full = orbit_enumerate(t, [BraidWord.gen(n, i) for i in range(1, n)], cap=args.cap)
            sub = orbit_enumerate(t, [g.word for g in generator_family(FamilySpec("E", (l, lp)))], cap=args.cap)
            size = f">={full.size}" if full.verdict != "holds" else str(full.size)
            print(f"{l:>2} {lp:>3} {size:>12} {sub.size:>8}")


if __name__ == "__main__":
    main()
