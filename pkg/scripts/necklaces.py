"""Necklace (cyclic) and bracelet (dihedral) counts for n beads and c colors."""
import argparse

from orbitcount.action import coloring_action
from orbitcount.corpus import cyclic_group, dihedral_group
from orbitcount.counting import count_orbits_burnside, count_orbits_direct


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-beads", type=int, default=8)
    ap.add_argument("--colors", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()

    header = "  ".join(f"neck c={c:<2} brace c={c:<2}" for c in args.colors)
    print(f" n  {header}")
    for n in range(1, args.max_beads + 1):
        cells = []
        for c in args.colors:
            counts = []
            for group in (cyclic_group(n), dihedral_group(n)):
                a = coloring_action(group, c)
                direct = count_orbits_direct(a)
                assert direct == count_orbits_burnside(a)
                counts.append(direct)
            cells.append(f"{counts[0]:>9}  {counts[1]:>10}")
        print(f"{n:>2}  " + "  ".join(cells))


if __name__ == "__main__":
    main()
