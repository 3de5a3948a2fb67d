"""Monte Carlo estimate of the orbit count against sample size, for one spec file.

    python scripts/mc_convergence.py specs/cube_faces_3colors.json --seed 1
"""
import argparse

from orbitcount.cli import load_action
from orbitcount.montecarlo import estimate_orbit_count
from orbitcount.proof import render


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("spec")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-exp", type=int, default=5, help="largest sample size is 10**max_exp")
    args = ap.parse_args()

    action = load_action(args.spec)
    print(f"{'samples':>9} {'estimate':>12} {'std err':>10} {'|z|':>6}   exact")
    for k in range(1, args.max_exp + 1):
        r = estimate_orbit_count(action, 10**k, args.seed)
        z = r.error / r.standard_error if r.standard_error else 0.0
        print(f"{r.samples:>9} {r.estimate:>12.5f} {r.standard_error:>10.5f} {z:>6.2f}   {render(r.exact)}")


if __name__ == "__main__":
    main()
