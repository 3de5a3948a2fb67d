"""Count orbits both ways and run the exact identity checks on every corpus action.

    python scripts/run_corpus.py [--random N] [--seed S]
"""
import argparse
import random
import time

from orbitcount.corpus import corpus, random_action
from orbitcount.counting import count_report
from orbitcount.proof import render, verify_proof


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--random", type=int, default=0, help="extra random actions to include")
    ap.add_argument("--seed", type=int, default=2020)
    args = ap.parse_args()

    cases = list(corpus())
    rng = random.Random(args.seed)
    cases += [random_action(rng) for _ in range(args.random)]

    print(f"{'action':<44} {'|G|':>5} {'|X|':>6} {'N':>5} {'burnside':>12}  proof  secs")
    bad = 0
    for name, a in cases:
        t0 = time.perf_counter()
        r = count_report(a)
        reps = verify_proof(a)
        ok = r.agrees and all(x.holds for x in reps)
        bad += not ok
        burnside = f"{sum(r.fix_sizes)}/{r.group_order}"
        print(f"{name[:44]:<44} {r.group_order:>5} {a.size:>6} {r.direct_count:>5} {burnside:>12}  "
              f"{'ok' if ok else 'FAIL':<5}  {time.perf_counter() - t0:.2f}")
        for rep in reps:
            if not rep.holds:
                print(f"    step {rep.step} {rep.identity_name}: {rep.witness} (lhs {render(rep.lhs)[:60]})")
    print(f"\n{len(cases)} actions, {bad} failures")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
