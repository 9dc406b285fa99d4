"""Normalise every violating set of every negative gadget in a sweep.

Negatives from the exhaustive range are checked once per isomorphism class.
"""

import argparse
import sys

from pcfactor.gadgets import build_gfc
from pcfactor.harness import canonical_code, check_normalization, evaluate_instance, exhaustive_instances


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--fmax", type=int, default=2)
    ap.add_argument("--max-gadget", type=int, default=18, help="skip gadgets with more vertices")
    args = ap.parse_args()

    seen = set()
    sets = gadgets = skipped = 0
    failures = []
    for g, f in exhaustive_instances(args.n, args.k, args.fmax):
        res = evaluate_instance(g, f, keep_mismatches=False)
        if not res.feasible or res.matching:
            continue
        code = canonical_code(g, f)
        if code in seen:
            continue
        seen.add(code)
        if len(build_gfc(g, f).graph.vertices) > args.max_gadget:
            skipped += 1
            continue
        gadgets += 1
        count, bad = check_normalization(g, f)
        sets += count
        failures.extend(bad)
    print(f"{sets} violating sets over {gadgets} gadgets ({skipped} skipped), {len(failures)} failures")
    for line in failures[:20]:
        print("  ", line)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
