"""Run the factor/palette equivalence sweep and write the JSON report.

    python3 scripts/equivalence_sweep.py --n 4 --k 2 --fmax 2 -o reports/sweep.json
    python3 scripts/equivalence_sweep.py --n 5 --k 3 --fmax 3 --sample 500 --seed 1
"""

import argparse
import json
import sys
import time

from pcfactor.harness import equivalence_harness


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--fmax", type=int, default=2)
    ap.add_argument("--sample", type=int, help="random instances on exactly n vertices instead of exhaustive")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--examples", type=int, default=20)
    ap.add_argument("-o", "--output")
    args = ap.parse_args()

    start = time.perf_counter()
    report = equivalence_harness(args.n, args.k, args.fmax, args.sample, args.seed)
    data = report.to_json(args.examples)
    data["seconds"] = round(time.perf_counter() - start, 2)
    text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"{report.instances} instances, divergence: {report.has_divergence}", file=sys.stderr)
    return 4 if report.has_divergence else 0


if __name__ == "__main__":
    sys.exit(main())
