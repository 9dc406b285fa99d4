"""Rewrite the generated fixtures (the hand-written ones are left alone).

With --check, only report whether the files on disk are current.
"""

import argparse
import sys
from pathlib import Path

from pcfactor.formats import serialize_ecg
from pcfactor.hardness import canonical_colouring

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def generated() -> dict[str, str]:
    pet = canonical_colouring(3)
    return {
        "petersen-canonical.ecg": serialize_ecg(pet, {v: 3 for v in pet.vertices},
                                                header="KG(5,2), canonical colouring"),
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    stale = 0
    for name, text in generated().items():
        path = FIXTURES / name
        if path.exists() and path.read_text() == text:
            print(f"{name}: current")
            continue
        stale += 1
        if args.check:
            print(f"{name}: stale")
        else:
            path.write_text(text)
            print(f"{name}: written")
    return 1 if args.check and stale else 0


if __name__ == "__main__":
    sys.exit(main())
