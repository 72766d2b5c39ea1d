"""Write one benchmark CSV per generator family into a directory.

    python scripts/bench.py out/ --seed 0 --no-timing
"""

import argparse
from pathlib import Path

from interval_completion.cli import FAMILIES, main

SIZES = {"cycle": "4..10", "small-aw": "0", "long-aw": "4..8",
         "random-interval-plus-e-edges": "6..10", "random-interval-minus-e-edges": "6..10"}


def run(outdir: Path, seed: int, count: int, timing: bool) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for fam in FAMILIES:
        argv = ["bench", "--family", fam, "--sizes", SIZES[fam], "--seed", str(seed), "--count", str(count)]
        if not timing:
            argv.append("--no-timing")
        with open(outdir / f"{fam}.csv", "w") as fh:
            main(argv, fh)
        print(f"wrote {outdir / (fam + '.csv')}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("outdir", type=Path)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--no-timing", action="store_true")
    args = p.parse_args()
    run(args.outdir, args.seed, args.count, not args.no_timing)
