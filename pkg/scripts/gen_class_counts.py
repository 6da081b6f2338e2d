"""Regenerate tests/data/class_counts.json, the frozen per-size tallies
that the regression tests compare against.

Run from the repository root:

    python3 scripts/gen_class_counts.py [--max-n 7] [--jobs 4]

The file is committed; regenerate it only when the classifiers change
on purpose, and eyeball the diff.
"""
import argparse
import json
import pathlib

from schublci.verify import run_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument(
        "--out",
        type=pathlib.Path,
        default=pathlib.Path(__file__).resolve().parents[1]
        / "tests"
        / "data"
        / "class_counts.json",
    )
    args = ap.parse_args()

    hierarchy = run_suite("hierarchy", args.max_n, jobs=args.jobs)
    counting = run_suite("counting", max(args.max_n, 8), jobs=args.jobs)
    if hierarchy["failures"] or counting["failures"]:
        raise SystemExit("refusing to freeze counts while suites fail")

    data = {
        "max_n": args.max_n,
        "class_counts": hierarchy["counts"],
        "inclusion_and_slab": counting["counts"],
        "slab_counts": counting["slab_counts"],
    }
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
