"""Survey the singularity classes over all of S_n and print a tally
table, then walk one permutation through the whole pipeline (diagram,
essential set, minimal generators, local class).

    python3 scripts/survey_classes.py [--max-n 6] [--example 8,1,9,3,7,2,5,6,4]
"""
import argparse

from schublci import (
    classify,
    cohomology_presentation,
    enumerate_perms,
    essential_set,
    format_perm,
    inclusion_level,
    is_slab,
    local_class_product,
    minimal_generators,
    parse_perm,
)


def tally_table(max_n: int) -> None:
    header = f"{'n':>2} {'smooth':>7} {'factorial':>10} {'dbi':>6} {'lci':>6} {'slab':>6}"
    print(header)
    print("-" * len(header))
    for n in range(1, max_n + 1):
        counts = [0] * 5
        for w in enumerate_perms(n):
            rep = classify(w)
            counts[0] += rep.smooth
            counts[1] += rep.factorial
            counts[2] += rep.dbi
            counts[3] += rep.lci
            counts[4] += is_slab(w)
        print(
            f"{n:>2} {counts[0]:>7} {counts[1]:>10} {counts[2]:>6}"
            f" {counts[3]:>6} {counts[4]:>6}"
        )


def walkthrough(w) -> None:
    print(f"\nwalkthrough for w = {format_perm(w)}")
    print(f"  inclusion level: {inclusion_level(w)}")
    for b in essential_set(w):
        print(
            f"  essential box ({b.p},{b.q}): rank {b.rank},"
            f" conditions {sorted(b.conditions)}, {b.stratum}"
        )
    gens = minimal_generators(w, expand=False)
    print(f"  minimal generators: {len(gens)}")
    for rec in gens.records[:6]:
        print(f"    rows {list(rec.spec.rows)} cols {list(rec.spec.cols)}")
    if len(gens) > 6:
        print(f"    ... {len(gens) - 6} more")
    cls = local_class_product(w, "cohomology")
    print(f"  cohomology class: {len(cls.terms)} terms")
    pres = cohomology_presentation(w)
    print(f"  presentation relations: {len(pres)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--example", default="8,1,9,3,7,2,5,6,4")
    args = ap.parse_args()
    tally_table(args.max_n)
    walkthrough(parse_perm(args.example))


if __name__ == "__main__":
    main()
