"""Exhaustive verification suites.

Each suite re-proves one headline invariant over all of S_n up to a
bound and returns a JSON-ready payload: totals, failures (each with a
reproducing permutation), and any counts it gathered along the way.
Suites are pure; the heavy ones split S_n into index ranges and fan out
over a process pool, then merge with order-independent reductions.
"""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor

from . import catalogs
from .classify import (
    classify,
    is_dbi_patterns,
    is_lci_patterns,
    is_slab,
    witness_nonlci,
)
from .diagrams import (
    ADBI_ONLY,
    DBI,
    NEITHER,
    associated_dbi,
    e_double_prime,
    essential_set,
    inclusion_level,
)
from .ideals import kl_ideal_generators, minimal_generators, vanishing_points
from .localclass import local_class_product, oracle_class
from .patterns import contains_classical, interval_embeds
from .permutations import (
    as_perm,
    coxeter_length,
    enumerate_perms,
    format_perm,
    identity,
)
from .schubert import specialized_classes

FAILURE_CAP = 20

SUITES = (
    "hierarchy",
    "main-equivalence",
    "necessity",
    "thm34",
    "ideal-pointsets",
    "local-class-oracle",
    "counting",
    "pattern-discrepancy",
)


def _perm_slice(n: int, start: int, stop: int):
    return itertools.islice(enumerate_perms(n), start, stop)


def _ranges(n: int, pieces: int):
    import math

    total = math.factorial(n)
    step = max(1, -(-total // pieces))
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def _fan_out(worker, n: int, jobs: int):
    """Run worker(n, start, stop) over a partition of S_n and collect
    the (count, failures, extra) triples."""
    if jobs <= 1:
        return [worker(n, 0, None)]
    parts = _ranges(n, jobs * 4)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futs = [pool.submit(worker, n, a, b) for (a, b) in parts]
        return [f.result() for f in futs]


def _merge(results):
    total = sum(r[0] for r in results)
    failures = sorted(
        (f for r in results for f in r[1]), key=lambda f: (f.get("n", 0), f.get("perm", ""))
    )[:FAILURE_CAP]
    extras = [r[2] for r in results if len(r) > 2 and r[2]]
    return total, failures, extras


# ---------------------------------------------------------------------------
# hierarchy


def _hierarchy_worker(n: int, start: int, stop):
    count = 0
    failures = []
    tallies = {"smooth": 0, "factorial": 0, "dbi": 0, "lci": 0, "matrix_schubert_lci": 0}
    for w in _perm_slice(n, start, stop):
        count += 1
        rep = classify(w)
        for k in tallies:
            if getattr(rep, {"matrix_schubert_lci": "matrix_lci"}.get(k, k)):
                tallies[k] += 1
        chain = (rep.smooth, rep.factorial, rep.dbi, rep.lci)
        for a, b in zip(chain, chain[1:]):
            if a and not b:
                failures.append(
                    {"n": n, "perm": format_perm(w), "flags": list(chain)}
                )
                break
    return count, failures, tallies


def suite_hierarchy(max_n: int, jobs: int = 1, seed: int = 0) -> dict:
    total = 0
    failures = []
    counts = {}
    for n in range(1, max_n + 1):
        t, fails, extras = _merge(_fan_out(_hierarchy_worker, n, jobs))
        total += t
        failures.extend(fails)
        tally = {k: 0 for k in ("smooth", "factorial", "dbi", "lci", "matrix_schubert_lci")}
        for ex in extras:
            for k, vv in ex.items():
                tally[k] += vv
        counts[str(n)] = tally
    return {
        "suite": "hierarchy",
        "max_n": max_n,
        "total": total,
        "failures": failures[:FAILURE_CAP],
        "counts": counts,
    }


# ---------------------------------------------------------------------------
# main equivalence (tri-route)


def _main_eq_worker(n: int, start: int, stop):
    count = 0
    failures = []
    for w in _perm_slice(n, start, stop):
        count += 1
        a = is_lci_patterns(w)
        b = inclusion_level(w) != NEITHER
        c = witness_nonlci(w) is None
        if not (a == b == c):
            failures.append(
                {
                    "n": n,
                    "perm": format_perm(w),
                    "avoids_patterns": a,
                    "inclusion_level_ok": b,
                    "no_witness": c,
                }
            )
    return count, failures, None


def suite_main_equivalence(max_n: int, jobs: int = 1, seed: int = 0) -> dict:
    total = 0
    failures = []
    for n in range(1, max_n + 1):
        t, fails, _ = _merge(_fan_out(_main_eq_worker, n, jobs))
        total += t
        failures.extend(fails)
    return {
        "suite": "main-equivalence",
        "max_n": max_n,
        "total": total,
        "failures": failures[:FAILURE_CAP],
    }


# ---------------------------------------------------------------------------
# necessity: every forced pattern has a witness in the catalog


def _witness_from(w, family_prefixes: tuple[str, ...], exact: tuple[str, ...]):
    for source, ip in catalogs.witness_intervals(len(w)):
        if not (source.startswith(family_prefixes) or source in exact):
            continue
        if interval_embeds(w, ip) is not None:
            return source
    return None


def _rc_exceptional_names(names: tuple[str, ...]) -> tuple[str, ...]:
    """Names of the reverse-complement images inside the catalog."""
    from .permutations import reverse_complement

    by_pair = {
        (ni.interval.u, ni.interval.v): ni.name
        for ni in catalogs.EXCEPTIONAL_INTERVALS
    }
    out = []
    for ni in catalogs.EXCEPTIONAL_INTERVALS:
        if ni.name not in names:
            continue
        key = (
            reverse_complement(ni.interval.u),
            reverse_complement(ni.interval.v),
        )
        if key not in by_pair:
            raise RuntimeError(f"catalog not rc-closed at {ni.name}")
        out.append(by_pair[key])
    return tuple(out)


_FIVE_LETTER_PATTERNS = ((5, 3, 2, 4, 1), (5, 2, 3, 4, 1), (5, 2, 4, 3, 1))
# Exceptionals reachable from a 35142 occurrence.  Note Grc, not G: the
# interval top 463152 is the unique size-6 host of this kind, while G's top
# 526413 contains 42513 instead (the two lists are rc-mirrors of each other).
_EXCEPTIONALS_FOR_35142 = ("C", "E", "Ei", "Frc", "Firc", "Grc", "H")


def _exact_sources(names) -> tuple[str, ...]:
    return tuple(f"Exceptional({x})" for x in names)


def _necessity_worker(n: int, start: int, stop):
    count = 0
    failures = []
    rc_names = _rc_exceptional_names(_EXCEPTIONALS_FOR_35142)
    for w in _perm_slice(n, start, stop):
        count += 1
        if any(contains_classical(w, p) for p in _FIVE_LETTER_PATTERNS):
            if (
                _witness_from(
                    w, ("FamilyA(",), _exact_sources(("C", "E", "Ei"))
                )
                is None
            ):
                failures.append(
                    {"n": n, "perm": format_perm(w), "check": "five-letter-hosts"}
                )
        if contains_classical(w, (3, 5, 1, 4, 2)):
            if (
                _witness_from(
                    w,
                    ("FamilyA(", "FamilyB("),
                    _exact_sources(_EXCEPTIONALS_FOR_35142),
                )
                is None
            ):
                failures.append(
                    {"n": n, "perm": format_perm(w), "check": "35142-hosts"}
                )
        if contains_classical(w, (4, 2, 5, 1, 3)):
            if (
                _witness_from(
                    w, ("FamilyA(", "FamilyB("), _exact_sources(rc_names)
                )
                is None
            ):
                failures.append(
                    {"n": n, "perm": format_perm(w), "check": "42513-hosts"}
                )
        if contains_classical(w, (3, 5, 1, 6, 2, 4)):
            if witness_nonlci(w) is None:
                failures.append(
                    {"n": n, "perm": format_perm(w), "check": "351624-hosts"}
                )
    return count, failures, None


def suite_necessity(max_n: int, jobs: int = 1, seed: int = 0) -> dict:
    total = 0
    failures = []
    exhaustive_to = min(max_n, 7)
    for n in range(1, exhaustive_to + 1):
        t, fails, _ = _merge(_fan_out(_necessity_worker, n, jobs))
        total += t
        failures.extend(fails)
    sampled = 0
    if max_n >= 8:
        rng = random.Random(seed)
        for n in range(8, max_n + 1):
            perms = [
                tuple(rng.sample(range(1, n + 1), n)) for _ in range(2000)
            ]
            for w in perms:
                sampled += 1
                if contains_classical(w, (3, 5, 1, 6, 2, 4)):
                    if witness_nonlci(w) is None:
                        failures.append(
                            {"n": n, "perm": format_perm(w), "check": "351624-hosts"}
                        )
    return {
        "suite": "necessity",
        "max_n": max_n,
        "total": total,
        "sampled": sampled,
        "failures": failures[:FAILURE_CAP],
    }


# ---------------------------------------------------------------------------
# associated-DBI construction


def _thm34_worker(n: int, start: int, stop):
    count = 0
    failures = []
    for w in _perm_slice(n, start, stop):
        if inclusion_level(w) != ADBI_ONLY:
            continue
        count += 1
        problems = []
        v = associated_dbi(w)
        if inclusion_level(v) != DBI:
            problems.append("image not DBI")
        want = {
            (b.p, b.q, b.rank)
            for b in essential_set(w)
            if b.stratum != "E_double_prime"
        }
        got = {(b.p, b.q, b.rank) for b in essential_set(v)}
        if want != got:
            problems.append("essential sets differ")
        if coxeter_length(v) - coxeter_length(w) != len(e_double_prime(w)):
            problems.append("length gap wrong")
        if problems:
            failures.append(
                {
                    "n": n,
                    "perm": format_perm(w),
                    "v": format_perm(v),
                    "problems": problems,
                }
            )
    return count, failures, None


def suite_thm34(max_n: int, jobs: int = 1, seed: int = 0) -> dict:
    total = 0
    failures = []
    for n in range(1, max_n + 1):
        t, fails, _ = _merge(_fan_out(_thm34_worker, n, jobs))
        total += t
        failures.extend(fails)
    spot = format_perm(associated_dbi((8, 1, 9, 3, 7, 2, 5, 6, 4)))
    if spot != "8,1,9,7,3,2,6,5,4":
        failures.append({"n": 9, "perm": "8,1,9,3,7,2,5,6,4", "spot": spot})
    return {
        "suite": "thm34",
        "max_n": max_n,
        "total": total,
        "failures": failures[:FAILURE_CAP],
    }


# ---------------------------------------------------------------------------
# ideal point sets


def worked_example_polynomials():
    """The five quadrics of the worked 6x6 example, written back in the
    z-variables of M_{215436}, together with the three variables the
    renaming silently kills (z[6,1], z[6,2], z[6,5])."""
    from .ideals import GenericMatrix
    from .polynomials import MultiPoly

    gm = GenericMatrix((2, 1, 5, 4, 3, 6))
    ring = gm.ring

    def z(p, q):
        return MultiPoly.var(ring, f"z[{p},{q}]")

    a, b, c, d = z(3, 1), z(3, 2), z(4, 1), z(4, 2)
    e = -z(6, 3)
    f, g, h = z(5, 1), z(5, 2), z(6, 4)
    return [
        z(6, 1),
        z(6, 2),
        z(6, 5),
        a * d - b * c,
        a * g - b * f,
        c * g - d * f,
        c * h - e * f,
        d * h - e * g,
    ]


def suite_ideal_pointsets(max_n: int = 5, jobs: int = 1, seed: int = 0) -> dict:
    n = min(max_n, 5)
    failures = []
    total = 0
    for w in enumerate_perms(n):
        if not is_lci_patterns(w):
            continue
        total += 1
        gi = kl_ideal_generators(identity(n), w)
        gj = minimal_generators(w)
        for q in (2, 3):
            if vanishing_points(gi, q, identity(n)) != vanishing_points(
                gj, q, identity(n)
            ):
                failures.append(
                    {"n": n, "perm": format_perm(w), "field": q}
                )
    v = (2, 1, 5, 4, 3, 6)
    full = kl_ideal_generators(v, (5, 2, 6, 3, 1, 4))
    handmade = worked_example_polynomials()
    example_checks = 0
    for q in (2, 3):
        example_checks += 1
        if vanishing_points(full, q, v) != vanishing_points(handmade, q, v):
            failures.append({"n": 6, "perm": "5,2,6,3,1,4", "field": q, "which": "worked-example"})
    return {
        "suite": "ideal-pointsets",
        "max_n": n,
        "total": total,
        "example_checks": example_checks,
        "failures": failures[:FAILURE_CAP],
    }


# ---------------------------------------------------------------------------
# local class oracle


def suite_local_class_oracle(max_n: int, jobs: int = 1, seed: int = 0) -> dict:
    failures = []
    total = 0
    coh_to = min(max_n, 6)
    k_to = min(max_n, 5)
    for theory, bound in (("cohomology", coh_to), ("K", k_to)):
        for n in range(1, bound + 1):
            table = specialized_classes(n, theory)
            for w in enumerate_perms(n):
                if not is_lci_patterns(w):
                    continue
                total += 1
                u = tuple(n + 1 - w[i] for i in range(n))
                if local_class_product(w, theory) != table[u]:
                    failures.append(
                        {
                            "n": n,
                            "perm": format_perm(w),
                            "theory": theory,
                        }
                    )
    return {
        "suite": "local-class-oracle",
        "max_n": max_n,
        "total": total,
        "failures": failures[:FAILURE_CAP],
    }


# ---------------------------------------------------------------------------
# counting


def _fib_slab(upto: int) -> list[int]:
    vals = []
    a, b = 1, 2
    for n in range(1, upto + 1):
        vals.append(a if n == 1 else b if n == 2 else vals[-1] + vals[-2])
    return vals


def suite_counting(max_n: int, jobs: int = 1, seed: int = 0) -> dict:
    """Slab counts against the Fibonacci recurrence for all n <= max_n;
    full class tallies only up to n = 7 (they need classify on every
    permutation, the slab check is three cheap pattern tests)."""
    failures = []
    counts = {}
    expect = _fib_slab(max_n)
    total = 0
    slab_counts = {}
    for n in range(1, max_n + 1):
        full = n <= 7
        tally = {
            "smooth": 0,
            "factorial": 0,
            "dbi": 0,
            "lci": 0,
            "slab": 0,
            "inclusion_DBI": 0,
            "inclusion_ADBI_ONLY": 0,
            "inclusion_NEITHER": 0,
        }
        for w in enumerate_perms(n):
            total += 1
            tally["slab"] += is_slab(w)
            if full:
                rep = classify(w)
                tally["smooth"] += rep.smooth
                tally["factorial"] += rep.factorial
                tally["dbi"] += rep.dbi
                tally["lci"] += rep.lci
                tally[f"inclusion_{inclusion_level(w)}"] += 1
        slab_counts[str(n)] = tally["slab"]
        if full:
            counts[str(n)] = tally
        if tally["slab"] != expect[n - 1]:
            failures.append(
                {"n": n, "slab": tally["slab"], "expected": expect[n - 1]}
            )
    return {
        "suite": "counting",
        "max_n": max_n,
        "total": total,
        "counts": counts,
        "slab_counts": slab_counts,
        "failures": failures[:FAILURE_CAP],
    }


# ---------------------------------------------------------------------------
# pattern discrepancy (the six-pattern set vs. its variant)


_BODY_LCI = catalogs.LCI_PATTERNS
_ABSTRACT_LCI = tuple(
    p if p != (3, 5, 1, 6, 2, 4) else (4, 2, 6, 1, 5, 3) for p in _BODY_LCI
)
_BODY_DBI = catalogs.DBI_PATTERNS
_ABSTRACT_DBI = tuple(
    p if p != (3, 5, 1, 6, 2, 4) else (4, 2, 6, 1, 5, 3) for p in _BODY_DBI
)


def _discrepancy_worker(n: int, start: int, stop):
    count = 0
    failures = []
    stats = {
        "lci_variant_divergent": 0,
        "dbi_variant_divergent": 0,
        "divergent_sample": [],
    }
    distinct = tuple(
        dict.fromkeys(_BODY_LCI + _ABSTRACT_LCI + _BODY_DBI + _ABSTRACT_DBI)
    )
    for w in _perm_slice(n, start, stop):
        count += 1
        level = inclusion_level(w)
        hit = {p: contains_classical(w, p) for p in distinct}
        body_lci = not any(hit[p] for p in _BODY_LCI)
        if body_lci != (level != NEITHER):
            failures.append(
                {"n": n, "perm": format_perm(w), "which": "lci-body"}
            )
        body_dbi = not any(hit[p] for p in _BODY_DBI)
        if body_dbi != (level == DBI):
            failures.append(
                {"n": n, "perm": format_perm(w), "which": "dbi-body"}
            )
        alt_lci = not any(hit[p] for p in _ABSTRACT_LCI)
        if alt_lci != (level != NEITHER):
            stats["lci_variant_divergent"] += 1
            if len(stats["divergent_sample"]) < 5:
                stats["divergent_sample"].append(format_perm(w))
        alt_dbi = not any(hit[p] for p in _ABSTRACT_DBI)
        if alt_dbi != (level == DBI):
            stats["dbi_variant_divergent"] += 1
    return count, failures, stats


def suite_pattern_discrepancy(max_n: int, jobs: int = 1, seed: int = 0) -> dict:
    total = 0
    failures = []
    variant = {
        "lci_variant_divergent": 0,
        "dbi_variant_divergent": 0,
        "divergent_sample": [],
    }
    per_n = {}
    for n in range(1, max_n + 1):
        t, fails, extras = _merge(_fan_out(_discrepancy_worker, n, jobs))
        total += t
        failures.extend(fails)
        here = {"lci_variant_divergent": 0, "dbi_variant_divergent": 0}
        for ex in extras:
            here["lci_variant_divergent"] += ex["lci_variant_divergent"]
            here["dbi_variant_divergent"] += ex["dbi_variant_divergent"]
            for s in ex["divergent_sample"]:
                if len(variant["divergent_sample"]) < 5:
                    variant["divergent_sample"].append(s)
        variant["lci_variant_divergent"] += here["lci_variant_divergent"]
        variant["dbi_variant_divergent"] += here["dbi_variant_divergent"]
        per_n[str(n)] = here
    verdict = (
        "six-pattern body set matches the diagram predicate; variant set "
        + (
            "diverges"
            if variant["lci_variant_divergent"] or variant["dbi_variant_divergent"]
            else "also matches"
        )
    )
    return {
        "suite": "pattern-discrepancy",
        "max_n": max_n,
        "total": total,
        "failures": failures[:FAILURE_CAP],
        "variant": variant,
        "per_n": per_n,
        "verdict": verdict,
    }


# ---------------------------------------------------------------------------


_DISPATCH = {
    "hierarchy": suite_hierarchy,
    "main-equivalence": suite_main_equivalence,
    "necessity": suite_necessity,
    "thm34": suite_thm34,
    "ideal-pointsets": suite_ideal_pointsets,
    "local-class-oracle": suite_local_class_oracle,
    "counting": suite_counting,
    "pattern-discrepancy": suite_pattern_discrepancy,
}


def run_suite(name: str, max_n: int, jobs: int = 1, seed: int = 0) -> dict:
    if name not in _DISPATCH:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    return _DISPATCH[name](max_n, jobs=jobs, seed=seed)
