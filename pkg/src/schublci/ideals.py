"""Generic matrices, their minors, and the determinantal generator sets
attached to a pair of permutations.

The generic matrix M_v has a constant 1 at (v(i), i), an independent
variable z[p,q] at every box of D(v), and 0 elsewhere; its variable
count is C(n,2) - l(v).  Everything downstream (full generator
enumerations, the minimal sets, the finite-field vanishing oracle)
works with minors of some M_v expanded exactly over the integers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .diagrams import (
    DBI,
    NEITHER,
    associated_dbi,
    e_double_prime,
    inclusion_level,
    region_partition,
    rothe_diagram,
)
from .permutations import Perm, as_perm, coxeter_length, format_perm, identity, rank
from .polynomials import MultiPoly

Box = tuple[int, int]


def _zname(p: int, q: int) -> str:
    return f"z[{p},{q}]"


@dataclass(frozen=True)
class MinorSpec:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise ValueError(f"ragged minor spec {self.rows} / {self.cols}")
        if tuple(sorted(self.rows)) != self.rows or tuple(sorted(self.cols)) != self.cols:
            raise ValueError("minor spec indices must be sorted")


class GenericMatrix:
    """M_v plus a shared memo for its minor expansions."""

    def __init__(self, v: Perm):
        self.v = as_perm(v)
        self.n = len(self.v)
        self.diagram = rothe_diagram(self.v)
        self.variables = tuple(sorted(self.diagram))
        self.ring = tuple(_zname(p, q) for (p, q) in self.variables)
        self._ones = {(self.v[i], i + 1) for i in range(self.n)}
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], MultiPoly] = {}

    def entry_kind(self, p: int, q: int):
        """("one", None) / ("var", (p,q)) / ("zero", None)."""
        if (p, q) in self._ones:
            return ("one", None)
        if (p, q) in self.diagram:
            return ("var", (p, q))
        return ("zero", None)

    def entry_poly(self, p: int, q: int) -> MultiPoly:
        kind, _ = self.entry_kind(p, q)
        if kind == "one":
            return MultiPoly.const(self.ring, 1)
        if kind == "var":
            return MultiPoly.var(self.ring, _zname(p, q))
        return MultiPoly.zero(self.ring)

    def minor_poly(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> MultiPoly:
        """Exact determinant of the (rows, cols) submatrix, cofactor
        expansion along the first row, memoized on the index pair."""
        key = (rows, cols)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not rows:
            out = MultiPoly.const(self.ring, 1)
        else:
            out = MultiPoly.zero(self.ring)
            p = rows[0]
            rest = rows[1:]
            for j, q in enumerate(cols):
                kind, var = self.entry_kind(p, q)
                if kind == "zero":
                    continue
                sub = self.minor_poly(rest, cols[:j] + cols[j + 1 :])
                if sub.is_zero():
                    continue
                term = sub if kind == "one" else sub * MultiPoly.var(
                    self.ring, _zname(p, q)
                )
                out = out + term if j % 2 == 0 else out - term
        self._memo[key] = out
        return out

    def to_json(self) -> dict:
        grid = []
        for p in range(1, self.n + 1):
            row = []
            for q in range(1, self.n + 1):
                kind, var = self.entry_kind(p, q)
                row.append(
                    "1" if kind == "one" else ("0" if kind == "zero" else _zname(*var))
                )
            grid.append(row)
        return {
            "v": format_perm(self.v),
            "entries": grid,
            "variables": [list(b) for b in self.variables],
        }


def generic_matrix(v) -> GenericMatrix:
    return GenericMatrix(v)


# ---------------------------------------------------------------------------
# weights


def _minor_weight(n: int, spec: MinorSpec) -> tuple[int, ...]:
    """sum_{q in cols} a_q - sum_{p in rows} a_p, as coefficients of
    a_1..a_n."""
    c = [0] * n
    for q in spec.cols:
        c[q - 1] += 1
    for p in spec.rows:
        c[p - 1] -= 1
    return tuple(c)


def weight_zspec(weight: tuple[int, ...]) -> int:
    """Specialize a_i -> -i: the integer grading with deg z[p,q] = p-q."""
    return -sum((i + 1) * c for i, c in enumerate(weight))


def minor(v, spec: MinorSpec) -> tuple[MultiPoly, tuple[int, ...]]:
    """Expanded minor of M_v plus its weight vector.

    At v = id the integer grading is enforced: a minor whose degree
    specialization is negative must vanish, and one of degree zero must
    be constant -1, 0 or 1.  (Neither holds for general v, where
    constant 1 entries sit off the diagonal.)
    """
    gm = v if isinstance(v, GenericMatrix) else GenericMatrix(v)
    n = gm.n
    if any(not (1 <= i <= n) for i in spec.rows + spec.cols):
        raise ValueError(f"minor spec {spec} out of range for n={n}")
    poly = gm.minor_poly(spec.rows, spec.cols)
    weight = _minor_weight(n, spec)
    if gm.v == identity(n):
        d = weight_zspec(weight)
        if d < 0 and not poly.is_zero():
            raise RuntimeError(f"negative-degree minor {spec} is nonzero")
        if d == 0 and poly.constant_value() not in (-1, 0, 1):
            raise RuntimeError(f"degree-zero minor {spec} not in {{-1,0,1}}")
    return poly, weight


# ---------------------------------------------------------------------------
# generator sets


@dataclass(frozen=True)
class GenRecord:
    spec: MinorSpec
    poly: MultiPoly | None
    weight: tuple[int, ...]
    #: ("essential", (p,q), r) | ("box", (x,y), r) | ("e2prime", (p,q), r)
    origin: tuple

    def to_json(self) -> dict:
        return {
            "rows": list(self.spec.rows),
            "cols": list(self.spec.cols),
            "poly": str(self.poly) if self.poly is not None else None,
            "weight": {f"a{i + 1}": c for i, c in enumerate(self.weight)},
        }


@dataclass
class GeneratorSet:
    v: Perm
    provenance: str  # full_I | reduced_Iprime | minimal_J
    records: list[GenRecord] = field(default_factory=list)

    def specs(self) -> list[MinorSpec]:
        return [r.spec for r in self.records]

    def __len__(self):
        return len(self.records)

    def to_json(self) -> dict:
        return {
            "v": format_perm(self.v),
            "generators": [r.to_json() for r in self.records],
            "provenance": self.provenance,
        }


def _box_specs(n: int, p: int, q: int, r: int):
    """All size-(r+1) minors with rows in [p,n], cols in [1,q]."""
    for rows in itertools.combinations(range(p, n + 1), r + 1):
        for cols in itertools.combinations(range(1, q + 1), r + 1):
            yield MinorSpec(rows, cols)


def full_box_ideal(v, p: int, q: int, r: int) -> GeneratorSet:
    """Every (r+1)-minor of the SW corner submatrix at (p, q)."""
    gm = v if isinstance(v, GenericMatrix) else GenericMatrix(v)
    out = GeneratorSet(gm.v, "full_I")
    for spec in _box_specs(gm.n, p, q, r):
        poly, weight = minor(gm, spec)
        out.records.append(GenRecord(spec, poly, weight, ("essential", (p, q), r)))
    return out


def restricted_box_ideal(v, p: int, q: int, r: int) -> GeneratorSet:
    """The thinned generating family for the same corner: rows
    [p, p+r-1] + {x+r} for x in [p, n-r], cols {y-r} + [q-r+1, q] for
    y in [1+r, q]."""
    gm = v if isinstance(v, GenericMatrix) else GenericMatrix(v)
    out = GeneratorSet(gm.v, "reduced_Iprime")
    for x in range(p, gm.n - r + 1):
        for y in range(1 + r, q + 1):
            rows = tuple(range(p, p + r)) + (x + r,)
            cols = (y - r,) + tuple(range(q - r + 1, q + 1))
            spec = MinorSpec(rows, cols)
            poly, weight = minor(gm, spec)
            out.records.append(
                GenRecord(spec, poly, weight, ("essential", (p, q), r))
            )
    return out


def kl_ideal_generators(v, w) -> GeneratorSet:
    """Defining generators at the base point v: for every essential box
    (p,q) of w with rank r, all (r+1)-minors on rows >= p, cols <= q.
    Specs shared between boxes appear once."""
    gm = v if isinstance(v, GenericMatrix) else GenericMatrix(v)
    w = as_perm(w)
    if len(w) != gm.n:
        raise ValueError("size mismatch between v and w")
    out = GeneratorSet(gm.v, "full_I")
    seen: set[MinorSpec] = set()
    from .diagrams import essential_set

    for b in essential_set(w):
        for spec in _box_specs(gm.n, b.p, b.q, b.rank):
            if spec in seen:
                continue
            seen.add(spec)
            poly, weight = minor(gm, spec)
            out.records.append(
                GenRecord(spec, poly, weight, ("essential", (b.p, b.q), b.rank))
            )
    return out


def minimal_generators(w, expand: bool = True) -> GeneratorSet:
    """One generator per box: minors of M_id selected by the region
    partition of the associated fully-inclusion-defined permutation v,
    plus one larger minor per E'' box of w itself.

    Total count is always #D(v) + #E''(w) = C(n,2) - l(w).  With
    expand=False the polynomial expansion is skipped (poly=None), which
    makes exhaustive count checks cheap.
    """
    w = as_perm(w)
    if inclusion_level(w) == NEITHER:
        raise ValueError(f"{w} admits no such generating set")
    v = associated_dbi(w)
    n = len(w)
    gm = GenericMatrix(identity(n))
    regions = region_partition(v)
    by_box: dict[Box, tuple[int, int, int]] = {}
    for reg in regions:
        for bx in reg.boxes:
            by_box[bx] = (reg.corner.p, reg.corner.q, reg.rank)

    out = GeneratorSet(gm.v, "minimal_J")
    for (x, y) in sorted(rothe_diagram(v)):
        r = rank(v, x, y)
        if r == 0:
            spec = MinorSpec((x,), (y,))
        else:
            pm, qm, rm = by_box[(x, y)]
            rows = tuple(range(pm, pm + rm)) + (x + rm,)
            cols = (y - rm,) + tuple(range(qm - rm + 1, qm + 1))
            spec = MinorSpec(rows, cols)
            r = rm
        poly, weight = (
            minor(gm, spec) if expand else (None, _minor_weight(n, spec))
        )
        out.records.append(GenRecord(spec, poly, weight, ("box", (x, y), r)))

    for b in e_double_prime(w):
        r = b.rank
        spec = MinorSpec(
            tuple(range(b.p, b.p + r + 1)), tuple(range(b.q - r, b.q + 1))
        )
        poly, weight = (
            minor(gm, spec) if expand else (None, _minor_weight(n, spec))
        )
        out.records.append(
            GenRecord(spec, poly, weight, ("e2prime", (b.p, b.q), r))
        )
    return out


class BudgetError(RuntimeError):
    """An enumeration or oracle exceeds its configured budget."""


POINT_BUDGET = 100_000_000


def _as_poly_list(gens) -> list[MultiPoly]:
    if isinstance(gens, GeneratorSet):
        polys = []
        for rec in gens.records:
            if rec.poly is None:
                raise ValueError("generator set was built with expand=False")
            polys.append(rec.poly)
        return polys
    return list(gens)


def vanishing_points(gens, field_order: int, v, chunk: int = 1 << 16) -> set:
    """Common zeros of the generators over the prime field F_q, as
    tuples of values assigned to the variables of M_v in sorted box
    order.  Enumerates all q^#vars assignments (chunked, with early
    discard), so the budget guard q^#vars <= 10^8 applies.
    """
    import numpy as np

    gm = v if isinstance(v, GenericMatrix) else GenericMatrix(v)
    q = field_order
    nv = len(gm.variables)
    total = q**nv
    if total > POINT_BUDGET:
        raise BudgetError(
            f"{q}^{nv} = {total} assignments exceeds the {POINT_BUDGET} budget"
        )
    ring = gm.ring
    compiled = []
    for poly in _as_poly_list(gens):
        if poly.is_zero():
            continue
        cols = {}
        terms = []
        for exp, c in poly.terms.items():
            sel = []
            for name, e in zip(poly.vars, exp):
                if e:
                    if e < 0:
                        raise ValueError("negative exponent in generator")
                    sel.extend([ring.index(name)] * e)
            terms.append((tuple(sel), c % q))
        compiled.append(terms)
    # cheap generators first: they discard points fastest
    compiled.sort(key=len)

    out = set()
    radix = [q ** (nv - 1 - j) for j in range(nv)]
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        pts = np.empty((idx.size, nv), dtype=np.int64)
        for j in range(nv):
            pts[:, j] = (idx // radix[j]) % q
        alive = pts
        for terms in compiled:
            acc = np.zeros(alive.shape[0], dtype=np.int64)
            for sel, c in terms:
                if not c:
                    continue
                val = np.full(alive.shape[0], c, dtype=np.int64)
                for col in sel:
                    val = (val * alive[:, col]) % q
                acc = (acc + val) % q
            alive = alive[acc == 0]
            if alive.shape[0] == 0:
                break
        out.update(map(tuple, alive.tolist()))
    return out


def vanishing_equal(g1, g2, field_order: int, v) -> bool:
    return vanishing_points(g1, field_order, v) == vanishing_points(
        g2, field_order, v
    )


def generator_degrees(gens: GeneratorSet) -> list[tuple[int, ...]]:
    """Weights of a minimal generator set, recomputed from the closed
    forms and asserted against each minor's own weight vector.

    Diagram box (x,y) lying in a rank-r region: a_{y-r} - a_{x+r}.
    E'' box (p,q) of rank r: sum_{i=0..r} (a_{q-i} - a_{p+i}).
    """
    n = len(gens.v)
    out = []
    for rec in gens.records:
        kind, box, r = rec.origin
        c = [0] * n
        if kind == "box":
            x, y = box
            c[y - r - 1] += 1
            c[x + r - 1] -= 1
        elif kind == "e2prime":
            p, q = box
            for i in range(r + 1):
                c[q - i - 1] += 1
                c[p + i - 1] -= 1
        else:
            raise ValueError("generator_degrees expects a minimal set")
        if tuple(c) != rec.weight:
            raise RuntimeError(
                f"degree mismatch at {rec.origin}: {tuple(c)} vs {rec.weight}"
            )
        out.append(tuple(c))
    return out
