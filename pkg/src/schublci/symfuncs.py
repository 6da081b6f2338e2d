"""Symmetric polynomials, rectangle Schur determinants, the map sending
matrix variables to complete homogeneous slices, and module presentations
of the cohomology of the varieties classified here.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .diagrams import (
    NEITHER,
    associated_dbi,
    e_double_prime,
    essential_set,
    inclusion_level,
)
from .ideals import MinorSpec
from .permutations import Perm, as_perm
from .polynomials import MultiPoly


def _xring(m: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, m + 1))


@lru_cache(maxsize=None)
def _h(k: int, m: int) -> MultiPoly:
    """h_k(x_1..x_m), by the one-variable-at-a-time recurrence."""
    ring = _xring(m)
    if k < 0:
        return MultiPoly.zero(ring)
    if k == 0:
        return MultiPoly.const(ring, 1)
    if m == 0:
        return MultiPoly.zero(ring)
    xm = MultiPoly.var(ring, f"x{m}")
    return _h(k, m - 1).embed(ring) + xm * _h(k - 1, m)


@lru_cache(maxsize=None)
def _e(k: int, m: int) -> MultiPoly:
    ring = _xring(m)
    if k < 0 or k > m:
        return MultiPoly.zero(ring)
    if k == 0:
        return MultiPoly.const(ring, 1)
    xm = MultiPoly.var(ring, f"x{m}")
    return _e(k, m - 1).embed(ring) + xm * _e(k - 1, m - 1).embed(ring)


def sym_func(kind: str, k: int, m: int) -> MultiPoly:
    """h_k or e_k in x_1..x_m."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if kind == "h":
        return _h(k, m)
    if kind == "e":
        return _e(k, m)
    raise ValueError(f"unknown kind {kind!r}")


def e_in_vars(k: int, lo: int, hi: int, n: int) -> MultiPoly:
    """e_k(x_lo, ..., x_hi) inside the ring x_1..x_n."""
    ring = _xring(n)
    if k < 0 or k > hi - lo + 1:
        return MultiPoly.zero(ring)
    if k == 0:
        return MultiPoly.const(ring, 1)
    out = MultiPoly.zero(ring)
    for combo in itertools.combinations(range(lo, hi + 1), k):
        term = MultiPoly.const(ring, 1)
        for i in combo:
            term = term * MultiPoly.var(ring, f"x{i}")
        out = out + term
    return out


def _det(entries: list[list[MultiPoly]], ring) -> MultiPoly:
    """Cofactor determinant of a small matrix of polynomials."""
    size = len(entries)
    if size == 0:
        return MultiPoly.const(ring, 1)
    if size == 1:
        return entries[0][0]
    out = MultiPoly.zero(ring)
    for j in range(size):
        top = entries[0][j]
        if top.is_zero():
            continue
        sub = [row[:j] + row[j + 1 :] for row in entries[1:]]
        term = top * _det(sub, ring)
        out = out + term if j % 2 == 0 else out - term
    return out


def schur_rect(a: int, rows: int, m: int) -> MultiPoly:
    """Schur polynomial of the rows x a rectangle in x_1..x_m, as the
    determinant det(h_{a-i+j})_{1<=i,j<=rows}."""
    ring = _xring(m)
    if a == 0 or rows == 0:
        return MultiPoly.const(ring, 1)
    entries = [
        [_h(a - i + j, m).embed(ring) for j in range(1, rows + 1)]
        for i in range(1, rows + 1)
    ]
    return _det(entries, ring)


def phi_image(spec: MinorSpec) -> MultiPoly:
    """Image of the minor d_{A,B} of the unitriangular generic matrix
    under z[a,b] -> h_{a-b}(x_1..x_b): the determinant of the matrix
    with entry h_{A_i - B_j}(x_1..x_{B_j})."""
    if not spec.rows:
        return MultiPoly.const((), 1)
    m = max(spec.cols)
    ring = _xring(m)
    entries = [
        [_h(a - b, b).embed(ring) for b in spec.cols] for a in spec.rows
    ]
    return _det(entries, ring)


# ---------------------------------------------------------------------------
# cohomology presentation


def cohomology_presentation(w) -> list[tuple[MultiPoly, tuple]]:
    """Relations presenting H^*(X_w) over H^*(G/B), one list entry per
    (generator, origin) with origins tagged by essential box:

    * rank-0 box (p,q) of v: e_k(x_{q+1}..x_n), k = p-q .. n-q;
    * positive-rank box (p,q) of v: e_k(x_1..x_q), k = q-p+2 .. n-q;
    * E'' box (p,q) of w, rank r: s_{(p-q+r)^{r+1}}(x_1..x_q).
    """
    w = as_perm(w)
    if inclusion_level(w) == NEITHER:
        raise ValueError(f"{w} is not in the classified lci family")
    v = associated_dbi(w)
    n = len(w)
    ring = _xring(n)
    out: list[tuple[MultiPoly, tuple]] = []
    for b in essential_set(v):
        if b.rank == 0:
            for k in range(b.p - b.q, n - b.q + 1):
                out.append(
                    (e_in_vars(k, b.q + 1, n, n), ("rank0", (b.p, b.q), k))
                )
        else:
            for k in range(b.q - b.p + 2, n - b.q + 1):
                out.append(
                    (e_in_vars(k, 1, b.q, n), ("eprime", (b.p, b.q), k))
                )
    for b in e_double_prime(w):
        gen = schur_rect(b.p - b.q + b.rank, b.rank + 1, b.q).embed(ring)
        out.append((gen, ("e2prime", (b.p, b.q), b.rank)))
    return out
