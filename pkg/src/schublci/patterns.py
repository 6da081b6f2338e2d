"""Pattern containment machinery.

Three flavours live here:

* classical patterns -- occurrences of a small permutation inside a big
  one, as tuples of 1-based positions;
* marked mesh patterns -- a classical pattern together with counting
  constraints on unions of stretched grid cells (a shading is the
  special case max=0, a marking the case min>=1);
* interval patterns -- a pair u <= v embedding into a host w subject to
  a length-difference condition.

Grid cells use Cartesian coordinates: cell (i, j) of a pattern of size
m sits between pattern positions i and i+1 (horizontally) and pattern
values j and j+1 (vertically), with 0 and m+1 meaning the outer walls.
"""
from __future__ import annotations

from dataclasses import dataclass

from .permutations import (
    Perm,
    as_perm,
    bruhat_leq,
    coxeter_length,
    enumerate_perms,
)


# ---------------------------------------------------------------------------
# classical containment


def embeddings_classical(w: Perm, patt: Perm):
    """Yield occurrences of patt in w as 1-based position tuples, in
    lexicographic order."""
    w = as_perm(w)
    patt = as_perm(patt)
    n, m = len(w), len(patt)
    if m > n:
        return
    # order targets: patt[k] must sit in the same relative order as the
    # chosen values.  Backtracking with pruning on the partial profile.
    stack: list[tuple[int, ...]] = [()]
    while stack:
        chosen = stack.pop()
        k = len(chosen)
        if k == m:
            yield chosen
            continue
        start = chosen[-1] + 1 if chosen else 1
        # push in reverse so the smallest next position pops first
        candidates = []
        for pos in range(start, n - (m - k) + 2):
            val = w[pos - 1]
            ok = True
            for j in range(k):
                below = patt[j] < patt[k]
                if below != (w[chosen[j] - 1] < val):
                    ok = False
                    break
            if ok:
                candidates.append(chosen + (pos,))
        stack.extend(reversed(candidates))


def contains_classical(w: Perm, patt: Perm) -> bool:
    return next(embeddings_classical(w, patt), None) is not None


def avoids_all(w: Perm, patterns) -> bool:
    return all(not contains_classical(w, p) for p in patterns)


# ---------------------------------------------------------------------------
# marked mesh patterns


@dataclass(frozen=True)
class CellConstraint:
    """Count of host points falling in the union of `cells` must lie in
    [min_count, max_count] (max_count None = unbounded)."""

    cells: frozenset[tuple[int, int]]
    min_count: int = 0
    max_count: int | None = None


@dataclass(frozen=True)
class MarkedMeshPattern:
    pattern: Perm
    constraints: tuple[CellConstraint, ...]

    def __post_init__(self):
        m = len(self.pattern)
        for con in self.constraints:
            for (i, j) in con.cells:
                if not (0 <= i <= m and 0 <= j <= m):
                    raise ValueError(f"cell {(i, j)} outside grid of size {m}")

    def to_json(self) -> dict:
        out = {"perm": list(self.pattern), "constraints": []}
        for con in self.constraints:
            entry: dict = {"cells": sorted(map(list, con.cells))}
            if con.min_count:
                entry["min"] = con.min_count
            if con.max_count is not None:
                entry["max"] = con.max_count
            out["constraints"].append(entry)
        return out

    @staticmethod
    def from_json(data: dict) -> "MarkedMeshPattern":
        perm = as_perm(data["perm"])
        cons = []
        for entry in data.get("constraints", []):
            cons.append(
                CellConstraint(
                    cells=frozenset(tuple(c) for c in entry["cells"]),
                    min_count=entry.get("min", 0),
                    max_count=entry.get("max"),
                )
            )
        return MarkedMeshPattern(perm, tuple(cons))


def shaded(pattern, cells) -> MarkedMeshPattern:
    """Plain mesh pattern: every listed cell must be empty."""
    return MarkedMeshPattern(
        as_perm(pattern),
        (CellConstraint(frozenset(cells), 0, 0),),
    )


def marked(pattern, cells, at_least=1) -> MarkedMeshPattern:
    return MarkedMeshPattern(
        as_perm(pattern),
        (CellConstraint(frozenset(cells), at_least, None),),
    )


def _constraints_hold(w: Perm, mmp: MarkedMeshPattern, emb: tuple[int, ...]) -> bool:
    n = len(w)
    m = len(mmp.pattern)
    alpha = (0,) + emb + (n + 1,)
    beta = (0,) + tuple(sorted(w[i - 1] for i in emb)) + (n + 1,)
    emb_set = set(emb)
    for con in mmp.constraints:
        count = 0
        for con_i, con_j in con.cells:
            lo_x, hi_x = alpha[con_i], alpha[con_i + 1]
            lo_y, hi_y = beta[con_j], beta[con_j + 1]
            for k in range(lo_x + 1, hi_x):
                if k in emb_set:
                    continue
                if lo_y < w[k - 1] < hi_y:
                    count += 1
        if count < con.min_count:
            return False
        if con.max_count is not None and count > con.max_count:
            return False
    return True


def mesh_embeddings(w: Perm, mmp: MarkedMeshPattern):
    """Yield constraint-satisfying occurrences, lexicographically."""
    w = as_perm(w)
    for emb in embeddings_classical(w, mmp.pattern):
        if _constraints_hold(w, mmp, emb):
            yield emb


def contains_marked_mesh(w: Perm, mmp: MarkedMeshPattern):
    """First satisfying occurrence as a position tuple, or None."""
    return next(mesh_embeddings(as_perm(w), mmp), None)


# ---------------------------------------------------------------------------
# interval patterns


@dataclass(frozen=True)
class IntervalPattern:
    u: Perm
    v: Perm

    def __post_init__(self):
        if len(self.u) != len(self.v):
            raise ValueError("interval endpoints must have equal size")
        if not bruhat_leq(self.u, self.v):
            raise ValueError("lower endpoint not below upper endpoint")

    @property
    def size(self) -> int:
        return len(self.v)

    @property
    def length_drop(self) -> int:
        return coxeter_length(self.v) - coxeter_length(self.u)

    def to_json(self) -> dict:
        from .permutations import format_perm

        return {"u": format_perm(self.u), "v": format_perm(self.v)}

    @staticmethod
    def from_json(data: dict) -> "IntervalPattern":
        from .permutations import parse_perm

        def load(x):
            return parse_perm(x) if isinstance(x, str) else as_perm(x)

        return IntervalPattern(load(data["u"]), load(data["v"]))


def _rearranged(w: Perm, positions: tuple[int, ...], target: Perm) -> Perm:
    """Replace w's values at `positions` by the same value set reordered
    so the subsequence is order-isomorphic to `target`."""
    vals = sorted(w[i - 1] for i in positions)
    out = list(w)
    for k, pos in enumerate(positions):
        out[pos - 1] = vals[target[k] - 1]
    return tuple(out)


def interval_embeds(w: Perm, ip: IntervalPattern):
    """First embedding of the interval pattern in w, or None.

    An occurrence of v at `positions` counts when flattening w there
    down to u drops the Coxeter length by exactly ip.length_drop.
    """
    w = as_perm(w)
    lw = coxeter_length(w)
    drop = ip.length_drop
    for emb in embeddings_classical(w, ip.v):
        x = _rearranged(w, emb, ip.u)
        if lw - coxeter_length(x) == drop:
            return emb
    return None


def bruhat_interval(u: Perm, v: Perm):
    """Elements and covering relations of [u, v], by brute enumeration.

    Returns (elements, covers): elements sorted lexicographically,
    covers as pairs (a, b) with a covered by b.
    """
    u, v = as_perm(u), as_perm(v)
    if len(u) != len(v):
        raise ValueError("size mismatch")
    if not bruhat_leq(u, v):
        return [], []
    elems = [
        z
        for z in enumerate_perms(len(v))
        if bruhat_leq(u, z) and bruhat_leq(z, v)
    ]
    covers = []
    for a in elems:
        la = coxeter_length(a)
        for b in elems:
            if coxeter_length(b) == la + 1 and bruhat_leq(a, b):
                covers.append((a, b))
    return elems, covers
