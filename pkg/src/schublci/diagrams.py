"""Rothe diagrams, essential sets, the condition taxonomy, and the
reduction of an almost-defined-by-inclusions permutation to its associated
defined-by-inclusions permutation.

All coordinates are matrix convention: (p, q) means row p from the top,
column q from the left.  The permutation matrix has 1's at (w(j), j).
"""
from __future__ import annotations

from dataclasses import dataclass

from .permutations import (
    Perm,
    apply_transposition,
    coxeter_length,
    inverse,
    rank,
)

Box = tuple[int, int]

DBI = "DBI"
ADBI_ONLY = "ADBI_ONLY"
NEITHER = "NEITHER"


def rothe_diagram(w: Perm) -> frozenset[Box]:
    """D(w) = {(p,q) : w(q) < p and w^{-1}(p) > q}.

    #D(w) = C(n,2) - coxeter_length(w).
    """
    n = len(w)
    inv = inverse(w)
    return frozenset(
        (p, q)
        for q in range(1, n + 1)
        for p in range(w[q - 1] + 1, n + 1)
        if inv[p - 1] > q
    )


@dataclass(frozen=True)
class EssentialBox:
    p: int
    q: int
    rank: int
    conditions: frozenset[str]
    stratum: str  # E_rank0 | E_prime | E_double_prime

    @property
    def box(self) -> Box:
        return (self.p, self.q)


@dataclass(frozen=True)
class Region:
    index: int  # 1-based position in the increasing-rank order
    corner: EssentialBox
    boxes: frozenset[Box]
    rank: int
    wpred: int  # index of first other region with a box directly W of corner, 0 if none
    spred: int  # same, directly S


def _essential_boxes(w: Perm, diagram: frozenset[Box]) -> list[Box]:
    return sorted(
        (p, q)
        for (p, q) in diagram
        if (p, q + 1) not in diagram and (p - 1, q) not in diagram
    )


def _cond_B(w: Perm, p: int, q: int) -> bool:
    # no 1's NE: no k > q with w(k) < p
    return all(w[k - 1] >= p for k in range(q + 1, len(w) + 1))


def _conditions_at(
    w: Perm, diagram: frozenset[Box], ess: list[Box], p: int, q: int
) -> frozenset[str]:
    """Flags among {A,B,W,X,Y,Z} holding at the essential box (p,q)."""
    n = len(w)
    r = rank(w, p, q)
    flags = set()
    if r == 0:
        flags.add("A")  # no 1's SW  <=>  rank 0
    if _cond_B(w, p, q):
        flags.add("B")

    ess_set = set(ess)
    col_above = [p2 for (p2, q2) in ess if q2 == q and p2 < p]
    row_right = [q2 for (p2, q2) in ess if p2 == p and q2 > q]

    # W: nothing essential directly N; and either no diagram box directly W,
    # or that box sits S of a same-rank Condition-B essential box.
    if not col_above:
        if (p, q - 1) not in diagram:
            flags.add("W")
        elif any(
            (p2, q - 1) in ess_set
            and _cond_B(w, p2, q - 1)
            and rank(w, p2, q - 1) == r
            for p2 in range(1, p)
        ):
            flags.add("W")

    # X: a unique essential box directly N, with Condition B and rank r+1;
    # its diagram run [q', q] in its row must have (p, q'-1) in the diagram.
    if len(col_above) == 1:
        p2 = col_above[0]
        if _cond_B(w, p2, q) and rank(w, p2, q) == r + 1:
            qq = q
            while (p2, qq - 1) in diagram:
                qq -= 1
            if qq >= 2 and (p, qq - 1) in diagram:
                flags.add("X")

    # Y: mirror of W across the antidiagonal.
    if not row_right:
        if (p + 1, q) not in diagram:
            flags.add("Y")
        elif any(
            (p + 1, q2) in ess_set
            and _cond_B(w, p + 1, q2)
            and rank(w, p + 1, q2) == r
            for q2 in range(q + 1, n + 1)
        ):
            flags.add("Y")

    # Z: mirror of X.
    if len(row_right) == 1:
        q2 = row_right[0]
        if _cond_B(w, p, q2) and rank(w, p, q2) == r + 1:
            pp = p
            while (pp + 1, q2) in diagram:
                pp += 1
            if pp + 1 <= n and (pp + 1, q) in diagram:
                flags.add("Z")

    return frozenset(flags)


def _stratum(rank_: int, flags: frozenset[str]) -> str:
    if rank_ == 0:
        return "E_rank0"
    if "B" in flags:
        return "E_prime"
    return "E_double_prime"


def essential_set(w: Perm) -> list[EssentialBox]:
    """E(w): NE corners of D(w), with rank/condition/stratum annotations,
    sorted lexicographically by (p, q).
    """
    diagram = rothe_diagram(w)
    ess = _essential_boxes(w, diagram)
    out = []
    for (p, q) in ess:
        flags = _conditions_at(w, diagram, ess, p, q)
        r = rank(w, p, q)
        out.append(EssentialBox(p, q, r, flags, _stratum(r, flags)))
    return out


def box_conditions(w: Perm, box: Box) -> frozenset[str]:
    diagram = rothe_diagram(w)
    ess = _essential_boxes(w, diagram)
    if tuple(box) not in ess:
        raise ValueError(f"box {box} is not in the essential set of {w}")
    return _conditions_at(w, diagram, ess, box[0], box[1])


def _box_ok_adbi(b: EssentialBox) -> bool:
    c = b.conditions
    return (
        "A" in c
        or "B" in c
        or (("W" in c or "X" in c) and ("Y" in c or "Z" in c))
    )


def inclusion_level(w: Perm) -> str:
    """DBI / ADBI_ONLY / NEITHER.

    Defined by inclusions iff every essential box has
    q - r_w(p,q) = min(p-1, q); this is equivalent to Condition A or B
    holding everywhere (tested, not assumed).
    """
    ess = essential_set(w)
    if all(b.q - b.rank == min(b.p - 1, b.q) for b in ess):
        return DBI
    if all(_box_ok_adbi(b) for b in ess):
        return ADBI_ONLY
    return NEITHER


def e_prime(w: Perm) -> list[EssentialBox]:
    return [b for b in essential_set(w) if b.stratum == "E_prime"]


def e_double_prime(w: Perm) -> list[EssentialBox]:
    return [b for b in essential_set(w) if b.stratum == "E_double_prime"]


def region_partition(w: Perm) -> list[Region]:
    """Partition of the positive-rank diagram boxes into rectangles, one per
    E'(w) corner, corners ordered by increasing rank (ties lexicographic).

    A box joins the first region whose corner lies weakly NE of it.
    """
    level = inclusion_level(w)
    if level == NEITHER:
        raise ValueError(f"region partition undefined: {w} is NEITHER")
    diagram = rothe_diagram(w)
    corners = sorted(e_prime(w), key=lambda b: (b.rank, b.p, b.q))
    assigned: dict[int, set[Box]] = {m: set() for m in range(len(corners))}
    for (x, y) in diagram:
        if rank(w, x, y) == 0:
            continue
        for m, c in enumerate(corners):
            if c.p <= x and c.q >= y:
                assigned[m].add((x, y))
                break
        else:
            # every positive-rank box of a DBI permutation has a corner
            # weakly NE; stray boxes are possible (and fine) otherwise
            if level == DBI:
                raise RuntimeError(
                    f"positive-rank box {(x, y)} of DBI {w} has no region"
                )
    regions = []
    for m, c in enumerate(corners):
        boxes = frozenset(assigned[m])
        wpred = spred = 0
        for m2 in range(len(corners)):
            if m2 == m:
                continue
            if wpred == 0 and any(
                x == c.p and y < c.q for (x, y) in assigned[m2]
            ):
                wpred = m2 + 1
            if spred == 0 and any(
                y == c.q and x > c.p for (x, y) in assigned[m2]
            ):
                spred = m2 + 1
        regions.append(Region(m + 1, c, boxes, c.rank, wpred, spred))
    return regions


def _box_type(b: EssentialBox) -> str:
    """Type (WY/WZ/XY/XZ) of an E'' box of an ADBI permutation."""
    c = b.conditions
    first = "W" if "W" in c else ("X" if "X" in c else None)
    second = "Y" if "Y" in c else ("Z" if "Z" in c else None)
    if first is None or second is None:
        raise ValueError(
            f"E'' box ({b.p},{b.q}) has no type: conditions {set(c)}"
        )
    return first + second


def _x_run_start(w: Perm, diagram: frozenset[Box], b: EssentialBox) -> int:
    """The q' of Condition X at b: start of the diagram run, in the row of
    the unique essential box directly N of b, ending at b's column."""
    ess = _essential_boxes(w, diagram)
    (p2,) = [pp for (pp, qq) in ess if qq == b.q and pp < b.p]
    qq = b.q
    while (p2, qq - 1) in diagram:
        qq -= 1
    return qq


def eliminate_box(w: Perm, box: Box) -> Perm:
    """One elimination step: remove the E''(w) box from the essential set by
    multiplying with the transposition of its type, checking on the way out
    that the step behaved (length +1, essential set shrank by exactly the
    box, ranks preserved).
    """
    ess = {b.box: b for b in essential_set(w)}
    if box not in ess or ess[box].stratum != "E_double_prime":
        raise ValueError(f"{box} is not an E'' box of {w}")
    b = ess[box]
    typ = _box_type(b)
    diagram = rothe_diagram(w)
    inv = inverse(w)
    p, q = b.p, b.q
    if typ == "WY":
        w2 = apply_transposition(w, q, inv[p - 1])
    elif typ == "WZ":
        w2 = apply_transposition(w, q, q + 1)
    elif typ == "XY":
        qx = _x_run_start(w, diagram, b)
        w2 = apply_transposition(w, qx - 1, inv[p - 1])
    else:  # XZ
        qx = _x_run_start(w, diagram, b)
        w2 = apply_transposition(w, qx - 1, q + 1)

    # postconditions; these guard the construction against convention slips
    if coxeter_length(w2) != coxeter_length(w) + 1:
        raise RuntimeError(f"elimination of {box} from {w}: length not +1")
    old = {(e.p, e.q): e.rank for e in essential_set(w)}
    new = {(e.p, e.q): e.rank for e in essential_set(w2)}
    del old[box]
    if old != new:
        raise RuntimeError(
            f"elimination of {box} from {w}: essential set moved ({old} vs {new})"
        )
    return w2


def associated_dbi(w: Perm) -> Perm:
    """The unique defined-by-inclusions v with E(v) = E(w) \\ E''(w) and the
    same ranks there; eliminates E'' boxes in lexicographic order (the
    result is order-independent, which is tested separately).
    """
    level = inclusion_level(w)
    if level == NEITHER:
        raise ValueError(f"associated_dbi undefined: {w} is NEITHER")
    cur = w
    while True:
        e2 = e_double_prime(cur)
        if not e2:
            return cur
        cur = eliminate_box(cur, e2[0].box)
