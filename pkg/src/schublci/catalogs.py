"""Pattern catalogs for the singularity classes, plus interval-pattern
families certifying the failures.

All mesh cells are Cartesian; see patterns.py.
"""
from __future__ import annotations

from dataclasses import dataclass

from .patterns import (
    CellConstraint,
    IntervalPattern,
    MarkedMeshPattern,
    marked,
    shaded,
)
from .permutations import Perm, as_perm


# ---------------------------------------------------------------------------
# classical catalogs

SMOOTH_PATTERNS: tuple[Perm, ...] = ((3, 4, 1, 2), (4, 2, 3, 1))

DBI_PATTERNS: tuple[Perm, ...] = (
    (4, 2, 3, 1),
    (3, 5, 1, 4, 2),
    (4, 2, 5, 1, 3),
    (3, 5, 1, 6, 2, 4),
)

LCI_PATTERNS: tuple[Perm, ...] = (
    (5, 3, 2, 4, 1),
    (5, 2, 3, 4, 1),
    (5, 2, 4, 3, 1),
    (3, 5, 1, 4, 2),
    (4, 2, 5, 1, 3),
    (3, 5, 1, 6, 2, 4),
)

# defining ideal of the full matrix variety is a complete intersection
MATRIX_LCI_PATTERNS: tuple[Perm, ...] = (
    (1, 3, 4, 2),
    (1, 4, 3, 2),
    (1, 4, 2, 3),
    (3, 1, 5, 2, 4),
    (2, 4, 1, 5, 3),
    (4, 2, 6, 1, 5, 3),
)

SLAB_PATTERNS: tuple[Perm, ...] = ((2, 1, 3), (1, 2, 3), (1, 3, 2))


# ---------------------------------------------------------------------------
# mesh catalogs

#: full column strip between pattern positions 2 and 3 must be empty:
#: the "3" and "4" of a 3412 occurrence sit in adjacent positions.
FACTORIAL_MESH = shaded(
    (3, 4, 1, 2), [(2, j) for j in range(5)]
)

#: 4231 with at least one host point below the "2", horizontally between
#: the "4" and the "3".  Containing this is the same as containing one
#: of 53241, 52341, 52431.
LCI_MARKED_4231 = marked(
    (4, 2, 3, 1), [(1, 2), (2, 2), (3, 2)], at_least=1
)

#: Gorenstein obstruction meshes (catalog only; no classifier flag).
GORENSTEIN_MESHES: tuple[MarkedMeshPattern, ...] = (
    shaded(
        (3, 5, 1, 4, 2),
        [(2, j) for j in range(6)] + [(i, 3) for i in range(6) if i != 2],
    ),
    shaded(
        (4, 2, 5, 1, 3),
        [(3, j) for j in range(6)] + [(i, 2) for i in range(6) if i != 3],
    ),
)

#: ascent in adjacent positions: w(i) < w(i+1) with nothing positioned
#: in between (the column strip between the two points is empty).
ADJACENT_ASCENT_MESH = shaded((1, 2), [(1, 0), (1, 1), (1, 2)])

#: at least one host point in the horizontal slab between the values of
#: an inversion: containing this = containing 213, 123 or 132.
SLAB_MESH = marked((1, 2), [(0, 1), (1, 1), (2, 1)], at_least=1)

#: worked 132 example: shade the column right of the "1", mark the two
#: cells right of the "3" at height between "2" and "3".
EXAMPLE_132_MESH = MarkedMeshPattern(
    (1, 3, 2),
    (
        CellConstraint(frozenset({(1, 0), (1, 1), (1, 2), (1, 3)}), 0, 0),
        CellConstraint(frozenset({(2, 2), (3, 2)}), 1, None),
    ),
)


# ---------------------------------------------------------------------------
# interval-pattern families


def family_interval(family: str, a: int, b: int) -> IntervalPattern:
    """Parametrised non-lci interval [u, v] of family "A" or "B".

    Family A needs a, b > 0 with a > 1 or b > 1 (size a+b+2);
    family B needs a, b >= 0 with a+b >= 1 (size a+b+4).
    """
    if family == "A":
        if not (a > 0 and b > 0 and (a > 1 or b > 1)):
            raise ValueError(f"family A parameters out of range: {(a, b)}")
        u = tuple(range(a + 1, 0, -1)) + tuple(range(a + b + 2, a + 1, -1))
        v = (
            (a + b + 2,)
            + tuple(range(a + 1, 1, -1))
            + tuple(range(a + b + 1, a + 1, -1))
            + (1,)
        )
    elif family == "B":
        if not (a >= 0 and b >= 0 and a + b >= 1):
            raise ValueError(f"family B parameters out of range: {(a, b)}")
        u = (
            tuple(range(a + 1, 0, -1))
            + (a + 3, a + 2)
            + tuple(range(a + b + 4, a + 3, -1))
        )
        v = (
            (a + 3,)
            + tuple(range(a + 1, 1, -1))
            + (a + b + 4, 1)
            + tuple(range(a + b + 3, a + 3, -1))
            + (a + 2,)
        )
    else:
        raise ValueError(f"unknown family {family!r}")
    return IntervalPattern(u, v)


@dataclass(frozen=True)
class NamedInterval:
    name: str
    interval: IntervalPattern


def _iv(name: str, u: int, v: int) -> NamedInterval:
    from .permutations import parse_perm

    return NamedInterval(
        name, IntervalPattern(parse_perm(str(u)), parse_perm(str(v)))
    )


#: the eleven sporadic non-lci intervals, in search order.
EXCEPTIONAL_INTERVALS: tuple[NamedInterval, ...] = (
    _iv("C", 21354, 52341),
    _iv("D", 132546, 351624),
    _iv("E", 421653, 642531),
    _iv("Ei", 326154, 635241),
    _iv("F", 215436, 526314),
    _iv("Fi", 215436, 524613),
    _iv("Frc", 143265, 364152),
    _iv("Firc", 143265, 461352),
    _iv("G", 215436, 526413),
    _iv("Grc", 143265, 463152),
    _iv("H", 2154376, 5274163),
)


def exceptional_intervals() -> list[IntervalPattern]:
    return [ni.interval for ni in EXCEPTIONAL_INTERVALS]


def witness_intervals(max_size: int):
    """Yield (source_label, IntervalPattern) in canonical search order:
    exceptionals first, then family A by (a+b, a), then family B, all
    restricted to intervals of size <= max_size."""
    for ni in EXCEPTIONAL_INTERVALS:
        if ni.interval.size <= max_size:
            yield f"Exceptional({ni.name})", ni.interval
    # family A: size a+b+2 <= max_size
    for s in range(3, max_size - 1):  # s = a+b
        for a in range(1, s):
            b = s - a
            if a > 1 or b > 1:
                yield f"FamilyA({a},{b})", family_interval("A", a, b)
    for s in range(1, max_size - 3):
        for a in range(0, s + 1):
            b = s - a
            yield f"FamilyB({a},{b})", family_interval("B", a, b)
