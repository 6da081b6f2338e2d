"""Singularity classification of a permutation and witness search."""
from __future__ import annotations

from dataclasses import dataclass

from . import catalogs
from .diagrams import inclusion_level
from .patterns import (
    IntervalPattern,
    contains_classical,
    contains_marked_mesh,
    embeddings_classical,
    interval_embeds,
)
from .permutations import Perm, as_perm, format_perm


@dataclass(frozen=True)
class Certificate:
    """One pattern occurrence witnessing the failure of a class."""

    pattern: str
    positions: tuple[int, ...]

    def to_json(self) -> dict:
        return {"pattern": self.pattern, "positions": list(self.positions)}


@dataclass(frozen=True)
class NonLciWitness:
    source: str
    interval: IntervalPattern
    positions: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "u": format_perm(self.interval.u),
            "v": format_perm(self.interval.v),
            "positions": list(self.positions),
        }


@dataclass(frozen=True)
class SingularityReport:
    w: Perm
    smooth: bool
    factorial: bool
    dbi: bool
    lci: bool
    matrix_lci: bool
    certificates: dict[str, Certificate]

    def to_json(self) -> dict:
        return {
            "perm": format_perm(self.w),
            "smooth": self.smooth,
            "factorial": self.factorial,
            "dbi": self.dbi,
            "lci": self.lci,
            "matrix_schubert_lci": self.matrix_lci,
            "certificates": {
                k: c.to_json() for k, c in sorted(self.certificates.items())
            },
        }


def _perm_name(p: Perm) -> str:
    return "".join(str(v) for v in p)


def _first_classical_hit(w: Perm, patterns):
    for p in patterns:
        emb = next(embeddings_classical(w, p), None)
        if emb is not None:
            return Certificate(_perm_name(p), emb)
    return None


def classify(w) -> SingularityReport:
    """Flags for each singularity class, with one certificate per
    failed class (an occurrence of a catalog pattern)."""
    w = as_perm(w)
    certs: dict[str, Certificate] = {}

    smooth_hit = _first_classical_hit(w, catalogs.SMOOTH_PATTERNS)
    if smooth_hit:
        certs["smooth"] = smooth_hit

    factorial_hit = _first_classical_hit(w, ((4, 2, 3, 1),))
    if factorial_hit is None:
        emb = contains_marked_mesh(w, catalogs.FACTORIAL_MESH)
        if emb is not None:
            factorial_hit = Certificate("3412-adjacent", emb)
    if factorial_hit:
        certs["factorial"] = factorial_hit

    dbi_hit = _first_classical_hit(w, catalogs.DBI_PATTERNS)
    if dbi_hit:
        certs["dbi"] = dbi_hit

    lci_hit = _first_classical_hit(w, catalogs.LCI_PATTERNS)
    if lci_hit:
        certs["lci"] = lci_hit

    matrix_hit = _first_classical_hit(w, catalogs.MATRIX_LCI_PATTERNS)
    if matrix_hit:
        certs["matrix_schubert_lci"] = matrix_hit

    return SingularityReport(
        w=w,
        smooth=smooth_hit is None,
        factorial=factorial_hit is None,
        dbi=dbi_hit is None,
        lci=lci_hit is None,
        matrix_lci=matrix_hit is None,
        certificates=certs,
    )


def is_lci_patterns(w) -> bool:
    w = as_perm(w)
    return all(not contains_classical(w, p) for p in catalogs.LCI_PATTERNS)


def is_lci_marked_mesh(w) -> bool:
    """Mesh-side test: avoid the marked 4231 and the three other
    classical obstructions."""
    w = as_perm(w)
    if contains_marked_mesh(w, catalogs.LCI_MARKED_4231) is not None:
        return False
    return all(
        not contains_classical(w, p)
        for p in (
            (3, 5, 1, 4, 2),
            (4, 2, 5, 1, 3),
            (3, 5, 1, 6, 2, 4),
        )
    )


def is_dbi_patterns(w) -> bool:
    w = as_perm(w)
    return all(not contains_classical(w, p) for p in catalogs.DBI_PATTERNS)


def witness_nonlci(w) -> NonLciWitness | None:
    """Search the interval catalog (exceptionals, then the two infinite
    families) for an embedded non-lci interval.

    Deliberately performs the search unconditionally -- no shortcut via
    pattern avoidance -- so it stays an independent route."""
    w = as_perm(w)
    for source, ip in catalogs.witness_intervals(len(w)):
        emb = interval_embeds(w, ip)
        if emb is not None:
            return NonLciWitness(source, ip, emb)
    return None


def is_slab(w) -> bool:
    """True when every value sits within one step of its antidiagonal
    slot: equivalently w avoids 213, 123 and 132."""
    w = as_perm(w)
    return all(not contains_classical(w, p) for p in catalogs.SLAB_PATTERNS)


# ---------------------------------------------------------------------------
# matrix variety reduction


def matrix_schubert_tilde(w) -> tuple[Perm, Perm]:
    """(w_tilde, v_n) in S_{2n}: the full matrix variety of w matches
    the local structure of the pair (v_n, w_tilde)."""
    w = as_perm(w)
    n = len(w)
    w0w = tuple(n + 1 - w[i] for i in range(n))  # longest element times w
    tilde = tuple(n + w0w[i] for i in range(n)) + tuple(
        2 * n + 1 - i for i in range(n + 1, 2 * n + 1)
    )
    vn = tuple(n + 1 - i for i in range(1, n + 1)) + tuple(
        n + (2 * n + 1 - i) for i in range(n + 1, 2 * n + 1)
    )
    return tilde, vn


def is_matrix_lci_patterns(w) -> bool:
    w = as_perm(w)
    return all(
        not contains_classical(w, p) for p in catalogs.MATRIX_LCI_PATTERNS
    )


def inclusion_level_of(w) -> str:
    return inclusion_level(as_perm(w))
