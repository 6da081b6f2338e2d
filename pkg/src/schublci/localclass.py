"""Closed product formulas for the cohomology and K-theory classes of
the classified varieties at the torus fixed point, plus the comparison
helpers against the divided-difference oracle.
"""
from __future__ import annotations

from .diagrams import NEITHER, inclusion_level
from .ideals import minimal_generators
from .permutations import as_perm, longest
from .polynomials import MultiPoly
from .schubert import (
    LaurentPair,
    _tring,
    double_grothendieck,
    double_schubert,
    specialize_cohomology,
    specialize_k_theory,
)


def _weight_to_linear(weight: tuple[int, ...], ring) -> MultiPoly:
    """sum_i c_i a_i -> sum_i c_i t_i."""
    terms = {}
    for i, c in enumerate(weight):
        if c:
            exp = [0] * len(ring)
            exp[i] = 1
            terms[tuple(exp)] = c
    return MultiPoly(ring, terms)


def _weight_to_k_factor(weight: tuple[int, ...], ring) -> tuple[MultiPoly, MultiPoly]:
    """1 - t^{pos part}/t^{neg part} as (numerator, denominator):
    num = t^{neg} - t^{pos}, den = t^{neg}."""
    pos = [max(c, 0) for c in weight]
    neg = [max(-c, 0) for c in weight]
    num = MultiPoly(ring, {tuple(neg): 1}) - MultiPoly(ring, {tuple(pos): 1})
    den = MultiPoly(ring, {tuple(neg): 1})
    return num, den


def local_class_product(w, theory: str):
    """Product over the minimal generator weights: cohomology gives the
    polynomial prod (sum_i c_i t_i); K gives a LaurentPair whose factors
    are 1 - t^{pos}/t^{neg} per generator."""
    w = as_perm(w)
    if inclusion_level(w) == NEITHER:
        raise ValueError(f"{w} is not in the classified lci family")
    n = len(w)
    ring = _tring(n)
    gens = minimal_generators(w, expand=False)
    if theory == "cohomology":
        out = MultiPoly.const(ring, 1)
        for rec in gens.records:
            out = out * _weight_to_linear(rec.weight, ring)
        return out
    if theory == "K":
        num = MultiPoly.const(ring, 1)
        den = MultiPoly.const(ring, 1)
        for rec in gens.records:
            fn, fd = _weight_to_k_factor(rec.weight, ring)
            num = num * fn
            den = den * fd
        return LaurentPair(num, den)
    raise ValueError(f"unknown theory {theory!r}")


def oracle_class(w, theory: str):
    """The same class from the divided-difference side: the double
    polynomial of w0*w, specialized at the fixed point."""
    w = as_perm(w)
    n = len(w)
    w0 = longest(n)
    u = tuple(w0[w[i] - 1] for i in range(n))  # (w0 w)(i) = n+1-w(i)
    if theory == "cohomology":
        return specialize_cohomology(double_schubert(u), n)
    if theory == "K":
        return specialize_k_theory(double_grothendieck(u), n)
    raise ValueError(f"unknown theory {theory!r}")


def classes_agree(w, theory: str) -> bool:
    return local_class_product(w, theory) == oracle_class(w, theory)


def lowest_terms(poly: MultiPoly) -> MultiPoly:
    """Sum of the terms of minimal total degree."""
    if poly.is_zero():
        return poly
    degs = [sum(e) for e in poly.terms]
    m = min(degs)
    return MultiPoly(
        poly.vars, {e: c for e, c in poly.terms.items() if sum(e) == m}
    )


def k_degeneration(w) -> MultiPoly:
    """Substitute t_i -> 1 - t_i into the K class and keep the lowest
    degree: equals the cohomology class up to a global sign."""
    w = as_perm(w)
    n = len(w)
    ring = _tring(n)
    pair = local_class_product(w, "K")
    sub = {
        f"t{i}": 1 - MultiPoly.var(ring, f"t{i}") for i in range(1, n + 1)
    }
    return lowest_terms(pair.num.subs(sub))
