"""Double Schubert and Grothendieck polynomials via divided differences,
plus the torus specializations used as an independent oracle for the
local class products.

Conventions (frozen after calibrating the n = 2 case so that the top
and identity anchors come out right):

* top elements: S_{w0} = prod_{i+j<=n} (x_i - y_j) and
  G_{w0} = prod_{i+j<=n} (x_i + y_j - x_i*y_j);
* descent: S_{u s_i} = d_i S_u and G_{u s_i} = pi_i G_u whenever
  l(u s_i) < l(u);
* specialization to the torus fixed point: x_i -> t_i and
  y_j -> t_{n+1-j} in cohomology; x_i -> 1 - t_i and
  y_j -> (t_{n+1-j} - 1)/t_{n+1-j} in K-theory (the K substitution is
  returned as a fraction with a monomial denominator).
"""
from __future__ import annotations

from dataclasses import dataclass

from .permutations import Perm, as_perm, coxeter_length, longest
from .polynomials import MultiPoly, divided_difference


def _xyring(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1)) + tuple(
        f"y{j}" for j in range(1, n + 1)
    )


def _tring(n: int) -> tuple[str, ...]:
    return tuple(f"t{i}" for i in range(1, n + 1))


def top_double_schubert(n: int) -> MultiPoly:
    ring = _xyring(n)
    out = MultiPoly.const(ring, 1)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            out = out * (
                MultiPoly.var(ring, f"x{i}") - MultiPoly.var(ring, f"y{j}")
            )
    return out


def top_double_grothendieck(n: int) -> MultiPoly:
    ring = _xyring(n)
    out = MultiPoly.const(ring, 1)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            xi = MultiPoly.var(ring, f"x{i}")
            yj = MultiPoly.var(ring, f"y{j}")
            out = out * (xi + yj - xi * yj)
    return out


def _ascent_chain(w: Perm, pick) -> list[int]:
    """Indices i_1, i_2, ... walking w up to w0 by right multiplication
    at ascents; pick(ascents) chooses the branch."""
    chain = []
    cur = list(w)
    n = len(cur)
    while True:
        ascents = [i for i in range(1, n) if cur[i - 1] < cur[i]]
        if not ascents:
            break
        i = pick(ascents)
        chain.append(i)
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return chain


def _descend(w, top_fn, isobaric: bool, pick=None) -> MultiPoly:
    w = as_perm(w)
    n = len(w)
    chain = _ascent_chain(w, pick or (lambda asc: asc[0]))
    poly = top_fn(n)
    for i in reversed(chain):
        poly = divided_difference(poly, i, isobaric=isobaric)
    return poly


def double_schubert(w, pick=None) -> MultiPoly:
    return _descend(w, top_double_schubert, False, pick)


def double_grothendieck(w, pick=None) -> MultiPoly:
    return _descend(w, top_double_grothendieck, True, pick)


# ---------------------------------------------------------------------------
# torus specializations


def specialize_cohomology(poly: MultiPoly, n: int) -> MultiPoly:
    """x_i -> t_i, y_j -> t_{n+1-j}: a pure exponent remap."""
    ring = _tring(n)
    xpos = {f"x{i}": i - 1 for i in range(1, n + 1)}
    ypos = {f"y{j}": n - j for j in range(1, n + 1)}  # t_{n+1-j}
    terms: dict[tuple[int, ...], int] = {}
    for exp, c in poly.terms.items():
        out = [0] * n
        for name, e in zip(poly.vars, exp):
            if not e:
                continue
            if name in xpos:
                out[xpos[name]] += e
            elif name in ypos:
                out[ypos[name]] += e
            else:
                raise ValueError(f"unexpected variable {name}")
        key = tuple(out)
        s = terms.get(key, 0) + c
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)
    return MultiPoly(ring, terms)


@dataclass(frozen=True)
class LaurentPair:
    """A Laurent polynomial num/den with den a single monomial."""

    num: MultiPoly
    den: MultiPoly

    def __eq__(self, other):
        if not isinstance(other, LaurentPair):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("unhashable")


def specialize_k_theory(poly: MultiPoly, n: int) -> LaurentPair:
    """x_i -> 1 - t_i, y_j -> (t_{n+1-j} - 1)/t_{n+1-j}, cleared to a
    fraction over the monomial prod_j t_{n+1-j}^{max y_j exponent}."""
    ring = _tring(n)
    ydeg = [0] * (n + 1)
    for exp, _ in poly.terms.items():
        for name, e in zip(poly.vars, exp):
            if name.startswith("y") and e > ydeg[int(name[1:])]:
                ydeg[int(name[1:])] = e
    num = MultiPoly.zero(ring)
    for exp, c in poly.terms.items():
        term = MultiPoly.const(ring, c)
        tpad = [0] * n
        for j in range(1, n + 1):
            tpad[n - j] += ydeg[j]
        for name, e in zip(poly.vars, exp):
            if not e:
                continue
            if name.startswith("x"):
                i = int(name[1:])
                ti = MultiPoly.var(ring, f"t{i}")
                term = term * (1 - ti) ** e
            else:
                j = int(name[1:])
                tj = MultiPoly.var(ring, f"t{n + 1 - j}")
                term = term * (tj - 1) ** e
                tpad[n - j] -= e
        term = term * MultiPoly(ring, {tuple(tpad): 1})
        num = num + term
    den_exp = [0] * n
    for j in range(1, n + 1):
        den_exp[n - j] += ydeg[j]
    den = MultiPoly(ring, {tuple(den_exp): 1})
    return LaurentPair(num, den)


# ---------------------------------------------------------------------------
# bulk computation over all of S_n, sharing descent steps


def specialized_classes(n: int, theory: str) -> dict[Perm, object]:
    """theory 'cohomology': u -> S_u(t; t-reversed) for every u in S_n;
    theory 'K': u -> G_u as a LaurentPair.  One divided difference per
    permutation; only two levels of unspecialized polynomials are alive
    at a time."""
    if theory == "cohomology":
        top, iso, spec = top_double_schubert, False, specialize_cohomology
    elif theory == "K":
        top, iso, spec = top_double_grothendieck, True, specialize_k_theory
    else:
        raise ValueError(f"unknown theory {theory!r}")
    w0 = longest(n)
    level: dict[Perm, MultiPoly] = {w0: top(n)}
    out: dict[Perm, object] = {w0: spec(level[w0], n)}
    for length in range(coxeter_length(w0), 0, -1):
        nxt: dict[Perm, MultiPoly] = {}
        for u, poly in level.items():
            for i in range(1, n):
                if u[i - 1] > u[i]:  # descent: l(u s_i) = length - 1
                    child = list(u)
                    child[i - 1], child[i] = child[i], child[i - 1]
                    child_t = tuple(child)
                    if child_t not in nxt:
                        nxt[child_t] = divided_difference(poly, i, isobaric=iso)
        for u, poly in nxt.items():
            out[u] = spec(poly, n)
        level = nxt
    return out
