"""Exact multivariate polynomials with big-integer coefficients.

A MultiPoly owns an ordered tuple of variable names and a dict mapping
exponent vectors (tuples of ints, negatives allowed) to nonzero integer
coefficients.  Arithmetic between polynomials over different variable
tuples aligns to the union ring first; hot loops (divided differences,
products) stay within one ring and never pay for alignment.

No floating point anywhere.
"""
from __future__ import annotations

from typing import Iterable, Mapping


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict[tuple[int, ...], int]):
        self.vars = vars
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(vars: Iterable[str]) -> "MultiPoly":
        return MultiPoly(tuple(vars), {})

    @staticmethod
    def const(vars: Iterable[str], c: int) -> "MultiPoly":
        vars = tuple(vars)
        if c == 0:
            return MultiPoly(vars, {})
        return MultiPoly(vars, {(0,) * len(vars): c})

    @staticmethod
    def var(vars: Iterable[str], name: str, exp: int = 1) -> "MultiPoly":
        vars = tuple(vars)
        i = vars.index(name)
        key = tuple(exp if j == i else 0 for j in range(len(vars)))
        return MultiPoly(vars, {key: 1})

    # -- ring alignment ----------------------------------------------------

    def embed(self, vars: tuple[str, ...]) -> "MultiPoly":
        """Reinterpret over a superset ring (order may differ)."""
        if vars == self.vars:
            return self
        pos = [vars.index(v) for v in self.vars]
        width = len(vars)
        terms: dict[tuple[int, ...], int] = {}
        for exp, c in self.terms.items():
            out = [0] * width
            for p, e in zip(pos, exp):
                out[p] = e
            terms[tuple(out)] = c
        return MultiPoly(vars, terms)

    def _aligned(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self, other
        union = tuple(dict.fromkeys(self.vars + other.vars))
        return self.embed(union), other.embed(union)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.vars, other)
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return MultiPoly(a.vars, terms)

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.const(self.vars, other) - self

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self.vars)
            return MultiPoly(
                self.vars, {e: c * other for e, c in self.terms.items()}
            )
        a, b = self._aligned(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == MultiPoly.const(self.vars, other).terms
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self):
        """The integer value if the polynomial is constant, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (exp, c), = self.terms.items()
            if all(e == 0 for e in exp):
                return c
        return None

    # -- substitution ------------------------------------------------------

    def subs(self, mapping: Mapping[str, "MultiPoly | int"]) -> "MultiPoly":
        """Substitute polynomials (or ints) for variables.

        Unmapped variables are kept.  All exponents of substituted
        variables must be nonnegative.
        """
        target_vars = tuple(v for v in self.vars if v not in mapping)
        for val in mapping.values():
            if isinstance(val, MultiPoly):
                target_vars = tuple(dict.fromkeys(target_vars + val.vars))
        out = MultiPoly.zero(target_vars)
        keep = [i for i, v in enumerate(self.vars) if v not in mapping]
        rep = [
            (i, mapping[v]) for i, v in enumerate(self.vars) if v in mapping
        ]
        for exp, c in self.terms.items():
            kept_exp = [0] * len(target_vars)
            for i in keep:
                kept_exp[target_vars.index(self.vars[i])] = exp[i]
            term = MultiPoly(target_vars, {tuple(kept_exp): c})
            for i, val in rep:
                e = exp[i]
                if e == 0:
                    continue
                if e < 0:
                    raise ValueError(
                        "cannot substitute into a negative exponent"
                    )
                if isinstance(val, int):
                    term = term * (val**e)
                else:
                    term = term * (val.embed(target_vars) ** e)
            out = out + term
        return out

    def eval_int(self, values: Mapping[str, int]) -> int:
        """Exact integer evaluation; every variable must have a value."""
        total = 0
        idx = [values[v] for v in self.vars]
        for exp, c in self.terms.items():
            prod = c
            for val, e in zip(idx, exp):
                if e:
                    prod *= val**e
            total += prod
        return total

    # -- display -----------------------------------------------------------

    def sorted_terms(self):
        """Graded-lexicographic, highest first: canonical emission order."""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), item[0]),
            reverse=True,
        )

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exp, c in self.sorted_terms():
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.vars, exp)
                if e != 0
            ]
            mon = "*".join(factors)
            if mon:
                body = mon if abs(c) == 1 else f"{abs(c)}*{mon}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [[list(e), c] for e, c in self.sorted_terms()],
        }

    @staticmethod
    def from_json(data: dict) -> "MultiPoly":
        vars = tuple(data["vars"])
        terms = {tuple(e): c for e, c in data["terms"] if c}
        return MultiPoly(vars, terms)


# ---------------------------------------------------------------------------
# divided differences


def _xi_positions(vars: tuple[str, ...], i: int) -> tuple[int, int]:
    try:
        return vars.index(f"x{i}"), vars.index(f"x{i + 1}")
    except ValueError:
        raise ValueError(f"ring {vars} lacks x{i}/x{i + 1}") from None


def divided_difference(f: MultiPoly, i: int, isobaric: bool = False) -> MultiPoly:
    """partial_i f = (f - s_i f)/(x_i - x_{i+1}), computed termwise (the
    division is exact for every f, so no remainder check is ever needed).

    isobaric=True computes pi_i f = partial_i((1 - x_{i+1}) f).
    """
    if isobaric:
        xi1 = MultiPoly.var(f.vars, f"x{i + 1}")
        return divided_difference(f - xi1 * f, i)
    a_pos, b_pos = _xi_positions(f.vars, i)
    out: dict[tuple[int, ...], int] = {}
    for exp, c in f.terms.items():
        a, b = exp[a_pos], exp[b_pos]
        if a == b:
            continue
        lo, hi = min(a, b), max(a, b)
        coeff = c if a > b else -c
        base = list(exp)
        # x_i^lo x_{i+1}^lo * sum_{k=0}^{hi-lo-1} x_i^{hi-lo-1-k} x_{i+1}^k
        for k in range(hi - lo):
            base[a_pos] = lo + (hi - lo - 1 - k)
            base[b_pos] = lo + k
            key = tuple(base)
            s = out.get(key, 0) + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return MultiPoly(f.vars, out)
