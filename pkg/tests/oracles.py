"""Independent brute-force oracles for pinning expected test values.

Everything in this module is deliberately naive and self-contained: the
definitions are transcribed as directly as possible from first principles,
and nothing here imports the package under test.  Expected values frozen in
the test suite are computed by these functions (or by hand, where noted in
the tests).
"""
from __future__ import annotations

import itertools
from functools import lru_cache


# ---------------------------------------------------------------------------
# permutations


def inversions(word):
    """Number of pairs i<j with word[i] > word[j]."""
    n = len(word)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
    )


def relative_order(values):
    """Standardization: the permutation with the same relative order."""
    ranks = sorted(range(len(values)), key=lambda i: values[i])
    out = [0] * len(values)
    for r, i in enumerate(ranks):
        out[i] = r + 1
    return tuple(out)


def pattern_occurrences(host, patt):
    """All 1-based index tuples where patt occurs in host (brute scan)."""
    m = len(patt)
    out = []
    for combo in itertools.combinations(range(len(host)), m):
        if relative_order([host[i] for i in combo]) == tuple(patt):
            out.append(tuple(i + 1 for i in combo))
    return out


def avoids(host, patts):
    return all(not pattern_occurrences(host, p) for p in patts)


# ---------------------------------------------------------------------------
# Bruhat order, straight from the transposition-chain definition:
# u <= w iff there is a chain u = x_0, x_1, ..., x_k = w where each step
# multiplies by a transposition and strictly increases the inversion count.


def _up_neighbors(word):
    n = len(word)
    ell = inversions(word)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            nxt = list(word)
            nxt[i], nxt[j] = nxt[j], nxt[i]
            nxt = tuple(nxt)
            if inversions(nxt) > ell:
                out.append(nxt)
    return out


@lru_cache(maxsize=None)
def _reachable_up(word):
    """All z >= word in Bruhat order, by chain reachability."""
    seen = {word}
    frontier = [word]
    while frontier:
        cur = frontier.pop()
        for nxt in _up_neighbors(cur):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def bruhat_leq_chain(u, w):
    return tuple(w) in _reachable_up(tuple(u))


def bruhat_interval_brute(u, v):
    """Elements of [u, v] with the restricted order, via the chain oracle.

    Returns (elements, leq) where leq is a set of ordered pairs.
    """
    u, v = tuple(u), tuple(v)
    elems = sorted(z for z in _reachable_up(u) if bruhat_leq_chain(z, v))
    leq = {(a, b) for a in elems for b in elems if bruhat_leq_chain(a, b)}
    return elems, leq


# ---------------------------------------------------------------------------
# poset isomorphism (for the interval-pattern clause)


def poset_isomorphic(elems_a, leq_a, elems_b, leq_b):
    """Brute-force poset isomorphism with invariant pruning.

    leq_* are sets of ordered pairs over the respective element lists.
    Only sensible for small posets (interval sizes well under ~40).
    """
    if len(elems_a) != len(elems_b):
        return False

    def profile(elems, leq):
        # (number below, number above) is an isomorphism invariant
        return {
            e: (
                sum(1 for f in elems if (f, e) in leq),
                sum(1 for f in elems if (e, f) in leq),
            )
            for e in elems
        }

    pa, pb = profile(elems_a, leq_a), profile(elems_b, leq_b)
    if sorted(pa.values()) != sorted(pb.values()):
        return False
    candidates = {
        e: [f for f in elems_b if pb[f] == pa[e]] for e in elems_a
    }
    order_a = sorted(elems_a, key=lambda e: len(candidates[e]))

    def extend(k, mapping, used):
        if k == len(order_a):
            return True
        e = order_a[k]
        for f in candidates[e]:
            if f in used:
                continue
            ok = True
            for e2, f2 in mapping.items():
                if ((e, e2) in leq_a) != ((f, f2) in leq_b):
                    ok = False
                    break
                if ((e2, e) in leq_a) != ((f2, f) in leq_b):
                    ok = False
                    break
            if ok:
                mapping[e] = f
                used.add(f)
                if extend(k + 1, mapping, used):
                    return True
                del mapping[e]
                used.discard(f)
        return False

    return extend(0, {}, set())


# ---------------------------------------------------------------------------
# symmetric functions by tableau enumeration


def schur_rectangle_tableaux(a, rows, m):
    """s_{(a^rows)}(x_1..x_m) as {exponent tuple: coefficient}.

    Enumerates semistandard tableaux of the rows x a rectangle with entries
    in 1..m: rows weakly increase left to right, columns strictly increase
    top to bottom.
    """
    if a == 0 or rows == 0:
        return {(0,) * m: 1}
    if rows > m:
        return {}

    out = {}

    def fill(r, c, tab):
        if r == rows:
            exp = [0] * m
            for row in tab:
                for e in row:
                    exp[e - 1] += 1
            key = tuple(exp)
            out[key] = out.get(key, 0) + 1
            return
        lo = 1 if c == 0 else tab[r][c - 1]
        if r > 0:
            lo = max(lo, tab[r - 1][c] + 1)
        for e in range(lo, m + 1):
            tab[r].append(e)
            if c + 1 == a:
                tab.append([])
                fill(r + 1, 0, tab)
                tab.pop()
            else:
                fill(r, c + 1, tab)
            tab[r].pop()

    fill(0, 0, [[]])
    return out


def complete_homogeneous_brute(k, m):
    """h_k(x_1..x_m) as {exponent tuple: 1} by multiset enumeration."""
    out = {}
    for combo in itertools.combinations_with_replacement(range(m), k):
        exp = [0] * m
        for i in combo:
            exp[i] += 1
        out[tuple(exp)] = 1
    return out


def elementary_brute(k, m):
    out = {}
    for combo in itertools.combinations(range(m), k):
        exp = [0] * m
        for i in combo:
            exp[i] = 1
        out[tuple(exp)] = 1
    return out


# ---------------------------------------------------------------------------
# misc


def leibniz_det(mat):
    """Integer determinant by the Leibniz sum; mat is a list of rows."""
    n = len(mat)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= mat[i][perm[i]]
        total += sign * prod
    return total


def has_adjacent_noninversion(word):
    """Direct scan for an adjacent ascent (see the plain-mesh 12 example)."""
    return any(word[i] < word[i + 1] for i in range(len(word) - 1))


def is_slab_brute(word):
    return avoids(word, [(2, 1, 3), (1, 2, 3), (1, 3, 2)])


def rothe_diagram_brute(word):
    """Cells (p,q), 1-based, with w(q) < p and w^{-1}(p) > q."""
    n = len(word)
    inv = {v: i + 1 for i, v in enumerate(word)}
    return {
        (p, q)
        for p in range(1, n + 1)
        for q in range(1, n + 1)
        if word[q - 1] < p and inv[p] > q
    }
