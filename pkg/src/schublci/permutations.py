"""Permutation basics: length, symmetries, Bruhat order, rank functions.

Permutations are plain tuples of ints in one-line notation, 1-based values:
``w[i-1] = w(i)``.  The matrix convention throughout the package puts a 1 in
row ``w(j)`` (counted from the top) of column ``j``.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def as_perm(word: Sequence[int]) -> Perm:
    """Validate and normalize a one-line word.

    >>> as_perm([2, 1, 3])
    (2, 1, 3)
    """
    w = tuple(word)
    if len(w) < 1 or sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..n: {word!r}")
    return w


def parse_perm(text: str) -> Perm:
    """Parse the text form of a permutation.

    Comma-separated integers always work ("8,1,9,3,7,2,5,6,4"); the compact
    digit form ("819372564") is accepted only when n <= 9.
    """
    text = text.strip()
    if "," in text:
        try:
            word = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse permutation: {text!r}") from None
    elif text.isdigit():
        if len(text) > 9:
            raise ValueError(
                f"compact digit form only allowed for n <= 9: {text!r}"
            )
        word = [int(ch) for ch in text]
    else:
        raise ValueError(f"cannot parse permutation: {text!r}")
    return as_perm(word)


def format_perm(w: Perm) -> str:
    """Emission always uses the comma form."""
    return ",".join(str(v) for v in w)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """w0, the order-reversing permutation."""
    return tuple(range(n, 0, -1))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def reverse_complement(w: Perm) -> Perm:
    """w0 * w * w0, i.e. i -> n+1-w(n+1-i): rotate the graph 180 degrees."""
    n = len(w)
    return tuple(n + 1 - w[n - i] for i in range(1, n + 1))


def symmetry(w: Perm, kind: str) -> Perm:
    if kind == "inverse":
        return inverse(w)
    if kind == "reverse_complement":
        return reverse_complement(w)
    if kind == "inverse_reverse_complement":
        return reverse_complement(inverse(w))
    raise ValueError(f"unknown symmetry kind: {kind!r}")


def coxeter_length(w: Perm) -> int:
    """Number of inversions.

    >>> coxeter_length((4, 3, 2, 1))
    6
    """
    n = len(w)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]
    )


def rank(w: Perm, p: int, q: int) -> int:
    """r_w(p,q) = #{k <= q : w(k) >= p}."""
    n = len(w)
    if not (1 <= p <= n and 1 <= q <= n):
        raise IndexError(f"rank index out of range: ({p},{q}) for n={n}")
    return sum(1 for k in range(q) if w[k] >= p)


def rank_matrix(w: Perm) -> list[list[int]]:
    """All r_w(p,q) as a nested list, rank_matrix(w)[p-1][q-1]."""
    n = len(w)
    mat = [[0] * n for _ in range(n)]
    for p in range(n, 0, -1):
        row = mat[p - 1]
        r = 0
        for q in range(1, n + 1):
            if w[q - 1] >= p:
                r += 1
            row[q - 1] = r
    return mat


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """u <= w in Bruhat order, by rank-matrix dominance.

    r_u(p,q) <= r_w(p,q) for all p,q.  Equivalent to the chain-of-
    transpositions definition (the latter is kept as a test oracle).
    """
    if len(u) != len(w):
        raise ValueError("bruhat_leq needs permutations of the same size")
    n = len(u)
    for p in range(1, n + 1):
        ru = rw = 0
        for q in range(1, n + 1):
            if u[q - 1] >= p:
                ru += 1
            if w[q - 1] >= p:
                rw += 1
            if ru > rw:
                return False
    return True


def enumerate_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order of one-line words."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return itertools.permutations(range(1, n + 1))


def apply_transposition(w: Perm, i: int, j: int) -> Perm:
    """w * t where t switches positions i and j (1-based)."""
    out = list(w)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def descents(w: Perm) -> list[int]:
    """Positions i with w(i) > w(i+1)."""
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def reduced_word(w: Perm) -> list[int]:
    """One reduced word for w, by repeatedly removing descents.

    Returns indices [a_1, ..., a_k] with w = s_{a_1} ... s_{a_k} and
    k = coxeter_length(w).
    """
    word: list[int] = []
    cur = list(w)
    # peel from the right of the product: find a descent, multiply it away
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                break
        else:
            break
    word.reverse()
    return word


def reduced_words(w: Perm) -> Iterator[list[int]]:
    """All reduced words of w (exponential; only for small lengths)."""
    if all(w[i] == i + 1 for i in range(len(w))):
        yield []
        return
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            rest = apply_transposition(w, i + 1, i + 2)
            for tail in reduced_words(rest):
                yield tail + [i + 1]
