"""Dickson polynomials of the first kind in characteristic 2.

D_0 = 2 vanishes in characteristic 2, D_1 = x, and
D_k = x*D_(k-1) + a*D_(k-2).  Evaluation runs the recurrence; the closed
binomial formula is kept only for :func:`dickson_coeffs`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from . import gf2n
from .gf2n import Elem, FieldSpec


@dataclass(frozen=True)
class DicksonCoeffs:
    """D_k(x, a) mod 2 as a sorted tuple of (x-degree, a-power) monomials."""

    k: int
    terms: tuple[tuple[int, int], ...]


def dickson_coeffs(k: int) -> DicksonCoeffs:
    if k < 1:
        raise ValueError("k must be >= 1")
    terms = []
    for j in range(k // 2 + 1):
        num = k * comb(k - j, j)
        assert num % (k - j) == 0
        if (num // (k - j)) & 1:
            terms.append((k - 2 * j, j))
    return DicksonCoeffs(k, tuple(terms))


def dickson_coeffs_by_recurrence(k: int) -> DicksonCoeffs:
    """Expand the recurrence symbolically over GF(2); oracle for dickson_coeffs."""
    if k < 1:
        raise ValueError("k must be >= 1")
    prev: set[tuple[int, int]] = set()
    cur = {(1, 0)}
    for _ in range(k - 1):
        nxt = {(i + 1, j) for i, j in cur} ^ {(i, j + 1) for i, j in prev}
        prev, cur = cur, nxt
    return DicksonCoeffs(k, tuple(sorted(cur, reverse=True)))


def _mat_mul(f, p, q):
    (a, b), (c, d) = p
    (e, g), (h, i) = q
    m = gf2n.mul
    return ((m(f, a, e) ^ m(f, b, h), m(f, a, g) ^ m(f, b, i)),
            (m(f, c, e) ^ m(f, d, h), m(f, c, g) ^ m(f, d, i)))


def dickson_eval(f: FieldSpec, k: int, x: Elem, a: Elem) -> Elem:
    """D_k(x, a) in the field.

    Powers the recurrence's 2x2 companion matrix, so the cost is O(log k).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 0
    # (D_k, D_{k-1}) = M^(k-1) (D_1, D_0) with M = [[x, a], [1, 0]]
    result = ((1, 0), (0, 1))
    base = ((x, a), (1, 0))
    e = k - 1
    while e:
        if e & 1:
            result = _mat_mul(f, result, base)
        base = _mat_mul(f, base, base)
        e >>= 1
    return gf2n.mul(f, result[0][0], x)


def dickson_sequence(f: FieldSpec, xs, a, kmax: int) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (k, D_k(xs, a)) for k = 1..kmax, elementwise over broadcast xs, a."""
    xs = np.asarray(xs, dtype=np.int64)
    a = np.asarray(a, dtype=np.int64)
    prev = np.zeros(np.broadcast(xs, a).shape, dtype=np.int64)
    cur = xs + prev
    for k in range(1, kmax + 1):
        yield k, cur
        prev, cur = cur, gf2n.mul_array(f, xs, cur) ^ gf2n.mul_array(f, a, prev)


def _subfield_elements(f: FieldSpec, m: int) -> list[int]:
    if f.n == m:
        return list(range(f.order))
    if f.n != 2 * m:
        raise ValueError(f"T1 needs n = m or n = 2m; got n={f.n}, m={m}")
    xs = gf2n.elements(f)
    fixed = gf2n.pow_array(f, xs, 1 << m) == xs
    fixed[0] = True
    return [int(v) for v in xs[fixed]]


def t1_set(f: FieldSpec, m: int) -> frozenset[int]:
    """{x in GF(2^m)* : tr_m(1/x) = 1}, inside f (n = m or n = 2m)."""
    out = set()
    for x in _subfield_elements(f, m):
        if x == 0:
            continue
        y = gf2n.inv(f, x)
        t = gf2n.abs_trace(f, y) if f.n == m else gf2n.subfield_trace(f, m, y)
        if t:
            out.add(x)
    return frozenset(out)


def dickson_permutes_t1(f: FieldSpec, m: int, j: int) -> bool:
    if j < 1:
        raise ValueError("j must be >= 1")
    t1 = t1_set(f, m)
    image = {dickson_eval(f, j, x, 1) for x in t1}
    return image == t1


def dickson_permutes_field(f: FieldSpec, k: int, a: Elem) -> bool:
    if a == 0:
        raise ValueError("a must be nonzero")
    if k < 1:
        raise ValueError("k must be >= 1")
    seen = bytearray(f.order)
    for x in range(f.order):
        y = dickson_eval(f, k, x, a)
        if seen[y]:
            return False
        seen[y] = 1
    return True


def t1_criterion_table(m: int, f: FieldSpec | None = None) -> dict[int, bool]:
    """Whether D_j(., 1) permutes T1, for every j in [1, 2^m + 1]."""
    f = f or gf2n.make_field(m)
    t1 = np.array(sorted(t1_set(f, m)), dtype=np.int64)
    return {j: np.array_equal(np.sort(vals), t1)
            for j, vals in dickson_sequence(f, t1, 1, (1 << m) + 1)}


def field_criterion_table(f: FieldSpec) -> dict[int, list[bool]]:
    """For every k in [1, 2^(2n) - 1]: bijectivity of D_k(., a) for each a != 0."""
    xs = gf2n.elements(f)
    a = np.arange(1, f.order, dtype=np.int64)[:, None]
    kmax = (1 << 2 * f.n) - 1
    out = {}
    for k, vals in dickson_sequence(f, xs[None, :], a, kmax):
        srt = np.sort(vals, axis=1)
        out[k] = [bool(v) for v in (srt == xs).all(axis=1)]
    return out
