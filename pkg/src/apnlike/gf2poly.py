"""Polynomials over GF(2) packed into Python ints (bit i is the coefficient of x^i)."""

from __future__ import annotations


def degree(p: int) -> int:
    """Degree of ``p``; the zero polynomial has degree -1."""
    return p.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carryless product of two bit-polynomials."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def divmod2(p: int, q: int) -> tuple[int, int]:
    if q == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dq = degree(q)
    quot = 0
    while p and degree(p) >= dq:
        shift = degree(p) - dq
        quot ^= 1 << shift
        p ^= q << shift
    return quot, p


def mod2(p: int, q: int) -> int:
    return divmod2(p, q)[1]


def gcd2(a: int, b: int) -> int:
    while b:
        a, b = b, mod2(a, b)
    return a


def mulmod2(a: int, b: int, m: int) -> int:
    return mod2(clmul(a, b), m)


def powmod2(a: int, e: int, m: int) -> int:
    r = 1
    a = mod2(a, m)
    while e:
        if e & 1:
            r = mulmod2(r, a, m)
        a = mulmod2(a, a, m)
        e >>= 1
    return mod2(r, m)


def is_irreducible(f: int) -> bool:
    """Ben-Or test: ``f`` has no factor of degree <= deg(f)/2."""
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    x = 0b10
    t = x
    for _ in range(n // 2):
        t = mulmod2(t, t, f)
        if gcd2(t ^ x, f) != 1:
            return False
    return True


def smallest_irreducible(n: int) -> int:
    f = (1 << n) | 1
    while not is_irreducible(f):
        f += 2
    return f


def to_str(p: int, var: str = "x") -> str:
    """Render as ``x^3 + x + 1`` with terms in descending degree."""
    if p == 0:
        return "0"
    terms = []
    for i in range(degree(p), -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return " + ".join(terms)
