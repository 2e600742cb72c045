"""Polynomials over GF(2) in x (UPoly) and in x, y (BPoly), and resultants in y.

The resultant is the determinant of the Sylvester matrix, computed by
Bareiss fraction-free elimination over GF(2)[x].  Characteristic 2 makes
every sign in the usual formulas irrelevant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from . import gf2poly


@dataclass(frozen=True)
class UPoly:
    bits: int = 0

    @property
    def degree(self) -> int:
        return gf2poly.degree(self.bits)

    def __bool__(self):
        return self.bits != 0

    def __add__(self, other: "UPoly") -> "UPoly":
        return UPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "UPoly") -> "UPoly":
        return UPoly(gf2poly.clmul(self.bits, other.bits))

    def __pow__(self, k: int) -> "UPoly":
        r = UPoly(1)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def __divmod__(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        q, r = gf2poly.divmod2(self.bits, other.bits)
        return UPoly(q), UPoly(r)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[1]

    def __str__(self):
        return gf2poly.to_str(self.bits)

    def eval_field(self, f, x: int) -> int:
        """Horner evaluation at a GF(2^n) element."""
        from . import gf2n

        acc = 0
        for i in range(self.degree, -1, -1):
            acc = gf2n.mul(f, acc, x) ^ (self.bits >> i & 1)
        return acc


X = UPoly(0b10)
ONE = UPoly(1)
ZERO = UPoly(0)


def upoly_add(p: UPoly, q: UPoly) -> UPoly:
    return p + q


def upoly_mul(p: UPoly, q: UPoly) -> UPoly:
    return p * q


def upoly_divrem(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    return divmod(p, q)


@dataclass(frozen=True)
class BPoly:
    """sum_i y_coeffs[i](x) * y^i, trailing zero coefficients stripped."""

    y_coeffs: tuple[UPoly, ...] = ()

    def __post_init__(self):
        coeffs = list(self.y_coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "y_coeffs", tuple(coeffs))

    @classmethod
    def from_upoly(cls, p: UPoly) -> "BPoly":
        return cls((p,))

    @property
    def y_degree(self) -> int:
        return len(self.y_coeffs) - 1

    def __bool__(self):
        return bool(self.y_coeffs)

    def __add__(self, other: "BPoly") -> "BPoly":
        size = max(len(self.y_coeffs), len(other.y_coeffs))
        a = self.y_coeffs + (ZERO,) * (size - len(self.y_coeffs))
        b = other.y_coeffs + (ZERO,) * (size - len(other.y_coeffs))
        return BPoly(tuple(p + q for p, q in zip(a, b)))

    def __mul__(self, other: "BPoly") -> "BPoly":
        if not self or not other:
            return BPoly()
        out = [ZERO] * (len(self.y_coeffs) + len(other.y_coeffs) - 1)
        for i, p in enumerate(self.y_coeffs):
            for j, q in enumerate(other.y_coeffs):
                out[i + j] = out[i + j] + p * q
        return BPoly(tuple(out))

    def __pow__(self, k: int) -> "BPoly":
        r = BPoly((ONE,))
        for _ in range(k):
            r = r * self
        return r

    def in_x_only(self) -> UPoly:
        if self.y_degree > 0:
            raise ValueError("polynomial depends on y")
        return self.y_coeffs[0] if self.y_coeffs else ZERO

    def __str__(self):
        terms = []
        for i in range(self.y_degree, -1, -1):
            bits = self.y_coeffs[i].bits
            for e in range(gf2poly.degree(bits), -1, -1):
                if bits >> e & 1:
                    terms.append(_monomial(e, i))
        return " + ".join(terms) if terms else "0"


def _monomial(xe: int, ye: int) -> str:
    parts = []
    for var, e in (("x", xe), ("y", ye)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts) if parts else "1"


# -- parsing ----------------------------------------------------------------

class PolySyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos


MAX_EXPONENT = 4096
_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(.))")


class _Parser:
    """Recursive descent over: expr := term ('+' term)*; term := power ('*'? power)*;
    power := atom ('^' int)?; atom := int | x | y | '(' expr ')'.
    Integer constants are reduced mod 2.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            kind = "int" if m.group(1) else "var" if m.group(2) else "op"
            self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg):
        raise PolySyntaxError(msg, self.text, self.peek()[2])

    def parse(self) -> BPoly:
        if not self.tokens:
            self.fail("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> BPoly:
        p = self.term()
        while self.peek()[:2] == ("op", "+"):
            self.take()
            p = p + self.term()
        return p

    def term(self) -> BPoly:
        p = self.power()
        while True:
            kind, val, _ = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                p = p * self.power()
            elif kind in ("int", "var") or (kind, val) == ("op", "("):
                p = p * self.power()
            else:
                return p

    def power(self) -> BPoly:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, _ = self.peek()
            if kind != "int":
                self.fail("expected exponent")
            self.take()
            e = int(val)
            if e > MAX_EXPONENT:
                self.fail(f"exponent {e} exceeds {MAX_EXPONENT}")
            return base ** e
        return base

    def atom(self) -> BPoly:
        kind, val, _ = self.peek()
        if kind == "int":
            self.take()
            return BPoly((ONE,)) if int(val) & 1 else BPoly()
        if kind == "var":
            self.take()
            return BPoly((X,)) if val == "x" else BPoly((ZERO, ONE))
        if (kind, val) == ("op", "("):
            self.take()
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return p
        self.fail("expected a term" if kind != "end" else "unexpected end of input")


def parse_bpoly(s: str) -> BPoly:
    return _Parser(s).parse()


def parse_upoly(s: str) -> UPoly:
    p = parse_bpoly(s)
    if p.y_degree > 0:
        raise ValueError(f"expected a polynomial in x only: {s!r}")
    return p.in_x_only()


def expand_product(factors) -> UPoly:
    """Multiply out [(factor, multiplicity), ...]."""
    out = ONE
    for p, k in factors:
        out = out * p ** k
    return out


def parse_factored(s: str) -> UPoly:
    """Expand a factored form like ``x^2*(x+1)^2*(x^2+x+1)^3``."""
    return parse_upoly(s)


# -- resultants -------------------------------------------------------------

def sylvester(fp: BPoly, gp: BPoly) -> list[list[UPoly]]:
    """Sylvester matrix in y; rows hold coefficients from y^deg down to y^0."""
    m, n = fp.y_degree, gp.y_degree
    if m < 1 or n < 1:
        raise ValueError("both polynomials need y-degree >= 1")
    size = m + n
    rows = []
    for poly, deg, count in ((fp, m, n), (gp, n, m)):
        lead_first = poly.y_coeffs[::-1]
        for r in range(count):
            row = [ZERO] * size
            row[r:r + deg + 1] = lead_first
            rows.append(row)
    return rows


def det_bareiss(mat: list[list[UPoly]]) -> UPoly:
    a = [list(row) for row in mat]
    size = len(a)
    if size == 0:
        return ONE
    prev = ONE
    for k in range(size - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, size) if a[r][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = a[i][j] * a[k][k] + a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                assert not r, "Bareiss division must be exact"
                a[i][j] = q
        prev = a[k][k]
    return a[-1][-1]


def det_cofactor(mat: list[list[UPoly]]) -> UPoly:
    """Leibniz expansion; only for small matrices (test oracle)."""
    size = len(mat)
    total = ZERO
    for perm in permutations(range(size)):
        term = ONE
        for i, j in enumerate(perm):
            term = term * mat[i][j]
            if not term:
                break
        total = total + term
    return total


def resultant_y(fp: BPoly, gp: BPoly) -> UPoly:
    """Res_y(fp, gp) in GF(2)[x].

    If one argument is free of y it is raised to the other's y-degree.
    """
    if not fp or not gp:
        return ZERO
    m, n = fp.y_degree, gp.y_degree
    if n == 0:
        return gp.in_x_only() ** m
    if m == 0:
        return fp.in_x_only() ** n
    return det_bareiss(sylvester(fp, gp))
