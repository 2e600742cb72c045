"""Arithmetic in GF(2^n), 2 <= n <= 24.

Elements are plain ints in ``[0, 2^n)``; bit i is the coefficient of x^i, so
field addition is XOR.  Scalar operations take a :class:`FieldSpec` first.
The ``*_array`` variants operate elementwise on numpy integer arrays and are
what the exhaustive spectra passes use.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from . import gf2poly

MIN_DEGREE = 2
MAX_DEGREE = 24
MAX_TABLE_DEGREE = 20

# Lexicographically smallest irreducible polynomial of each degree.
DEFAULT_MODULI = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021,
    15: 0x8003, 16: 0x1002B, 17: 0x20009, 18: 0x40009, 19: 0x80027,
    20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x100001B,
}

Elem = int


class FieldError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(2^n) defined by an irreducible ``modulus`` with bit n set.

    ``exp``/``log`` are the antilog/log tables with respect to the generator
    ``generator`` (``exp[log[a]] == a`` for a != 0); they are ``None`` above
    :data:`MAX_TABLE_DEGREE`.  ``log[0]`` is a sentinel and must not be used.
    """

    n: int
    modulus: int
    generator: int | None = None
    exp: np.ndarray | None = field(default=None, repr=False)
    log: np.ndarray | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def unit_order(self) -> int:
        return (1 << self.n) - 1

    @property
    def has_tables(self) -> bool:
        return self.exp is not None

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __getstate__(self):
        # tables are cheap to rebuild and large to pickle
        return {"n": self.n, "modulus": self.modulus, "tables": self.has_tables}

    def __setstate__(self, state):
        other = make_field(state["n"], state["modulus"], tables=state["tables"])
        for name in ("n", "modulus", "generator", "exp", "log"):
            object.__setattr__(self, name, getattr(other, name))


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _find_generator(n: int, modulus: int) -> int:
    order = (1 << n) - 1
    cofactors = [order // p for p in _prime_factors(order)]
    for g in range(2, 1 << n):
        if all(gf2poly.powmod2(g, c, modulus) != 1 for c in cofactors):
            return g
    raise FieldError(f"no generator found for modulus {modulus:#x}")


def _mul_array_by_scalar(arr: np.ndarray, c: int, n: int, modulus: int) -> np.ndarray:
    top = 1 << n
    out = np.zeros_like(arr)
    a = arr.copy()
    while c:
        if c & 1:
            out ^= a
        c >>= 1
        a <<= 1
        a ^= np.where(a & top, modulus, 0)
    return out


def _build_tables(n: int, modulus: int, g: int) -> tuple[np.ndarray, np.ndarray]:
    order = (1 << n) - 1
    exp = np.ones(1, dtype=np.int64)
    step = g
    # doubling: exp[k:2k] = exp[:k] * g^k
    while len(exp) < order:
        exp = np.concatenate([exp, _mul_array_by_scalar(exp, step, n, modulus)])
        step = gf2poly.mulmod2(step, step, modulus)
    exp = exp[:order]
    log = np.zeros(1 << n, dtype=np.int64)
    log[exp] = np.arange(order, dtype=np.int64)
    if len(np.unique(exp)) != order:
        raise FieldError("antilog table has repeated entries")
    return exp, log


def make_field(n: int, modulus: int | None = None, *, tables: bool | None = None) -> FieldSpec:
    """Build GF(2^n), by default with the table modulus for ``n``.

    Log tables are built for ``n <= 20`` unless ``tables`` says otherwise.
    """
    if not isinstance(n, (int, np.integer)) or not MIN_DEGREE <= n <= MAX_DEGREE:
        raise FieldError(f"degree out of range: n={n} (need {MIN_DEGREE}..{MAX_DEGREE})")
    n = int(n)
    if modulus is None:
        modulus = DEFAULT_MODULI[n]
    if gf2poly.degree(modulus) != n:
        raise FieldError(f"modulus {modulus:#x} does not have degree {n}")
    if not gf2poly.is_irreducible(modulus):
        raise FieldError(f"modulus {modulus:#x} is reducible")
    if tables is None:
        tables = n <= MAX_TABLE_DEGREE
    if not tables:
        return FieldSpec(n, modulus)
    g = _find_generator(n, modulus)
    exp, log = _build_tables(n, modulus, g)
    exp.flags.writeable = False
    log.flags.writeable = False
    return FieldSpec(n, modulus, g, exp, log)


def check_elem(f: FieldSpec, a: Elem) -> Elem:
    if not 0 <= a < f.order:
        raise FieldError(f"{a} is not an element of GF(2^{f.n})")
    return a


def add(a: Elem, b: Elem) -> Elem:
    return a ^ b


def mul(f: FieldSpec, a: Elem, b: Elem) -> Elem:
    return gf2poly.mod2(gf2poly.clmul(a, b), f.modulus)


def reduce_exponent(f: FieldSpec, d: int) -> int:
    """Map ``d >= 1`` to ``[1, 2^n - 1]``, preserving x -> x^d."""
    if d < 1:
        raise FieldError("exponent must be >= 1")
    r = d % f.unit_order
    return r if r else f.unit_order


def pow(f: FieldSpec, a: Elem, d: int) -> Elem:  # noqa: A001
    d = reduce_exponent(f, d)
    if a == 0:
        return 0
    if f.has_tables:
        return int(f.exp[int(f.log[a]) * d % f.unit_order])
    return gf2poly.powmod2(a, d, f.modulus)


def inv(f: FieldSpec, a: Elem) -> Elem:
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return pow(f, a, f.unit_order - 1) if f.unit_order > 1 else 1


def div(f: FieldSpec, a: Elem, b: Elem) -> Elem:
    return mul(f, a, inv(f, b))


def frobenius(f: FieldSpec, a: Elem, k: int = 1) -> Elem:
    """a^(2^k)."""
    for _ in range(k % f.n):
        a = mul(f, a, a)
    return a


def _trace_by_definition(f: FieldSpec, a: Elem, terms: int) -> int:
    s = 0
    for _ in range(terms):
        s ^= a
        a = mul(f, a, a)
    return s


_trace_masks: dict[tuple[int, int], int] = {}


def _trace_mask(f: FieldSpec) -> int:
    key = (f.n, f.modulus)
    mask = _trace_masks.get(key)
    if mask is None:
        mask = 0
        for i in range(f.n):
            if _trace_by_definition(f, 1 << i, f.n):
                mask |= 1 << i
        _trace_masks[key] = mask
    return mask


def abs_trace(f: FieldSpec, a: Elem) -> int:
    """Absolute trace a + a^2 + ... + a^(2^(n-1)), as 0 or 1."""
    return (a & _trace_mask(f)).bit_count() & 1


def abs_trace_array(f: FieldSpec, a: np.ndarray) -> np.ndarray:
    masked = np.asarray(a, dtype=np.int64) & _trace_mask(f)
    parity = np.zeros(masked.shape, dtype=np.int64)
    for i in range(f.n):
        parity ^= (masked >> i) & 1
    return parity


def in_subfield(f: FieldSpec, m: int, a: Elem) -> bool:
    return f.n % m == 0 and frobenius(f, a, m) == a


def subfield_trace(f: FieldSpec, m: int, a: Elem) -> int:
    """Trace from GF(2^m) to GF(2) of a subfield element of GF(2^(2m))."""
    if f.n != 2 * m:
        raise FieldError(f"subfield trace needs n = 2m, got n={f.n}, m={m}")
    if not in_subfield(f, m, a):
        raise FieldError(f"{a} is not in the subfield GF(2^{m})")
    t = _trace_by_definition(f, a, m)
    assert t in (0, 1)
    return t


class _ArtinSchreierSolver:
    """Solves y^2 + y = c by GF(2)-linear algebra on the map y -> y^2 + y.

    ``rows`` is an echelon basis of the image: (image vector, preimage),
    with distinct leading bits.
    """

    def __init__(self, f: FieldSpec):
        rows: list[tuple[int, int]] = []
        for i in range(f.n):
            pre = 1 << i
            img = mul(f, pre, pre) ^ pre
            for v, p in rows:
                if img ^ v < img:
                    img ^= v
                    pre ^= p
            if img:
                rows.append((img, pre))
                rows.sort(reverse=True)
        self.rows = rows

    def solve(self, c: int) -> int | None:
        y = 0
        for v, p in self.rows:
            if c ^ v < c:
                c ^= v
                y ^= p
        return None if c else y


_solvers: dict[tuple[int, int], _ArtinSchreierSolver] = {}
_solvers_lock = threading.Lock()


def _solver(f: FieldSpec) -> _ArtinSchreierSolver:
    key = (f.n, f.modulus)
    s = _solvers.get(key)
    if s is None:
        with _solvers_lock:
            s = _solvers.get(key)
            if s is None:
                s = _solvers[key] = _ArtinSchreierSolver(f)
    return s


def solve_quadratic(f: FieldSpec, alpha: Elem, beta: Elem) -> set[Elem]:
    """All roots of x^2 + alpha*x + beta in the field (0 or 2 of them)."""
    if alpha == 0:
        raise FieldError("alpha must be nonzero")
    a2 = mul(f, alpha, alpha)
    y = _solver(f).solve(div(f, beta, a2))
    if y is None:
        return set()
    r = mul(f, alpha, y)
    return {r, r ^ alpha}


# -- vectorized -------------------------------------------------------------

def mul_array(f: FieldSpec, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if f.has_tables:
        a, b = np.broadcast_arrays(a, b)
        nz = (a != 0) & (b != 0)
        out = np.zeros(a.shape, dtype=np.int64)
        out[nz] = f.exp[(f.log[a[nz]] + f.log[b[nz]]) % f.unit_order]
        return out
    top = 1 << f.n
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    a = a + np.zeros_like(out)
    for i in range(f.n):
        out ^= np.where((b >> i) & 1, a, 0)
        a = a << 1
        a ^= np.where(a & top, f.modulus, 0)
    return out


def pow_array(f: FieldSpec, a, d: int) -> np.ndarray:
    d = reduce_exponent(f, d)
    a = np.asarray(a, dtype=np.int64)
    if f.has_tables:
        out = np.zeros(a.shape, dtype=np.int64)
        nz = a != 0
        out[nz] = f.exp[(f.log[a[nz]] * d) % f.unit_order]
        return out
    result = np.where(a != 0, 1, 0).astype(np.int64)
    base = a.copy()
    while d:
        if d & 1:
            result = mul_array(f, result, base)
        base = mul_array(f, base, base)
        d >>= 1
    return result


def elements(f: FieldSpec) -> np.ndarray:
    return np.arange(f.order, dtype=np.int64)
