"""Catalog of power-exponent families and the integer number theory they need.

Every family generates ``(d, params)`` pairs for a given n, with d reduced
modulo 2^n - 1.  Exponents congruent to 0 are dropped: x^(2^n-1) is not a
power map of the kind the catalog describes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable, Iterator

__all__ = [
    "FamilySpec", "FamilyShapeError", "CATALOG", "gcd", "modinv", "coset", "coset_rep",
    "coset_reps", "gen_exponents", "covered_by", "matching_families", "blondeau_pairs",
    "families_with_claim", "get_family",
]

CLAIMS = ("apn", "zero_apn", "locally_apn", "bu2")


class FamilyShapeError(ValueError):
    """The family is not defined for this n."""


def modinv(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def coset(d: int, n: int) -> frozenset[int]:
    """Cyclotomic coset {d * 2^i mod 2^n - 1}."""
    mod = (1 << n) - 1
    d %= mod
    if d == 0:
        return frozenset({mod})
    return frozenset((d << i) % mod for i in range(n))


def coset_rep(d: int, n: int) -> int:
    return min(coset(d, n))


@lru_cache(maxsize=None)
def coset_reps(n: int) -> tuple[int, ...]:
    """Sorted minimal representatives of the nonzero cosets mod 2^n - 1."""
    if not 2 <= n <= 24:
        raise ValueError(f"n out of range: {n}")
    mod = (1 << n) - 1
    seen = bytearray(mod)
    reps = []
    for d in range(1, mod):
        if seen[d]:
            continue
        reps.append(d)
        x = d
        for _ in range(n):
            seen[x] = 1
            x = (x << 1) % mod
    return tuple(reps)


Generator = Callable[[int], Iterator[tuple[int, dict]]]


@dataclass(frozen=True)
class FamilySpec:
    """A named exponent family.

    ``claims`` lists the properties the source result asserts for every
    member; most families carry one, f1 carries three.
    """

    name: str
    claims: tuple[str, ...]
    formula: str
    conditions: str
    generator: Generator

    def generate(self, n: int) -> list[tuple[int, dict]]:
        mod = (1 << n) - 1
        out = []
        for d, params in self.generator(n):
            d %= mod
            if d:
                out.append((d, params))
        return out


def _shape(ok: bool, family: str, need: str, n: int) -> None:
    if not ok:
        raise FamilyShapeError(f"{family} needs {need}; got n={n}")


def _gold(n):
    for i in range(1, n // 2 + 1):
        if gcd(i, n) == 1:
            yield (1 << i) + 1, {"i": i}


def _kasami(n):
    for i in range(1, n // 2 + 1):
        if gcd(i, n) == 1:
            yield (1 << 2 * i) - (1 << i) + 1, {"i": i}


def _welch(n):
    _shape(n % 2 == 1 and n >= 3, "welch", "n = 2t+1", n)
    t = (n - 1) // 2
    yield (1 << t) + 3, {"t": t}


def _niho(n):
    _shape(n % 2 == 1 and n >= 3, "niho", "n = 2t+1", n)
    t = (n - 1) // 2
    if t % 2 == 0:
        yield (1 << t) + (1 << t // 2) - 1, {"t": t}
    else:
        yield (1 << t) + (1 << (3 * t + 1) // 2) - 1, {"t": t}


def _inverse(n):
    _shape(n % 2 == 1 and n >= 3, "inverse", "n = 2t+1", n)
    t = (n - 1) // 2
    yield (1 << 2 * t) - 1, {"t": t}


def _dobbertin(n):
    _shape(n % 5 == 0, "dobbertin", "n = 5i", n)
    i = n // 5
    yield (1 << 4 * i) + (1 << 3 * i) + (1 << 2 * i) + (1 << i) - 1, {"i": i}


def _c1(n):
    for i in range(2, n):
        if gcd(i - 1, n) == 1:
            yield (1 << i) - 1, {"i": i}


def _c2(n):
    if n % 6:
        yield 21, {}


def _c3(n):
    units = [r for r in range(1, n) if gcd(r, n) == 1]
    for a, r in enumerate(units):
        for t in units[a:]:
            yield (1 << r) + (1 << t) - 1, {"r": r, "t": t}


def _c4(n):
    _shape(n % 8 == 0, "c4", "n = 4t with t even", n)
    t = n // 4
    yield (1 << 2 * t) + (1 << t) + 1, {"t": t}


def _c5(n):
    for s in range(1, n):
        if gcd(n, s + 1) == 1:
            yield (1 << n) - (1 << s), {"s": s}


def _half(n, family, m_parity=None):
    ok = n % 2 == 0 and (m_parity is None or (n // 2) % 2 == m_parity)
    need = "n = 2m" + {None: "", 0: " with m even", 1: " with m odd"}[m_parity]
    _shape(ok, family, need, n)
    return n // 2


def _f1(n):
    m = _half(n, "f1", 0)
    for j in range(1, (1 << m) + 1):
        if gcd(j, (1 << m) + 1) == 1:
            yield j * ((1 << m) - 1), {"m": m, "j": j}


def _f2(n):
    m = _half(n, "f2", 0)
    j = ((1 << m) + 2) // 3
    yield ((1 << m) - 1) * j + 1, {"m": m, "j": j}


def _t32_1(n):
    m = _half(n, "t32_1", 0)
    if m % 3:
        yield (1 << 2 * m - 1) - (1 << m) - 1, {"m": m}


def _t32_2(n):
    m = _half(n, "t32_2", 1)
    yield (1 << 2 * m - 1) - (1 << m - 1) - 1, {"m": m}


def _t32_3(n):
    _shape(n % 8 == 0, "t32_3", "n = 2m, m = 2k with k even", n)
    k = n // 4
    yield (1 << 3 * k) - (1 << 2 * k) + (1 << k) - 1, {"m": 2 * k, "k": k}


def _odd_m(n, family):
    _shape(n % 2 == 1 and n >= 5, family, "n = 2m+1 with m >= 2", n)
    return (n - 1) // 2


def _t33_1(n):
    m = _odd_m(n, "t33_1")
    if m % 3 != 1:
        yield (1 << 2 * m) - (1 << m) - 1, {"m": m}


def _t33_2(n):
    m = _odd_m(n, "t33_2")
    yield (1 << 2 * m - 1) - (1 << m - 1) - 1, {"m": m}


def _t33_3(n):
    m = _odd_m(n, "t33_3")
    yield (1 << 2 * m - 1) - (1 << m) - 1, {"m": m}


CATALOG: dict[str, FamilySpec] = {
    spec.name: spec
    for spec in [
        FamilySpec("gold", ("apn",), "2^i+1", "gcd(i,n)=1", _gold),
        FamilySpec("kasami", ("apn",), "2^(2i)-2^i+1", "gcd(i,n)=1", _kasami),
        FamilySpec("welch", ("apn",), "2^t+3", "n=2t+1", _welch),
        FamilySpec("niho", ("apn",), "2^t+2^(t/2)-1 | 2^t+2^((3t+1)/2)-1",
                   "n=2t+1, by parity of t", _niho),
        FamilySpec("inverse", ("apn",), "2^(2t)-1", "n=2t+1", _inverse),
        FamilySpec("dobbertin", ("apn",), "2^(4i)+2^(3i)+2^(2i)+2^i-1", "n=5i", _dobbertin),
        FamilySpec("c1", ("zero_apn",), "2^i-1", "gcd(i-1,n)=1", _c1),
        FamilySpec("c2", ("zero_apn",), "21", "6 does not divide n", _c2),
        FamilySpec("c3", ("zero_apn",), "2^r+2^t-1", "gcd(r,n)=gcd(t,n)=1", _c3),
        FamilySpec("c4", ("zero_apn",), "2^(2t)+2^t+1", "n=4t, t even", _c4),
        FamilySpec("c5", ("zero_apn",), "2^n-2^s", "gcd(n,s+1)=1", _c5),
        FamilySpec("f1", ("locally_apn", "bu2", "zero_apn"), "j(2^m-1)",
                   "n=2m, m even, gcd(j,2^m+1)=1", _f1),
        FamilySpec("f2", ("locally_apn",), "(2^m-1)j+1", "n=2m, m even, j=(2^m+2)/3", _f2),
        FamilySpec("t32_1", ("zero_apn",), "2^(2m-1)-2^m-1", "n=2m, m even, 3 does not divide m", _t32_1),
        FamilySpec("t32_2", ("zero_apn",), "2^(2m-1)-2^(m-1)-1", "n=2m, m odd", _t32_2),
        FamilySpec("t32_3", ("zero_apn",), "2^(3k)-2^(2k)+2^k-1", "n=2m, m=2k, k even", _t32_3),
        FamilySpec("t33_1", ("zero_apn",), "2^(2m)-2^m-1", "n=2m+1, m != 1 mod 3", _t33_1),
        FamilySpec("t33_2", ("zero_apn",), "2^(2m-1)-2^(m-1)-1", "n=2m+1", _t33_2),
        FamilySpec("t33_3", ("zero_apn",), "2^(2m-1)-2^m-1", "n=2m+1", _t33_3),
    ]
}

APN_FAMILIES = ("gold", "kasami", "welch", "niho", "inverse", "dobbertin")
ZERO_APN_FAMILIES = ("c1", "c2", "c3", "c4", "c5")


def get_family(name: str) -> FamilySpec:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(CATALOG)}") from None


def families_with_claim(claim: str) -> list[str]:
    return [name for name, spec in CATALOG.items() if claim in spec.claims]


def gen_exponents(fam: FamilySpec | str, n: int) -> list[tuple[int, dict]]:
    """All parameterizations of ``fam`` at n; raises FamilyShapeError on a wrong-shape n."""
    if isinstance(fam, str):
        fam = get_family(fam)
    return fam.generate(n)


@lru_cache(maxsize=None)
def _family_cosets(name: str, n: int) -> frozenset[int]:
    try:
        exps = gen_exponents(name, n)
    except FamilyShapeError:
        return frozenset()
    return frozenset(coset_rep(d, n) for d, _ in exps)


def covered_by(fam: FamilySpec | str, n: int, d: int) -> bool:
    """Whether the coset of d meets the exponents of ``fam`` at n."""
    name = fam if isinstance(fam, str) else fam.name
    return coset_rep(d, n) in _family_cosets(name, n)


def matching_families(n: int, d: int) -> list[str]:
    rep = coset_rep(d, n)
    return [name for name in CATALOG if rep in _family_cosets(name, n)]


def blondeau_pairs(n: int) -> list[tuple[int, int]]:
    """(2^t - 1, 2^(n-t+1) - 1) for t in [2, n-1], reduced mod 2^n - 1."""
    if n < 3:
        raise ValueError("blondeau_pairs needs n >= 3")
    mod = (1 << n) - 1
    return [(((1 << t) - 1) % mod, ((1 << n - t + 1) - 1) % mod) for t in range(2, n)]


def f1_shape_exponents(n: int) -> list[int]:
    """j(2^m - 1) with gcd(j, 2^m + 1) = 1 at n = 2m, for either parity of m.

    The catalog's f1 keeps the m-even hypothesis; this wider shape is only
    used to describe scan results.
    """
    if n % 2:
        return []
    m = n // 2
    mod = (1 << n) - 1
    return [j * ((1 << m) - 1) % mod for j in range(1, (1 << m) + 1) if gcd(j, (1 << m) + 1) == 1]
