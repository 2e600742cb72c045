"""Differential and boomerang analysis of power maps x -> x^d.

For a power map every derivative direction a != 0 is a relabelling of a = 1
(put x = a*y), so the fast routines only look at the a = 1 row.  The
``full_*`` functions enumerate every direction and serve as oracles.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import gcd

import numpy as np

from . import gf2n
from .gf2n import FieldSpec

ORACLE_MAX_DEGREE = 8
BOOMERANG_MAX_DEGREE = 14

# Classes larger than this go through a Walsh-Hadamard autocorrelation
# instead of an explicit k*k pair expansion.
_PAIR_BLOCK_LIMIT = 1 << 22


@dataclass(frozen=True, eq=False)
class DiffRow:
    """counts[b] = #{x : (x+1)^d + x^d = b}."""

    field: FieldSpec
    d: int
    counts: np.ndarray

    @property
    def du(self) -> int:
        return int(self.counts.max())

    @property
    def off_unit_max(self) -> int:
        """Largest count over b not in {0, 1}."""
        rest = self.counts[2:]
        return int(rest.max()) if len(rest) else 0


@dataclass
class ClassificationRecord:
    n: int
    d: int
    coset_rep: int
    du: int
    bu: int | None
    is_apn: bool
    is_locally_apn: bool
    is_zero_apn: bool
    is_permutation: bool
    matched_families: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ClassificationRecord":
        return cls(**data)


def power_table(f: FieldSpec, d: int) -> np.ndarray:
    """x^d for every x in the field, indexed by x."""
    return gf2n.pow_array(f, gf2n.elements(f), d)


def _derivative(table: np.ndarray) -> np.ndarray:
    xs = np.arange(len(table))
    return table[xs ^ 1] ^ table


def ddt_row(f: FieldSpec, d: int, table: np.ndarray | None = None) -> DiffRow:
    if table is None:
        table = power_table(f, d)
    counts = np.bincount(_derivative(table), minlength=f.order)
    return DiffRow(f, gf2n.reduce_exponent(f, d), counts)


def differential_uniformity(f: FieldSpec, d: int) -> int:
    return ddt_row(f, d).du


def is_apn(f: FieldSpec, d: int) -> bool:
    return ddt_row(f, d).du <= 2


def is_locally_apn(f: FieldSpec, d: int) -> bool:
    return ddt_row(f, d).off_unit_max <= 2


def is_zero_apn(f: FieldSpec, d: int) -> bool:
    return int(ddt_row(f, d).counts[1]) == 2


def fwht(h: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform of a length-2^k vector."""
    h = np.array(h, dtype=np.int64)
    size = len(h)
    step = 1
    while step < size:
        v = h.reshape(-1, 2, step)
        a = v[:, 0, :].copy()
        v[:, 0, :] += v[:, 1, :]
        v[:, 1, :] = a - v[:, 1, :]
        step *= 2
    return h


def _xor_autocorrelation(values: np.ndarray, size: int) -> np.ndarray:
    """out[b] = #{(i, j) : values[i] ^ values[j] == b}."""
    spec = fwht(np.bincount(values, minlength=size))
    return fwht(spec * spec) // size


def boomerang_counts(f: FieldSpec, d: int, table: np.ndarray | None = None) -> np.ndarray:
    """counts[b] = #{(x, y) : x^d + y^d = b = (x+1)^d + (y+1)^d}, at a = 1.

    Both equations together say x and y share the same derivative value, so
    the pairs are enumerated inside each level set of the derivative.
    """
    if table is None:
        table = power_table(f, d)
    size = f.order
    deriv = _derivative(table)
    order = np.argsort(deriv, kind="stable")
    ds, vs = deriv[order], table[order]
    starts = np.flatnonzero(np.r_[True, ds[1:] != ds[:-1]])
    sizes = np.diff(np.r_[starts, size])
    counts = np.zeros(size, dtype=np.int64)
    for k in np.unique(sizes):
        k = int(k)
        sel = starts[sizes == k]
        if k * k > _PAIR_BLOCK_LIMIT or k * k > 4 * f.n * size:
            for s in sel:
                counts += _xor_autocorrelation(vs[s:s + k], size)
            continue
        chunk = max(1, _PAIR_BLOCK_LIMIT // (k * k))
        offsets = np.arange(k)
        for lo in range(0, len(sel), chunk):
            block = vs[sel[lo:lo + chunk, None] + offsets]
            pairs = block[:, :, None] ^ block[:, None, :]
            counts += np.bincount(pairs.ravel(), minlength=size)
    return counts


def boomerang_counts_pairwise(f: FieldSpec, d: int) -> np.ndarray:
    """Same as :func:`boomerang_counts` by a straight pass over all (x, y)."""
    table = power_table(f, d)
    xs = gf2n.elements(f)
    counts = np.zeros(f.order, dtype=np.int64)
    for x in range(f.order):
        b = table[x] ^ table
        hit = b == (table[x ^ 1] ^ table[xs ^ 1])
        counts += np.bincount(b[hit], minlength=f.order)
    return counts


def boomerang_uniformity(f: FieldSpec, d: int, table: np.ndarray | None = None) -> int:
    """Max over b != 0 of the a = 1 boomerang system solution count."""
    return int(boomerang_counts(f, d, table)[1:].max())


def _check_oracle_budget(f: FieldSpec) -> None:
    if f.n > ORACLE_MAX_DEGREE:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_DEGREE}, got n={f.n}")


def full_ddt_max(f: FieldSpec, d: int) -> int:
    """Differential uniformity over every direction a != 0, by enumeration."""
    _check_oracle_budget(f)
    table = power_table(f, d)
    xs = gf2n.elements(f)
    return max(
        int(np.bincount(table[xs ^ a] ^ table, minlength=f.order).max())
        for a in range(1, f.order)
    )


def full_bct_max(f: FieldSpec, d: int) -> int:
    """Boomerang uniformity over every a != 0 and b != 0, by enumeration."""
    _check_oracle_budget(f)
    table = power_table(f, d)
    xs = gf2n.elements(f)
    left = table[:, None] ^ table[None, :]
    best = 0
    for a in range(1, f.order):
        shifted = table[xs ^ a]
        right = shifted[:, None] ^ shifted[None, :]
        b = left[left == right]
        counts = np.bincount(b, minlength=f.order)
        best = max(best, int(counts[1:].max()))
    return best


def classify(f: FieldSpec, d: int, with_bu: bool = False, families: bool = True) -> ClassificationRecord:
    """Run the differential (and optionally boomerang) pass for one exponent."""
    from . import families as fam

    d = gf2n.reduce_exponent(f, d)
    if with_bu and f.n > BOOMERANG_MAX_DEGREE:
        raise ValueError(f"boomerang pass limited to n <= {BOOMERANG_MAX_DEGREE}")
    table = power_table(f, d)
    row = ddt_row(f, d, table)
    bu = boomerang_uniformity(f, d, table) if with_bu else None
    return ClassificationRecord(
        n=f.n,
        d=d,
        coset_rep=fam.coset_rep(d, f.n),
        du=row.du,
        bu=bu,
        is_apn=row.du <= 2,
        is_locally_apn=row.off_unit_max <= 2,
        is_zero_apn=int(row.counts[1]) == 2,
        is_permutation=gcd(d, f.unit_order) == 1,
        matched_families=fam.matching_families(f.n, d) if families else [],
    )
