import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from apnlike import gf2n, gf2poly
from apnlike.gf2n import FieldError, make_field


def irreducible_by_trial_division(f):
    n = gf2poly.degree(f)
    for d in range(1, n // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if gf2poly.mod2(f, g) == 0:
                return False
    return True


def schoolbook_mul(a, b, modulus):
    coeffs = [0] * (a.bit_length() + b.bit_length() + 1)
    for i in range(a.bit_length()):
        for j in range(b.bit_length()):
            coeffs[i + j] ^= (a >> i & 1) & (b >> j & 1)
    p = sum(c << i for i, c in enumerate(coeffs))
    n = gf2poly.degree(modulus)
    for i in range(len(coeffs) - 1, n - 1, -1):
        if p >> i & 1:
            p ^= modulus << (i - n)
    return p


@pytest.mark.parametrize("n", range(2, 17))
def test_default_modulus_is_smallest_irreducible(n):
    mod = gf2n.DEFAULT_MODULI[n]
    assert irreducible_by_trial_division(mod)
    for smaller in range((1 << n), mod):
        assert not irreducible_by_trial_division(smaller)


@pytest.mark.parametrize("n", range(17, 25))
def test_default_modulus_large_degrees_irreducible(n):
    assert gf2poly.is_irreducible(gf2n.DEFAULT_MODULI[n])
    assert gf2poly.degree(gf2n.DEFAULT_MODULI[n]) == n


def test_make_field_examples():
    f = make_field(3)
    assert f.modulus == 0b1011
    assert f.has_tables
    assert irreducible_by_trial_division(make_field(8).modulus)
    with pytest.raises(FieldError, match="degree out of range"):
        make_field(1)
    with pytest.raises(FieldError, match="degree out of range"):
        make_field(25)
    with pytest.raises(FieldError, match="reducible"):
        make_field(4, 0b10101)


def test_no_tables_above_twenty():
    f = make_field(21)
    assert not f.has_tables
    assert gf2n.mul(f, 1 << 20, 2) == f.modulus ^ (1 << 21)


@pytest.mark.parametrize("n", [2, 3, 5, 8, 12])
def test_tables_are_consistent(n):
    f = make_field(n)
    nz = np.arange(1, f.order)
    assert np.array_equal(f.exp[f.log[nz]], nz)
    assert len(np.unique(f.exp)) == f.unit_order


def test_mul_examples():
    f = make_field(3)
    x = 0b10
    assert gf2n.mul(f, x, x) == 0b100
    assert gf2n.mul(f, 0b100, x) == 0b011
    assert all(gf2n.mul(f, a, 1) == a for a in range(8))


@pytest.mark.parametrize("n", range(2, 9))
def test_table_mul_matches_reduction(n):
    f = make_field(n)
    xs = gf2n.elements(f)
    table = gf2n.mul_array(f, xs[:, None], xs[None, :])
    nt = make_field(n, tables=False)
    plain = gf2n.mul_array(nt, xs[:, None], xs[None, :])
    assert np.array_equal(table, plain)
    for a, b in itertools.product(range(f.order), repeat=2):
        if (a * 31 + b) % 7 == 0:
            assert table[a, b] == schoolbook_mul(a, b, f.modulus) == gf2n.mul(f, a, b)


@pytest.mark.parametrize("n", range(2, 7))
def test_distributivity_exhaustive(n):
    f = make_field(n)
    xs = gf2n.elements(f)
    a, b, c = np.meshgrid(xs, xs, xs, indexing="ij")
    lhs = gf2n.mul_array(f, a, b ^ c)
    rhs = gf2n.mul_array(f, a, b) ^ gf2n.mul_array(f, a, c)
    assert np.array_equal(lhs, rhs)


fields = st.sampled_from([make_field(n) for n in (4, 7, 10, 13, 16, 22)])


@settings(max_examples=200, deadline=None)
@given(f=fields, data=st.data())
def test_field_axioms_random(f, data):
    el = st.integers(0, f.order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert gf2n.mul(f, a, b) == gf2n.mul(f, b, a)
    assert gf2n.mul(f, gf2n.mul(f, a, b), c) == gf2n.mul(f, a, gf2n.mul(f, b, c))
    assert gf2n.mul(f, a, b ^ c) == gf2n.mul(f, a, b) ^ gf2n.mul(f, a, c)
    if a:
        assert gf2n.mul(f, a, gf2n.inv(f, a)) == 1


@settings(max_examples=200, deadline=None)
@given(f=fields, data=st.data())
def test_pow_is_additive_in_exponent(f, data):
    a = data.draw(st.integers(1, f.order - 1))
    d1, d2 = data.draw(st.integers(1, 5000)), data.draw(st.integers(1, 5000))
    assert gf2n.pow(f, a, d1 + d2) == gf2n.mul(f, gf2n.pow(f, a, d1), gf2n.pow(f, a, d2))


def test_pow_examples():
    f = make_field(3)
    assert gf2n.pow(f, 0b10, 3) == 0b011
    for n in (3, 6, 9):
        g = make_field(n)
        assert all(gf2n.pow(g, a, g.unit_order) == 1 for a in range(1, g.order))
        assert gf2n.pow(g, 0, 5) == 0
    with pytest.raises(FieldError):
        gf2n.pow(f, 3, 0)
    with pytest.raises(FieldError):
        gf2n.pow(f, 3, -2)


@pytest.mark.parametrize("n", [5, 8, 21])
def test_pow_array_matches_scalar(n):
    f = make_field(n)
    rng = np.random.default_rng(n)
    xs = rng.integers(0, f.order, 300)
    for d in (1, 3, 91, f.unit_order, f.unit_order + 7, 123456):
        got = gf2n.pow_array(f, xs, d)
        assert [int(v) for v in got] == [gf2n.pow(f, int(x), d) for x in xs]


def test_reduce_exponent():
    f = make_field(4)
    assert gf2n.reduce_exponent(f, 15) == 15
    assert gf2n.reduce_exponent(f, 30) == 15
    assert gf2n.reduce_exponent(f, 16) == 1


@pytest.mark.parametrize("n", range(2, 11))
def test_trace_properties(n):
    f = make_field(n)
    traces = [gf2n.abs_trace(f, a) for a in range(f.order)]
    defn = [gf2n._trace_by_definition(f, a, n) for a in range(f.order)]
    assert traces == defn
    assert set(traces) <= {0, 1}
    assert traces.count(0) == 1 << (n - 1)
    assert gf2n.abs_trace(f, 1) == n % 2
    assert gf2n.abs_trace(f, 0) == 0
    for a in range(0, f.order, 3):
        assert traces[gf2n.mul(f, a, a)] == traces[a]
        for b in range(0, f.order, 5):
            assert traces[a ^ b] == traces[a] ^ traces[b]
    assert np.array_equal(gf2n.abs_trace_array(f, gf2n.elements(f)), traces)


def test_subfield_trace():
    assert gf2n.subfield_trace(make_field(8), 4, 1) == 0
    assert gf2n.subfield_trace(make_field(6), 3, 1) == 1
    f = make_field(8)
    outside = next(a for a in range(f.order) if not gf2n.in_subfield(f, 4, a))
    with pytest.raises(FieldError):
        gf2n.subfield_trace(f, 4, outside)
    with pytest.raises(FieldError):
        gf2n.subfield_trace(make_field(9), 4, 1)
    # agrees with the absolute trace of GF(2^m) through the subfield
    sub = [a for a in range(f.order) if gf2n.in_subfield(f, 4, a)]
    assert len(sub) == 16
    assert sum(gf2n.subfield_trace(f, 4, a) for a in sub) == 8


def test_solve_quadratic_examples():
    f = make_field(5)
    assert gf2n.solve_quadratic(f, 1, 0) == {0, 1}
    with pytest.raises(FieldError):
        gf2n.solve_quadratic(f, 0, 3)


@pytest.mark.parametrize("n", range(2, 11))
def test_solve_quadratic_against_root_search(n):
    f = make_field(n)
    xs = gf2n.elements(f)
    sq = gf2n.mul_array(f, xs, xs)
    for alpha in range(1, f.order, max(1, f.order // 16)):
        ax = gf2n.mul_array(f, xs, alpha)
        lhs = sq ^ ax
        for beta in range(f.order):
            roots = {int(v) for v in xs[lhs == beta]}
            got = gf2n.solve_quadratic(f, alpha, beta)
            assert got == roots
            assert len(got) in (0, 2)
            t = gf2n.abs_trace(f, gf2n.div(f, beta, gf2n.mul(f, alpha, alpha)))
            assert (len(got) == 2) == (t == 0)
            if got:
                r0, r1 = sorted(got)
                assert r0 ^ r1 == alpha


@settings(max_examples=100, deadline=None)
@given(f=st.sampled_from([make_field(n) for n in (12, 17, 24)]), data=st.data())
def test_solve_quadratic_large_fields(f, data):
    alpha = data.draw(st.integers(1, f.order - 1))
    beta = data.draw(st.integers(0, f.order - 1))
    got = gf2n.solve_quadratic(f, alpha, beta)
    for r in got:
        assert gf2n.mul(f, r, r) ^ gf2n.mul(f, alpha, r) ^ beta == 0
    t = gf2n.abs_trace(f, gf2n.div(f, beta, gf2n.mul(f, alpha, alpha)))
    assert (len(got) == 2) == (t == 0)


def test_field_pickles():
    import pickle

    f = make_field(10)
    g = pickle.loads(pickle.dumps(f))
    assert g == f and g.has_tables
    assert np.array_equal(g.exp, f.exp)
