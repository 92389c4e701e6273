import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zgabor.sequences import (FiniteSequence, GaborSystem, LatticeIndex, column_order,
                              gabor_element, inner_product, modulate, synthesis_matrix,
                              translate)

delta = FiniteSequence.delta

complexes = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


@st.composite
def sequences(draw, max_len=10):
    coeffs = draw(st.lists(complexes, min_size=1, max_size=max_len))
    offset = draw(st.integers(-20, 20))
    g = FiniteSequence(offset, coeffs)
    if g.is_zero:
        g = delta(offset)
    return g


def test_trimming_and_zero():
    g = FiniteSequence(-2, [0, 0, 1, 2, 0])
    assert g.offset == 0 and list(g.coeffs) == [1, 2]
    assert g(0) == 1 and g(1) == 2 and g(-1) == 0 and g(5) == 0
    z = FiniteSequence(7, [0, 0])
    assert z.is_zero and z == FiniteSequence.zero() and z.offset == 0
    assert g.trimmed() == g


def test_support_counts():
    g = FiniteSequence(1, [1, 0, 0, 2])
    assert g.support_size == 2
    assert g.support_length == 4
    assert list(g.support) == [1, 4]


def test_modulate_examples():
    assert modulate(delta(0), 1, 4) == delta(0)
    assert modulate(delta(1), 1, 2) == -1 * delta(1)
    comb = delta(2) + delta(4)
    assert modulate(comb, 1, 2) == comb


def test_translate_examples():
    assert translate(delta(0), 3) == delta(3)
    assert translate(delta(5), -5) == delta(0)
    N = 4
    g = FiniteSequence(1, np.arange(1, N + 1))
    assert list(translate(g, N).support) == list(range(N + 1, 2 * N + 1))


def test_gabor_element_examples():
    sys = GaborSystem(delta(0), 2, 1)
    assert gabor_element(sys, LatticeIndex(0, 2)) == delta(2)
    # phase at j = 2 is e^{2 pi i 2/2} = 1
    assert gabor_element(sys, LatticeIndex(1, 2)) == delta(2)
    with pytest.raises(IndexError):
        gabor_element(sys, LatticeIndex(2, 0))
    with pytest.raises(IndexError):
        sys.index(-1, 0)


def test_inner_product_examples():
    assert inner_product(delta(0), delta(0)) == 1
    assert inner_product(delta(0), delta(1)) == 0
    g = FiniteSequence(3, [1 + 2j, -1j])
    ip = inner_product(g, g)
    assert ip.imag == 0 and ip.real == pytest.approx(g.norm() ** 2)
    assert inner_product(g, FiniteSequence.zero()) == 0


def test_gabor_system_validation():
    with pytest.raises(ValueError):
        GaborSystem(delta(0), 0, 1)
    with pytest.raises(ValueError):
        GaborSystem(delta(0), 1, 0)
    with pytest.raises(ValueError):
        GaborSystem(FiniteSequence.zero(), 1, 1)
    GaborSystem(FiniteSequence.zero(), 1, 1, allow_zero=True)


def test_synthesis_matrix_identity():
    A, rows = synthesis_matrix(GaborSystem(delta(0), 1, 1), 0, 2)
    assert np.array_equal(A, np.eye(3))
    assert list(rows) == [0, 1, 2]


def test_synthesis_matrix_dimension_count():
    # L = 2, ell = 1: (ell+1) M = 4 columns in L + ell N = 3 rows
    A, rows = synthesis_matrix(GaborSystem(delta(1) + delta(2), 2, 1), 0, 1)
    assert A.shape == (3, 4)
    assert list(rows) == [1, 2, 3]


def test_synthesis_matrix_zero_window():
    with pytest.raises(ValueError):
        synthesis_matrix(GaborSystem(FiniteSequence.zero(), 2, 1, allow_zero=True), 0, 1)
    with pytest.raises(ValueError):
        synthesis_matrix(GaborSystem(delta(0), 2, 1), 2, 1)


@settings(max_examples=60, deadline=None)
@given(sequences(), st.integers(1, 6), st.integers(1, 4), st.integers(-3, 3), st.integers(0, 2))
def test_synthesis_columns_match_elements(g, M, N, n_lo, width):
    sys = GaborSystem(g, M, N)
    A, rows = synthesis_matrix(sys, n_lo, n_lo + width)
    for col, idx in enumerate(column_order(M, n_lo, n_lo + width)):
        e = gabor_element(sys, idx)
        assert np.array_equal(A[:, col], e.values_on(rows))
        # rows cover the whole support of every element
        assert set(e.support) <= set(rows)
        assert np.linalg.norm(A[:, col]) == pytest.approx(g.norm(), rel=1e-14)


@settings(max_examples=100, deadline=None)
@given(sequences(), st.integers(1, 8), st.integers(-10, 10), st.integers(-6, 6))
def test_isometry(g, M, m, n):
    N = 3
    e = gabor_element(GaborSystem(g, M, N), LatticeIndex(m % M, n))
    assert e.norm() == pytest.approx(g.norm(), rel=1e-14)
    assert e.support_size == g.support_size


@settings(max_examples=100, deadline=None)
@given(sequences(), st.integers(1, 8), st.integers(0, 7), st.integers(-6, 6))
def test_commutation(g, M, m, n):
    m %= M
    lhs = translate(modulate(g, m, M), n)
    rhs = modulate(translate(g, n), m, M) * cmath.exp(-2j * cmath.pi * n * m / M)
    assert np.max(np.abs(lhs.values_on(lhs.indices) - rhs.values_on(lhs.indices))) <= 1e-14 * max(1, g.norm())


@settings(max_examples=60, deadline=None)
@given(sequences(), st.integers(1, 8), st.integers(-20, 20))
def test_modulation_periodicity(g, M, m):
    assert modulate(g, m + M, M) == modulate(g, m, M)


@given(sequences())
def test_trim_idempotent(g):
    padded = FiniteSequence(g.offset - 2, np.concatenate([[0, 0], g.coeffs, [0]]))
    assert padded == g
    assert padded.trimmed().trimmed() == g
