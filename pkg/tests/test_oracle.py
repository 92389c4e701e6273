import numpy as np
import pytest

from zgabor.dependence import NoGuaranteedDependency, find_dependency
from zgabor.oracle import dependency_search, gram_finite_section, rayleigh_quotient, random_sequence
from zgabor.sequences import FiniteSequence, GaborSystem
from zgabor.windows import comb_window, dense_window

delta = FiniteSequence.delta


def test_rayleigh_examples():
    assert rayleigh_quotient(GaborSystem(delta(0), 1, 1), delta(3)) == pytest.approx(1)
    assert rayleigh_quotient(GaborSystem(delta(0), 1, 1), FiniteSequence(-4, [1, 2j, 3])) == pytest.approx(1)
    with pytest.raises(ValueError):
        rayleigh_quotient(GaborSystem(delta(0), 1, 1), FiniteSequence.zero())


def test_gram_examples():
    lo, hi = gram_finite_section(GaborSystem(comb_window(2, 2), 2, 1), 0, 0)
    assert lo == pytest.approx(0, abs=1e-14) and hi == pytest.approx(4)
    assert gram_finite_section(GaborSystem(dense_window(3), 3, 3), -2, 2) == pytest.approx((3, 3))


def test_gram_sections_are_nested():
    rng = np.random.default_rng(4)
    g = FiniteSequence(0, rng.standard_normal(5) + 1j * rng.standard_normal(5))
    sys = GaborSystem(g, 2, 3)
    prev_lo, prev_hi = np.inf, 0.0
    for r in range(4):
        lo, hi = gram_finite_section(sys, -r, r)
        # eigenvalue interlacing: growing the family widens the spectrum
        assert lo <= prev_lo + 1e-12 and hi >= prev_hi - 1e-12
        prev_lo, prev_hi = lo, hi


def test_dependency_search_examples():
    cert = dependency_search(GaborSystem(delta(1) + delta(2), 2, 1), 5)
    assert cert is not None and cert.ell == 1 and cert.residual < 1e-10
    assert dependency_search(GaborSystem(dense_window(2), 2, 2), 6, tol=1e-6) is None
    cert = dependency_search(GaborSystem(delta(2) + delta(4), 2, 1), 3)
    assert cert.ell == 0


def _random_window(rng):
    n = int(rng.integers(1, 11))
    c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return FiniteSequence(int(rng.integers(-3, 4)), c)


def test_search_agrees_with_find_dependency():
    rng = np.random.default_rng(21)
    max_l, beyond = 8, []
    for _ in range(120):
        M, N = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        sys = GaborSystem(_random_window(rng), M, N)
        try:
            cert = find_dependency(sys)
        except NoGuaranteedDependency:
            assert dependency_search(sys, max_l) is None
            continue
        assert cert.residual <= 1e-8 * sys.window.norm()
        found = dependency_search(sys, max_l)
        if found is None:
            beyond.append((sys, cert.ell))
        else:
            assert found.ell <= cert.ell
    # the only misses are counting certificates whose ell exceeds the search depth
    for sys, ell in beyond:
        assert ell > max_l
        assert dependency_search(sys, ell) is not None


def test_sparse_window_dependent_without_guarantee():
    # delta_6 + delta_9 with (M, N) = (2, 3): no rule forces dependence, yet
    # E_{1/2} flips the sign at 9 only, and T_3 lines the pieces up
    sys = GaborSystem(FiniteSequence(6, [1, 0, 0, 1]), 2, 3)
    with pytest.raises(NoGuaranteedDependency):
        find_dependency(sys)
    cert = dependency_search(sys, 3)
    assert cert is not None and cert.ell == 1 and cert.residual < 1e-12


def test_dependent_family_collapses_rayleigh_floor_only_when_not_frame():
    # delta_2 is dependent for M = 2 yet still a tight frame
    sys = GaborSystem(comb_window(2, 1), 2, 1)
    assert dependency_search(sys, 0) is not None
    rng = np.random.default_rng(1)
    vals = [rayleigh_quotient(sys, random_sequence(rng)) for _ in range(20)]
    assert np.allclose(vals, 2)
