import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from zgabor.dependence import find_dependency, verify_certificate
from zgabor.oracle import bspline_integer_samples
from zgabor.sequences import FiniteSequence, GaborSystem, modulate
from zgabor.spectral import frame_bounds, is_frame
from zgabor.windows import (bspline_samples, bspline_window, comb_window, default_l_max,
                            dense_window, dependent_infinite_window, gaussian_tail,
                            gaussian_window, perturbed_window)


def test_dense_window():
    assert dense_window(1) == FiniteSequence.delta(1)
    g = dense_window(3, [1, 2j, -1])
    assert list(g.support) == [1, 2, 3]
    with pytest.raises(ValueError):
        dense_window(3, [1, 0, 1])
    with pytest.raises(ValueError):
        dense_window(2, [1, 1, 1])
    with pytest.raises(ValueError):
        dense_window(0)


def test_comb_window():
    g = comb_window(3, 2)
    assert list(g.support) == [3, 6]
    for m in range(3):
        assert modulate(g, m, 3) == g
    assert comb_window(2, 4).support_size == 4
    with pytest.raises(ValueError):
        comb_window(1, 3)


def test_perturbed_example():
    rec = perturbed_window(2, 1, 2)
    # base delta_1 has A = 2, so eps = 0.5 min(2, sqrt 2) / sqrt 2 = 0.5
    assert rec.parameters["eps"] == pytest.approx(0.5)
    assert rec.window.support_size == 2
    ok, rep = is_frame(GaborSystem(rec.window, 2, 1))
    assert ok and rep.A >= rec.parameters["guaranteed_A"] - 1e-9


def test_perturbed_errors():
    with pytest.raises(ValueError):
        perturbed_window(2, 2, 2)
    with pytest.raises(ValueError):
        perturbed_window(2, 3, 4)
    with pytest.raises(ValueError):
        perturbed_window(2, 1, 3, rho=1.0)


@pytest.mark.parametrize("M,N,K", [(2, 1, 5), (3, 3, 4), (4, 4, 5), (5, 2, 6), (6, 6, 7)])
def test_perturbed_frames(M, N, K):
    for rho in (0.5, 0.999):
        rec = perturbed_window(M, N, K, rho)
        rep = frame_bounds(GaborSystem(rec.window, M, N))
        assert rep.is_frame and rec.window.support_size == K
        assert rep.A >= rec.parameters["guaranteed_A"] - 1e-9


def test_step_proportional_to_A_can_destroy_the_frame():
    # a step rho * A / ((K - N) sqrt M) exceeds sqrt(A) once A > 1
    M, N, K, rho = 4, 4, 5, 0.5
    A = frame_bounds(GaborSystem(dense_window(N), M, N)).A
    eps = rho * A / ((K - N) * math.sqrt(M))
    g = dense_window(N) + FiniteSequence(N + 1, [eps])
    assert frame_bounds(GaborSystem(g, M, N)).A < 1e-8
    assert is_frame(GaborSystem(perturbed_window(M, N, K, rho).window, M, N))[0]


def test_bspline_examples():
    assert bspline_window(1) == FiniteSequence.delta(1)
    assert np.allclose(bspline_window(2).coeffs, [0.5, 0.5])
    assert np.allclose(bspline_window(3).coeffs, [1 / 6, 2 / 3, 1 / 6])
    assert bspline_samples(4) == [Fraction(1, 6), Fraction(2, 3), Fraction(1, 6)]


@pytest.mark.parametrize("N", range(1, 9))
def test_bspline_against_convolution(N):
    ref = bspline_integer_samples(N + 1)
    assert ref[0] == 0 and ref[N + 1] == 0
    assert [ref[j] for j in range(1, N + 1)] == bspline_samples(N + 1)
    assert sum(bspline_samples(N + 1)) == 1
    g = bspline_window(N)
    assert list(g.support) == list(range(1, N + 1))


def test_gaussian_window():
    rec = gaussian_window()
    g = rec.window
    assert rec.parameters["J"] == 7
    assert list(g.support) == list(range(-7, 8))
    assert g(0) == 1 and g(1) == pytest.approx(math.exp(-1))
    assert all(g(j) == g(-j) for j in range(8))
    mpmath.mp.dps = 40
    exact = mpmath.sqrt(2 * mpmath.nsum(lambda j: mpmath.e ** (-2 * j * j), [8, mpmath.inf]))
    assert exact <= rec.truncation_error <= exact * (1 + 1e-10)
    assert gaussian_tail(3) > gaussian_tail(4)
    with pytest.raises(ValueError):
        gaussian_window(0.0)


def test_gaussian_frames():
    g = gaussian_window().window
    assert is_frame(GaborSystem(g, 3, 2))[0]
    assert is_frame(GaborSystem(g, 3, 3))[0]
    # M = N = 2: the symmetric window makes the fibre singular at omega = 1/4
    rep = frame_bounds(GaborSystem(g, 2, 2))
    assert rep.A < 1e-20 and rep.argmin_omega == pytest.approx(0.25)


def test_dependent_infinite_example():
    rec = dependent_infinite_window(2, 1, eps=0.5, l_max=10)
    g = rec.window
    assert g.support_size == 11
    assert list(g.support) == [1] + [2 * l + 1 for l in range(1, 11)]
    c = rec.certificate.coefficient_vector()
    # E_{1/2} is -1 on odd indices, so c_0 + c_1 (-1) = 0
    assert np.allclose(c, [1 / math.sqrt(2), 1 / math.sqrt(2)])
    # every spike sits at lM + 1, so each is cancelled by the same coefficients exactly
    assert rec.certificate.residual < 1e-14
    assert verify_certificate(rec.certificate) <= rec.certificate.tolerance
    assert rec.truncation_error == pytest.approx(0.5 * 2.0 ** -10)
    assert frame_bounds(GaborSystem(g, 2, 1)).is_frame


@pytest.mark.parametrize("M,N", [(3, 1), (3, 2), (5, 3), (6, 5)])
def test_dependent_infinite_family(M, N):
    rec = dependent_infinite_window(M, N, eps=0.25)
    assert rec.window.support_size == N + rec.parameters["l_max"]
    assert rec.parameters["l_max"] == default_l_max(0.25, M)
    assert 0.25 * 2.0 ** -rec.parameters["l_max"] * math.sqrt(M) < 1e-10
    assert rec.certificate.residual <= rec.certificate.tolerance
    assert is_frame(GaborSystem(rec.window, M, N))[0]
    # the untruncated tail is geometric, so the cut-off part has norm below truncation_error
    tail = 0.25 * 2.0 ** -rec.parameters["l_max"] / math.sqrt(3)
    assert tail <= rec.truncation_error
    assert find_dependency(GaborSystem(rec.window, M, N)).residual < 1e-8


def test_dependent_infinite_errors():
    with pytest.raises(ValueError):
        dependent_infinite_window(2, 2)
    with pytest.raises(ValueError):
        dependent_infinite_window(3, 1, eps=0)
