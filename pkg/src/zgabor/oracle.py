"""Slow, direct cross-checks that share no code path with the fibre analysis.

Everything here works straight from the definitions: inner products with
explicitly built Gabor elements, Gram matrices of finite subfamilies,
and rank sweeps over growing translate ranges.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from .dependence import DependencyCertificate, canonical_gauge, verify_certificate
from .sequences import FiniteSequence, GaborSystem, LatticeIndex, gabor_element


def _overlapping_translates(g: FiniteSequence, f: FiniteSequence, N: int) -> range:
    # T_{nN} g meets supp f iff g.first + nN <= f.last and g.last + nN >= f.first
    lo = -((g.last - f.first) // N)
    hi = (f.last - g.first) // N
    return range(lo, hi + 1)


def rayleigh_quotient(sys: GaborSystem, f: FiniteSequence) -> float:
    """sum_{m,n} |<f, E_{m/M} T_{nN} g>|^2 / ||f||^2, summed exactly.

    Only translates whose support meets supp f contribute, so the n-sum is
    finite and no truncation parameter is involved.
    """
    if f.is_zero:
        raise ValueError("Rayleigh quotient of the zero sequence")
    g, M, N = sys.window, sys.M, sys.N
    j = f.indices
    total = 0.0
    for n in _overlapping_translates(g, f, N):
        gj = g.values_on(j - n * N)
        for m in range(M):
            elem = np.exp(2j * np.pi * j * m / M) * gj
            total += abs(np.sum(f.coeffs * np.conj(elem))) ** 2
    return total / f.norm() ** 2


def random_sequence(rng: np.random.Generator, max_len: int = 40, spread: int = 20) -> FiniteSequence:
    """Complex standard-normal block of random length <= max_len at a random offset."""
    length = int(rng.integers(1, max_len + 1))
    offset = int(rng.integers(-spread, spread + 1))
    c = rng.standard_normal(length) + 1j * rng.standard_normal(length)
    return FiniteSequence(offset, c)


def _element_matrix(sys: GaborSystem, n_lo: int, n_hi: int) -> tuple[np.ndarray, list[LatticeIndex]]:
    idx = [LatticeIndex(m, n) for n in range(n_lo, n_hi + 1) for m in range(sys.M)]
    elems = [gabor_element(sys, i) for i in idx]
    lo = min(e.first for e in elems)
    hi = max(e.last for e in elems)
    rows = np.arange(lo, hi + 1)
    return np.column_stack([e.values_on(rows) for e in elems]), idx


def gram_finite_section(sys: GaborSystem, n_lo: int, n_hi: int) -> tuple[float, float]:
    """Extreme eigenvalues of the Gram matrix of the subfamily n_lo <= n <= n_hi."""
    if sys.window.is_zero:
        raise ValueError("zero window")
    S, _ = _element_matrix(sys, n_lo, n_hi)
    lam = np.linalg.eigvalsh(S.conj().T @ S)
    return float(max(lam[0], 0.0)), float(lam[-1])


def dependency_search(sys: GaborSystem, max_l: int, tol: float | None = None
                      ) -> DependencyCertificate | None:
    """First ell in 0..max_l whose subfamily n = 0..ell has sigma_min <= tol."""
    if sys.window.is_zero:
        raise ValueError("zero window")
    if tol is None:
        tol = 1e-8 * sys.window.norm()
    for ell in range(max_l + 1):
        S, idx = _element_matrix(sys, 0, ell)
        _, s, vh = np.linalg.svd(S, full_matrices=True)
        smin = s[-1] if s.size == S.shape[1] else 0.0
        if smin <= tol:
            vec = canonical_gauge(vh[-1].conj())
            kind = "modulation_only" if ell == 0 else "counting_nullspace"
            cert = DependencyCertificate(sys, [(i, complex(c)) for i, c in zip(idx, vec)],
                                         0.0, kind, tol, ell)
            cert.residual = verify_certificate(cert)
            return cert
    return None


def sampled_rayleigh_range(sys: GaborSystem, samples: int = 100, seed: int = 0,
                           max_len: int = 40) -> tuple[float, float]:
    rng = np.random.default_rng(seed)
    vals = [rayleigh_quotient(sys, random_sequence(rng, max_len)) for _ in range(samples)]
    return min(vals), max(vals)



def _poly_antiderivative(p):
    return [Fraction(0)] + [c / (k + 1) for k, c in enumerate(p)]


def _poly_eval(p, x):
    return sum(c * x ** k for k, c in enumerate(p))


def _poly_shift(p, a):
    """Coefficients of x -> p(x - a)."""
    out = [Fraction(0)] * len(p)
    for k, c in enumerate(p):
        for i in range(k + 1):
            out[i] += c * comb(k, i) * (-a) ** (k - i)
    return out


def _poly_add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def bspline_pieces(K: int) -> list[list[Fraction]]:
    """Polynomial pieces of B_K on [i, i+1], i = 0..K-1, from the convolution recursion.

    B_1 = indicator of [0, 1]; B_{K+1}(x) = int_{x-1}^{x} B_K(s) ds, done in
    exact rational arithmetic.
    """
    pieces = [[Fraction(1)]]
    for k in range(1, K):
        anti = [_poly_antiderivative(p) for p in pieces]
        new = []
        for i in range(k + 1):
            acc = [Fraction(0)]
            if i - 1 >= 0:          # int_{x-1}^{i} p_{i-1}
                P = anti[i - 1]
                acc = _poly_add(acc, [_poly_eval(P, i)])
                acc = _poly_add(acc, [-c for c in _poly_shift(P, 1)])
            if i < k:               # int_{i}^{x} p_i
                P = anti[i]
                acc = _poly_add(acc, P)
                acc = _poly_add(acc, [-_poly_eval(P, i)])
            new.append(acc)
        pieces = new
    return pieces


def bspline_integer_samples(K: int) -> dict[int, Fraction]:
    """B_K(j) for the integers j in [0, K]."""
    pieces = bspline_pieces(K)
    out = {j: _poly_eval(pieces[j], j) for j in range(K)}
    out[K] = _poly_eval(pieces[K - 1], K)
    return out
