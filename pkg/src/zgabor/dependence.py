"""Explicit linear dependencies and finite-range independence checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .sequences import (FiniteSequence, GaborSystem, LatticeIndex, column_order,
                        gabor_element, modulate, synthesis_matrix)

COMB_TOL = 1e-14
ENUMERATION_ORDER = "n-major"


class NoGuaranteedDependency(Exception):
    """Raised when N >= M, M <= |supp g| and g has no modulation invariance."""


@dataclass
class DependencyCertificate:
    system: GaborSystem
    terms: list[tuple[LatticeIndex, complex]]
    residual: float
    kind: str
    tolerance: float
    ell: int = 0
    enumeration_order: str = ENUMERATION_ORDER

    def coefficient_vector(self) -> np.ndarray:
        return np.array([c for _, c in self.terms], dtype=complex)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "terms": [{"m": i.m, "n": i.n, "re": c.real, "im": c.imag} for i, c in self.terms],
            "residual": self.residual,
            "enumeration_order": self.enumeration_order,
            "ell": self.ell,
            "M": self.system.M,
            "N": self.system.N,
        }


@dataclass
class IndependenceCertificate:
    """Smallest singular value of one finite subfamily.

    Says nothing about the full system: only the columns with
    ``n_lo <= n <= n_hi`` were checked.
    """

    n_lo: int
    n_hi: int
    sigma_min: float
    tolerance: float
    near_null_vector: np.ndarray | None = field(default=None, repr=False)

    @property
    def independent(self) -> bool:
        return self.sigma_min > self.tolerance

    def __bool__(self) -> bool:
        return self.independent


def canonical_gauge(v: np.ndarray) -> np.ndarray:
    """Unit norm, first nonzero entry real and positive."""
    v = np.asarray(v, dtype=complex)
    nrm = np.linalg.norm(v)
    if nrm == 0:
        raise ValueError("zero vector has no gauge")
    v = v / nrm
    big = np.flatnonzero(np.abs(v) > 1e-12)
    first = v[big[0]]
    return v * (abs(first) / first)


def column_sigma_min(A: np.ndarray) -> tuple[float, np.ndarray]:
    """Smallest singular value of the column family and its right singular vector.

    A wide matrix has a nontrivial null space, reported as sigma_min = 0.
    """
    _, s, vh = np.linalg.svd(A, full_matrices=True)
    ncols = A.shape[1]
    smin = float(s[-1]) if s.size == ncols else 0.0
    return smin, vh[-1].conj()


def synthesize(sys: GaborSystem, terms) -> FiniteSequence:
    out = FiniteSequence.zero()
    for idx, c in terms:
        if c != 0:
            out = out + gabor_element(sys, idx) * c
    return out


def verify_certificate(cert: DependencyCertificate) -> float:
    """Recompute ||sum c_{m,n} E_{m/M} T_{nN} g|| from scratch."""
    if not cert.terms or not any(c != 0 for _, c in cert.terms):
        raise ValueError("certificate has no nonzero coefficient")
    return synthesize(cert.system, cert.terms).norm()


def make_certificate(sys, indices, vec, kind, tol, ell) -> DependencyCertificate:
    vec = canonical_gauge(vec)
    terms = [(i, complex(c)) for i, c in zip(indices, vec)]
    cert = DependencyCertificate(sys, terms, 0.0, kind, tol, ell)
    cert.residual = verify_certificate(cert)
    return cert


def modulation_invariance(g: FiniteSequence, M: int, tol: float = COMB_TOL) -> int | None:
    """Smallest m' in 1..M-1 with E_{m'/M} g = g, if any."""
    for mp in range(1, M):
        if np.max(np.abs(modulate(g, mp, M).coeffs - g.coeffs)) <= tol:
            return mp
    return None


def minimal_ell(L: int, M: int, N: int) -> int:
    """Smallest ell >= 0 with (ell + 1) M > L + ell N; requires N < M or L < M."""
    if L < M:
        return 0
    if N >= M:
        raise ValueError("dimension count never forces dependence when N >= M")
    return (L - M) // (M - N) + 1


def find_dependency(sys: GaborSystem) -> DependencyCertificate:
    """Dependency certificate wherever the support/lattice counts force one.

    Tries, in order: modulation invariance of the window (exact two-term
    certificate), more modulations than support points (n = 0 only), and
    N < M with enough translates that columns outnumber rows.
    """
    g, M, N = sys.window, sys.M, sys.N
    if g.is_zero:
        raise ValueError("zero window")

    if M >= 2:
        mp = modulation_invariance(g, M)
        if mp is not None:
            idx = [LatticeIndex(0, 0), LatticeIndex(mp, 0)]
            vec = np.array([1.0, -1.0]) / math.sqrt(2)
            return make_certificate(sys, idx, vec, "comb_exact", COMB_TOL, 0)

    if M > g.support_size:
        A, _ = synthesis_matrix(sys, 0, 0)
        _, v = column_sigma_min(A)
        return make_certificate(sys, column_order(M, 0, 0), v, "modulation_only", 1e-8, 0)

    if N < M:
        ell = minimal_ell(g.support_length, M, N)
        A, _ = synthesis_matrix(sys, 0, ell)
        _, v = column_sigma_min(A)
        return make_certificate(sys, column_order(M, 0, ell), v, "counting_nullspace", 1e-8, ell)

    raise NoGuaranteedDependency(
        f"M={M} <= |supp g|={g.support_size}, N={N} >= M and no modulation fixes g: "
        "dependent and independent windows both exist here")


def certify_independence_range(sys: GaborSystem, n_lo: int, n_hi: int,
                               tol: float | None = None) -> IndependenceCertificate:
    """sigma_min of the columns with n_lo <= n <= n_hi against ``tol``.

    Default tolerance is 1e-8 times the common column norm ||g||. On failure
    the near-null vector is attached so it can serve as an approximate
    dependency.
    """
    if sys.window.is_zero:
        raise ValueError("zero window")
    if tol is None:
        tol = 1e-8 * sys.window.norm()
    A, _ = synthesis_matrix(sys, n_lo, n_hi)
    smin, v = column_sigma_min(A)
    cert = IndependenceCertificate(n_lo, n_hi, smin, tol)
    if not cert.independent:
        cert.near_null_vector = canonical_gauge(v)
    return cert


def sigma_min_high_precision(sys: GaborSystem, n_lo: int, n_hi: int, dps: int = 60) -> float:
    """sigma_min of the subfamily n_lo <= n <= n_hi in ``dps``-digit arithmetic.

    For windows whose finite sections are independent but conditioned far
    below double precision (the sampled Gaussian with N < M is one).
    Phases and window values are taken from the stored double coefficients.
    """
    import mpmath

    A, _ = synthesis_matrix(sys, n_lo, n_hi)
    if A.shape[1] > A.shape[0]:
        return 0.0
    with mpmath.workdps(dps):
        g = sys.window
        rows = np.unique(np.concatenate([g.support + n * sys.N for n in range(n_lo, n_hi + 1)]))
        mat = mpmath.matrix(rows.size, A.shape[1])
        for n in range(n_lo, n_hi + 1):
            for m in range(sys.M):
                col = (n - n_lo) * sys.M + m
                for r, j in enumerate(rows):
                    v = g(int(j) - n * sys.N)
                    if v != 0:
                        phase = mpmath.expjpi(mpmath.mpf(2 * ((int(j) * m) % sys.M)) / sys.M)
                        mat[r, col] = phase * mpmath.mpc(v.real, v.imag)
        s = mpmath.svd_c(mat, compute_uv=False)
        return float(min(s[k] for k in range(len(s))))
