"""Window families: dense blocks, perturbations, combs, sampled B-splines,
truncated Gaussians and a truncated infinite-support dependent window.

Every family except the Gaussian starts its support at index 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .dependence import DependencyCertificate, make_certificate
from .sequences import FiniteSequence, GaborSystem, LatticeIndex
from .spectral import frame_bounds

FAMILIES = ("dense", "perturbed", "comb", "bspline", "gaussian", "infinite_dependent_truncated")


@dataclass
class ConstructionRecord:
    window: FiniteSequence
    family: str
    parameters: dict = field(default_factory=dict)
    truncation_error: float = 0.0
    certificate: DependencyCertificate | None = None

    def to_dict(self) -> dict:
        d = {"family": self.family, "parameters": self.parameters,
             "truncation_error": self.truncation_error,
             "support_size": self.window.support_size}
        if self.certificate is not None:
            d["certificate"] = self.certificate.to_dict()
        return d


def dense_window(N: int, values=None) -> FiniteSequence:
    if N < 1:
        raise ValueError("N must be >= 1")
    vals = np.ones(N, dtype=complex) if values is None else np.asarray(values, dtype=complex)
    if vals.size != N:
        raise ValueError(f"expected {N} values, got {vals.size}")
    if np.any(vals == 0):
        raise ValueError("dense window values must all be nonzero")
    return FiniteSequence(1, vals)


def perturbed_window(M: int, N: int, K: int, rho: float = 0.5,
                     base: FiniteSequence | None = None) -> ConstructionRecord:
    """Base frame window plus eps on the positions N+1, ..., K.

    Each unit spike generates a Bessel family with bound M, so the added
    synthesis operator has norm at most mu = eps (K - N) sqrt(M). The step is
    chosen as mu = rho * min(A, sqrt(A)), which keeps mu < A and also
    mu < sqrt(A), the condition under which the lower bound
    (sqrt(A) - mu)^2 survives.
    """
    if N > M:
        raise ValueError("needs N <= M")
    if K <= N:
        raise ValueError("needs K > N: no positions to perturb")
    if not 0 < rho < 1:
        raise ValueError("rho must lie in (0, 1)")
    base = dense_window(N) if base is None else base
    rep = frame_bounds(GaborSystem(base, M, N))
    if not rep.is_frame:
        raise ValueError(f"base window does not generate a frame (A={rep.A:.3g})")
    A = rep.A
    eps = rho * min(A, math.sqrt(A)) / ((K - N) * math.sqrt(M))
    spikes = FiniteSequence(N + 1, np.full(K - N, eps, dtype=complex))
    g = base + spikes
    if g.support_size != K:
        raise ValueError("base overlaps the perturbation positions; support size is not K")
    mu = eps * (K - N) * math.sqrt(M)
    return ConstructionRecord(g, "perturbed",
                              {"M": M, "N": N, "K": K, "rho": rho, "eps": eps,
                               "base_A": A, "guaranteed_A": (math.sqrt(A) - mu) ** 2})


def comb_window(M: int, K: int) -> FiniteSequence:
    """delta_M + delta_2M + ... + delta_KM, fixed by every E_{m/M}."""
    if M < 2:
        raise ValueError("comb needs M >= 2: for M = 1 every Gabor system is independent "
                         "and no nontrivial modulation exists")
    if K < 1:
        raise ValueError("K must be >= 1")
    block = np.zeros((K - 1) * M + 1, dtype=complex)
    block[::M] = 1.0
    return FiniteSequence(M, block)


def bspline_samples(order: int) -> list[Fraction]:
    """Exact values B_order(1), ..., B_order(order - 1) for order >= 2.

    Cardinal B-spline on [0, order]:
    B_k(x) = x/(k-1) B_{k-1}(x) + (k-x)/(k-1) B_{k-1}(x-1).
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    vals = {1: Fraction(1)}          # B_2 is the hat on [0, 2]
    for k in range(3, order + 1):
        vals = {j: Fraction(j, k - 1) * vals.get(j, 0) + Fraction(k - j, k - 1) * vals.get(j - 1, 0)
                for j in range(1, k)}
    return [vals[j] for j in range(1, order)]


def bspline_window(N: int) -> FiniteSequence:
    """Integer samples of B_{N+1}; support is exactly {1, ..., N}."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return FiniteSequence(1, [float(v) for v in bspline_samples(N + 1)])


def gaussian_tail(J: int, terms: int = 6) -> float:
    """sqrt(sum_{|j|>J} e^{-2 j^2}) majorised: explicit terms plus a geometric tail."""
    js = np.arange(J + 1, J + 1 + terms)
    head = 2 * float(np.sum(np.exp(-2.0 * js ** 2)))
    # beyond the last explicit term, ratios e^{-2(2j+1)} are at most r
    j_last = J + terms
    first_rest = math.exp(-2.0 * (j_last + 1) ** 2)
    r = math.exp(-2.0 * (2 * j_last + 3))
    rest = 2 * first_rest / (1 - r)
    return math.sqrt(head + rest)


def gaussian_window(tau: float = 1e-16) -> ConstructionRecord:
    """e^{-j^2} truncated to |j| <= ceil(sqrt(ln(1/tau)))."""
    if not 0 < tau < 1:
        raise ValueError("tau must lie in (0, 1)")
    J = math.ceil(math.sqrt(math.log(1 / tau)))
    j = np.arange(-J, J + 1)
    g = FiniteSequence(-J, np.exp(-(j.astype(float) ** 2)))
    return ConstructionRecord(g, "gaussian", {"tau": tau, "J": J}, gaussian_tail(J))


def default_l_max(eps: float, M: int, target: float = 1e-10) -> int:
    """Smallest l_max with eps 2^{-l_max} sqrt(M) < target."""
    return max(1, math.floor(math.log2(eps * math.sqrt(M) / target)) + 1)


def dependent_infinite_window(M: int, N: int, eps: float = 0.5,
                              l_max: int | None = None) -> ConstructionRecord:
    """Ones on {1..N} plus (eps / 2^l) delta_{lM+1}, l = 1..l_max.

    The attached certificate uses n = 0 only: coefficients c_m with
    sum_m c_m e^{2 pi i j m/M} = 0 for j = 1..N. Since lM + 1 = 1 mod M the
    same c kills every spike, so the untruncated window is dependent too.
    """
    if M < 2 or N >= M:
        raise ValueError("needs 1 <= N < M")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if l_max is None:
        l_max = default_l_max(eps, M)
    block = np.zeros(l_max * M + 1, dtype=complex)
    block[:N] = 1.0
    for l in range(1, l_max + 1):
        block[l * M] = eps / 2 ** l
    g = FiniteSequence(1, block)

    j = np.arange(1, N + 1)[:, None]
    m = np.arange(M)[None, :]
    chars = np.exp(2j * np.pi * ((j * m) % M) / M)
    _, _, vh = np.linalg.svd(chars, full_matrices=True)
    sys = GaborSystem(g, M, N)
    tol = eps * 2.0 ** -l_max * math.sqrt(M) + 1e-12
    cert = make_certificate(sys, [LatticeIndex(k, 0) for k in range(M)], vh[-1].conj(),
                            "modulation_only", tol, 0)
    return ConstructionRecord(g, "infinite_dependent_truncated",
                              {"M": M, "N": N, "eps": eps, "l_max": l_max},
                              eps * 2.0 ** -l_max, cert)
