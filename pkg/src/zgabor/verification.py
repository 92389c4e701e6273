"""End-to-end checks of the theory, one function per acceptance criterion.

Each ``criterion_*`` takes ``max_param`` (caps every M, N, K range) and a
``seed`` and returns a :class:`CriterionResult`. ``run_all`` drives them and
is what ``zgabor verify-paper`` executes.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import windows
from .classify import WitnessInconsistency, classify, witness_check
from .dependence import (NoGuaranteedDependency, certify_independence_range,
                         find_dependency, verify_certificate)
from .oracle import (bspline_integer_samples, gram_finite_section, random_sequence,
                     rayleigh_quotient)
from .sequences import FiniteSequence, GaborSystem
from .spectral import (dense_window_bounds_closed_form, frame_bounds, is_frame,
                       is_riesz_sequence, riesz_bounds)

SPEC_MAX = 6


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    worst: float = 0.0
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.detail}"

    def to_dict(self) -> dict:
        return asdict(self)


def _timed(number, name):
    def deco(fn):
        def run(max_param: int = SPEC_MAX, seed: int = 1) -> CriterionResult:
            t0 = time.perf_counter()
            passed, detail, worst = fn(max_param, seed)
            return CriterionResult(number, name, bool(passed), detail, float(worst),
                                   time.perf_counter() - t0)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return deco


def _rng(seed: int, salt: int) -> np.random.Generator:
    return np.random.default_rng([seed, salt])


def _cnormal(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def random_window(rng, max_len: int = 12, spread: int = 6) -> FiniteSequence:
    """Complex normal block of random length 1..max_len at a random offset."""
    length = int(rng.integers(1, max_len + 1))
    return FiniteSequence(int(rng.integers(-spread, spread + 1)), _cnormal(rng, length))


def brute_minimal_ell(L: int, M: int, N: int, limit: int = 10_000) -> int:
    for ell in range(limit):
        if (ell + 1) * M > L + ell * N:
            return ell
    raise ValueError("no ell below limit")


def analysis_corpus(max_param: int = SPEC_MAX, seed: int = 1) -> list[tuple[str, GaborSystem]]:
    """Named systems spanning every window family plus random windows."""
    d = FiniteSequence.delta
    gauss = windows.gaussian_window().window
    rng = _rng(seed, 99)
    items = [
        ("delta0", d(0), 1, 1), ("delta0", d(0), 2, 1), ("delta0", d(0), 2, 3),
        ("delta0", d(0), 3, 2),
        ("dense2", windows.dense_window(2), 2, 2), ("dense2", windows.dense_window(2), 3, 2),
        ("dense3", windows.dense_window(3), 4, 3), ("dense3", windows.dense_window(3), 2, 3),
        ("dense_rand", windows.dense_window(3, _cnormal(rng, 3)), 3, 3),
        ("comb22", windows.comb_window(2, 2), 2, 1), ("comb32", windows.comb_window(3, 2), 3, 2),
        ("bspline2", windows.bspline_window(2), 3, 2), ("bspline3", windows.bspline_window(3), 4, 3),
        ("gauss", gauss, 3, 2), ("gauss", gauss, 2, 2), ("gauss", gauss, 2, 3),
        ("perturbed", windows.perturbed_window(4, 2, 5).window, 4, 2),
        ("inf_dep", windows.dependent_infinite_window(3, 2).window, 3, 2),
    ]
    for k in range(8):
        M = int(rng.integers(1, max_param + 1))
        N = int(rng.integers(1, max_param + 1))
        items.append((f"random{k}", random_window(rng), M, N))
    return [(name, GaborSystem(g, M, N)) for name, g, M, N in items
            if M <= max_param and N <= max_param]


# ---------------------------------------------------------------------------

@_timed(1, "closed-form vs fibre bounds for dense windows")
def criterion_closed_form(max_param, seed):
    worst = 0.0
    top = min(6, max_param)
    for M in range(1, top + 1):
        for N in range(1, M + 1):
            rng = _rng(seed, 100 * M + N)
            for _ in range(20):
                g = windows.dense_window(N, _cnormal(rng, N))
                A0, B0 = dense_window_bounds_closed_form(g, M, N)
                rep = frame_bounds(GaborSystem(g, M, N))
                worst = max(worst, abs(rep.A - A0) / A0, abs(rep.B - B0) / B0)
    return worst <= 1e-6, f"max relative deviation {worst:.2e} (tol 1e-6)", worst


@_timed(2, "comb windows give exact dependencies")
def criterion_comb(max_param, seed):
    worst, bad = 0.0, []
    for M in range(2, min(6, max_param) + 1):
        for K in range(1, min(5, max_param) + 1):
            for N in range(1, min(4, max_param) + 1):
                cert = find_dependency(GaborSystem(windows.comb_window(M, K), M, N))
                worst = max(worst, cert.residual)
                if cert.kind != "comb_exact" or cert.residual >= 1e-12:
                    bad.append((M, N, K, cert.kind))
    return not bad, f"max residual {worst:.2e} (tol 1e-12); failures {bad[:3]}", worst


@_timed(3, "dependence forced whenever N < M")
def criterion_forced_dependence(max_param, seed):
    rng = _rng(seed, 3)
    worst, bad = 0.0, []
    top = max(2, min(6, max_param))
    for _ in range(200):
        M = int(rng.integers(2, top + 1))
        N = int(rng.integers(1, M))
        g = random_window(rng, 12)
        try:
            cert = find_dependency(GaborSystem(g, M, N))
        except NoGuaranteedDependency:
            bad.append((M, N, g.support_length, "raised"))
            continue
        worst = max(worst, cert.residual)
        expect = brute_minimal_ell(g.support_length, M, N)
        if cert.residual > 1e-8 or cert.ell != expect:
            bad.append((M, N, g.support_length, cert.ell, expect))
    return not bad, f"200 windows, max residual {worst:.2e} (tol 1e-8); failures {bad[:3]}", worst


@_timed(4, "Rayleigh quotients inside [A - 1e-6, B + 1e-6]")
def criterion_rayleigh(max_param, seed):
    worst = 0.0
    bad = []
    corpus = analysis_corpus(max_param, seed)
    for k, (name, sys) in enumerate(corpus):
        rep = frame_bounds(sys)
        rng = _rng(seed, 400 + k)
        for _ in range(100):
            q = rayleigh_quotient(sys, random_sequence(rng, 40))
            excess = max(rep.A - q, q - rep.B)
            worst = max(worst, excess)
            if excess > 1e-6:
                bad.append((name, sys.M, sys.N))
                break
    return not bad, (f"{len(corpus)} systems x 100 samples, worst excess {worst:.2e}; "
                     f"failures {bad[:3]}"), worst


@_timed(5, "support size K < N forces A = 0")
def criterion_incomplete(max_param, seed):
    rng = _rng(seed, 5)
    worst, count = 0.0, 0
    top = min(6, max_param)
    for M in range(1, top + 1):
        for N in range(1, M + 1):
            for K in range(1, N):
                for trial in range(5):
                    L = K if trial == 0 else int(rng.integers(K, K + 2 * N + 1))
                    inner = rng.choice(np.arange(1, L - 1), size=K - 2, replace=False) if K > 2 else []
                    pos = sorted({0, L - 1} | set(int(p) for p in inner)) if K > 1 else [0]
                    block = np.zeros(L if K > 1 else 1, dtype=complex)
                    block[pos] = _cnormal(rng, len(pos))
                    g = FiniteSequence(int(rng.integers(-5, 6)), block)
                    assert g.support_size == K
                    A = frame_bounds(GaborSystem(g, M, N)).A
                    worst = max(worst, A)
                    count += 1
    return worst < 1e-8, f"{count} windows, max A {worst:.2e} (tol 1e-8)", worst


@_timed(6, "perturbed windows stay frames")
def criterion_perturbed(max_param, seed):
    bad, worst_ratio = [], math.inf
    top = min(5, max_param)
    for M in range(1, top + 1):
        for N in range(1, M + 1):
            for K in range(N + 1, N + 4):
                for rho in (0.25, 0.5, 0.9):
                    rec = windows.perturbed_window(M, N, K, rho)
                    ok, rep = is_frame(GaborSystem(rec.window, M, N))
                    worst_ratio = min(worst_ratio, rep.A / rec.parameters["base_A"])
                    if not ok or rec.window.support_size != K:
                        bad.append((M, N, K, rho))
    return not bad, f"min A/A_base {worst_ratio:.3f}; failures {bad[:3]}", worst_ratio


@_timed(7, "duality: frame <-> Riesz sequence, M/N normalisation")
def criterion_duality(max_param, seed):
    mismatch = []
    for name, sys in analysis_corpus(max_param, seed):
        f = is_frame(sys)[0]
        r = is_riesz_sequence(sys.adjoint())[0]
        if f != r:
            mismatch.append((name, sys.M, sys.N))
    worst = 0.0
    top = min(5, max_param)
    for M in range(1, top + 1):
        for N in range(M, top + 1):
            rng = _rng(seed, 700 + 10 * M + N)
            for g in (windows.dense_window(M, _cnormal(rng, M)), windows.dense_window(N)):
                sys = GaborSystem(g, M, N)
                rr = riesz_bounds(sys)
                lo, hi = gram_finite_section(sys, -10, 10)
                lo_small, _ = gram_finite_section(sys, -3, 3)
                worst = max(worst, abs(lo - rr.lower) / rr.lower, abs(hi - rr.upper) / rr.upper)
                if lo > lo_small + 1e-9:
                    mismatch.append(("monotonicity", M, N))
    ok = not mismatch and worst <= 0.05
    return ok, f"verdict mismatches {mismatch[:3]}; max Gram deviation {worst:.2e} (tol 5%)", worst


@_timed(8, "sampled B-splines: exact values and frames")
def criterion_bspline(max_param, seed):
    worst = 0.0
    for N in range(1, 7):
        g = windows.bspline_window(N)
        exact = bspline_integer_samples(N + 1)
        for j in range(0, N + 2):
            worst = max(worst, abs(g(j) - float(exact[j])))
        if g.support_size != N or list(g.support) != list(range(1, N + 1)):
            return False, f"support of bspline_window({N}) is {list(g.support)}", worst
    frames = []
    for N, M in ((1, 2), (2, 3), (3, 4)):
        if M <= max_param:
            frames.append(is_frame(GaborSystem(windows.bspline_window(N), M, N))[0])
    ok = worst <= 1e-14 and all(frames)
    return ok, f"max sample error {worst:.1e} (tol 1e-14); frames {frames}", worst


@_timed(9, "Gaussian: frame for (3,2), independent finite sections")
def criterion_gaussian(max_param, seed):
    g = windows.gaussian_window(1e-16).window
    parts = []
    ok = True
    if max_param >= 3:
        f = is_frame(GaborSystem(g, 3, 2))[0]
        ok &= f
        parts.append(f"is_frame(3,2)={f}")
    worst = math.inf
    for M, N in ((2, 2), (3, 2), (2, 3)):
        if max(M, N) > max_param:
            continue
        s = certify_independence_range(GaborSystem(g, M, N), -5, 5).sigma_min
        worst = min(worst, s)
        ok &= s > 1e-6
        parts.append(f"sigma_min({M},{N})={s:.2e}")
    return ok, "; ".join(parts) + " (tol 1e-6)", worst


@_timed(10, "truncated infinite-support dependent frame")
def criterion_infinite_dependent(max_param, seed):
    bad, worst = [], 0.0
    top = min(5, max_param)
    for M in range(2, top + 1):
        for N in range(1, M):
            rec = windows.dependent_infinite_window(M, N)
            ok = is_frame(GaborSystem(rec.window, M, N))[0]
            res = verify_certificate(rec.certificate)
            bound = rec.parameters["eps"] * 2.0 ** -rec.parameters["l_max"] * math.sqrt(M) + 1e-12
            worst = max(worst, res)
            if not ok or res > bound:
                bad.append((M, N))
    return not bad, f"max residual {worst:.2e}; failures {bad[:3]}", worst


@_timed(11, "classifier biconditionals and witnesses")
def criterion_classifier(max_param, seed):
    top = min(6, max_param)
    bad = []
    for M in range(1, top + 1):
        for N in range(1, top + 1):
            for K in range(1, top + 1):
                v = classify(M, N, K)
                checks = [
                    v.frame_exists == (N <= M and K >= N),
                    v.riesz_sequence_exists == (N >= M and K >= M),
                    (v.dependence_class == "always_independent") == (M == 1),
                    (v.dependence_class == "always_dependent") == (M >= 2 and (N < M or K < M)),
                    (v.dependence_class == "both_possible") == (M >= 2 and N >= M and K >= M),
                ]
                if not all(checks):
                    bad.append((M, N, K, "table"))
                    continue
                try:
                    witness_check(v)
                except WitnessInconsistency:
                    bad.append((M, N, K, "witness"))
    return not bad, f"{top ** 3} triples; failures {bad[:3]}", float(len(bad))


CRITERIA = [
    criterion_closed_form, criterion_comb, criterion_forced_dependence, criterion_rayleigh,
    criterion_incomplete, criterion_perturbed, criterion_duality, criterion_bspline,
    criterion_gaussian, criterion_infinite_dependent, criterion_classifier,
]


def run_all(max_param: int = SPEC_MAX, seed: int = 1, log=None) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        r = crit(max_param, seed)
        if log is not None:
            log(r.line())
        results.append(r)
    return results
