"""Exact classification of parameter triples (M, N, K).

Pure integer logic. Witness recipes say which construction backs each
positive existence claim; ``witness_check`` builds them and runs the
numerics, so the table and the analysis code keep each other honest.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import windows
from .dependence import certify_independence_range, find_dependency
from .sequences import FiniteSequence, GaborSystem
from .spectral import is_frame, is_riesz_sequence

FINITE_SUPPORT_NOTE = ("dependence classes assume a finitely supported window; with infinite "
                       "support an overcomplete frame can be linearly independent (e.g. e^{-j^2})")


class WitnessInconsistency(Exception):
    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


@dataclass
class Witness:
    claim: str                 # frame | riesz_sequence | dependent | independent
    family: str
    construct: dict
    M: int
    N: int

    def to_dict(self) -> dict:
        return {"claim": self.claim, "family": self.family, "construct": self.construct,
                "M": self.M, "N": self.N}


@dataclass
class ClassificationVerdict:
    M: int
    N: int
    K: int
    frame_exists: bool
    riesz_sequence_exists: bool
    dependence_class: str
    witnesses: list[Witness] = field(default_factory=list)
    paper_items: list[str] = field(default_factory=list)
    note: str = FINITE_SUPPORT_NOTE

    def to_dict(self) -> dict:
        return {"M": self.M, "N": self.N, "K": self.K,
                "frame_exists": self.frame_exists,
                "riesz_sequence_exists": self.riesz_sequence_exists,
                "dependence_class": self.dependence_class,
                "witnesses": [w.to_dict() for w in self.witnesses],
                "paper_items": self.paper_items,
                "note": self.note}


def _frame_witness(M, N, K) -> Witness:
    if K == N:
        return Witness("frame", "dense", {"N": N}, M, N)
    return Witness("frame", "perturbed", {"M": M, "N": N, "K": K}, M, N)


def _riesz_witness(M, N, K) -> Witness:
    # a frame window for (N, M) is a Riesz window for (M, N)
    if K == M:
        return Witness("riesz_sequence", "dense", {"N": M}, M, N)
    return Witness("riesz_sequence", "perturbed", {"M": N, "N": M, "K": K}, M, N)


def classify(M: int, N: int, K: int) -> ClassificationVerdict:
    for name, v in (("M", M), ("N", N), ("K", K)):
        if int(v) != v or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")
    frame = N <= M and K >= N
    riesz = N >= M and K >= M
    items = []
    wit = []
    if frame:
        items.append("frame_exists:N<=M,K>=N")
        wit.append(_frame_witness(M, N, K))
    if riesz:
        items.append("riesz_exists:N>=M,K>=M")
        wit.append(_riesz_witness(M, N, K))

    if M == 1:
        cls = "always_independent"
        items.append("independent:M=1")
        wit.append(Witness("independent", "dense", {"N": K}, M, N))
    elif N < M or K < M:
        cls = "always_dependent"
        if K < M:
            items.append("dependent:M>|supp g|")
        if N < M:
            items.append("dependent:N<M,finite_support")
            if frame:
                items.append("overcomplete_frame_dependent")
        items.append("dependent_exists:comb")
        wit.append(Witness("dependent", "comb", {"M": M, "K": K}, M, N))
        if frame:
            fw = wit[0]
            wit.append(Witness("dependent", fw.family, fw.construct, M, N))
    else:
        cls = "both_possible"
        items += ["dependent_exists:comb", "independent_exists:N>=M,K>=M"]
        wit.append(Witness("dependent", "comb", {"M": M, "K": K}, M, N))
        rw = _riesz_witness(M, N, K)
        wit.append(Witness("independent", rw.family, rw.construct, M, N))
    return ClassificationVerdict(M, N, K, frame, riesz, cls, wit, items)


def build_witness_window(w: Witness) -> FiniteSequence:
    if w.family == "dense":
        return windows.dense_window(w.construct["N"])
    if w.family == "perturbed":
        c = w.construct
        return windows.perturbed_window(c["M"], c["N"], c["K"]).window
    if w.family == "comb":
        return windows.comb_window(w.construct["M"], w.construct["K"])
    raise ValueError(f"unknown witness family {w.family!r}")


def _check(w: Witness, K: int) -> tuple[bool, str]:
    g = build_witness_window(w)
    if g.support_size != K:
        return False, f"support size {g.support_size} != K={K}"
    sys = GaborSystem(g, w.M, w.N)
    if w.claim == "frame":
        ok, rep = is_frame(sys)
        return ok, f"A={rep.A:.6g} B={rep.B:.6g}"
    if w.claim == "riesz_sequence":
        ok, rep = is_riesz_sequence(sys)
        return ok, f"lower={rep.lower:.6g} upper={rep.upper:.6g}"
    if w.claim == "dependent":
        cert = find_dependency(sys)
        return cert.residual <= max(cert.tolerance, 1e-12), f"{cert.kind} residual={cert.residual:.3g}"
    if w.claim == "independent":
        cert = certify_independence_range(sys, -4, 4)
        return cert.independent, f"sigma_min={cert.sigma_min:.6g} on n in [-4, 4]"
    raise ValueError(f"unknown claim {w.claim!r}")


def witness_check(verdict: ClassificationVerdict) -> list[dict]:
    """Build and numerically validate every witness of ``verdict``."""
    report = []
    for w in verdict.witnesses:
        ok, detail = _check(w, verdict.K)
        report.append({**w.to_dict(), "passed": bool(ok), "detail": detail})
    bad = [r for r in report if not r["passed"]]
    if bad:
        raise WitnessInconsistency(
            f"{len(bad)} witness(es) failed for (M,N,K)=({verdict.M},{verdict.N},{verdict.K})", report)
    return report
