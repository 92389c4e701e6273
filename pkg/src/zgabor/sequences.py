"""Finitely supported sequences on the integers and the Gabor operators acting on them.

A sequence is stored as a dense coefficient block starting at an integer
``offset``; value ``g(j)`` is ``coeffs[j - offset]`` inside the block and 0
outside. Modulation phases are reduced modulo ``M`` in integer arithmetic
before calling ``exp`` so exact identities (combs, periodicity) survive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


def _phases(j: np.ndarray, m: int, M: int) -> np.ndarray:
    """e^{2 pi i j m / M} for integer j, with j*m reduced mod M first."""
    r = (np.asarray(j, dtype=np.int64) * int(m)) % M
    out = np.exp(2j * np.pi * r / M)
    # exact values at the quarter points keep comb identities bit-exact
    quarter = (4 * r) % M == 0
    if np.any(quarter):
        k = (4 * r[quarter]) // M
        out[quarter] = np.array([1, 1j, -1, -1j])[k % 4]
    return out


@dataclass(frozen=True)
class FiniteSequence:
    """Finitely supported complex sequence on Z.

    Leading and trailing zeros are trimmed on construction; the zero
    sequence is ``offset=0`` with an empty block.
    """

    offset: int
    coeffs: np.ndarray = field(repr=False)

    def __init__(self, offset: int, coeffs: Iterable[complex]):
        c = np.array(coeffs, dtype=complex).ravel()
        nz = np.flatnonzero(c)
        if nz.size == 0:
            c = np.zeros(0, dtype=complex)
            offset = 0
        else:
            offset = int(offset) + int(nz[0])
            c = c[nz[0]: nz[-1] + 1].copy()
        c.setflags(write=False)
        object.__setattr__(self, "offset", int(offset))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def delta(cls, k: int) -> "FiniteSequence":
        return cls(k, [1.0])

    @classmethod
    def zero(cls) -> "FiniteSequence":
        return cls(0, [])

    @classmethod
    def from_dict(cls, values: dict[int, complex]) -> "FiniteSequence":
        if not values:
            return cls.zero()
        lo, hi = min(values), max(values)
        block = np.zeros(hi - lo + 1, dtype=complex)
        for j, v in values.items():
            block[j - lo] = v
        return cls(lo, block)

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return self.coeffs.size

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def first(self) -> int:
        """Index of the first nonzero entry."""
        if self.is_zero:
            raise ValueError("zero sequence has no support")
        return self.offset

    @property
    def last(self) -> int:
        if self.is_zero:
            raise ValueError("zero sequence has no support")
        return self.offset + self.coeffs.size - 1

    @property
    def indices(self) -> np.ndarray:
        """Integer indices covered by the stored block."""
        return np.arange(self.offset, self.offset + self.coeffs.size, dtype=np.int64)

    @property
    def support(self) -> np.ndarray:
        return self.indices[self.coeffs != 0]

    @property
    def support_size(self) -> int:
        """Number of nonzero entries, counted exactly as stored."""
        return int(np.count_nonzero(self.coeffs))

    @property
    def support_length(self) -> int:
        """last - first + 1; interior zeros count. 0 for the zero sequence."""
        return self.coeffs.size

    def __call__(self, j):
        j = np.asarray(j, dtype=np.int64)
        k = j - self.offset
        inside = (k >= 0) & (k < self.coeffs.size)
        out = np.zeros(j.shape, dtype=complex)
        out[inside] = self.coeffs[k[inside]]
        return out if out.ndim else complex(out)

    def values_on(self, rows: np.ndarray) -> np.ndarray:
        return np.asarray(self(np.asarray(rows, dtype=np.int64)), dtype=complex).reshape(-1)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def trimmed(self) -> "FiniteSequence":
        return FiniteSequence(self.offset, self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __mul__(self, c: complex) -> "FiniteSequence":
        return FiniteSequence(self.offset, self.coeffs * complex(c))

    __rmul__ = __mul__

    def __add__(self, other: "FiniteSequence") -> "FiniteSequence":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.first, other.first)
        hi = max(self.last, other.last)
        block = np.zeros(hi - lo + 1, dtype=complex)
        block[self.first - lo: self.last - lo + 1] += self.coeffs
        block[other.first - lo: other.last - lo + 1] += other.coeffs
        return FiniteSequence(lo, block)

    def __neg__(self) -> "FiniteSequence":
        return self * -1

    def __sub__(self, other: "FiniteSequence") -> "FiniteSequence":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSequence):
            return NotImplemented
        return self.offset == other.offset and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.offset, self.coeffs.tobytes()))

    def allclose(self, other: "FiniteSequence", atol: float = 1e-14) -> bool:
        return (self - other).norm() <= atol

    def __repr__(self) -> str:
        return f"FiniteSequence(offset={self.offset}, coeffs={np.array2string(self.coeffs, precision=4)})"


@dataclass(frozen=True)
class LatticeIndex:
    m: int
    n: int


@dataclass(frozen=True)
class GaborSystem:
    """Window plus lattice parameters: elements E_{m/M} T_{nN} window."""

    window: FiniteSequence
    M: int
    N: int
    allow_zero: bool = False

    def __post_init__(self):
        if int(self.M) != self.M or self.M < 1:
            raise ValueError(f"M must be a positive integer, got {self.M!r}")
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        if self.window.is_zero and not self.allow_zero:
            raise ValueError("zero window (pass allow_zero=True to permit it)")

    def index(self, m: int, n: int) -> LatticeIndex:
        if not 0 <= m < self.M:
            raise IndexError(f"modulation index m={m} outside 0..{self.M - 1}")
        return LatticeIndex(m, n)

    def adjoint(self) -> "GaborSystem":
        """Same window with M and N swapped (the duality partner)."""
        return GaborSystem(self.window, self.N, self.M, self.allow_zero)


def modulate(g: FiniteSequence, m: int, M: int) -> FiniteSequence:
    """E_{m/M} g, i.e. j -> e^{2 pi i j m/M} g(j)."""
    if M < 1:
        raise ValueError("M must be >= 1")
    if g.is_zero:
        return g
    return FiniteSequence(g.offset, g.coeffs * _phases(g.indices, m % M, M))


def translate(g: FiniteSequence, n: int) -> FiniteSequence:
    """T_n g, i.e. j -> g(j - n)."""
    if g.is_zero:
        return g
    return FiniteSequence(g.offset + int(n), g.coeffs)


def gabor_element(sys: GaborSystem, idx: LatticeIndex) -> FiniteSequence:
    if not 0 <= idx.m < sys.M:
        raise IndexError(f"modulation index m={idx.m} outside 0..{sys.M - 1}")
    return modulate(translate(sys.window, idx.n * sys.N), idx.m, sys.M)


def inner_product(f: FiniteSequence, g: FiniteSequence) -> complex:
    """sum_j f(j) conj(g(j))."""
    if f.is_zero or g.is_zero:
        return 0j
    lo, hi = max(f.first, g.first), min(f.last, g.last)
    if lo > hi:
        return 0j
    a = f.coeffs[lo - f.first: hi - f.first + 1]
    b = g.coeffs[lo - g.first: hi - g.first + 1]
    return complex(np.vdot(b, a))


def synthesis_matrix(sys: GaborSystem, n_lo: int, n_hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Matrix whose columns are the Gabor elements for n_lo <= n <= n_hi.

    Columns are ordered n-major: column ``(n - n_lo) * M + m``. Rows are the
    sorted union of the element supports; the returned ``rows`` array maps
    row position to the integer index j.
    """
    if n_lo > n_hi:
        raise ValueError("need n_lo <= n_hi")
    g = sys.window
    if g.is_zero:
        raise ValueError("synthesis matrix of a zero window is zero")
    M, N = sys.M, sys.N
    supp = g.support
    rows = np.unique(np.concatenate([supp + n * N for n in range(n_lo, n_hi + 1)]))
    A = np.zeros((rows.size, (n_hi - n_lo + 1) * M), dtype=complex)
    for n in range(n_lo, n_hi + 1):
        shifted = g.values_on(rows - n * N)
        for m in range(M):
            A[:, (n - n_lo) * M + m] = shifted * _phases(rows, m, M)
    return A, rows


def column_order(M: int, n_lo: int, n_hi: int) -> list[LatticeIndex]:
    """Lattice indices in synthesis-matrix column order."""
    return [LatticeIndex(m, n) for n in range(n_lo, n_hi + 1) for m in range(M)]
