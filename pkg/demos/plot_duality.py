"""
Frames and Riesz sequences in duality
=====================================

(M, N) frames correspond to (N, M) Riesz sequences, with bounds related by
the factor M/N.
"""

import numpy as np

from zgabor.oracle import gram_finite_section
from zgabor.sequences import FiniteSequence, GaborSystem
from zgabor.spectral import frame_bounds, is_frame, is_riesz_sequence, riesz_bounds

rng = np.random.default_rng(3)
g = FiniteSequence(0, rng.standard_normal(4) + 1j * rng.standard_normal(4))

for M, N in [(3, 2), (2, 3), (2, 2)]:
    f, _ = is_frame(GaborSystem(g, M, N))
    r, _ = is_riesz_sequence(GaborSystem(g, N, M))
    print(f"frame({M},{N}) = {f}, riesz({N},{M}) = {r}")

# Riesz bounds against a large Gram section of the (2, 3) system
sys = GaborSystem(g, 2, 3)
rb = riesz_bounds(sys)
lo, hi = gram_finite_section(sys, -30, 30)
print(f"riesz bounds {rb.lower:.5f} {rb.upper:.5f}; gram section {lo:.5f} {hi:.5f}")
print("adjoint frame bounds times M/N:",
      [b * 2 / 3 for b in (frame_bounds(sys.adjoint()).A, frame_bounds(sys.adjoint()).B)])
