"""
Frame bounds from the fibre matrices
====================================

Every Gabor system E_{m/M} T_{nN} g on the integers reduces, frequency by
frequency, to a small N x M matrix of shifted DTFT values. Its extreme
singular values over one period give the optimal frame bounds.
"""

import numpy as np

from zgabor.oracle import random_sequence, rayleigh_quotient
from zgabor.sequences import GaborSystem
from zgabor.spectral import fiber_sweep, frame_bounds
from zgabor.windows import dense_window

# a window living on N = 3 consecutive points, analysed with M = 4 modulations
g = dense_window(3, [1.0, 2.0, 0.5])
sys = GaborSystem(g, 4, 3)

rep = frame_bounds(sys)
print(f"A = {rep.A:.6f}, B = {rep.B:.6f}, verdict {rep.verdict}")

# for such windows the bounds are M min|g|^2 and M max|g|^2
print("closed form:", 4 * 0.5 ** 2, 4 * 2.0 ** 2)

# the sweep itself: sigma_min and sigma_max of each fibre, enough for a plot
omega, smin, smax = fiber_sweep(sys, 512)
print("sigma_min range", smin.min(), smin.max())

# random test sequences never leave [A, B]
rng = np.random.default_rng(0)
q = [rayleigh_quotient(sys, random_sequence(rng)) for _ in range(200)]
print(f"Rayleigh quotients in [{min(q):.6f}, {max(q):.6f}]")
