"""
Window families
===============

Sampled B-splines, truncated Gaussians, perturbed blocks and a window whose
dependency survives an infinite tail.
"""

from zgabor.dependence import certify_independence_range, sigma_min_high_precision
from zgabor.sequences import GaborSystem
from zgabor.spectral import is_frame
from zgabor.windows import (bspline_samples, bspline_window, dependent_infinite_window,
                            gaussian_window, perturbed_window)

# B-spline samples are exact rationals summing to one
print("B_4 samples:", bspline_samples(4))
for N, M in [(1, 2), (2, 3), (3, 4)]:
    print(f"bspline N={N}, M={M}: frame {is_frame(GaborSystem(bspline_window(N), M, N))[0]}")

# a frame window with extra support: the step keeps the lower bound positive
rec = perturbed_window(3, 2, 5)
print("perturbed:", rec.parameters)

# truncated Gaussian, J = 7
rec = gaussian_window()
g = rec.window
print("gaussian coefficients:", g.support_size, "tail", rec.truncation_error)
print("frame for (3, 2):", is_frame(GaborSystem(g, 3, 2))[0])

# for (3, 2) the finite sections are independent but terribly conditioned:
# double precision sees noise, extended precision sees about 1.2e-33
sys = GaborSystem(g, 3, 2)
print("sigma_min double:", certify_independence_range(sys, -5, 5).sigma_min)
print("sigma_min 60 digits:", sigma_min_high_precision(sys, -5, 5))

# spikes at lM + 1 keep the same annihilating modulations
rec = dependent_infinite_window(3, 2)
print("infinite-type window: support", rec.window.support_size,
      "residual", rec.certificate.residual, "frame", is_frame(GaborSystem(rec.window, 3, 2))[0])
