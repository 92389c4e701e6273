"""
Finite linear dependencies
==========================

With finitely supported windows, N < M forces a finite linear dependency.
``find_dependency`` returns the coefficients together with the residual of
the combination, recomputed from scratch.
"""

from zgabor.dependence import NoGuaranteedDependency, find_dependency, verify_certificate
from zgabor.sequences import FiniteSequence, GaborSystem
from zgabor.windows import comb_window, dense_window

# a comb is fixed by a modulation: two elements coincide
cert = find_dependency(GaborSystem(comb_window(2, 2), 2, 1))
print(cert.kind, cert.coefficient_vector(), cert.residual)

# a generic window with N < M: columns eventually outnumber rows
g = FiniteSequence(0, [1.0, -0.3 + 0.7j, 2.0, 0.1j])
cert = find_dependency(GaborSystem(g, 3, 2))
print(cert.kind, "ell =", cert.ell, "terms:", len(cert.terms), "residual", verify_certificate(cert))

# N >= M with enough support: no counting argument applies
try:
    find_dependency(GaborSystem(dense_window(2), 2, 3))
except NoGuaranteedDependency as e:
    print("no certificate:", e)
