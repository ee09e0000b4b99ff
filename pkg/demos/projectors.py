"""
Idempotents on two uprights
===========================

The weight space (k, l) splits into isotypic blocks; each block has an
explicit projector written as a sum of F^(x) E^(x) ladders.
"""

from skewhowe import build_projector, verify_idempotent_system, render
from skewhowe.projector import admissible, isotypic_dimension, verify_gl_m1_completeness

k, l = 2, 2
for M in admissible(k, l):
    P = build_projector(k, l, M)
    print("M=%d  coefficients: %s" % (M, ", ".join(render(c) for c in P.coefficients)))

# evaluate over C^{2|1} and check the system is complete and orthogonal
for name, ok in verify_idempotent_system(k, l, 2, 1):
    print("  %-22s %s" % (name, ok))

# rank of each projector is the dimension of its block
for M in admissible(k, l):
    E = build_projector(k, l, M).evaluate(2, 1)
    print("M=%d rank %d, block dimension %d" % (M, E.rank(), isotypic_dimension(k, l, M, 2, 1)))

# over C^{m|1} one needs M = 0 as well: dropping it breaks completeness
print(verify_gl_m1_completeness(2, 1, 1))
