"""
Checking the sparse-colouring hypotheses
========================================

certify() tabulates every (s, l) codegree against delta_star^(l-s)/f and
the triangle count against delta_star^2/f.
"""
from frugal import build_basic, certify, max_degree, pg_incidence

g = pg_incidence(5, 1)
delta = max_degree(g)
cert = certify(build_basic(g, 2), delta ** 0.5 / 2)
print(cert.report())

# A larger f tightens both conditions until they fail
for f in (1.5, 2.0, 4.0):
    print(f, certify(build_basic(g, 2), f).ok)
