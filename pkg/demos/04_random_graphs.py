"""
Sparse random graphs with large girth
=====================================

Sample G(n, d/n), drop high-degree vertices and break every short cycle.
"""
import numpy as np

from frugal import gnp, girth, max_degree, prune

n, d = 2000, 8
fractions = []
for seed in range(5):
    g = gnp(n, d / n, seed=seed)
    pruned, rep = prune(g, d, 6)
    fractions.append(pruned.n / n)
    print(seed, g.m, len(rep.high_degree), len(rep.on_short_cycles),
          max_degree(pruned), girth(pruned))

print("mean survivor fraction %.3f" % np.mean(fractions))
