"""
From frugal colourings to hypergraph colourings
===============================================

build_basic turns each neighbourhood into (beta+1)-edges; proper colourings
of the result are exactly the frugal colourings of the graph.
"""
from frugal import (ReductionParams, build_basic, build_cycle_reduction, build_kbt_reduction,
                    complete_bipartite, exact_frugal_chromatic, exact_hypergraph_chromatic, gnp)

g = gnp(9, 0.4, seed=5)
for beta in (1, 2, 3):
    h = build_basic(g, beta)
    print(beta, h.m, exact_frugal_chromatic(g, beta), exact_hypergraph_chromatic(h))

# Pairs with many common neighbours get promoted to 2-edges
k26 = complete_bipartite(2, 6)
p = ReductionParams.for_graph(k26, beta=2, t=2)
h = build_cycle_reduction(k26, p)
print("cycle reduction:", h.edges_of_size(2)[:3], "...", len(h.edges_of_size(3)), "triples")

# The K_{beta,t} variant uses size-dependent thresholds
h = build_kbt_reduction(k26, p)
print("kbt reduction:", h.m, "edges, rank", max(len(e) for e in h.edges))
