"""
Frugal colourings on small graphs
=================================

A colouring is beta-frugal when it is proper and no colour shows up more
than beta times around any vertex.
"""
from frugal import (Colouring, complete_bipartite, cycle_graph, exact_chromatic,
                    exact_frugal_chromatic, square, star_graph, verify_frugal)

# The claw: three leaves around one centre
claw = star_graph(3)
print("chi_2(claw) =", exact_frugal_chromatic(claw, 2))

# two leaves may share a colour, three may not
print(verify_frugal(claw, Colouring.of([2, 0, 0, 1]), 2))
print(verify_frugal(claw, Colouring.of([1, 0, 0, 0]), 2))

# 1-frugal means distance-2 colouring, i.e. colouring the square
c4 = cycle_graph(4)
print("chi_1(C4) =", exact_frugal_chromatic(c4, 1), "chi(C4^2) =", exact_chromatic(square(c4)))

# Raising beta only helps, down to the ordinary chromatic number
k36 = complete_bipartite(3, 6)
for beta in range(1, 7):
    print(beta, exact_frugal_chromatic(k36, beta))
