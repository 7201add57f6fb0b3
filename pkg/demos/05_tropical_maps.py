"""Tropical transformations of degrees between seeds.

Degrees of cluster monomials move between seeds by a piecewise-linear
map; codegrees by its mirror. The swap property links copointedness in
a seed with pointedness in its backward shift, and the degree and
codegree routes around the shift square commute.
"""
import random

from qcluster import (
    build_exchange_graph,
    check_compatibly_pointed,
    check_swap,
    check_trop_commute,
    detect_shift,
    make_seed,
    phi,
    trop_codeg,
    trop_deg,
)
from qcluster.qtorus import unit_vec

a2 = make_seed(((0, -1), (1, 0)), ((0, -1), (1, 0)))
print("degree map at vertex 1:  (1,0) ->", trop_deg(a2, 0, (1, 0)))
print("codegree map at vertex 1:(1,0) ->", trop_codeg(a2, 0, (1, 0)))
print()

graph = build_exchange_graph(a2)
t0 = graph.order[0]
far = graph.order[-1]
print("composite phi from node 0 to node 4 of (1,0):", phi(graph, t0, far, (1, 0)))
print()

print("every cap-2 monomial transports compatibly:",
      all(check_compatibly_pointed(graph, key, m)
          for key in graph.order for m in [(1, 0), (0, 2), (2, 1)]))

down = detect_shift(graph, t0, -1)
rng = random.Random(0)
print("swap property on 20 random cluster monomials:",
      all(check_swap(graph, down, rng.choice(graph.order),
                     (rng.randrange(3), rng.randrange(3)))
          for _ in range(20)))

samples = [unit_vec(2, 0), unit_vec(2, 1), (-1, 0), (0, -1), (2, -3), (-2, 2)]
print("commuting diagram on all node pairs:",
      all(check_trop_commute(graph, a, b, samples)
          for a in graph.order for b in graph.order))
