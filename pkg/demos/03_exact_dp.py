"""
Exact dynamic programming over cost vectors
===========================================

"""

import math
import time

from reliapath.exact_dp import build_table, dp_solve, quantize_exact
from reliapath.generators import random_network
from reliapath.oracle import brute_force_best

# when every log-reliability is an integer multiple of a unit, a path is
# summarized by its vector of per-state integer costs
levels = [math.exp(-j) for j in range(4)]
net = random_network(9, 2, seed=3, density=0.6, levels=levels)
icnet = quantize_exact(net, unit=1.0)
print("q =", icnet.q, "(largest |cost| on any edge)")

# table sizes with and without dominance pruning
full = build_table(icnet, prune=False)
pruned = build_table(icnet, prune=True)
print("entries without pruning:", sum(map(len, full.values())))
print("entries with pruning:   ", sum(map(len, pruned.values())))

t0 = time.perf_counter()
res = dp_solve(icnet)
t1 = time.perf_counter()
oracle = brute_force_best(net)
t2 = time.perf_counter()
print(f"dp     {res.reliability!r}  {1e3 * (t1 - t0):.2f} ms")
print(f"brute  {oracle.reliability!r}  {1e3 * (t2 - t1):.2f} ms")
print("identical:", res.reliability == oracle.reliability)
