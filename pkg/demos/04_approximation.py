"""
Coarsening: (1 - eps) and OPT^(1 + eps) approximations
======================================================

"""

from reliapath.approx import approx_solve_basic, approx_solve_pruned
from reliapath.generators import random_network
from reliapath.model import Edge, Network
from reliapath.oracle import brute_force_best

# arbitrary reliabilities: floor each log onto a grid, then run the exact DP
net = random_network(8, 2, seed=21, density=0.6)
opt = brute_force_best(net).reliability
print("OPT", round(opt, 6))
for eps in (0.5, 0.25, 0.1, 0.01):
    basic = approx_solve_basic(net, eps)
    pruned = approx_solve_pruned(net, eps)
    print(f"eps={eps:<5} basic {basic.true_reliability:.6f} (>= {(1 - eps) * opt:.6f})"
          f"   pruned {pruned.true_reliability:.6f} (>= {opt ** (1 + eps):.6f})"
          f"   thresholds tried {pruned.prunings_evaluated}")

# the pruned sweep assumes the optimum is not far below e^-q of its own
# threshold; a rare low-prior state with a tiny entry breaks that
tricky = Network(3, (0.1, 0.45, 0.45), ["s", "v2", "v3", "v5", "t"], "s", "t", [
    Edge("a", "s", "v2", (0.1, 0.99, 0.99)),
    Edge("b", "v2", "v3", (0.02, 0.9, 0.99)),
    Edge("c", "v3", "v5", (0.001, 0.99, 1.0)),
    Edge("d", "v5", "t", (1.0, 1.0, 1.0)),
    Edge("x", "s", "v5", (0.9, 0.5, 1.0)),
])
opt = brute_force_best(tricky)
res = approx_solve_pruned(tricky, 0.25)
print("\nOPT", opt.path.edge_ids, round(opt.reliability, 5), " OPT^1.25 =", round(opt.reliability ** 1.25, 5))
print("pruned", res.path.edge_ids, round(res.true_reliability, 5))
print("basic ", approx_solve_basic(tricky, 0.25).path.edge_ids)
