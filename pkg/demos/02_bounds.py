"""
An additive lower bound and its sandwich
========================================

"""

import math

from reliapath.bounds import f_value, g_value, lower_bound_dp, sandwich_certificate
from reliapath.generators import random_network
from reliapath.model import Edge, Network, Path

# f = log of the mixture, g = prior-weighted sum of per-state logs.
# g splits over edges, so a longest-path DP maximizes it exactly.
net = random_network(8, 3, seed=12)
lb = lower_bound_dp(net)
print("g-optimal path", lb.path.edge_ids)
print("g =", round(lb.g, 4), " f =", round(lb.f, 4), " (g <= f always)")

# the certificate orders four numbers: g(pi*) <= g(sigma*) <= f(sigma*) <= f(pi*)
cert = sandwich_certificate(net)
print([round(x, 4) for x in (cert.g_pi_star, cert.g_sigma_star, cert.f_sigma_star, cert.f_pi_star)])
print("holds:", cert.holds())

# the bound can be arbitrarily bad: a route with a surely failing state has g = -inf
gap = Network(2, (0.5, 0.5), ["s", "a", "b", "t"], "s", "t", [
    Edge("u1", "s", "a", (1.0, 0.0)), Edge("u2", "a", "t", (1.0, 0.0)),
    Edge("l1", "s", "b", (0.6, 0.6)), Edge("l2", "b", "t", (0.6, 0.6)),
])
upper = Path(["u1", "u2"])
print("upper route: f =", round(f_value(gap, upper), 4), "g =", g_value(gap, upper))
cert = sandwich_certificate(gap)
print("sigma*", cert.sigma_star.edge_ids, "reliability", round(math.exp(cert.f_sigma_star), 4))
print("pi*   ", cert.pi_star.edge_ids, "reliability", round(math.exp(cert.f_pi_star), 4))
