"""
Fractional flows, path decomposition and rounding
=================================================

"""

import math
from collections import Counter

from reliapath import Edge, Network, Path
from reliapath.rounding import decompose_flow, mix_paths, relaxed_objective, rounding_certificate, sample_path

# two parallel single-edge routes, reliabilities e^-2 and e^-4
net = Network(1, (1.0,), ["s", "t"], "s", "t", [
    Edge("a", "s", "t", (math.exp(-2),)),
    Edge("b", "s", "t", (math.exp(-4),)),
])
flow = mix_paths(net, [Path(["a"]), Path(["b"])], [0.5, 0.5])
print("flow", flow.values)

# the relaxed objective exponentiates the flow-weighted log sum: e^-3
print("relaxed ", round(relaxed_objective(net, flow), 4))

# the expected value of the rounded path is larger (exp is convex)
cert = rounding_certificate(net, flow)
print("expected", round(cert.expected_path_objective, 4), "jensen holds:", cert.jensen_holds)

# decomposition and seeded sampling
dist = decompose_flow(net, flow)
print("decomposition", [(p.edge_ids, w) for p, w in dist.entries])
print(Counter(sample_path(dist, seed).edge_ids for seed in range(1000)))
