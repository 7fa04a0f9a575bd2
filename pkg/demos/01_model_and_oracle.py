"""
Networks, hidden states and the brute-force oracle
==================================================

"""

# a diamond: two routes from s to t, two hidden states with equal prior
from reliapath import Edge, Network, Path, path_reliability, conditional_path_reliability, validate_network
from reliapath.oracle import brute_force_best, enumerate_paths

net = Network(
    state_count=2,
    prior=(0.5, 0.5),
    vertices=["s", "a", "b", "t"],
    source="s",
    sink="t",
    edges=[
        Edge("u1", "s", "a", (1.0, 0.0)),  # perfect in state 0, dead in state 1
        Edge("u2", "a", "t", (1.0, 0.0)),
        Edge("l1", "s", "b", (0.6, 0.6)),  # mediocre, but state independent
        Edge("l2", "b", "t", (0.6, 0.6)),
    ],
)
print("violations:", validate_network(net))

# conditional reliabilities multiply along a path; the prior mixes them
for path in enumerate_paths(net):
    conds = [conditional_path_reliability(net, path, k) for k in range(net.state_count)]
    print(path.edge_ids, "per state", conds, "mixture", path_reliability(net, path))

# edge failures are NOT independent once the state is unknown:
# the upper route is worth 0.5, not 0.5 * 0.5
best = brute_force_best(net)
print("best path", best.path.edge_ids, "reliability", best.reliability)
