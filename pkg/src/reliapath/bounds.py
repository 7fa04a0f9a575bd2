"""Jensen lower bound on path reliability and its exact maximizer.

``f`` is the log of a path's marginal reliability. ``g`` replaces the log of
the mixture by the prior-weighted mean of conditional logs, which is additive
over edges and therefore solvable by a longest-path pass over the DAG.
States with zero prior are skipped outright (0 * log 0 = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .model import IMPOSSIBLE, Network, Path, path_edges, path_reliability, safe_log, topo_order
from .oracle import DEFAULT_MAX_PATHS, brute_force_best

SLACK = 1e-9


def f_value(net: Network, path: Path) -> float:
    return safe_log(path_reliability(net, path))


def _weighted_log_sum(prior, logs_per_state) -> float:
    total = 0.0
    for p, log_r in zip(prior, logs_per_state):
        if not p:
            continue
        if log_r == IMPOSSIBLE:
            return IMPOSSIBLE
        total += float(p) * log_r
    return total


def g_value(net: Network, path: Path) -> float:
    edges = path_edges(net, path)
    logs = [sum(safe_log(e.reliability[k]) for e in edges) for k in range(net.state_count)]
    return _weighted_log_sum(net.prior, logs)


def edge_g_cost(net: Network, edge_id: str) -> float:
    e = net.edge(edge_id)
    return _weighted_log_sum(net.prior, [safe_log(r) for r in e.reliability])


@dataclass(frozen=True)
class LowerBound:
    path: Path | None
    g: float
    f: float


def g_table(net: Network) -> dict:
    """Best ``g`` prefix value per reachable vertex as ``{vertex: (value, edge_id or None)}``.

    Among equally good predecessors the one earliest in topological order wins,
    then the earlier-listed parallel edge.
    """
    order = topo_order(net)
    rank = {v: i for i, v in enumerate(order)}
    cost = {e.id: edge_g_cost(net, e.id) for e in net.edges}
    table = {net.source: (0.0, None)}
    for v in order[1:]:
        best = None
        for e in sorted(net.in_edges[v], key=lambda e: rank[e.tail]):
            if e.tail not in table:
                continue
            value = table[e.tail][0] + cost[e.id]
            if best is None or value > best[0]:
                best = (value, e.id)
        if best is not None:
            table[v] = best
    return table


def lower_bound_dp(net: Network) -> LowerBound:
    table = g_table(net)
    if net.sink not in table:
        return LowerBound(None, IMPOSSIBLE, IMPOSSIBLE)
    ids = []
    v = net.sink
    while v != net.source:
        edge_id = table[v][1]
        ids.append(edge_id)
        v = net.edge(edge_id).tail
    path = Path(reversed(ids))
    return LowerBound(path, g_value(net, path), f_value(net, path))


@dataclass(frozen=True)
class SandwichCertificate:
    g_pi_star: float
    g_sigma_star: float
    f_sigma_star: float
    f_pi_star: float
    pi_star: Path
    sigma_star: Path

    def holds(self, slack: float = SLACK) -> bool:
        # g is summed in log space and f is logged after mixing, so even the
        # Jensen link can be off by rounding when d = 1
        return (
            _le(self.g_pi_star, self.g_sigma_star, slack)
            and _le(self.g_sigma_star, self.f_sigma_star, slack)
            and _le(self.f_sigma_star, self.f_pi_star, slack)
        )


def _le(a: float, b: float, slack: float) -> bool:
    if a == IMPOSSIBLE:
        return True
    if b == IMPOSSIBLE:
        return False
    return a <= b + slack


def sandwich_certificate(net: Network, max_paths: int | None = DEFAULT_MAX_PATHS) -> SandwichCertificate:
    best = brute_force_best(net, max_paths)
    if best.path is None:
        raise InputError("sink is unreachable; no certificate exists")
    lb = lower_bound_dp(net)
    return SandwichCertificate(
        g_pi_star=g_value(net, best.path),
        g_sigma_star=lb.g,
        f_sigma_star=lb.f,
        f_pi_star=math.log(best.reliability) if best.reliability > 0 else IMPOSSIBLE,
        pi_star=best.path,
        sigma_star=lb.path,
    )
