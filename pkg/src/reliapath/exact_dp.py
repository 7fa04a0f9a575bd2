"""Exact dynamic program over per-state integer log-cost vectors.

Each edge carries a vector of ``d`` nonpositive integers (or ``IMPOSSIBLE``)
such that ``cost * unit`` is its log-reliability in that state. The table maps
every vertex to the set of cost vectors realized by some source prefix; the
sink's vectors are then ranked by the mixture objective. Tables are sparse and
built forward, pushing ``parent + edge`` along each edge in topological order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError, PrecisionError, ResourceLimitError
from .model import IMPOSSIBLE, Network, Path, path_reliability, safe_log, topo_order
from .oracle import SolveResult

DEFAULT_MAX_ENTRIES = 10**7
GRID_TOLERANCE = 1e-9
# sink vectors whose objectives agree to this relative precision are treated
# as tied and settled by recomputing true reliabilities
TIE_RTOL = 1e-12
MAX_TIE_PATHS = 10_000


@dataclass(frozen=True, eq=False)
class IntegerCostNetwork:
    base: Network
    unit: float
    costs: dict

    def __post_init__(self):
        if not self.unit > 0:
            raise InputError(f"grid unit must be positive, got {self.unit!r}")
        d = self.base.state_count
        for e in self.base.edges:
            vec = self.costs.get(e.id)
            if vec is None or len(vec) != d:
                raise InputError(f"edge {e.id!r} needs a cost vector of length {d}")
            for c in vec:
                if c != IMPOSSIBLE and not (isinstance(c, int) and c <= 0):
                    raise InputError(f"edge {e.id!r} cost {c!r} is not a nonpositive integer")

    @property
    def q(self) -> int:
        """Smallest q with every finite cost in {0, ..., -q+1}."""
        finite = [-c for vec in self.costs.values() for c in vec if c != IMPOSSIBLE]
        return max(finite, default=0) + 1


def quantize_exact(net: Network, unit: float = 1.0, tolerance: float = GRID_TOLERANCE) -> IntegerCostNetwork:
    """Snap log-reliabilities that already lie on the ``unit`` grid to integers."""
    if not unit > 0:
        raise InputError(f"grid unit must be positive, got {unit!r}")
    costs = {}
    for e in net.edges:
        vec = []
        for k, r in enumerate(e.reliability):
            log_r = safe_log(r)
            if log_r == IMPOSSIBLE:
                vec.append(IMPOSSIBLE)
                continue
            c = round(log_r / unit)
            if abs(log_r - c * unit) > tolerance:
                raise PrecisionError(
                    f"edge {e.id!r} state {k}: log-reliability {log_r!r} is not a multiple of {unit!r}"
                )
            vec.append(min(int(c), 0))
        costs[e.id] = tuple(vec)
    return IntegerCostNetwork(net, unit, costs)


def add_vectors(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def grid_objective(prior, unit: float, vector: tuple) -> float:
    """Mixture reliability implied by a cost vector on the grid."""
    return sum(float(p) * math.exp(unit * c) for p, c in zip(prior, vector) if p)


def dominates(a: tuple, b: tuple) -> bool:
    return a != b and all(x >= y for x, y in zip(a, b))


def dominance_prune(table_slice: dict) -> dict:
    """Drop every cost vector that another vector at the same vertex dominates.

    The objective is nondecreasing in each component and later edges add the
    same costs to both vectors, so a dominated prefix can never win.
    """
    kept: list[tuple] = []
    # a dominator is lexicographically larger, so it is seen first; if it was
    # itself dropped, whatever dropped it also dominates the candidate
    for vec in sorted(table_slice, reverse=True):
        if not any(dominates(other, vec) for other in kept):
            kept.append(vec)
    keep = set(kept)
    return {vec: ptrs for vec, ptrs in table_slice.items() if vec in keep}


def build_table(icnet: IntegerCostNetwork, prune: bool = True, max_entries: int | None = DEFAULT_MAX_ENTRIES) -> dict:
    """Return ``{vertex: {cost_vector: [(edge_id, parent_vector), ...]}}``.

    The first back-pointer of each entry is its canonical one; the rest record
    other prefixes with the same vector. Unreachable vertices are absent.
    """
    net = icnet.base
    order = topo_order(net)
    rank = {v: i for i, v in enumerate(order)}
    position = {e.id: i for i, e in enumerate(net.edges)}
    zero = (0,) * net.state_count
    table = {net.source: {zero: []}}
    stored = 1
    for v in order[1:]:
        entries: dict[tuple, list] = {}
        for e in sorted(net.in_edges[v], key=lambda e: (rank[e.tail], position[e.id])):
            parent = table.get(e.tail)
            if not parent:
                continue
            edge_cost = icnet.costs[e.id]
            for vec in parent:
                entries.setdefault(add_vectors(vec, edge_cost), []).append((e.id, vec))
            if max_entries is not None and stored + len(entries) > max_entries:
                raise ResourceLimitError(f"dynamic-programming table exceeded {max_entries} entries")
        if not entries:
            continue
        if prune:
            entries = dominance_prune(entries)
        table[v] = entries
        stored += len(entries)
    return table


def _realizing_paths(net: Network, table: dict, vertex, vector, limit: int):
    """Yield edge-id lists of source prefixes ending at ``vertex`` with ``vector``, pointer order first."""
    if vertex == net.source:
        yield []
        return
    for edge_id, parent_vec in table[vertex][vector]:
        if limit <= 0:
            return
        tail = net.edge_map[edge_id].tail
        for prefix in _realizing_paths(net, table, tail, parent_vec, limit):
            limit -= 1
            yield prefix + [edge_id]
            if limit <= 0:
                return


def dp_solve(
    icnet: IntegerCostNetwork,
    prune: bool = True,
    max_entries: int | None = DEFAULT_MAX_ENTRIES,
    method: str = "dp",
) -> SolveResult:
    net = icnet.base
    table = build_table(icnet, prune=prune, max_entries=max_entries)
    sink = table.get(net.sink)
    if not sink:
        return SolveResult(None, 0.0, method)
    scored = sorted(((grid_objective(net.prior, icnet.unit, vec), vec) for vec in sink), key=lambda t: t[1], reverse=True)
    top = max(score for score, _ in scored)
    contenders = [vec for score, vec in scored if score >= top - TIE_RTOL * top]

    best_path, best_value = None, None
    budget = MAX_TIE_PATHS
    for vec in contenders:
        for ids in _realizing_paths(net, table, net.sink, vec, budget):
            budget -= 1
            path = Path(ids)
            value = path_reliability(net, path)
            if best_value is None or value > best_value:
                best_path, best_value = path, value
        if budget <= 0:
            break
    return SolveResult(best_path, best_value, method)


def coarsened_value(icnet: IntegerCostNetwork, path: Path) -> float:
    """Grid objective of ``path`` under ``icnet``'s integer costs."""
    vec = (0,) * icnet.base.state_count
    for edge_id in path:
        vec = add_vectors(vec, icnet.costs[edge_id])
    return grid_objective(icnet.base.prior, icnet.unit, vec)
