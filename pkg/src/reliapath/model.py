"""Networks whose edge failures are independent given a hidden discrete state.

Reliabilities are stored as *not-failed* probabilities, one per hidden state.
Values are kept as given: floats for ordinary input, ``fractions.Fraction`` or
``int`` when a caller needs exact arithmetic (the hardness reductions do).
Hidden states are indexed from 0.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InputError, StructureError

#: Log of probability zero. Absorbs addition, sorts below every finite value,
#: and ``math.exp(IMPOSSIBLE) == 0.0``.
IMPOSSIBLE = float("-inf")

PRIOR_TOLERANCE = 1e-9


def is_impossible(value) -> bool:
    return value == IMPOSSIBLE


def safe_log(p) -> float:
    """Natural log of a probability, ``IMPOSSIBLE`` for zero."""
    if p == 0:
        return IMPOSSIBLE
    return math.log(p)


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    reliability: tuple

    def __post_init__(self):
        object.__setattr__(self, "reliability", tuple(self.reliability))


@dataclass(frozen=True)
class Path:
    """Ordered edge identifiers from source to sink."""

    edge_ids: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "edge_ids", tuple(self.edge_ids))

    def __iter__(self) -> Iterator[str]:
        return iter(self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class Network:
    state_count: int
    prior: tuple
    vertices: tuple
    source: str
    sink: str
    edges: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "prior", tuple(self.prior))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @cached_property
    def edge_map(self) -> dict:
        out = {}
        for e in self.edges:
            out.setdefault(e.id, e)
        return out

    @cached_property
    def out_edges(self) -> dict:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out.setdefault(e.tail, []).append(e)
        return out

    @cached_property
    def in_edges(self) -> dict:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out.setdefault(e.head, []).append(e)
        return out

    def edge(self, edge_id: str) -> Edge:
        try:
            return self.edge_map[edge_id]
        except KeyError:
            raise InputError(f"unknown edge id {edge_id!r}") from None

    def replace_edges(self, edges: Iterable[Edge]) -> "Network":
        return Network(self.state_count, self.prior, self.vertices, self.source, self.sink, tuple(edges))


class Violation(NamedTuple):
    kind: str
    detail: str


def _probability_ok(x) -> bool:
    # rejects NaN as well as values outside [0, 1]
    return 0 <= x <= 1


def validate_network(net: Network) -> list[Violation]:
    """Return every violated structural or probabilistic invariant; empty when valid."""
    report = []
    d = net.state_count
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        report.append(Violation("state-count", f"state_count must be a positive integer, got {d!r}"))
    if len(net.prior) != d:
        report.append(Violation("prior-length", f"prior has {len(net.prior)} entries, expected {d}"))
    for k, p in enumerate(net.prior):
        if not _probability_ok(p):
            report.append(Violation("prior-range", f"prior[{k}] = {p!r} is outside [0, 1]"))
    total = math.fsum(float(p) for p in net.prior)
    if abs(total - 1.0) > PRIOR_TOLERANCE:
        report.append(Violation("prior-sum", f"prior sums to {total!r}, expected 1"))

    vertex_set = set()
    for v in net.vertices:
        if v in vertex_set:
            report.append(Violation("duplicate-vertex", f"vertex {v!r} listed twice"))
        vertex_set.add(v)
    if net.source not in vertex_set:
        report.append(Violation("missing-source", f"source {net.source!r} is not a listed vertex"))
    if net.sink not in vertex_set:
        report.append(Violation("missing-sink", f"sink {net.sink!r} is not a listed vertex"))
    if net.source == net.sink:
        report.append(Violation("source-is-sink", f"source and sink are both {net.source!r}"))

    seen_ids = set()
    for e in net.edges:
        if e.id in seen_ids:
            report.append(Violation("duplicate-edge", f"edge id {e.id!r} used twice"))
        seen_ids.add(e.id)
        for end in (e.tail, e.head):
            if end not in vertex_set:
                report.append(Violation("dangling-endpoint", f"edge {e.id!r} endpoint {end!r} is not a listed vertex"))
        if len(e.reliability) != d:
            report.append(
                Violation("reliability-length", f"edge {e.id!r} has {len(e.reliability)} reliabilities, expected {d}")
            )
        for k, r in enumerate(e.reliability):
            if not _probability_ok(r):
                report.append(Violation("reliability-range", f"edge {e.id!r} reliability[{k}] = {r!r} is outside [0, 1]"))

    cycle = _find_cycle_vertex(net, vertex_set)
    if cycle is not None:
        report.append(Violation("cycle", f"directed cycle through vertex {cycle!r}"))
    return report


def _find_cycle_vertex(net: Network, vertex_set) -> str | None:
    indeg = {v: 0 for v in vertex_set}
    succ = {v: [] for v in vertex_set}
    for e in net.edges:
        if e.tail in vertex_set and e.head in vertex_set:
            succ[e.tail].append(e.head)
            indeg[e.head] += 1
    stack = [v for v, k in indeg.items() if k == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if removed == len(vertex_set):
        return None
    return min((v for v, k in indeg.items() if k > 0), key=str)


def topo_order(net: Network) -> list[str]:
    """Topological order starting at the source; ties go to the earlier-listed vertex.

    Raises StructureError on a cycle or when an edge enters the source, since
    then no order can begin at the source.
    """
    position = {v: i for i, v in enumerate(net.vertices)}
    for e in net.edges:
        if e.tail not in position or e.head not in position:
            raise InputError(f"edge {e.id!r} has an endpoint that is not a listed vertex")
    if net.source not in position:
        raise InputError(f"source {net.source!r} is not a listed vertex")
    if net.in_edges.get(net.source):
        e = net.in_edges[net.source][0]
        raise StructureError(f"edge {e.id!r} enters the source {net.source!r}")

    indeg = {v: 0 for v in net.vertices}
    for e in net.edges:
        indeg[e.head] += 1
    heap = [(position[v], v) for v in net.vertices if indeg[v] == 0 and v != net.source]
    heapq.heapify(heap)
    order = [net.source]
    for e in net.out_edges[net.source]:
        indeg[e.head] -= 1
        if indeg[e.head] == 0:
            heapq.heappush(heap, (position[e.head], e.head))
    while heap:
        _, v = heapq.heappop(heap)
        order.append(v)
        for e in net.out_edges[v]:
            indeg[e.head] -= 1
            if indeg[e.head] == 0:
                heapq.heappush(heap, (position[e.head], e.head))
    if len(order) != len(net.vertices):
        raise StructureError("the network contains a directed cycle")
    return order


def path_edges(net: Network, path: Path | Sequence[str]) -> list[Edge]:
    """Resolve ``path`` to its edges, checking that it is a simple source-sink path."""
    ids = path.edge_ids if isinstance(path, Path) else tuple(path)
    if not ids:
        raise InputError("empty path cannot connect distinct source and sink")
    edges = [net.edge(i) for i in ids]
    if edges[0].tail != net.source:
        raise InputError(f"path starts at {edges[0].tail!r}, not at the source {net.source!r}")
    if edges[-1].head != net.sink:
        raise InputError(f"path ends at {edges[-1].head!r}, not at the sink {net.sink!r}")
    visited = {edges[0].tail}
    for prev, nxt in zip(edges, edges[1:]):
        if prev.head != nxt.tail:
            raise InputError(f"edges {prev.id!r} and {nxt.id!r} do not chain")
    for e in edges:
        if e.head in visited:
            raise InputError(f"path revisits vertex {e.head!r}")
        visited.add(e.head)
    return edges


def _check_state(net: Network, k: int) -> None:
    if not 0 <= k < net.state_count:
        raise InputError(f"state {k} outside 0..{net.state_count - 1}")


def conditional_path_reliability(net: Network, path: Path, state: int):
    """Probability that no edge of ``path`` fails given the hidden state."""
    _check_state(net, state)
    return math.prod(e.reliability[state] for e in path_edges(net, path))


def _mixture(prior, conditionals):
    total = sum(p * c for p, c in zip(prior, conditionals) if p)
    return 1.0 if total > 1 else total


def path_reliability(net: Network, path: Path):
    """Marginal probability that ``path`` has not failed."""
    edges = path_edges(net, path)
    conditionals = [math.prod(e.reliability[k] for e in edges) for k in range(net.state_count)]
    return _mixture(net.prior, conditionals)


def edge_log_reliability(net: Network, edge_id: str, state: int) -> float:
    _check_state(net, state)
    return safe_log(net.edge(edge_id).reliability[state])
