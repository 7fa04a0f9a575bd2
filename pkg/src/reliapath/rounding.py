"""Fractional unit flows, their path decomposition, and randomized rounding.

A fractional point of the relaxed path program is a unit source-sink flow.
Decomposing it into weighted paths and sampling one gives a random path whose
expected mixture reliability is at least the relaxed objective (exp is convex).
Nothing here solves the relaxation; flows come from files or ``mix_paths``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import DecompositionError, InfeasibleFlowError, InputError
from .model import IMPOSSIBLE, Network, Path, Violation, path_edges, path_reliability, safe_log

TOLERANCE = 1e-9


@dataclass(frozen=True)
class Flow:
    values: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", dict(self.values))

    def __getitem__(self, edge_id: str) -> float:
        return self.values.get(edge_id, 0.0)


@dataclass(frozen=True)
class PathDistribution:
    """Weighted paths; zero weights are dropped on construction."""

    entries: tuple = ()

    def __post_init__(self):
        kept = tuple((p if isinstance(p, Path) else Path(p), w) for p, w in self.entries if w > 0)
        object.__setattr__(self, "entries", kept)

    @property
    def paths(self) -> list[Path]:
        return [p for p, _ in self.entries]

    @property
    def weights(self) -> list[float]:
        return [w for _, w in self.entries]

    def marginals(self) -> dict:
        out: dict[str, float] = {}
        for path, w in self.entries:
            for edge_id in path:
                out[edge_id] = out.get(edge_id, 0.0) + w
        return out


def validate_flow(net: Network, flow: Flow, tolerance: float = TOLERANCE) -> list[Violation]:
    report = []
    for edge_id, x in flow.values.items():
        if edge_id not in net.edge_map:
            report.append(Violation("unknown-edge", f"flow names unknown edge {edge_id!r}"))
        elif not 0 <= x <= 1:
            report.append(Violation("range", f"edge {edge_id!r} carries {x!r}, outside [0, 1]"))
    balance = {v: 0.0 for v in net.vertices}
    for e in net.edges:
        x = flow[e.id]
        balance[e.tail] = balance.get(e.tail, 0.0) + x
        balance[e.head] = balance.get(e.head, 0.0) - x
    for v in net.vertices:
        want = 1.0 if v == net.source else -1.0 if v == net.sink else 0.0
        if abs(balance[v] - want) > tolerance:
            report.append(
                Violation("conservation", f"vertex {v!r}: out-flow minus in-flow is {balance[v]!r}, expected {want!r}")
            )
    return report


def _require_feasible(net: Network, flow: Flow) -> None:
    report = validate_flow(net, flow)
    if report:
        raise InfeasibleFlowError(report)


def relaxed_objective(net: Network, flow: Flow) -> float:
    """Mixture objective ``sum_k prior_k * exp(sum_e log r_e^k * x_e)`` at a fractional flow."""
    _require_feasible(net, flow)
    total = 0.0
    for k, p in enumerate(net.prior):
        if not p:
            continue
        exponent = 0.0
        for e in net.edges:
            x = flow[e.id]
            if x <= 0:
                continue
            log_r = safe_log(e.reliability[k])
            if log_r == IMPOSSIBLE:
                exponent = IMPOSSIBLE
                break
            exponent += log_r * x
        total += float(p) * math.exp(exponent)
    return total


def mix_paths(net: Network, paths: Sequence[Path], weights: Sequence[float]) -> Flow:
    """Convex combination of path indicator vectors."""
    if len(paths) != len(weights) or not paths:
        raise InputError("need one positive weight per path and at least one path")
    if any(not w > 0 for w in weights):
        raise InputError("path weights must be positive")
    if abs(math.fsum(weights) - 1.0) > TOLERANCE:
        raise InputError(f"path weights sum to {math.fsum(weights)!r}, expected 1")
    values: dict[str, float] = {}
    for path, w in zip(paths, weights):
        for e in path_edges(net, path):
            values[e.id] = values.get(e.id, 0.0) + w
    return Flow(values)


def decompose_flow(net: Network, flow: Flow, tolerance: float = TOLERANCE) -> PathDistribution:
    """Split a feasible flow into weighted paths by repeated bottleneck subtraction.

    From each vertex the walk follows the out-edge with the largest residual
    (ties by edge id). Weights are renormalized to sum to one.
    """
    _require_feasible(net, flow)
    residual = {e.id: flow[e.id] for e in net.edges if flow[e.id] > tolerance}
    entries = []

    def outflow():
        return sum(residual.get(e.id, 0.0) for e in net.out_edges[net.source])

    while outflow() >= tolerance:
        if len(entries) >= len(net.edges):
            raise DecompositionError("more extracted paths than edges; flow is numerically degenerate")
        ids = []
        v = net.source
        seen = {v}
        while v != net.sink:
            options = [e for e in net.out_edges[v] if residual.get(e.id, 0.0) > tolerance]
            if not options:
                raise DecompositionError(f"no positive residual edge leaves {v!r} while flow remains")
            e = min(options, key=lambda e: (-residual[e.id], e.id))
            if e.head in seen:
                raise DecompositionError(f"positive residual cycle through {e.head!r}")
            seen.add(e.head)
            ids.append(e.id)
            v = e.head
        bottleneck = min(residual[i] for i in ids)
        for i in ids:
            residual[i] -= bottleneck
            if residual[i] <= tolerance:
                del residual[i]
        entries.append((Path(ids), bottleneck))

    total = math.fsum(w for _, w in entries)
    if not entries or total <= 0:
        raise DecompositionError("flow carries no positive path")
    return PathDistribution(tuple((p, w / total) for p, w in entries))


def sample_path(dist: PathDistribution, seed: int) -> Path:
    """Draw one path with probability equal to its weight (inverse CDF, stored order)."""
    if not dist.entries:
        raise InputError("cannot sample from an empty distribution")
    u = random.Random(seed).random()
    acc = 0.0
    for path, w in dist.entries:
        acc += w
        if u < acc:
            return path
    return dist.entries[-1][0]


class RoundingCertificate(NamedTuple):
    expected_path_objective: float
    relaxed: float
    distribution: PathDistribution

    @property
    def jensen_holds(self) -> bool:
        return self.expected_path_objective >= self.relaxed - TOLERANCE


def rounding_certificate(net: Network, flow: Flow, optimal: bool = False) -> RoundingCertificate:
    """Compare the expected reliability of the rounded path with the relaxed objective.

    Jensen's inequality guarantees ``expected >= relaxed`` for any feasible
    flow. When ``optimal`` is set the flow is claimed to maximize the
    relaxation, in which case every decomposed path must itself reach the
    relaxed value; a failure raises ``InputError`` since the claim was false.
    """
    dist = decompose_flow(net, flow)
    relaxed = relaxed_objective(net, flow)
    values = [path_reliability(net, p) for p in dist.paths]
    expected = math.fsum(w * float(v) for w, v in zip(dist.weights, values))
    cert = RoundingCertificate(expected, relaxed, dist)
    if optimal and any(v < relaxed - TOLERANCE for v in values):
        raise InputError("flow flagged optimal but a decomposed path falls short of the relaxed objective")
    return cert


def sample_many(dist: PathDistribution, seed: int, count: int) -> Iterable[Path]:
    """``count`` draws using seeds ``seed, seed + 1, ...``."""
    return [sample_path(dist, seed + i) for i in range(count)]
