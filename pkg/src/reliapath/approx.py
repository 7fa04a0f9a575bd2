"""Grid coarsening approximations built on the exact cost-vector DP."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InputError, ResourceLimitError
from .exact_dp import DEFAULT_MAX_ENTRIES, IntegerCostNetwork, coarsened_value, dp_solve
from .model import IMPOSSIBLE, Network, Path, safe_log

BASIC = "basic"
PRUNED = "pruned"


@dataclass(frozen=True)
class ApproxResult:
    path: Path | None
    true_reliability: float
    coarsened_value: float
    epsilon: float
    variant: str
    prunings_evaluated: int = 0
    unit: float | None = None
    threshold: float | None = None
    skipped_thresholds: tuple = field(default=())

    @property
    def found(self) -> bool:
        return self.path is not None


def _check_epsilon(epsilon: float) -> None:
    if not 0 < epsilon < 1:
        raise InputError(f"epsilon must lie strictly between 0 and 1, got {epsilon!r}")


def floor_to_grid(log_a: float, unit: float):
    """Largest integer c with ``c * unit <= log_a``; IMPOSSIBLE passes through."""
    if log_a == IMPOSSIBLE:
        return IMPOSSIBLE
    c = math.floor(log_a / unit)
    # the division can round up across an integer boundary
    while c * unit > log_a:
        c -= 1
    return min(c, 0)


def coarsen(net: Network, unit: float) -> IntegerCostNetwork:
    if not unit > 0:
        raise InputError(f"grid unit must be positive, got {unit!r}")
    costs = {e.id: tuple(floor_to_grid(safe_log(r), unit) for r in e.reliability) for e in net.edges}
    return IntegerCostNetwork(net, unit, costs)


def basic_unit(epsilon: float, vertex_count: int) -> float:
    return -math.log1p(-epsilon) / vertex_count


def approx_solve_basic(net: Network, epsilon: float, max_entries: int | None = DEFAULT_MAX_ENTRIES) -> ApproxResult:
    """Path within a factor ``1 - epsilon`` of the optimum."""
    _check_epsilon(epsilon)
    unit = basic_unit(epsilon, len(net.vertices))
    icnet = coarsen(net, unit)
    res = dp_solve(icnet, max_entries=max_entries, method="approx-basic")
    if res.path is None:
        return ApproxResult(None, 0.0, 0.0, epsilon, BASIC, unit=unit)
    return ApproxResult(res.path, res.reliability, coarsened_value(icnet, res.path), epsilon, BASIC, unit=unit)


def prune_below(net: Network, threshold: float, ignore_zero: bool = False) -> Network:
    """Drop every edge with some conditional reliability below ``threshold``.

    With ``ignore_zero`` a state in which the edge surely fails does not count:
    such entries are exact on any grid, so they never need the threshold's scale.
    """
    if not 0 <= threshold <= 1:
        raise InputError(f"threshold must lie in [0, 1], got {threshold!r}")

    def keep(e):
        return all(r >= threshold or (ignore_zero and r == 0) for r in e.reliability)

    return net.replace_edges(e for e in net.edges if keep(e))


def pruning_thresholds(net: Network) -> list:
    """Distinct positive conditional edge reliabilities, ascending."""
    return sorted({r for e in net.edges for r in e.reliability if r > 0})


def _pruned_iteration(net: Network, threshold, epsilon: float, max_entries):
    pruned = prune_below(net, threshold, ignore_zero=True)
    if threshold == 1:
        # every surviving log-reliability is 0 or IMPOSSIBLE: any unit is exact
        unit = 1.0
    else:
        unit = epsilon * -math.log(threshold) / len(pruned.vertices)
    icnet = coarsen(pruned, unit)
    try:
        res = dp_solve(icnet, max_entries=max_entries, method="approx-pruned")
    except ResourceLimitError:
        return None
    if res.path is None:
        return (None, 0.0, 0.0, unit)
    return (res.path, res.reliability, coarsened_value(icnet, res.path), unit)


def approx_solve_pruned(
    net: Network,
    epsilon: float,
    max_entries: int | None = DEFAULT_MAX_ENTRIES,
    executor=None,
) -> ApproxResult:
    """Threshold sweep: for each candidate minimum edge reliability, prune, coarsen and solve.

    ``executor`` may be any object with a ``map`` method (e.g. a
    ``concurrent.futures`` pool); the reduction afterwards is order-preserving
    so the answer does not depend on it.
    """
    _check_epsilon(epsilon)
    thresholds = pruning_thresholds(net)
    run = (executor.map if executor is not None else map)
    outcomes = list(run(lambda a: _pruned_iteration(net, a, epsilon, max_entries), thresholds))

    best = None
    skipped = []
    for a, outcome in zip(thresholds, outcomes):
        if outcome is None:
            skipped.append(a)
            continue
        path, value, coarse, unit = outcome
        if path is not None and (best is None or value > best[1]):
            best = (path, value, coarse, unit, a)
    if best is None:
        return ApproxResult(None, 0.0, 0.0, epsilon, PRUNED, len(thresholds), skipped_thresholds=tuple(skipped))
    path, value, coarse, unit, a = best
    return ApproxResult(path, value, coarse, epsilon, PRUNED, len(thresholds), unit, a, tuple(skipped))
