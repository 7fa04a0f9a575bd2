"""Exhaustive path enumeration: slow, exact, and the reference for every other solver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ResourceLimitError
from .model import Network, Path, path_reliability

DEFAULT_MAX_PATHS = 10**6


@dataclass(frozen=True)
class SolveResult:
    path: Path | None
    reliability: float
    method: str

    @property
    def found(self) -> bool:
        return self.path is not None


def _reaches_sink(net: Network) -> set:
    reach = {net.sink}
    stack = [net.sink]
    while stack:
        v = stack.pop()
        for e in net.in_edges.get(v, ()):
            if e.tail not in reach:
                reach.add(e.tail)
                stack.append(e.tail)
    return reach


def enumerate_paths(net: Network, max_paths: int | None = DEFAULT_MAX_PATHS) -> Iterator[Path]:
    """Yield every simple source-sink path, depth first with out-edges taken in edge-id order."""
    useful = _reaches_sink(net)
    if net.source not in useful:
        return
    ordered = {v: sorted((e for e in es if e.head in useful), key=lambda e: e.id) for v, es in net.out_edges.items()}
    count = 0
    trail: list[str] = []
    on_path = {net.source}
    # iterative DFS so long chains do not hit the recursion limit
    stack = [(net.source, iter(ordered.get(net.source, ())))]
    while stack:
        v, it = stack[-1]
        e = next(it, None)
        if e is None:
            stack.pop()
            on_path.discard(v)
            if trail:
                trail.pop()
            continue
        if e.head in on_path:
            continue
        if e.head == net.sink:
            count += 1
            if max_paths is not None and count > max_paths:
                raise ResourceLimitError(f"more than {max_paths} source-sink paths")
            yield Path(trail + [e.id])
            continue
        trail.append(e.id)
        on_path.add(e.head)
        stack.append((e.head, iter(ordered.get(e.head, ()))))


def brute_force_best(net: Network, max_paths: int | None = DEFAULT_MAX_PATHS) -> SolveResult:
    best, best_value = None, None
    for path in enumerate_paths(net, max_paths):
        value = path_reliability(net, path)
        if best_value is None or value > best_value:
            best, best_value = path, value
    if best is None:
        return SolveResult(None, 0.0, "brute")
    return SolveResult(best, best_value, "brute")
