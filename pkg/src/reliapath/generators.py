"""Seeded random instances for tests, demos and benchmarks."""

from __future__ import annotations

import random
from typing import Sequence

from .errors import InputError
from .model import Edge, Network
from .reductions import CnfFormula, TemplateSet


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_prior(rng: random.Random, d: int) -> tuple:
    raw = [0.05 + rng.random() for _ in range(d)]
    total = sum(raw)
    return tuple(x / total for x in raw)


def _draw(rng, reliability_range, levels):
    if levels is not None:
        return rng.choice(levels)
    lo, hi = reliability_range
    return lo + (hi - lo) * rng.random()


def random_network(
    n_vertices: int,
    state_count: int,
    seed=None,
    density: float = 0.4,
    reliability_range: tuple = (0.05, 1.0),
    levels: Sequence[float] | None = None,
    parallel: float = 0.0,
) -> Network:
    """Random DAG on ``s, v1, ..., t`` in listed order, always source-sink connected.

    Each forward pair gets an edge with probability ``density``; every inner
    vertex is then given at least one in-edge and one out-edge. ``levels``, when
    given, replaces the uniform reliability draw with a choice among them.
    ``parallel`` is the chance that an edge gets a parallel twin.
    """
    if n_vertices < 2:
        raise InputError("need at least a source and a sink")
    if state_count < 1:
        raise InputError("need at least one hidden state")
    rng = _rng(seed)
    names = ["s"] + [f"v{i}" for i in range(1, n_vertices - 1)] + ["t"]
    pairs = []
    for i in range(n_vertices):
        for j in range(i + 1, n_vertices):
            if rng.random() < density:
                pairs.append((i, j))
    has_in = {j for _, j in pairs}
    has_out = {i for i, _ in pairs}
    for v in range(1, n_vertices - 1):
        if v not in has_in:
            pairs.append((rng.randrange(0, v), v))
            has_out.add(pairs[-1][0])
        if v not in has_out:
            pairs.append((v, rng.randrange(v + 1, n_vertices)))
    if n_vertices == 2 and not pairs:
        pairs.append((0, 1))
    pairs.sort()
    edges = []
    for i, j in pairs:
        copies = 2 if rng.random() < parallel else 1
        for _ in range(copies):
            rel = tuple(_draw(rng, reliability_range, levels) for _ in range(state_count))
            edges.append(Edge(f"e{len(edges)}", names[i], names[j], rel))
    return Network(state_count, random_prior(rng, state_count), tuple(names), "s", "t", tuple(edges))


def layered_network(
    n_vertices: int,
    width: int,
    state_count: int,
    seed=None,
    density: float = 0.5,
    reliability_range: tuple = (0.05, 1.0),
    levels: Sequence[float] | None = None,
) -> Network:
    """Source, layers of at most ``width`` inner vertices, sink; edges only between adjacent layers.

    Every inner vertex keeps at least one edge in and one edge out, so the
    sink is always reachable.
    """
    if n_vertices < 3:
        raise InputError("a layered network needs a source, a sink and at least one inner vertex")
    if width < 1:
        raise InputError("layer width must be at least 1")
    if not 0 < density <= 1:
        raise InputError("edge density must lie in (0, 1]")
    lo, hi = reliability_range
    if not 0 <= lo <= hi <= 1:
        raise InputError(f"reliability range {reliability_range!r} is not inside [0, 1]")
    if state_count < 1:
        raise InputError("need at least one hidden state")
    rng = _rng(seed)
    inner = [f"v{i}" for i in range(1, n_vertices - 1)]
    layers = [["s"]] + [inner[i : i + width] for i in range(0, len(inner), width)] + [["t"]]
    pairs = []
    for upper, lower in zip(layers, layers[1:]):
        chosen = {(a, b) for a in upper for b in lower if rng.random() < density}
        for b in lower:
            if not any(p[1] == b for p in chosen):
                chosen.add((rng.choice(upper), b))
        for a in upper:
            if not any(p[0] == a for p in chosen):
                chosen.add((a, rng.choice(lower)))
        order = {v: i for i, v in enumerate(upper + lower)}
        pairs.extend(sorted(chosen, key=lambda p: (order[p[0]], order[p[1]])))
    edges = [
        Edge(f"e{i}", a, b, tuple(_draw(rng, reliability_range, levels) for _ in range(state_count)))
        for i, (a, b) in enumerate(pairs)
    ]
    return Network(state_count, random_prior(rng, state_count), tuple(["s"] + inner + ["t"]), "s", "t", tuple(edges))


def random_templates(seed, width: int, count: int, wildcard: float = 0.4) -> TemplateSet:
    rng = _rng(seed)
    templates = [
        "".join("*" if rng.random() < wildcard else rng.choice("01") for _ in range(width)) for _ in range(count)
    ]
    return TemplateSet(width, tuple(templates))


def random_3cnf(seed, variable_count: int, clause_count: int) -> CnfFormula:
    if variable_count < 3:
        raise InputError("3-CNF clauses need at least three variables")
    rng = _rng(seed)
    clauses = []
    for _ in range(clause_count):
        chosen = rng.sample(range(1, variable_count + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in chosen))
    return CnfFormula(variable_count, tuple(clauses))
