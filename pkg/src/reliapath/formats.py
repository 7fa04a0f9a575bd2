"""Text formats: network JSON documents, flow files, template lists, DOT export."""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Real

from .errors import ReliapathError
from .model import Edge, Network
from .reductions import ReductionArtifact, TemplateSet
from .rounding import Flow

FORMAT_NAME = "reliapath-network"
FORMAT_VERSION = 1


class DocumentError(ReliapathError):
    """A document is not well-formed (bad JSON, missing keys, wrong types)."""


def _number(x) -> float | int:
    if isinstance(x, Fraction):
        return float(x)
    return x


def network_to_dict(net: Network) -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "state_count": net.state_count,
        "prior": [_number(p) for p in net.prior],
        "vertices": list(net.vertices),
        "source": net.source,
        "sink": net.sink,
        "edges": [
            {"id": e.id, "from": e.tail, "to": e.head, "reliability": [_number(r) for r in e.reliability]}
            for e in net.edges
        ],
    }


def dumps_network(net: Network) -> str:
    return json.dumps(network_to_dict(net), indent=2) + "\n"


def _require(doc: dict, key: str, kind, where: str = "document"):
    if key not in doc:
        raise DocumentError(f"{where} is missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise DocumentError(f"{where} key {key!r} has the wrong type")
    return value


def _numbers(values, where: str) -> tuple:
    if not isinstance(values, list) or not all(isinstance(x, Real) and not isinstance(x, bool) for x in values):
        raise DocumentError(f"{where} must be an array of numbers")
    return tuple(values)


def network_from_dict(doc) -> Network:
    """Build a Network from a parsed document; structural validity is checked separately."""
    if not isinstance(doc, dict):
        raise DocumentError("network document must be a JSON object")
    version = doc.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {version!r}")
    failure_mode = doc.get("probabilities", "reliability")
    if failure_mode not in ("reliability", "failure"):
        raise DocumentError(f"'probabilities' must be 'reliability' or 'failure', got {failure_mode!r}")
    value_key = "failure" if failure_mode == "failure" else "reliability"
    state_count = _require(doc, "state_count", int)
    prior = _numbers(_require(doc, "prior", list), "prior")
    vertices = _require(doc, "vertices", list)
    if not all(isinstance(v, str) for v in vertices):
        raise DocumentError("vertices must be strings")
    source = _require(doc, "source", str)
    sink = _require(doc, "sink", str)
    edges = []
    for i, raw in enumerate(_require(doc, "edges", list)):
        where = f"edge #{i}"
        if not isinstance(raw, dict):
            raise DocumentError(f"{where} must be an object")
        values = _numbers(_require(raw, value_key, list, where), f"{where} {value_key}")
        if failure_mode == "failure":
            values = tuple(1 - x for x in values)
        edges.append(
            Edge(_require(raw, "id", str, where), _require(raw, "from", str, where), _require(raw, "to", str, where), values)
        )
    return Network(state_count, prior, tuple(vertices), source, sink, tuple(edges))


def loads_network(text: str) -> Network:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return network_from_dict(doc)


def load_network(path) -> Network:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    return loads_network(text)


# flow files: "# network: <file>" header, then one "edge_id value" per line


def dumps_flow(flow: Flow, network_ref: str) -> str:
    lines = [f"# network: {network_ref}"]
    lines += [f"{edge_id} {value!r}" for edge_id, value in flow.values.items()]
    return "\n".join(lines) + "\n"


def loads_flow(text: str) -> tuple[str | None, Flow]:
    network_ref = None
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("network:"):
                network_ref = body[len("network:") :].strip()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DocumentError(f"flow line {lineno}: expected 'edge_id value'")
        try:
            value = float(parts[1])
        except ValueError:
            raise DocumentError(f"flow line {lineno}: {parts[1]!r} is not a number") from None
        if parts[0] in values:
            raise DocumentError(f"flow line {lineno}: edge {parts[0]!r} repeated")
        values[parts[0]] = value
    return network_ref, Flow(values)


def loads_templates(text: str) -> TemplateSet:
    rows = [line.strip() for line in text.splitlines()]
    rows = [r for r in rows if r and not r.startswith("#")]
    if not rows:
        raise DocumentError("template file lists no templates")
    try:
        return TemplateSet(len(rows[0]), tuple(rows))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def artifact_sidecar(art: ReductionArtifact, templates: TemplateSet) -> dict:
    return {
        "template_count": art.template_count,
        "templates": list(templates.templates),
        "bit_to_edges": [list(pair) for pair in art.bit_to_edges],
    }


def _dot_id(name: str) -> str:
    return json.dumps(name)


def _fmt(x) -> str:
    return f"{float(x):g}"


def to_dot(net: Network) -> str:
    lines = ["digraph network {", "  rankdir=LR;"]
    for v in net.vertices:
        attrs = ""
        if v == net.source:
            attrs = f" [shape=doublecircle, label={_dot_id(v + ' (source)')}]"
        elif v == net.sink:
            attrs = f" [shape=box, label={_dot_id(v + ' (sink)')}]"
        lines.append(f"  {_dot_id(v)}{attrs};")
    for e in net.edges:
        label = f"{e.id}: [" + ", ".join(_fmt(r) for r in e.reliability) + "]"
        lines.append(f"  {_dot_id(e.tail)} -> {_dot_id(e.head)} [label={_dot_id(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
