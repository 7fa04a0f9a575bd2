"""Hardness gadgets: 3-SAT to wildcard string templates, templates to networks.

A template over ``{0, 1, *}`` becomes one hidden state. The network is a line
of ``n + 1`` vertices with two parallel edges per bit position; choosing the
bit-1 or bit-0 edge spells a bitstring, and a path survives state ``j`` exactly
when its bitstring matches template ``j``. With a uniform prior the path's
reliability is therefore ``matches / d``. Reliabilities are the integers 0 and
1 and the prior is ``Fraction(1, d)``, so that identity holds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .model import Edge, Network, Path, path_edges

WILDCARD = "*"


@dataclass(frozen=True)
class TemplateSet:
    width: int
    templates: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "templates", tuple(self.templates))
        if self.width < 0:
            raise InputError("template width must be nonnegative")
        for t in self.templates:
            if len(t) != self.width:
                raise InputError(f"template {t!r} has width {len(t)}, expected {self.width}")
            if set(t) - {"0", "1", WILDCARD}:
                raise InputError(f"template {t!r} uses symbols outside 0, 1, *")

    def __len__(self) -> int:
        return len(self.templates)

    @classmethod
    def from_strings(cls, templates: Sequence[str]) -> "TemplateSet":
        if not templates:
            raise InputError("width of an empty template list is ambiguous; construct TemplateSet directly")
        return cls(len(templates[0]), tuple(templates))


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF with DIMACS-style signed literals (``-2`` is the negation of variable 2)."""

    variable_count: int
    clauses: tuple = ()

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for clause in clauses:
            if len(clause) != 3:
                raise InputError(f"clause {clause} does not have exactly three literals")
            variables = [abs(lit) for lit in clause]
            if any(not 1 <= v <= self.variable_count for v in variables):
                raise InputError(f"clause {clause} names a variable outside 1..{self.variable_count}")
            if len(set(variables)) != 3:
                raise InputError(f"clause {clause} repeats a variable")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause) for clause in self.clauses)

    def is_satisfiable(self) -> bool:
        p = self.variable_count
        return any(self.satisfied_by([(bits >> i) & 1 == 1 for i in range(p)]) for bits in range(2**p))


def parse_dimacs(text: str) -> CnfFormula:
    """Read ``p cnf <vars> <clauses>`` followed by 0-terminated clauses; ``c`` lines are comments."""
    header = None
    literals: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"bad problem line {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError:
            raise InputError(f"bad clause line {line!r}") from None
    if header is None:
        raise InputError("missing 'p cnf' problem line")
    clauses, current = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise InputError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise InputError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def format_dimacs(cnf: CnfFormula) -> str:
    lines = [f"p cnf {cnf.variable_count} {len(cnf.clauses)}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in cnf.clauses]
    return "\n".join(lines) + "\n"


# suffix codes that make the three templates of one clause mutually exclusive
_CLAUSE_CODES = ("00", "01", "10")


def templates_from_3sat(cnf: CnfFormula) -> TemplateSet:
    p, m = cnf.variable_count, len(cnf.clauses)
    width = p + 2 * m
    templates = []
    for i, clause in enumerate(cnf.clauses):
        for j, lit in enumerate(clause):
            t = [WILDCARD] * width
            t[abs(lit) - 1] = "1" if lit > 0 else "0"
            t[p + 2 * i : p + 2 * i + 2] = _CLAUSE_CODES[j]
            templates.append("".join(t))
    return TemplateSet(width, tuple(templates))


def canonical_bitstring(cnf: CnfFormula, assignment: Sequence[bool]) -> str:
    """Assignment bits followed, per clause, by the code of its first satisfied literal.

    Raises InputError if some clause is unsatisfied.
    """
    bits = ["1" if a else "0" for a in assignment]
    for clause in cnf.clauses:
        for j, lit in enumerate(clause):
            if assignment[abs(lit) - 1] == (lit > 0):
                bits.append(_CLAUSE_CODES[j])
                break
        else:
            raise InputError(f"assignment leaves clause {clause} unsatisfied")
    return "".join(bits)


def matches(template: str, bitstring: str) -> bool:
    if len(template) != len(bitstring):
        raise InputError(f"width mismatch: template {len(template)}, bitstring {len(bitstring)}")
    return all(t == WILDCARD or t == b for t, b in zip(template, bitstring))


def count_matches(ts: TemplateSet, bitstring: str) -> int:
    if len(bitstring) != ts.width:
        raise InputError(f"width mismatch: templates {ts.width}, bitstring {len(bitstring)}")
    return sum(matches(t, bitstring) for t in ts.templates)


@dataclass(frozen=True)
class ReductionArtifact:
    network: Network
    bit_to_edges: tuple  # per bit position: (bit-1 edge id, bit-0 edge id)
    template_count: int

    @property
    def width(self) -> int:
        return len(self.bit_to_edges)


def network_from_templates(ts: TemplateSet) -> ReductionArtifact:
    if not ts.templates:
        raise InputError("cannot build a network from an empty template set")
    if ts.width < 1:
        raise InputError("templates must have width at least 1")
    d = len(ts.templates)
    vertices = tuple(f"v{i}" for i in range(1, ts.width + 2))
    edges = []
    bit_to_edges = []
    for i in range(ts.width):
        one_id, zero_id = f"e{i + 1}", f"e{i + 1}'"
        one = tuple(1 if t[i] in ("1", WILDCARD) else 0 for t in ts.templates)
        zero = tuple(1 if t[i] in ("0", WILDCARD) else 0 for t in ts.templates)
        edges.append(Edge(one_id, vertices[i], vertices[i + 1], one))
        edges.append(Edge(zero_id, vertices[i], vertices[i + 1], zero))
        bit_to_edges.append((one_id, zero_id))
    share = Fraction(1, d)
    net = Network(d, (share,) * d, vertices, vertices[0], vertices[-1], tuple(edges))
    return ReductionArtifact(net, tuple(bit_to_edges), d)


def path_to_bitstring(art: ReductionArtifact, path: Path) -> str:
    edges = path_edges(art.network, path)
    if len(edges) != art.width:
        raise InputError(f"path has {len(edges)} edges, expected {art.width}")
    bits = []
    for (one_id, zero_id), e in zip(art.bit_to_edges, edges):
        if e.id == one_id:
            bits.append("1")
        elif e.id == zero_id:
            bits.append("0")
        else:
            raise InputError(f"edge {e.id!r} does not belong to its bit position")
    return "".join(bits)


def bitstring_to_path(art: ReductionArtifact, bitstring: str) -> Path:
    if len(bitstring) != art.width:
        raise InputError(f"bitstring has width {len(bitstring)}, expected {art.width}")
    if set(bitstring) - {"0", "1"}:
        raise InputError(f"bitstring {bitstring!r} contains symbols other than 0 and 1")
    return Path(one if b == "1" else zero for (one, zero), b in zip(art.bit_to_edges, bitstring))
