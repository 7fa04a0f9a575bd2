"""
From 3-SAT to templates to networks
===================================

"""

from fractions import Fraction
from itertools import product

from reliapath.exact_dp import dp_solve, quantize_exact
from reliapath.oracle import brute_force_best
from reliapath.reductions import (
    CnfFormula,
    bitstring_to_path,
    count_matches,
    network_from_templates,
    templates_from_3sat,
)
from reliapath.model import path_reliability

# one clause (x1 or not x2 or x3) becomes three templates of width p + 2m
cnf = CnfFormula(3, [(1, -2, 3)])
ts = templates_from_3sat(cnf)
print(ts.templates)

# each template is a hidden state; two parallel edges per bit position
art = network_from_templates(ts)
net = art.network
print(len(net.vertices), "vertices,", len(net.edges), "edges, prior", net.prior)

# a path spells a bitstring; its reliability is (#matching templates) / d
for bits in ("00001", "11100", "01011"):
    path = bitstring_to_path(art, bits)
    print(bits, count_matches(ts, bits), path_reliability(net, path))

# satisfiable iff some path reaches reliability m / 3m = 1/3
unsat = CnfFormula(3, [tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in product((1, -1), repeat=3)])
for formula in (cnf, CnfFormula(3, [(1, 2, 3), (-1, -2, -3)])):
    best = brute_force_best(network_from_templates(templates_from_3sat(formula)).network)
    print(formula.is_satisfiable(), best.reliability, best.reliability >= Fraction(1, 3))

# all eight sign patterns over three variables: unsatisfiable, 2^19 paths,
# too many for brute force but easy for the exact DP (0/1 costs on a unit grid)
res = dp_solve(quantize_exact(network_from_templates(templates_from_3sat(unsat)).network))
print(unsat.is_satisfiable(), res.reliability, res.reliability >= Fraction(1, 3))
