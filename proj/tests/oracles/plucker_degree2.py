"""Weights of the degree-2 part of the Pluecker coordinate ring of Gr(2,5).

Brute force: every degree-2 monomial in the ten coordinates contributes its weight,
and the span of the five quadratic relations is removed weight space by weight space
(rank computed exactly with sympy).
"""
import itertools
import json
import sys
from collections import defaultdict

import sympy

pairs = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
names = ["p%d%d" % p for p in pairs]
syms = sympy.symbols(names)
var = dict(zip(pairs, syms))


def weight(exps):
    w = [0] * 5
    for (i, j), e in zip(pairs, exps):
        w[i - 1] += e
        w[j - 1] += e
    return tuple(w)


def p(i, j):
    return var[(i, j)]


relations = []
for i, j, k, l in itertools.combinations(range(1, 6), 4):
    relations.append(sympy.expand(p(k, l) * p(i, j) - p(j, l) * p(i, k) + p(j, k) * p(i, l)))

monos = [m for m in itertools.combinations_with_replacement(range(10), 2)]
by_weight = defaultdict(list)
for m in monos:
    exps = [0] * 10
    for v in m:
        exps[v] += 1
    by_weight[weight(exps)].append(tuple(exps))

result = []
for w, ms in by_weight.items():
    rows = []
    for r in relations:
        poly = sympy.Poly(r, *syms)
        terms = dict(poly.terms())
        if weight(next(iter(terms))) != w:
            continue
        rows.append([terms.get(m, 0) for m in ms])
    rank = sympy.Matrix(rows).rank() if rows else 0
    result.extend([list(w)] * (len(ms) - rank))

result.sort()
assert len(result) == 50, len(result)
json.dump({"degree": 2, "weights": result}, sys.stdout)
sys.stdout.write("\n")
