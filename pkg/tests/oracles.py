"""Independent reference computations used to confirm frozen test values.

Nothing here imports the library's algorithms; only plain integer data
(generators, binomial exponent pairs) crosses the boundary.
"""
from __future__ import annotations

from itertools import combinations_with_replacement, product
from math import gcd
from functools import reduce

import sympy


def members_upto(gens, n):
    """Members of <gens> in [0, n] by dynamic programming."""
    table = [False] * (n + 1)
    table[0] = True
    for m in range(1, n + 1):
        table[m] = any(a <= m and table[m - a] for a in gens)
    return table


def gaps_of(gens):
    assert reduce(gcd, gens) == 1
    bound = min(gens) * max(gens) + 1
    table = members_upto(gens, bound)
    return [m for m in range(bound + 1) if not table[m]]


def frobenius_by_formula(a, b):
    """Two generators: F = ab - a - b, g = (a-1)(b-1)/2."""
    return a * b - a - b, (a - 1) * (b - 1) // 2


def sumset_count(gaps, n):
    """#{x_1 + ... + x_n : x_i gaps}, by brute force over multisets."""
    return len({sum(c) for c in combinations_with_replacement(gaps, n)})


def monomials(gens, w):
    """Exponent vectors of weight w, brute force."""
    if w < 0:
        return []
    ranges = [range(w // a + 1) for a in gens]
    return [e for e in product(*ranges) if sum(a * x for a, x in zip(gens, e)) == w]


def sympy_rank(rows):
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def t1_dims_polynomial(gens, relations, degrees):
    """Graded T^1 of a complete intersection computed in the polynomial ring.

    ``relations`` are (plus, minus, weight) exponent triples.  In degree d
    the normal module is sum_j (k[X]/I)_{s_j + d}; it is modelled as the
    span of (j, monomial) pairs modulo I-multiples, and T^1_d is the quotient
    by the images of the derivations X^u d/dX_i.  Returns {d: dim}.
    """
    r = len(gens)
    G = []
    dG = []
    for p, q, _ in relations:
        G.append({p: 1, q: -1} if p != q else {})
        row = []
        for i in range(r):
            d = {}
            for mono, c in ((p, 1), (q, -1)):
                if mono[i]:
                    m2 = list(mono)
                    m2[i] -= 1
                    d[tuple(m2)] = d.get(tuple(m2), 0) + c * mono[i]
            row.append(d)
        dG.append(row)
    add = lambda a, b: tuple(x + y for x, y in zip(a, b))
    out = {}
    for d in degrees:
        basis = [(j, m) for j, (_, _, s) in enumerate(relations) for m in monomials(gens, s + d)]
        if not basis:
            continue
        idx = {b: k for k, b in enumerate(basis)}
        vecs = []
        for j, (_, _, sj) in enumerate(relations):
            for k, (_, _, sk) in enumerate(relations):
                for u in monomials(gens, sj + d - sk):
                    v = [0] * len(basis)
                    for mono, c in G[k].items():
                        v[idx[(j, add(u, mono))]] += c
                    vecs.append(v)
        for i, a in enumerate(gens):
            for u in monomials(gens, a + d):
                v = [0] * len(basis)
                for j in range(len(relations)):
                    for mono, c in dG[j][i].items():
                        v[idx[(j, add(u, mono))]] += c
                vecs.append(v)
        dim = len(basis) - sympy_rank(vecs)
        if dim:
            out[d] = dim
    return out


def connects_all_fibers(gens, relations, upto):
    """True iff the binomial moves connect every fiber of weight <= upto."""
    for w in range(upto + 1):
        fiber = monomials(gens, w)
        if len(fiber) < 2:
            continue
        seen = {fiber[0]}
        stack = [fiber[0]]
        while stack:
            x = stack.pop()
            for p, q, _ in relations:
                for a, b in ((p, q), (q, p)):
                    if all(u <= v for u, v in zip(a, x)):
                        y = tuple(v - u + t for u, v, t in zip(a, x, b))
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
        if len(seen) != len(fiber):
            return False
    return True


def semigroups_by_gap_subsets(genus):
    """All numerical semigroups of a genus: gap sets are subsets of [1, 2g-1]."""
    from itertools import combinations
    out = []
    if genus == 0:
        return [()]
    for gaps in combinations(range(1, 2 * genus), genus):
        gs = set(gaps)
        members = [m for m in range(1, 2 * genus) if m not in gs]
        if all((a + b) not in gs for a in members for b in members):
            out.append(gaps)
    return out
