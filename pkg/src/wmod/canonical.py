"""Canonical monomial curve, its folded quadrics and their syzygies.

For a symmetric non-hyperelliptic semigroup with canonical generators
``0 = n_0 < ... < n_{g-1} = 2g-2``, the canonical monomial curve in
P^{g-1} is cut out by the binomials ``X_a X_b - X_c X_d`` with
``a + b = c + d`` (when ``3 < n_1 < g`` and ``S != <4,5>``).  This module
builds those quadrics, finds the linear syzygies with coefficients in
{-1, 0, 1}, and pushes them through the shrinking map to the
minimal-generator ring, where they must become trivial relations among the
complete-intersection generators.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import linalg
from .basis import decompositions_two, shrunk_representative
from .errors import (ExcludedTarget, GuardViolation, NoCertificate, NonZeroResidue,
                     NotCompleteIntersection)
from .poly import Poly
from .presentation import ToricPresentation, factorization_tuples, minimal_presentation
from .semigroup import NumericalSemigroup, canonical_generators, is_hyperelliptic, is_symmetric

CUBIC_ROUTE = "the canonical ideal also needs folded cubic forms, which are not handled here"


def canonical_guard(S: NumericalSemigroup) -> None:
    """Raise :class:`GuardViolation` unless the quadrics generate the canonical ideal."""
    if not is_symmetric(S):
        raise GuardViolation("not symmetric", f"{S} is not symmetric")
    if is_hyperelliptic(S):
        raise GuardViolation("hyperelliptic", f"{S} is hyperelliptic; there is no canonical embedding")
    g, n1 = S.genus, S.multiplicity
    if S.minimal_generators == (4, 5):
        raise GuardViolation("<4,5>", f"{S} is the plane quintic case: {CUBIC_ROUTE}")
    if n1 == 3:
        raise GuardViolation("n1=3", f"{S} is trigonal (n1 = 3): {CUBIC_ROUTE}")
    if n1 == g:
        raise GuardViolation("n1=g", f"{S} has n1 = g = {g}: {CUBIC_ROUTE}")
    if g <= 3 or n1 > g:
        raise GuardViolation("genus", f"{S} needs g > 3 and 3 < n1 < g")


@dataclass(frozen=True)
class CanonicalCurve:
    """The curve ``(a:b) -> (a^{n_i} b^{l_{g-i} - 1})_i`` in P^{g-1}."""
    nongaps: Tuple[int, ...]
    exponent_pairs: Tuple[Tuple[int, int], ...]

    def vanishes(self, f: Poly) -> bool:
        """Substitute the parametrization and test for the zero polynomial."""
        acc: Dict[Tuple[int, int], int] = {}
        for e, c in f.terms.items():
            key = (sum(k * p[0] for k, p in zip(e, self.exponent_pairs)),
                   sum(k * p[1] for k, p in zip(e, self.exponent_pairs)))
            acc[key] = acc.get(key, 0) + c
        return not any(acc.values())


def canonical_curve(S: NumericalSemigroup) -> CanonicalCurve:
    canonical_guard(S)
    canon = tuple(canonical_generators(S))
    g = S.genus
    pairs = tuple((n, S.gaps[g - 1 - i] - 1) for i, n in enumerate(canon))
    return CanonicalCurve(canon, pairs)


@dataclass(frozen=True)
class CanonicalQuadric:
    s: int
    i: int                    # position (1-based, >= 2) in decompositions_two(s)
    plus: Tuple[int, int]
    minus: Tuple[int, int]

    @property
    def label(self) -> str:
        # quadrics of one weight are numbered from 1
        return f"F_{{{self.s},{self.i - 1}}}"

    def polynomial(self, canon: Sequence[int]) -> Poly:
        return _quad(canon, self.plus) - _quad(canon, self.minus)

    def __str__(self):
        a, b = self.plus
        c, d = self.minus
        return f"{_pair_text(a, b)} - {_pair_text(c, d)}"


def _pair_text(a, b):
    return f"X{a}^2" if a == b else f"X{a}*X{b}"


def _quad(canon, pair):
    e = [0] * len(canon)
    for x in pair:
        e[canon.index(x)] += 1
    return Poly.monomial(canon, e)


def canonical_quadrics(S: NumericalSemigroup) -> List[CanonicalQuadric]:
    canonical_guard(S)
    out = []
    for s in S.members(4 * S.genus - 4):
        dec = decompositions_two(S, s)
        for i in range(2, len(dec) + 1):
            out.append(CanonicalQuadric(s, i, dec[i - 1], dec[0]))
    return out


def excluded_weights(S: NumericalSemigroup) -> List[int]:
    canon = canonical_generators(S)
    return [n + 2 * S.genus - 2 for n in canon[:S.genus - 2]]


def is_excluded(S: NumericalSemigroup, q: CanonicalQuadric) -> bool:
    return q.i == 2 and q.s in excluded_weights(S)


def syzygy_targets(S: NumericalSemigroup) -> List[CanonicalQuadric]:
    return [q for q in canonical_quadrics(S) if not is_excluded(S, q)]


@dataclass(frozen=True)
class SyzygyTerm:
    n: int
    quadric: CanonicalQuadric
    eps: int

    def to_json(self):
        return {"n": self.n, "s": self.quadric.s, "i": self.quadric.i,
                "label": self.quadric.label, "eps": self.eps}

    def __str__(self):
        return f"{'+' if self.eps > 0 else '-'}X{self.n}*{self.quadric.label}"


@dataclass(frozen=True)
class SyzygyCertificate:
    target: CanonicalQuadric
    terms: Tuple[SyzygyTerm, ...]   # first term is X_{2g-2} * target with eps = +1

    def expand(self, canon: Sequence[int]) -> Poly:
        total = Poly(canon)
        for t in self.terms:
            x = Poly.monomial(canon, [int(c == t.n) for c in canon])
            total = total + x * t.quadric.polynomial(canon) * t.eps
        return total

    def to_json(self):
        return [t.to_json() for t in self.terms]

    def __str__(self):
        return " ".join(str(t) for t in self.terms) + " = 0"


def _resolve_target(S, target) -> CanonicalQuadric:
    if isinstance(target, CanonicalQuadric):
        return target
    s, i = target
    for q in canonical_quadrics(S):
        if (q.s, q.i) == (s, i):
            return q
    raise ValueError(f"no canonical quadric with s={s}, i={i}")


def _search_signs(x0, kernel, n_vars) -> Optional[List[int]]:
    """A point of ``x0 + span(kernel)`` with every coordinate in {-1, 0, 1}.

    Each kernel vector has a 1 at its own free coordinate, so the free
    coordinates are enumerated directly (0 first, favouring sparse
    certificates) while interval bounds prune the dependent ones.
    """
    k = len(kernel)
    free_idx = [next(j for j in range(n_vars) if v[j] == 1 and all(w[j] == 0 for w in kernel if w is not v))
                for v in kernel]
    dependent = [j for j in range(n_vars) if j not in free_idx]
    # slack[t][j]: max |contribution| of kernel vectors t.. to coordinate j
    slack = [[Fraction(0)] * n_vars for _ in range(k + 1)]
    for t in range(k - 1, -1, -1):
        slack[t] = [slack[t + 1][j] + abs(kernel[t][j]) for j in range(n_vars)]

    def feasible(current, t):
        for j in dependent:
            lo, hi = current[j] - slack[t][j], current[j] + slack[t][j]
            if hi < -1 or lo > 1:
                return False
        return True

    def rec(t, current):
        if t == k:
            if all(c in (-1, 0, 1) for c in current):
                return [int(c) for c in current]
            return None
        for v in (0, 1, -1):
            nxt = [c + v * kv for c, kv in zip(current, kernel[t])] if v else current
            if feasible(nxt, t + 1):
                found = rec(t + 1, nxt)
                if found is not None:
                    return found
        return None

    if not feasible(x0, 0):
        return None
    return rec(0, list(x0))


def find_syzygy(S: NumericalSemigroup, target: Union[CanonicalQuadric, Tuple[int, int]]) -> SyzygyCertificate:
    """``X_{2g-2} F + sum eps X_n F' = 0`` with every ``eps`` in {-1, 0, 1}."""
    q0 = _resolve_target(S, target)
    if is_excluded(S, q0):
        raise ExcludedTarget(f"{q0.label} has the form F_(n_i + 2g - 2, 1) and carries no such syzygy")
    canon = tuple(canonical_generators(S))
    top = 2 * S.genus - 2
    W = q0.s + top
    quads = canonical_quadrics(S)
    candidates = [(n, q) for n in canon for q in quads
                  if n + q.s == W and not (n == top and q == q0)]

    def product(n, q):
        return Poly.monomial(canon, [int(c == n) for c in canon]) * q.polynomial(canon)

    lead = product(top, q0)
    cols = [product(n, q) for n, q in candidates]
    monos = sorted(set(lead.terms).union(*[c.terms for c in cols]))
    A = [[c.terms.get(m, 0) for c in cols] for m in monos]
    b = [-lead.terms.get(m, 0) for m in monos]
    sol = linalg.solve(A, b) if cols else None
    eps = None
    if sol is not None:
        x0, kernel = sol
        eps = _search_signs(x0, kernel, len(cols))
    if eps is None:
        raise NoCertificate(f"no {{-1,0,1}} syzygy found for {q0.label} of {S}")
    terms = [SyzygyTerm(top, q0, 1)]
    terms += [SyzygyTerm(n, q, e) for (n, q), e in zip(candidates, eps) if e]
    cert = SyzygyCertificate(q0, tuple(terms))
    if not cert.expand(canon).is_zero():
        raise NoCertificate(f"certificate for {q0.label} does not expand to zero")
    return cert


def shrink(S: NumericalSemigroup, f: Poly) -> Poly:
    """Ring map ``X_{n_0} -> 1``, ``X_{n_i} -> shrunk monomial of weight n_i``."""
    gens = S.minimal_generators
    images = []
    for n in f.weights:
        if n == 0:
            images.append(Poly.constant(gens, 1))
        else:
            images.append(shrunk_representative(S, n).poly())
    if not images:
        return Poly(gens, {(0,) * len(gens): c for c in f.terms.values()})
    return f.substitute(images)


def express_in_generators(P: ToricPresentation, u: Tuple[int, ...], v: Tuple[int, ...]) -> List[Poly]:
    """Multipliers ``M_j`` with ``X^u - X^v = sum M_j G_j``.

    Walks from ``u`` to ``v`` through the monomials of the same weight, one
    binomial swap ``X^w X^plus <-> X^w X^minus`` at a time (breadth first).
    """
    gens = P.variables
    zero = [Poly(gens) for _ in P.generators]
    if u == v:
        return zero
    parent = {u: None}
    queue = deque([u])
    while queue and v not in parent:
        x = queue.popleft()
        for j, G in enumerate(P.generators):
            for a, b, sign in ((G.plus.exponents, G.minus.exponents, 1),
                               (G.minus.exponents, G.plus.exponents, -1)):
                if all(p <= q for p, q in zip(a, x)):
                    w = tuple(q - p for p, q in zip(a, x))
                    y = tuple(p + q for p, q in zip(w, b))
                    if y not in parent:
                        parent[y] = (x, j, w, sign)
                        queue.append(y)
    if v not in parent:
        raise NonZeroResidue(f"X^{u} - X^{v} is not in the ideal generated by the presentation")
    out = zero
    y = v
    while parent[y] is not None:
        x, j, w, sign = parent[y]
        # X^x - X^y = sign * X^w * G_j
        out[j] = out[j] + Poly.monomial(gens, w, sign)
        y = x
    return out


@dataclass
class ShrunkSyzygyTrace:
    certificate: SyzygyCertificate
    term_multipliers: List[List[Poly]]   # per certificate term, per generator G_j
    totals: List[Poly]                    # per G_j
    koszul: Optional[Dict[Tuple[int, int], Poly]]
    lines: List[str]

    @property
    def coefficientwise_zero(self) -> bool:
        return all(t.is_zero() for t in self.totals)


def _signed_monomial_text(p: Poly) -> List[str]:
    out = []
    for e, c in p.sorted_terms():
        mono = Poly.monomial(p.weights, e)
        body = str(mono)
        mag = abs(c)
        body = body if mag == 1 else f"{mag}*{body}"
        out.append(("-" if c < 0 else "+") + body)
    return out


def _koszul_witness(P: ToricPresentation, totals: List[Poly], W: int) -> Optional[Dict[Tuple[int, int], Poly]]:
    """Solve ``totals = sum_{j<k} h_jk (G_k e_j - G_j e_k)`` for isobaric ``h_jk``."""
    gens = P.variables
    G = [g.poly() for g in P.generators]
    s = P.weights()
    m = len(G)
    unknowns = []
    for j in range(m):
        for k in range(j + 1, m):
            for mono in factorization_tuples(gens, W - s[j] - s[k]):
                unknowns.append((j, k, mono))
    rows: Dict[Tuple[int, Tuple[int, ...]], Dict[int, int]] = {}
    for col, (j, k, mono) in enumerate(unknowns):
        h = Poly.monomial(gens, mono)
        for comp, poly in ((j, h * G[k]), (k, -(h * G[j]))):
            for e, c in poly.terms.items():
                row = rows.setdefault((comp, e), {})
                row[col] = row.get(col, 0) + c
    keys = sorted(set(rows) | {(j, e) for j, t in enumerate(totals) for e in t.terms})
    A = [[rows.get(key, {}).get(col, 0) for col in range(len(unknowns))] for key in keys]
    b = [totals[j].terms.get(e, 0) for j, e in keys]
    if not unknowns:
        return {} if not any(b) else None
    sol = linalg.solve(A, b)
    if sol is None:
        return None
    x0, _ = sol
    witness: Dict[Tuple[int, int], Poly] = {}
    for (j, k, mono), val in zip(unknowns, x0):
        if val:
            if val.denominator != 1:
                return None
            witness[(j, k)] = witness.get((j, k), Poly(gens)) + Poly.monomial(gens, mono, int(val))
    return witness


def verify_shrunk_syzygy(S: NumericalSemigroup, cert: SyzygyCertificate) -> ShrunkSyzygyTrace:
    """Push a certificate through the shrinking map and show the image is a
    trivial relation among the complete-intersection generators."""
    P = minimal_presentation(S)
    if not P.is_complete_intersection:
        raise NotCompleteIntersection(f"{S} is not a complete intersection")
    canon = tuple(canonical_generators(S))
    gens = P.variables
    names = [f"G{j + 1}" for j in range(len(P.generators))]
    term_multipliers = []
    lines = []
    totals = [Poly(gens) for _ in P.generators]
    for t in cert.terms:
        image = shrink(S, t.quadric.polynomial(canon))
        xn = shrink(S, Poly.monomial(canon, [int(c == t.n) for c in canon]))
        if image.is_zero():
            mult = [Poly(gens) for _ in P.generators]
        else:
            (u, cu), (v, _) = sorted(image.terms.items(), key=lambda kv: -kv[1])
            mult = express_in_generators(P, u, v)
        mult = [xn * M * t.eps for M in mult]
        term_multipliers.append(mult)
        totals = [a + b for a, b in zip(totals, mult)]
        pieces = [f"({M})*{names[j]}" for j, M in enumerate(mult) if not M.is_zero()]
        if pieces:
            lines.append(f"{t} -> {' + '.join(pieces)}")
    residue = Poly(gens)
    for M, G in zip(totals, P.generators):
        residue = residue + M * G.poly()
    if not residue.is_zero():
        raise NonZeroResidue(f"shrunk syzygy of {cert.target.label} leaves {residue}")
    for j, name in enumerate(names):
        contribs = [c for mult in term_multipliers for c in _signed_monomial_text(mult[j])]
        if contribs:
            expr = contribs[0].lstrip("+") + "".join(f" {c[0]} {c[1:]}" for c in contribs[1:])
            lines.append(f"{name}: {expr} = {totals[j] if not totals[j].is_zero() else 0}")
    koszul = None
    if not all(t.is_zero() for t in totals):
        W = cert.target.s + 2 * S.genus - 2
        koszul = _koszul_witness(P, totals, W)
        if koszul is None:
            raise NonZeroResidue(f"shrunk syzygy of {cert.target.label} is not a Koszul relation")
        for (j, k), h in sorted(koszul.items()):
            lines.append(f"Koszul: ({h}) * ({names[k]}*e{j + 1} - {names[j]}*e{k + 1})")
    return ShrunkSyzygyTrace(cert, term_multipliers, totals, koszul, lines)
