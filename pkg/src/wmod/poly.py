"""Sparse integer polynomials in weighted variables.

A :class:`Poly` is a map from exponent tuples to nonzero integer
coefficients.  Variable ``k`` is named ``X<w>`` where ``w`` is its weight,
which is also how the monomials are rendered.
"""
from __future__ import annotations

from typing import Dict, Iterable, Tuple

Exponents = Tuple[int, ...]


class Poly:
    __slots__ = ("weights", "terms")

    def __init__(self, weights: Iterable[int], terms: Dict[Exponents, int] = None):
        self.weights = tuple(weights)
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, weights, exponents, coeff=1) -> "Poly":
        return cls(weights, {tuple(exponents): coeff})

    @classmethod
    def constant(cls, weights, c) -> "Poly":
        weights = tuple(weights)
        return cls(weights, {(0,) * len(weights): c})

    @classmethod
    def binomial(cls, weights, plus, minus) -> "Poly":
        return cls.monomial(weights, plus) - cls.monomial(weights, minus)

    def _check(self, other):
        if self.weights != other.weights:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.weights, out)

    def __neg__(self):
        return Poly(self.weights, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.weights, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.weights, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.weights == other.weights and self.terms == other.terms

    def __hash__(self):
        return hash((self.weights, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def weight_of(self, exponents: Exponents) -> int:
        return sum(a * w for a, w in zip(exponents, self.weights))

    def term_weights(self):
        return sorted({self.weight_of(e) for e in self.terms})

    def is_isobaric(self) -> bool:
        return len(self.term_weights()) <= 1

    def derivative(self, k: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = c * e[k]
        return Poly(self.weights, out)

    def substitute(self, images) -> "Poly":
        """Ring map sending variable ``k`` to ``images[k]`` (a Poly)."""
        target = images[0].weights if images else ()
        out = Poly(target)
        for e, c in self.terms.items():
            term = Poly.constant(target, c)
            for k, a in enumerate(e):
                for _ in range(a):
                    term = term * images[k]
            out = out + term
        return out

    def sorted_terms(self):
        # heaviest first, positive before negative, then by exponents descending
        return sorted(self.terms.items(), key=lambda t: (-self.weight_of(t[0]), t[1] < 0, [-x for x in t[0]]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = format_monomial(self.weights, e)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def format_monomial(weights, exponents, prefix="X") -> str:
    factors = []
    for w, a in zip(weights, exponents):
        if a == 1:
            factors.append(f"{prefix}{w}")
        elif a > 1:
            factors.append(f"{prefix}{w}^{a}")
    return "*".join(factors) if factors else "1"
