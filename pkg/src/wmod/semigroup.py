"""Numerical semigroups: membership, gaps, Apery sets and the semigroup tree."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (BoundExceeded, EmptyInput, GenusZero, NegativeInput,
                     NonCoprime, NotAMember, ParseError)

DEFAULT_MAX_GENUS = 15


@dataclass(frozen=True)
class NumericalSemigroup:
    minimal_generators: Tuple[int, ...]
    conductor: int
    membership_table: Tuple[bool, ...] = field(repr=False)
    gaps: Tuple[int, ...] = field(repr=False)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def __contains__(self, m: int) -> bool:
        return m >= 0 and (m >= self.conductor or self.membership_table[m])

    def is_member(self, m: int) -> bool:
        if m < 0:
            raise NegativeInput(f"{m} is negative")
        return m in self

    def members(self, upto: int) -> List[int]:
        """Members ``m`` with ``0 <= m <= upto``."""
        return [m for m in range(upto + 1) if m in self]

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.minimal_generators)) + ">"

    def text(self) -> str:
        return ",".join(map(str, self.minimal_generators))


def _from_table(table: Sequence[bool]) -> NumericalSemigroup:
    """Build from a membership table covering at least [0, conductor + multiplicity)."""
    last_gap = max((m for m, inside in enumerate(table) if not inside), default=-1)
    conductor = last_gap + 1
    member = lambda m: m >= conductor or table[m]
    gaps = tuple(m for m in range(conductor) if not table[m])
    mult = next(m for m in range(1, conductor + 2) if member(m))
    gens = []
    for m in range(mult, conductor + mult + 1):
        if member(m) and not any(member(y) and member(m - y) for y in range(mult, m // 2 + 1)):
            gens.append(m)
    return NumericalSemigroup(tuple(gens), conductor, tuple(bool(table[m]) for m in range(conductor)), gaps)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Semigroup generated by ``gens``; redundant generators are dropped.

    >>> from_generators([4, 7, 10, 11]).minimal_generators
    (4, 7, 10)
    """
    gens = sorted(set(int(a) for a in gens))
    if not gens:
        raise EmptyInput("no generators given")
    if gens[0] < 0:
        raise NegativeInput(f"negative generator {gens[0]}")
    gens = [a for a in gens if a > 0]
    if not gens:
        raise NonCoprime("only the trivial generator 0 was given")
    if reduce(gcd, gens) != 1:
        raise NonCoprime(f"gcd({','.join(map(str, gens))}) = {reduce(gcd, gens)}; "
                         "the complement of the semigroup is infinite")
    # Frobenius number < (min-1)(max-1), so max*min plus one multiplicity covers everything
    bound = gens[0] * gens[-1] + gens[0] + 1
    table = [False] * bound
    table[0] = True
    for m in range(1, bound):
        table[m] = any(a <= m and table[m - a] for a in gens)
    return _from_table(table)


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Semigroup whose gap set is exactly ``gaps``; raises if not closed."""
    gaps = sorted(set(gaps))
    if gaps and gaps[0] <= 0:
        raise ParseError("gaps must be positive integers")
    top = (gaps[-1] if gaps else 0) + 1
    table = [True] * (2 * top + 2)
    for x in gaps:
        table[x] = False
    members = [m for m in range(top) if table[m]]
    for a in members:
        for b in members:
            if a + b < top and not table[a + b]:
                raise ParseError(f"{a} + {b} = {a + b} is listed as a gap; not a semigroup")
    return _from_table(table)


def parse(text: str) -> NumericalSemigroup:
    """Parse the comma-separated generator format, e.g. ``"4,7,10"``."""
    items = [t.strip() for t in text.replace(" ", ",").split(",") if t.strip()]
    if not items:
        raise EmptyInput("empty generator list")
    try:
        gens = [int(t) for t in items]
    except ValueError:
        raise ParseError(f"cannot parse generators from {text!r}") from None
    return from_generators(gens)


def read_batch(lines: Iterable[str]) -> List[NumericalSemigroup]:
    """One semigroup per line; ``#`` starts a comment, blank lines are skipped."""
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse(line))
    return out


def is_member(S: NumericalSemigroup, m: int) -> bool:
    return S.is_member(m)


def apery_set(S: NumericalSemigroup, a: int) -> List[int]:
    """Least member of each residue class mod ``a``, indexed by residue."""
    if a <= 0 or a not in S:
        raise NotAMember(f"{a} is not a nonzero member of {S}")
    out: List[Optional[int]] = [None] * a
    found = 0
    m = 0
    while found < a:
        if m in S and out[m % a] is None:
            out[m % a] = m
            found += 1
        m += 1
    return out


def canonical_generators(S: NumericalSemigroup) -> List[int]:
    """The first ``g`` nongaps ``n_0 = 0 < n_1 < ... < n_{g-1}``."""
    if S.genus == 0:
        raise GenusZero("the semigroup of all naturals has no canonical system")
    out = []
    m = 0
    while len(out) < S.genus:
        if m in S:
            out.append(m)
        m += 1
    return out


def is_symmetric(S: NumericalSemigroup) -> bool:
    return S.frobenius == 2 * S.genus - 1


def is_symmetric_by_pairing(S: NumericalSemigroup) -> bool:
    """Symmetry read off the pairing ``x <-> F - x`` between members and gaps."""
    F = S.frobenius
    return all((x in S) != ((F - x) in S) for x in range(F + 1))


def is_hyperelliptic(S: NumericalSemigroup) -> bool:
    return 2 in S


def is_ordinary(S: NumericalSemigroup) -> bool:
    return S.gaps == tuple(range(1, S.genus + 1))


@dataclass(frozen=True)
class BuchweitzRow:
    n: int
    count: int
    bound: int

    @property
    def obstructed(self) -> bool:
        return self.count > self.bound


@dataclass(frozen=True)
class BuchweitzVerdict:
    rows: Tuple[BuchweitzRow, ...]

    @property
    def obstructed(self) -> bool:
        return any(r.obstructed for r in self.rows)

    @property
    def first_obstruction(self) -> Optional[int]:
        return next((r.n for r in self.rows if r.obstructed), None)


def buchweitz_screen(S: NumericalSemigroup, n_max: int = 4) -> BuchweitzVerdict:
    """Compare ``#(n-fold sums of gaps)`` against ``(2n-1)(g-1)``.

    A count above the bound for some ``n`` means no smooth pointed curve
    has ``S`` as its Weierstrass semigroup.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if S.genus < 2:
        # the bound counts sections of nK, which is only (2n-1)(g-1) from genus 2 on
        return BuchweitzVerdict(())
    rows = []
    sums = set(S.gaps)
    for n in range(2, n_max + 1):
        sums = {x + y for x in sums for y in S.gaps}
        rows.append(BuchweitzRow(n, len(sums), (2 * n - 1) * (S.genus - 1)))
    return BuchweitzVerdict(tuple(rows))


def max_genus_bound() -> int:
    env = os.environ.get("WMOD_MAX_GENUS")
    return int(env) if env else DEFAULT_MAX_GENUS


def _children(S: NumericalSemigroup) -> Iterator[NumericalSemigroup]:
    for x in S.minimal_generators:
        if x > S.frobenius:
            table = [m in S for m in range(x + 1)]
            table[x] = False
            yield _from_table(table)


def _tree(genus: int) -> Iterator[NumericalSemigroup]:
    stack = [from_generators([1])]
    while stack:
        S = stack.pop()
        if S.genus == genus:
            yield S
        else:
            stack.extend(reversed(list(_children(S))))


def enumerate_semigroups(genus: int, symmetric: bool = False,
                         complete_intersection: bool = False,
                         max_genus: Optional[int] = None) -> Iterator[NumericalSemigroup]:
    """Every semigroup of the given genus, exactly once, in tree (DFS) order.

    Children of a node remove one minimal generator larger than its
    Frobenius number.  The bound defaults to ``WMOD_MAX_GENUS`` or 15.
    """
    bound = max_genus_bound() if max_genus is None else max_genus
    if genus < 0:
        raise NegativeInput("genus must be nonnegative")
    if genus > bound:
        raise BoundExceeded(f"genus {genus} exceeds the enumeration bound {bound}")
    from .presentation import is_complete_intersection

    for S in _tree(genus):
        if symmetric and not is_symmetric(S):
            continue
        if complete_intersection and not is_complete_intersection(S):
            continue
        yield S


def brute_force_semigroups(genus: int) -> List[Tuple[int, ...]]:
    """Gap sets of all semigroups of a genus, by checking every candidate set.

    Independent of the tree recursion; exponential, only for small genus.
    """
    if genus == 0:
        return [()]
    out = []
    for gaps in combinations(range(1, 2 * genus), genus):
        gs = set(gaps)
        if 1 not in gs:
            continue
        ok = True
        for a in range(1, 2 * genus):
            if a in gs:
                continue
            for b in range(a, 2 * genus - a):
                if b not in gs and a + b in gs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(gaps)
    return out
