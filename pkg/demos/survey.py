"""Survey small genera: which semigroups carry a moduli space, and which fail
the Buchweitz test.

Uses the semigroup tree, so the genus bound honours WMOD_MAX_GENUS.
"""
from collections import Counter

from wmod import buchweitz_screen, enumerate_semigroups, moduli_report

MAX_GENUS = 10

for g in range(1, MAX_GENUS + 1):
    all_sg = list(enumerate_semigroups(g))
    ci = list(enumerate_semigroups(g, symmetric=True, complete_intersection=True))
    dims = Counter()
    for S in ci:
        if 2 in S:
            continue
        dims[moduli_report(S).dimension] += 1
    obstructed = sum(buchweitz_screen(S, 3).obstructed for S in all_sg)
    print(f"g={g:<3} semigroups={len(all_sg):<5} symmetric CI={len(ci):<3} "
          f"Buchweitz-obstructed={obstructed:<3} moduli dims={dict(sorted(dims.items()))}")
