"""Walk through the whole pipeline for the genus-7 semigroup <4,7,10>.

Run with ``python demos/walkthrough_4_7_10.py``.
"""
from wmod import (canonical_quadrics, find_syzygy, minimal_presentation, moduli_report, parse,
                  syzygy_targets, t1_report, verify_shrunk_syzygy)
from wmod.unfolding import normalize, unfold

S = parse("4,7,10")
print(f"{S}: genus {S.genus}, Frobenius {S.frobenius}, gaps {list(S.gaps)}")

# The monomial curve t -> (t^4, t^7, t^10) is a complete intersection.
P = minimal_presentation(S)
for j, G in enumerate(P.generators, 1):
    print(f"G{j} = {G}   weight {G.weight}")

# Graded pieces of T^1.  The negative part gives the coordinates of the moduli space.
rep = t1_report(S)
print("T^1 by degree:", dict(sorted(rep.by_degree.items())))
print(f"dim T^1,- = {rep.negative_dim}, Tjurina number = {rep.tjurina}")

# Unfold each relation by every lower basis monomial and clear what coordinate changes can clear.
U = unfold(P)
N = normalize(U)
print(f"{len(U.all_coefficients())} unfold coefficients, {len(N.moduli_coordinates)} survive normalization")
for line in N.render():
    print("  ", line)

M = moduli_report(S)
print(f"moduli space {M.weighted_projective_space()} of dimension {M.dimension}")

# Canonical model: folded quadrics in P^6 and their sign syzygies.
for q in canonical_quadrics(S):
    print(f"  {q.label} = {q}")
for q in syzygy_targets(S):
    cert = find_syzygy(S, q)
    print(cert)
    for line in verify_shrunk_syzygy(S, cert).lines:
        print("     ", line)
