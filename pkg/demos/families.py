"""The two infinite families: how T^1,- and the moduli dimension grow.

For <4, 3+4t, 6+4t> the negative part of T^1 grows by 6 per step; for
<16, 1+16t, 2+16t, 4+16t, 8+16t> it grows by 20.  Each value is also
recomputed through the polynomial-ring route in the test suite.
"""
from wmod import from_generators, minimal_presentation, moduli_report, t1_report, trivial_action_rank


def show(label, gens):
    S = from_generators(gens)
    P = minimal_presentation(S)
    t1 = t1_report(S)
    M = moduli_report(S)
    print(f"{label:>4}  {str(S):<24} g={S.genus:<4} T1-={t1.negative_dim:<4} "
          f"dim={M.dimension:<4} action rank={trivial_action_rank(P)}")


print("three generators")
for tau in range(1, 6):
    show(f"t={tau}", [4, 3 + 4 * tau, 6 + 4 * tau])

print("five generators")
for tau in range(1, 4):
    show(f"t={tau}", [16] + [k + 16 * tau for k in (1, 2, 4, 8)])

print("six generators")
show("", [32, 33, 34, 36, 40, 48])
