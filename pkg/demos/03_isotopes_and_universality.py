from loopsmith import (STS9, cyclic_group, principal_isotope, satisfies, steiner_loop)
from loopsmith.isotopy import universality_witness

spacer = "_" * 60

Z4 = cyclic_group(4)
print("\nThe (f, g) principal isotope multiplies as x o y = (x/g)(f\\y).")
H = principal_isotope(Z4, 1, 1)
print("Z4 with f = g = 1:")
for row in H.rows():
    print("  ", row)
print("its identity is f*g =", H.identity)

print(spacer)
S = steiner_loop(STS9)
print("\nThe Steiner loop of the affine plane of order 3 is a C-loop:", satisfies(S, "c"))
print("Moufang?", satisfies(S, "moufang"))
for side in ("left", "right", "both"):
    w = universality_witness(S, "c", side)
    print(f"  C preserved by all {side} isotopes? {w is None}", "" if w is None else f"(fails at {w})")
w = universality_witness(S, "c")
print(f"\nThe ({w[0]},{w[1]}) isotope is LC: {satisfies(principal_isotope(S, *w), 'lc')},"
      f" C: {satisfies(principal_isotope(S, *w), 'c')}")
