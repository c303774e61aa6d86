from loopsmith import RegularKind, autotopism_group, cyclic_group, principal_isotope, regular_set
from loopsmith import all_loops

spacer = "_" * 60

print("\nAutotopisms are triples (U, V, W) with xU * yV = (xy)W.")
Z2 = cyclic_group(2)
for t in autotopism_group(Z2):
    print("  ", t.U.image, t.V.image, t.W.image)

print(spacer)
print("\nRegular sets of every order-4 loop:")
for k, L in enumerate(all_loops(4)):
    sizes = {kind.value: len(regular_set(L, kind)) for kind in RegularKind}
    print(f"  loop {k}: {sizes}, autotopisms: {len(autotopism_group(L))}")

print(spacer)
L = list(all_loops(5))[10]
print("\nIsotopic loops have regular sets of the same size:")
for f, g in ((0, 0), (1, 2), (3, 4)):
    H = principal_isotope(L, f, g)
    print(f"  ({f},{g}) isotope:", [len(regular_set(H, kind)) for kind in RegularKind])
