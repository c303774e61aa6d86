from loopsmith import all_loops, is_G_loop_direct, is_G_loop_wilson, make_loop
from loopsmith import is_G_lambda, left_isotope, find_isomorphism
from loopsmith.morphisms import nucleus_membership_criterion, theta_readings
from loopsmith.subloops import right_nucleus

spacer = "_" * 60

print("\nA G-loop is isomorphic to every one of its principal isotopes.")
rows = []
for k, L in enumerate(all_loops(5)):
    single, per_pair = theta_readings(L)
    rows.append((is_G_loop_direct(L), is_G_loop_wilson(L), per_pair, single))
    if rows[-1][0]:
        print(f"  n5#{k} is a G-loop: {L.rows()[1]} is its second row")
print(f"  {sum(r[0] for r in rows)} of {len(rows)} order-5 loops are G-loops")
print("  (all six are relabellings of Z5)")
print("  left and right isotopes suffice:", all(r[0] == r[1] for r in rows))
print("  a theta for each (x, y) suffices:", all(r[0] == r[2] for r in rows))
print("  a single theta for all (x, y):", sum(r[3] for r in rows), "loops")

print(spacer)
L = make_loop([[0, 1, 2, 3, 4, 5], [1, 0, 3, 2, 5, 4], [2, 4, 0, 5, 1, 3],
               [3, 5, 4, 0, 2, 1], [4, 3, 5, 1, 0, 2], [5, 2, 1, 4, 3, 0]])
print("\nA non-associative LC-loop of order 6.")
print("isomorphic to all its left isotopes?", is_G_lambda(L))
H = left_isotope(L, 2)
print("an isomorphism onto the left isotope at 2:", find_isomorphism(L, H).map.image)
print("right nucleus of that isotope:", right_nucleus(H), "identity of L:", L.identity)
print("e in the right nucleus of every left isotope?", nucleus_membership_criterion(L, "LEFT"))
