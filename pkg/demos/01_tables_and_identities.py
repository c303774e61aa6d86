import numpy as np

from loopsmith import IdentityId, classify, failing_witness, make_loop, satisfies

spacer = "_" * 60

print("\nA loop is a Latin square with a two-sided identity.")
print("make_loop validates the table and finds the identity wherever it is.")
L = make_loop([[1, 2, 0], [2, 0, 1], [0, 1, 2]])
print("rows =", L.rows())
print("identity =", L.identity)

print(spacer)
print("\nRow repeats and missing identities are rejected:")
for rows in ([[0, 1], [1, 1]], [[0, 2, 1], [2, 1, 0], [1, 0, 2]]):
    try:
        make_loop(rows)
    except ValueError as exc:
        print(f"  {rows}: {type(exc).__name__}: {exc}")

print(spacer)
# the smallest non-associative loop with an identity has order 5
M = make_loop([[0, 1, 2, 3, 4],
               [1, 0, 3, 4, 2],
               [2, 4, 0, 1, 3],
               [3, 2, 4, 0, 1],
               [4, 3, 1, 2, 0]])
print("\nAn order-5 loop:")
print(np.array(M.rows()))
print("associative?", satisfies(M, IdentityId.ASSOCIATIVE))
print("first failing (x, y, z):", failing_witness(M, "assoc"))
print("tags it satisfies:", sorted(t.value for t in classify(M)) or "none")
