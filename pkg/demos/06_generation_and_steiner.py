import time

from loopsmith import GenSpec, STS7, all_loops, dedup_up_to_isomorphism, steiner_loop
from loopsmith import classify

spacer = "_" * 60

print("\nNormalized loops (identity 0) by order:")
for n in range(1, 7):
    t0 = time.perf_counter()
    loops = list(all_loops(n))
    classes = dedup_up_to_isomorphism(loops) if n <= 6 else []
    print(f"  n={n}: {len(loops)} tables, {len(classes)} isomorphism classes"
          f" ({time.perf_counter() - t0:.2f}s)")

print(spacer)
print("\nFilters combine tags with & | ! and parentheses:")
# every C-loop of order <= 6 is a group, hence Moufang
for expr in ("comm", "lc & !assoc", "rc & !lc", "c & !moufang"):
    print(f"  order 6, {expr!r}:", sum(1 for _ in all_loops(GenSpec(6, filter=expr))))

print(spacer)
F = steiner_loop(STS7)
print("\nThe Fano plane gives an order-8 Steiner loop with tags:")
print(" ", sorted(t.value for t in classify(F)))
print("It is associative: the elementary abelian group of order 8.")
