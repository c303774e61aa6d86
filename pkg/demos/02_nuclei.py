from loopsmith import STS9, center, centrum, left_nucleus, middle_nucleus, nucleus, right_nucleus
from loopsmith import steiner_loop, symmetric_group
from loopsmith.subloops import is_central_square, is_centrum_square

spacer = "_" * 60

for name, L in (("S3", symmetric_group(3)), ("Steiner loop of STS(9)", steiner_loop(STS9))):
    print(f"\n{name}, order {L.order}")
    print("  left nucleus  ", left_nucleus(L))
    print("  middle nucleus", middle_nucleus(L))
    print("  right nucleus ", right_nucleus(L))
    print("  nucleus       ", nucleus(L))
    print("  centrum       ", centrum(L))
    print("  center        ", center(L))
    print("  squares in the centrum?", is_centrum_square(L))
    print("  squares in the center? ", is_central_square(L))
    print(spacer)

print("\nA group is its own nucleus. The Steiner loop is commutative but")
print("nothing except e associates with everything, so its center is trivial.")
