"""
Conjugacy classes of A1 subalgebras
===================================

Every sl2 triple in sl(n) is labelled by a weighted Dynkin diagram, read off
from the spectrum of h on the one-boson states.  Two routes give the same list.
"""

from lieboson import build, enumerate_classes, partition_to_wdd, partitions, wdd

for n in (2, 3, 4):
    print(f"sl({n}):", " ".join(str(d) for d in enumerate_classes(n)))

# the partition route, with no triples at all
print("partitions of 4:", {lam: str(partition_to_wdd(lam)) for lam in partitions(4) if lam[0] > 1})

# the angular momentum L and the alternative W sit in different classes
_, spec = build("u4")
for name in ("L", "W", "020", "222"):
    print(f"{name:>4}: {wdd(spec.jsets[name].triple(), spec.modes)}")
