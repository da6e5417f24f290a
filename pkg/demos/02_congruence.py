"""One matrix to rule a whole family.

Every member of a family shares more than a size sequence: an integer
change of basis E (unit upper triangular, so det E = 1) carries the member's
distance matrix D onto one weighted adjacency matrix that depends on the
sequence alone. The transform E is read off the member's anchors; the target
matrix is read off the sequence. This script shows both for the two recorded
members of 0,1,2,2,2,2,3,3 and then checks the whole family.

Run: python3 demos/02_congruence.py
"""

from cpgraphs import (
    NeighborhoodSequence,
    NonLeapingSequence,
    all_pairs_distances,
    build_cp_graph,
    congruence_reduce,
    enumerate_neighborhood_sequences,
    reduced_graph,
    reducing_matrix,
)

s = NonLeapingSequence((0, 1, 2, 2, 2, 2, 3, 3))
h = reduced_graph(s)
target = h.adjacency_matrix()

print(f"sequence {s.q}")
print("reduced graph:")
print(f"  vertex weights {h.vertex_weights}")
for u, v, w in h.edges:
    print(f"  {u} -- {v}  weight {w:+d}")
print()

for anchors in ((1, 2, 3, 4, 4, 5), (1, 1, 1, 1, 1, 1)):
    ns = NeighborhoodSequence(s, anchors)
    d = all_pairs_distances(build_cp_graph(ns))
    e = reducing_matrix(ns)
    print(f"member with anchors {anchors}")
    print("distance matrix D:")
    print(d)
    print("reducing matrix E:")
    print(e)
    out = congruence_reduce(d, e)
    print("E^T D E:")
    print(out)
    print(f"equals the reduced adjacency: {out == target}")
    print()

ok = all(
    congruence_reduce(
        all_pairs_distances(build_cp_graph(ns)), reducing_matrix(ns)
    )
    == target
    for ns in enumerate_neighborhood_sequences(s)
)
print(f"all 16 members reduce to the same matrix: {ok}")
