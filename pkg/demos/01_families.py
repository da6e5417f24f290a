"""Size sequences, windows, and the family of graphs behind one sequence.

A CP graph grows one vertex at a time. Vertex k attaches to a window of
recent vertices [b_k, k-1] plus one older anchor a_k, and the window width
is dictated by a non-leaping size sequence q: the anchor is the only free
choice. This script walks the bookkeeping for one sequence and shows how
many graphs the anchor freedom generates.

Run: python3 demos/01_families.py
"""

from cpgraphs import (
    NonLeapingSequence,
    admissible_anchors,
    build_cp_graph,
    count_neighborhood_sequences,
    enumerate_neighborhood_sequences,
    iter_nonleaping_sequences,
)

s = NonLeapingSequence((0, 1, 2, 2, 2, 2, 3, 3))
print(f"sequence q = {s.q}")
print(f"window starts b = {s.b}")
print()

print("anchor choices as the graph grows:")
prior: list[int] = []
for k in range(3, s.n + 1):
    options = sorted(admissible_anchors(s, k, prior))
    print(f"  vertex {k}: window [{s.bk(k)}..{k - 1}], anchor from {options}")
    prior.append(options[0])
print()

total = count_neighborhood_sequences(s)
print(f"member count by the product rule: {total}")
members = list(enumerate_neighborhood_sequences(s))
print(f"member count by enumeration:      {len(members)}")
print()

print("two extreme members of the same family:")
for ns in (members[0], members[-1]):
    g = build_cp_graph(ns)
    print(f"  anchors {ns.anchors}: {len(g.edges)} edges -> {g.edges}")
print()

print("families per order (a Catalan count):")
for n in range(2, 9):
    seqs = list(iter_nonleaping_sequences(n))
    graphs = sum(count_neighborhood_sequences(t) for t in seqs)
    print(f"  n = {n}: {len(seqs):3d} sequences, {graphs:5d} member graphs")
