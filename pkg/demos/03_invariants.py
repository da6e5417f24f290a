"""Distance-matrix invariants without touching the distance matrix.

Congruence by a determinant-1 matrix preserves the determinant, the inertia,
and (after a small correction) the cofactor sum. So the three classic
distance invariants of any member can be read off the tiny reduced graph,
and for 2-clique paths they collapse to closed forms in the clique sizes.

Run: python3 demos/03_invariants.py
"""

from cpgraphs import (
    CliquePathSpec,
    NonLeapingSequence,
    all_pairs_distances,
    build_cp_graph,
    cp2_invariants,
    distance_invariants,
    enumerate_neighborhood_sequences,
    expand_clique_path_spec,
    family_invariants,
    linear_2tree_invariants,
    seesaw_graph,
    seesaw_params,
    tree_invariants,
)

s = NonLeapingSequence((0, 1, 2, 2, 3, 2, 2, 3))
fam = family_invariants(s)
print(f"family {s.q}")
print(f"invariants from the reduced graph: det {fam.det}, inertia {fam.inertia}, cof {fam.cof}")
per_member = {
    distance_invariants(build_cp_graph(ns))
    for ns in enumerate_neighborhood_sequences(s)
}
print(f"distinct member invariant triples: {len(per_member)} (brute force over the family)")
print()

spec = CliquePathSpec((3, 4, 3, 4))
assert expand_clique_path_spec(spec).q == s.q
print(f"the same family written as cliques 2:{','.join(map(str, spec.p))}")
p = seesaw_params(spec)
print(f"arm lengths from alternating clique sizes: left {p.left}, right {p.right}")
print(f"its reduced graph is the seesaw on {seesaw_graph(p).n} vertices")
inv = cp2_invariants(spec)
print(f"closed forms: det = (+-)(1+l)(1+r) = {inv.det}, inertia {inv.inertia}, cof {inv.cof}")
print()

print("linear 2-trees (all cliques are triangles):")
for n in range(4, 11):
    inv = linear_2tree_invariants(n)
    print(f"  n = {n:2d}: det {inv.det:4d}  inertia {inv.inertia}  cof {inv.cof:3d}")
print()

print("trees (every block is a single edge):")
for n in range(2, 8):
    inv = tree_invariants(n)
    print(f"  n = {n}: det {inv.det:5d}  inertia {inv.inertia}  cof {inv.cof:4d}")
