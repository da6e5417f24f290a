"""Named verification suites behind the `check` subcommand.

Each suite replays one verifiable claim about the library at desk scale:
exhaustive where the instance space is small (all families up to n = 8, all
labeled trees up to n = 7), seeded-random where it is not. Suites are pure
given (seed, scale), so reports are reproducible byte for byte apart from
the wall time. CPGRAPHS_THREADS caps the worker pool used to grind case
lists; the default of 1 keeps everything on one thread.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from heapq import heappop, heappush
from itertools import product

from . import fixtures
from .crosschecks import det_by_cofactor_expansion, inertia_by_charpoly_signs
from .errors import InputError
from .formulas import (
    BlockCliquePathRecipe,
    BlockPart,
    CrossCheckFailed,
    addressing_lower_bound,
    block_2cp_inertia,
    compose_blocks,
    cp2_invariants,
    distance_invariants,
    family_invariants,
    linear_2tree_invariants,
    realize_recipe,
    tree_invariants,
)
from .graphs import (
    LabeledGraph,
    all_pairs_distances,
    attach,
    build_cp_graph,
    complete_graph,
    is_connected,
    path_graph,
)
from .addressing import exact_n, search_scheme, verify_scheme
from .linalg import (
    ConsecutiveZeroMinors,
    Inertia,
    Singular,
    determinant,
    inertia_congruence,
    inertia_leading_minors,
)
from .matrices import IntMatrix
from .reduction import congruence_reduce, reduced_graph, reducing_matrix, weighted_path_matrix
from .sequences import (
    CliquePathSpec,
    NeighborhoodSequence,
    NonLeapingSequence,
    admissible_anchors,
    count_neighborhood_sequences,
    enumerate_neighborhood_sequences,
    expand_clique_path_spec,
    iter_nonleaping_sequences,
)


class UnknownSuite(InputError):
    """No suite is registered under the requested name."""


@dataclass
class Recorder:
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    max_failures: int = 20

    def check(self, ok: bool, label: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < self.max_failures:
                self.failures.append(label)

    def absorb(self, other: "Recorder"):
        self.passed += other.passed
        self.failed += other.failed
        for f in other.failures:
            if len(self.failures) < self.max_failures:
                self.failures.append(f)


@dataclass
class Report:
    suite: str
    seed: int
    scale: int | None
    results: dict
    passed: int
    failed: int
    failures: list[str]
    wall_time_s: float

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "scale": self.scale,
            "results": self.results,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
            "wall_time_s": round(self.wall_time_s, 3),
        }


def _thread_cap() -> int:
    raw = os.environ.get("CPGRAPHS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def map_cases(fn, cases: list):
    """Apply fn to each case, in order, on at most CPGRAPHS_THREADS workers."""
    cap = _thread_cap()
    if cap <= 1 or len(cases) <= 1:
        return [fn(c) for c in cases]
    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(fn, cases))


# -- random instance generators (all driven by one seeded rng) --------------


def random_nonleaping(rng: random.Random, n: int) -> NonLeapingSequence:
    q = [0, 1]
    for _ in range(n - 2):
        q.append(rng.randint(2, q[-1] + 1))
    return NonLeapingSequence(tuple(q))


def random_member(rng: random.Random, s: NonLeapingSequence) -> NeighborhoodSequence:
    anchors: list[int] = []
    for k in range(3, s.n + 1):
        anchors.append(rng.choice(sorted(admissible_anchors(s, k, anchors))))
    return NeighborhoodSequence(s, tuple(anchors))


def random_connected_graph(rng: random.Random, n: int) -> LabeledGraph:
    """Random spanning tree plus a few random extra edges."""
    edges = set()
    for v in range(2, n + 1):
        u = rng.randint(1, v - 1)
        edges.add((u, v))
    extras = rng.randint(0, n)
    for _ in range(extras):
        u = rng.randint(1, n - 1)
        v = rng.randint(u + 1, n)
        if u != v:
            edges.add((u, v))
    g = LabeledGraph(n, tuple(sorted(edges)))
    assert is_connected(g)
    return g


def random_recipe(rng: random.Random, n_max: int) -> BlockCliquePathRecipe:
    def rand_spec(budget: int) -> CliquePathSpec | None:
        # a part with cliques p_1..p_m adds 2 + sum(p_i - 2) vertices
        choices = [()]
        for m in (1, 2):
            for p in product((3, 4, 5), repeat=m):
                if 2 + sum(x - 2 for x in p) <= budget:
                    choices.append(p)
        p = rng.choice(choices)
        return CliquePathSpec(p)

    def rand_anchors(spec: CliquePathSpec) -> tuple[int, ...]:
        return random_member(rng, expand_clique_path_spec(spec)).anchors

    root = rand_spec(n_max)
    parts = [BlockPart(root, rand_anchors(root))]
    total = root.n
    while total < n_max and rng.random() < 0.7:
        spec = rand_spec(n_max - total + 1)
        if spec.n - 1 + total > n_max:
            break
        parts.append(BlockPart(spec, rand_anchors(spec), at=rng.randint(1, total)))
        total += spec.n - 1
    return BlockCliquePathRecipe(tuple(parts))


def tree_from_pruefer(n: int, code: tuple[int, ...]) -> LabeledGraph:
    if n == 1:
        return LabeledGraph(1, ())
    deg = [1] * (n + 1)
    for v in code:
        deg[v] += 1
    leaves: list[int] = []
    for v in range(1, n + 1):
        if deg[v] == 1:
            heappush(leaves, v)
    edges = []
    for v in code:
        leaf = heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        deg[v] -= 1
        if deg[v] == 1:
            heappush(leaves, v)
    a, b = heappop(leaves), heappop(leaves)
    edges.append((min(a, b), max(a, b)))
    return LabeledGraph(n, tuple(edges))


# -- the suites --------------------------------------------------------------


def _families(n_max: int):
    for n in range(2, n_max + 1):
        yield from iter_nonleaping_sequences(n)


def _suite_fixtures(rec: Recorder, rng, scale) -> dict:
    for name, want in fixtures.TWO_TREE_6_DETERMINANTS.items():
        got = determinant(all_pairs_distances(fixtures.fixture_graph(name)))
        rec.check(got == want, f"{name}: determinant {got}, expected {want}")

    s = NonLeapingSequence(fixtures.CP8_SEQ)
    cases = (
        ("cp8_chain", fixtures.CP8_CHAIN_ANCHORS, fixtures.CP8_CHAIN_DISTANCES, fixtures.CP8_CHAIN_REDUCER),
        ("cp8_hub", fixtures.CP8_HUB_ANCHORS, fixtures.CP8_HUB_DISTANCES, fixtures.CP8_HUB_REDUCER),
    )
    for name, anchors, want_d, want_e in cases:
        ns = NeighborhoodSequence(s, anchors)
        g = build_cp_graph(ns)
        rec.check(g == fixtures.fixture_graph(name), f"{name}: fixture differs from construction")
        d = all_pairs_distances(g)
        e = reducing_matrix(ns)
        rec.check(d == want_d, f"{name}: distance matrix differs from the recorded one")
        rec.check(e == want_e, f"{name}: reducing matrix differs from the recorded one")
        rec.check(
            congruence_reduce(d, e) == fixtures.CP8_REDUCED_ADJACENCY,
            f"{name}: congruence does not give the recorded reduced matrix",
        )
    rec.check(
        reduced_graph(s).adjacency_matrix() == fixtures.CP8_REDUCED_ADJACENCY,
        "cp8: reduced graph adjacency differs from the recorded matrix",
    )

    spec = CliquePathSpec(fixtures.SEESAW_CP_SPEC)
    ns = NeighborhoodSequence(expand_clique_path_spec(spec), fixtures.SEESAW_CP_ANCHORS)
    g = build_cp_graph(ns)
    rec.check(
        g == fixtures.fixture_graph("seesaw_cp"), "seesaw_cp: fixture differs from construction"
    )
    inv = distance_invariants(g)
    rec.check(inv.det == fixtures.SEESAW_CP_DET, f"seesaw_cp: det {inv.det}")
    rec.check(inv.inertia == fixtures.SEESAW_CP_INERTIA, f"seesaw_cp: inertia {inv.inertia}")
    rec.check(inv.cof == fixtures.SEESAW_CP_COF, f"seesaw_cp: cof {inv.cof}")

    chain = fixtures.fixture_graph("cp8_chain")
    hub = fixtures.fixture_graph("cp8_hub")
    c5 = LabeledGraph(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))
    for name, cp in (("c5_cp8_chain", chain), ("c5_cp8_hub", hub)):
        combined = attach(c5, (1, 2), cp).graph
        rec.check(
            combined == fixtures.fixture_graph(name), f"{name}: fixture differs from attach()"
        )
    return {"checks": rec.passed + rec.failed}


def _congruence_family(s: NonLeapingSequence) -> Recorder:
    sub = Recorder()
    h = reduced_graph(s).adjacency_matrix()
    for ns in enumerate_neighborhood_sequences(s):
        g = build_cp_graph(ns)
        r = congruence_reduce(all_pairs_distances(g), reducing_matrix(ns))
        sub.check(r == h, f"congruence broken for q={s.q} anchors={ns.anchors}")
    return sub


def _suite_congruence(rec: Recorder, rng, scale) -> dict:
    n_max = scale if scale is not None else 8
    fams = list(_families(n_max))
    members = 0
    for s in fams:
        members += count_neighborhood_sequences(s)
    for sub in map_cases(_congruence_family, fams):
        rec.absorb(sub)
    random_checks = 100
    for _ in range(random_checks):
        s = random_nonleaping(rng, 12)
        ns = random_member(rng, s)
        g = build_cp_graph(ns)
        r = congruence_reduce(all_pairs_distances(g), reducing_matrix(ns))
        rec.check(
            r == reduced_graph(s).adjacency_matrix(),
            f"congruence broken for q={s.q} anchors={ns.anchors}",
        )
    return {"families": len(fams), "members": members, "random_members": random_checks}


def _constancy_family(s: NonLeapingSequence) -> Recorder:
    sub = Recorder()
    want = family_invariants(s)
    for ns in enumerate_neighborhood_sequences(s):
        got = distance_invariants(build_cp_graph(ns))
        sub.check(
            got == want,
            f"invariants vary within q={s.q}: anchors={ns.anchors} give {got}, family says {want}",
        )
    return sub


def _suite_constancy(rec: Recorder, rng, scale) -> dict:
    n_max = scale if scale is not None else 8
    fams = list(_families(n_max))
    for sub in map_cases(_constancy_family, fams):
        rec.absorb(sub)
    return {"families": len(fams), "members": rec.passed + rec.failed}


def _cp2_spec(spec: CliquePathSpec) -> Recorder:
    sub = Recorder()
    want = cp2_invariants(spec)
    s = expand_clique_path_spec(spec)
    sub.check(
        family_invariants(s) == want,
        f"reduced-graph invariants disagree with the closed form for 2:{spec.p}",
    )
    for ns in enumerate_neighborhood_sequences(s):
        got = distance_invariants(build_cp_graph(ns))
        sub.check(
            got == want,
            f"2:{spec.p} anchors={ns.anchors}: {got} differs from closed form {want}",
        )
    return sub


def _suite_cp2(rec: Recorder, rng, scale) -> dict:
    m_max = scale if scale is not None else 4
    specs = [CliquePathSpec(p) for m in range(m_max + 1) for p in product((3, 4, 5), repeat=m)]
    for sub in map_cases(_cp2_spec, specs):
        rec.absorb(sub)
    return {"specs": len(specs), "members": rec.passed + rec.failed - len(specs)}


def _suite_linear_2tree(rec: Recorder, rng, scale) -> dict:
    n_max = scale if scale is not None else 10
    members = 0
    for n in range(4, n_max + 1):
        spec = CliquePathSpec((3,) * (n - 2))
        want = linear_2tree_invariants(n)
        rec.check(
            cp2_invariants(spec) == want,
            f"linear 2-tree closed form disagrees with 2-clique-path form at n={n}",
        )
        for ns in enumerate_neighborhood_sequences(expand_clique_path_spec(spec)):
            members += 1
            got = distance_invariants(build_cp_graph(ns))
            rec.check(
                got == want,
                f"linear 2-tree n={n} anchors={ns.anchors}: {got} differs from {want}",
            )
    return {"orders": list(range(4, n_max + 1)), "members": members}


def _suite_weighted_path(rec: Recorder, rng, scale) -> dict:
    n_max = scale if scale is not None else 12
    rec.check(determinant(weighted_path_matrix(0)) == 1, "empty path determinant is not 1")
    for n in range(1, n_max + 1):
        a = weighted_path_matrix(n)
        want_det = (-1) ** n * (n + 1)
        got_det = determinant(a)
        rec.check(got_det == want_det, f"path n={n}: determinant {got_det} != {want_det}")
        got_in = inertia_congruence(a)
        rec.check(
            got_in == Inertia(0, n, 0), f"path n={n}: inertia {got_in} != (0, {n}, 0)"
        )
    return {"orders": n_max}


def _trees_of_order(n: int) -> Recorder:
    sub = Recorder()
    want = tree_invariants(n)
    composed = compose_blocks([(-1, -2)] * (n - 1))
    sub.check(
        composed == (want.det, want.cof),
        f"n={n}: block composition {composed} disagrees with the tree formulas",
    )
    for code in product(range(1, n + 1), repeat=max(0, n - 2)):
        t = tree_from_pruefer(n, code)
        d = all_pairs_distances(t)
        got_det = determinant(d)
        got_cof = determinant(d + IntMatrix.ones(n)) - got_det
        got_in = inertia_congruence(d)
        ok = got_det == want.det and got_cof == want.cof and got_in == want.inertia
        sub.check(ok, f"tree code={code}: ({got_det}, {got_in}, {got_cof}) != {want}")
    return sub


def _suite_trees(rec: Recorder, rng, scale) -> dict:
    n_max = scale if scale is not None else 7
    orders = list(range(2, n_max + 1))
    trees = 0
    for sub in map_cases(_trees_of_order, orders):
        rec.absorb(sub)
        trees += sub.passed + sub.failed - 1
    return {"orders": orders, "trees": trees}


def _suite_attach(rec: Recorder, rng, scale) -> dict:
    pairs = scale if scale is not None else 20
    chain = all_pairs_distances(fixtures.fixture_graph("c5_cp8_chain"))
    hub = all_pairs_distances(fixtures.fixture_graph("c5_cp8_hub"))
    rec.check(
        determinant(chain) == determinant(hub),
        "the two bundled five-cycle attachments have different determinants",
    )
    for i in range(pairs):
        base = random_connected_graph(rng, rng.randint(3, 6))
        u, v = rng.choice(base.edges)
        edge = (u, v) if rng.random() < 0.5 else (v, u)
        s = random_nonleaping(rng, rng.randint(2, 7))
        dets = set()
        count = 0
        for ns in enumerate_neighborhood_sequences(s):
            combined = attach(base, edge, build_cp_graph(ns)).graph
            if combined.n != base.n + s.n - 2:
                rec.check(False, f"pair {i}: wrong combined order")
            dets.add(determinant(all_pairs_distances(combined)))
            count += 1
        rec.check(
            len(dets) == 1,
            f"pair {i}: {len(dets)} distinct determinants across {count} members of q={s.q}",
        )
    doubles = 5
    for i in range(doubles):
        base = random_connected_graph(rng, rng.randint(4, 6))
        e1, e2 = rng.sample(list(base.edges), 2)
        g1 = build_cp_graph(random_member(rng, random_nonleaping(rng, rng.randint(3, 6))))
        g2 = build_cp_graph(random_member(rng, random_nonleaping(rng, rng.randint(3, 6))))
        ab = attach(attach(base, e1, g1).graph, e2, g2).graph
        ba = attach(attach(base, e2, g2).graph, e1, g1).graph
        rec.check(
            ab.n == ba.n == base.n + g1.n + g2.n - 4,
            f"double {i}: combined orders {ab.n}, {ba.n} are off",
        )
        rec.check(
            determinant(all_pairs_distances(ab)) == determinant(all_pairs_distances(ba)),
            f"double {i}: attachment order changed the determinant",
        )
    return {"fixture_pairs": 1, "random_pairs": pairs, "double_attachments": doubles}


def _crafted_recipes() -> list[BlockCliquePathRecipe]:
    edge = CliquePathSpec(())
    return [
        # a path on 5 vertices: K_2 blocks chained end to end
        BlockCliquePathRecipe(
            (
                BlockPart(edge),
                BlockPart(edge, at=2),
                BlockPart(edge, at=3),
                BlockPart(edge, at=4),
            )
        ),
        # a star on 6 vertices
        BlockCliquePathRecipe(
            (
                BlockPart(edge),
                BlockPart(edge, at=1),
                BlockPart(edge, at=1),
                BlockPart(edge, at=1),
                BlockPart(edge, at=1),
            )
        ),
        # one 2-clique-path block
        BlockCliquePathRecipe((BlockPart(CliquePathSpec((3, 4))),)),
        # a triangle with a pendant edge
        BlockCliquePathRecipe((BlockPart(CliquePathSpec((3,))), BlockPart(edge, at=3))),
        # a triangle with a linear 2-tree hanging off each vertex
        BlockCliquePathRecipe(
            (
                BlockPart(CliquePathSpec((3,))),
                BlockPart(CliquePathSpec((3, 3)), at=1),
                BlockPart(CliquePathSpec((3,)), at=2),
                BlockPart(edge, at=3),
            )
        ),
    ]


def _suite_block_inertia(rec: Recorder, rng, scale) -> dict:
    n_max = scale if scale is not None else 12
    recipes = _crafted_recipes()
    while len(recipes) < 30:
        recipes.append(random_recipe(rng, n_max))
    for i, recipe in enumerate(recipes):
        real = realize_recipe(recipe)
        n = real.graph.n
        want = Inertia(1, n - 1, 0)
        try:
            claimed = block_2cp_inertia(recipe)
            rec.check(claimed == want, f"recipe {i}: claimed {claimed}")
        except CrossCheckFailed as e:
            rec.check(False, f"recipe {i} (n={n}): {e}")
            continue
        direct = inertia_congruence(all_pairs_distances(real.graph))
        rec.check(
            direct == want, f"recipe {i} (n={n}): direct inertia {direct} != {want}"
        )
    return {"recipes": len(recipes)}


def _addressing_cases() -> list[tuple[str, LabeledGraph]]:
    two_tree5 = build_cp_graph(
        NeighborhoodSequence(
            expand_clique_path_spec(CliquePathSpec((3, 3, 3))), (1, 1, 1)
        )
    )
    return [
        ("K2", path_graph(2)),
        ("K3", complete_graph(3)),
        ("P3", path_graph(3)),
        ("P4", path_graph(4)),
        ("K4", complete_graph(4)),
        ("2tree5", two_tree5),
    ]


def _suite_addressing(rec: Recorder, rng, scale) -> dict:
    for name, g in _addressing_cases():
        n = g.n
        lb = addressing_lower_bound(inertia_congruence(all_pairs_distances(g)))
        rec.check(lb == n - 1, f"{name}: lower bound {lb} != {n - 1}")
        shorter = search_scheme(g, n - 2)
        rec.check(shorter is None, f"{name}: found a scheme of length {n - 2}")
        got = exact_n(g)
        rec.check(got == n - 1, f"{name}: minimum length {got} != {n - 1}")
        scheme = search_scheme(g, n - 1)
        rec.check(
            scheme is not None and verify_scheme(g, scheme),
            f"{name}: no valid scheme of length {n - 1}",
        )
    return {"graphs": [name for name, _ in _addressing_cases()]}


def _suite_linalg_crossval(rec: Recorder, rng, scale) -> dict:
    count = scale if scale is not None else 200
    jones_applied = 0
    jones_skipped = 0
    for i in range(count):
        n = rng.randint(1, 7)
        rows = [[0] * n for _ in range(n)]
        for r in range(n):
            for c in range(r, n):
                rows[r][c] = rows[c][r] = rng.randint(-5, 5)
        a = IntMatrix.from_rows(rows)
        fast = determinant(a)
        slow = det_by_cofactor_expansion(a)
        rec.check(fast == slow, f"matrix {i}: determinant {fast} != expansion {slow}")
        cong = inertia_congruence(a)
        roots = inertia_by_charpoly_signs(a)
        rec.check(cong == roots, f"matrix {i}: congruence {cong} != sign rule {roots}")
        try:
            jones = inertia_leading_minors(a)
        except (Singular, ConsecutiveZeroMinors):
            jones_skipped += 1
            continue
        jones_applied += 1
        rec.check(jones == cong, f"matrix {i}: minor-sign {jones} != congruence {cong}")
    return {"matrices": count, "jones_applied": jones_applied, "jones_skipped": jones_skipped}


SUITES = {
    "fixtures": _suite_fixtures,
    "congruence": _suite_congruence,
    "constancy": _suite_constancy,
    "cp2-formulas": _suite_cp2,
    "linear-2tree": _suite_linear_2tree,
    "weighted-path": _suite_weighted_path,
    "trees": _suite_trees,
    "attach": _suite_attach,
    "block-inertia": _suite_block_inertia,
    "addressing": _suite_addressing,
    "linalg-crossval": _suite_linalg_crossval,
}


def available_suites() -> list[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str, seed: int = 0, scale: int | None = None) -> Report:
    """Run one suite (or "all") and return its report."""
    t0 = time.perf_counter()
    if name == "all":
        results = {}
        total = Recorder()
        for sub_name in SUITES:
            sub = run_suite(sub_name, seed=seed, scale=None)
            results[sub_name] = {"passed": sub.passed, "failed": sub.failed}
            total.passed += sub.passed
            total.failed += sub.failed
            for f in sub.failures:
                if len(total.failures) < total.max_failures:
                    total.failures.append(f)
        return Report(
            "all", seed, scale, results, total.passed, total.failed, total.failures,
            time.perf_counter() - t0,
        )
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; available: {', '.join(available_suites())}")
    rec = Recorder()
    rng = random.Random(seed)
    results = SUITES[name](rec, rng, scale)
    return Report(
        name, seed, scale, results, rec.passed, rec.failed, rec.failures,
        time.perf_counter() - t0,
    )
