"""Squashed-cube addressing over the alphabet {0, 1, *}.

An addressing scheme assigns each vertex a length-d word; the distance
between two words counts positions where one has 0 and the other 1 (a *
never contributes). A scheme is valid when word distance equals graph
distance for every pair. The search is exhaustive at desk scale (graphs on
at most 6 vertices) with an explicit node budget, so "no scheme of length d
exists" is a real conclusion, not a timeout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InputError, ResourceLimit
from .graphs import LabeledGraph, all_pairs_distances
from .linalg import inertia_congruence
from .formulas import addressing_lower_bound

ALPHABET = "01*"
MAX_VERTICES = 6


class LengthMismatch(InputError):
    """Two addresses of different lengths cannot be compared."""


class SizeMismatch(InputError):
    """The scheme does not assign exactly one address per vertex."""


class TooLarge(ResourceLimit):
    """The graph exceeds the exhaustive-search size guard."""


class BudgetExceeded(ResourceLimit):
    """The node budget ran out before the search was conclusive."""


@dataclass(frozen=True)
class AddressScheme:
    """One address per vertex, in vertex-label order."""

    d: int
    addresses: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "addresses", tuple(self.addresses))
        if self.d < 0:
            raise InputError("address length must be nonnegative")
        if len(self.addresses) >= 2 and self.d < 1:
            raise InputError("need length at least 1 for two or more vertices")
        for a in self.addresses:
            if len(a) != self.d:
                raise InputError(f"address {a!r} does not have length {self.d}")
            if any(c not in ALPHABET for c in a):
                raise InputError(f"address {a!r} uses characters outside 0, 1, *")


def scheme_to_json_obj(s: AddressScheme) -> dict:
    return {"d": s.d, "addr": list(s.addresses)}


def scheme_from_json_obj(obj: dict) -> AddressScheme:
    try:
        return AddressScheme(int(obj["d"]), tuple(str(a) for a in obj["addr"]))
    except (KeyError, TypeError) as e:
        raise InputError(f"bad scheme object: {e}") from None


def address_distance(a: str, b: str) -> int:
    """Number of positions where one word has 0 and the other 1."""
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    for w in (a, b):
        if any(c not in ALPHABET for c in w):
            raise InputError(f"address {w!r} uses characters outside 0, 1, *")
    return sum(1 for x, y in zip(a, b) if {x, y} == {"0", "1"})


def verify_scheme(g: LabeledGraph, scheme: AddressScheme) -> bool:
    """Does word distance equal graph distance for every vertex pair?"""
    if len(scheme.addresses) != g.n:
        raise SizeMismatch(f"{len(scheme.addresses)} addresses for {g.n} vertices")
    dist = all_pairs_distances(g)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if address_distance(scheme.addresses[i], scheme.addresses[j]) != dist.rows[i][j]:
                return False
    return True


def _bfs_order(g: LabeledGraph) -> list[int]:
    order = []
    seen = [False] * (g.n + 1)
    seen[1] = True
    frontier = [1]
    while frontier:
        nxt = []
        for u in frontier:
            order.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    nxt.append(w)
        frontier = sorted(nxt)
    return order


def search_scheme(
    g: LabeledGraph, d: int, budget: int | None = None
) -> AddressScheme | None:
    """Exhaustive search for a valid length-d scheme; None means none exists.

    Vertices are assigned in BFS order. Symmetry breaking: the columns of
    the growing address matrix must stay lexicographically nondecreasing,
    which keeps one representative per column permutation without losing
    any scheme. budget caps the number of candidate assignments tried;
    exceeding it raises instead of guessing.
    """
    if g.n > MAX_VERTICES:
        raise TooLarge(f"{g.n} vertices exceeds the guard of {MAX_VERTICES}")
    if d < 0:
        raise InputError("address length must be nonnegative")
    if g.n == 0:
        return AddressScheme(d, ())
    dist = all_pairs_distances(g)
    order = _bfs_order(g)
    # words as tuples over codes 0, 1, 2 (2 prints as *)
    words = sorted(product((0, 1, 2), repeat=d))
    assigned: list[tuple[int, ...]] = []
    nodes = 0

    def word_dist(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        return sum(1 for x, y in zip(a, b) if x + y == 1)

    def columns_stay_sorted(cand: tuple[int, ...]) -> bool:
        rows = assigned + [cand]
        prev = tuple(r[0] for r in rows) if d else ()
        for j in range(1, d):
            col = tuple(r[j] for r in rows)
            if col < prev:
                return False
            prev = col
        return True

    def extend(t: int) -> tuple[str, ...] | None:
        nonlocal nodes
        if t == len(order):
            by_label = [""] * g.n
            for pos, v in enumerate(order):
                by_label[v - 1] = "".join(ALPHABET[c] for c in assigned[pos])
            return tuple(by_label)
        v = order[t]
        for cand in words:
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"budget of {budget} nodes exhausted")
            ok = all(
                word_dist(assigned[pos], cand) == dist.rows[order[pos] - 1][v - 1]
                for pos in range(t)
            )
            if not ok or not columns_stay_sorted(cand):
                continue
            assigned.append(cand)
            found = extend(t + 1)
            assigned.pop()
            if found is not None:
                return found
        return None

    found = extend(0)
    return None if found is None else AddressScheme(d, found)


def exact_n(g: LabeledGraph, budget: int | None = None) -> int:
    """Minimum address length, searched upward from the inertia bound.

    The Winkler bound guarantees a scheme of length n - 1 exists, so the
    scan terminates. An exhausted budget raises rather than answering.
    """
    if g.n > MAX_VERTICES:
        raise TooLarge(f"{g.n} vertices exceeds the guard of {MAX_VERTICES}")
    if g.n <= 1:
        return 0
    lb = addressing_lower_bound(inertia_congruence(all_pairs_distances(g)))
    for d in range(max(lb, 1), g.n):
        if search_scheme(g, d, budget) is not None:
            return d
    raise RuntimeError("no scheme found up to n - 1; this contradicts the length bound")
