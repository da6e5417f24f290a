"""Backward-neighborhood sequences that drive the incremental graph build.

A CP graph on vertices 1..n is grown one vertex at a time: vertex k is joined
to a set W_k of q_k earlier vertices consisting of the contiguous run
[b_k, k-1] plus one extra "anchor" vertex a_k below the run, where
b_k = k - q_k + 1. The size sequence q must not leap: q_1 = 0, q_2 = 1, and
2 <= q_k <= q_{k-1} + 1 afterwards. The anchor at step k must itself lie in
W_{k-1}, which is what makes consecutive neighborhoods overlap in a clique.

This module owns the combinatorics: validating q, expanding the p_1..p_m
clique-path shorthand, computing the admissible anchors at each step, and
enumerating or counting all anchor choices for a fixed q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InputError


class LengthTooShort(InputError):
    """The sequence has fewer than two terms."""


class HeadMismatch(InputError):
    """The sequence does not start 0, 1."""


class LeapViolation(InputError):
    """Some q_k is below 2 or jumps past q_{k-1} + 1."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class PartTooSmall(InputError):
    """A clique size in the shorthand is below 3."""


class IndexOutOfRange(InputError):
    """A vertex index k lies outside the sequence's range."""


@dataclass(frozen=True)
class NonLeapingSequence:
    """A validated size sequence q, with the derived run starts b."""

    q: tuple[int, ...]
    b: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        q = tuple(self.q)
        object.__setattr__(self, "q", q)
        if len(q) < 2:
            raise LengthTooShort("need at least two terms (q_1 = 0, q_2 = 1)")
        if q[0] != 0 or q[1] != 1:
            raise HeadMismatch(f"sequence must start 0, 1; got {q[0]}, {q[1]}")
        for k in range(3, len(q) + 1):
            qk = q[k - 1]
            if qk < 2 or qk > q[k - 2] + 1:
                raise LeapViolation(
                    k, f"q_{k} = {qk} outside [2, q_{k-1} + 1] = [2, {q[k - 2] + 1}]"
                )
        object.__setattr__(
            self, "b", tuple(k - q[k - 1] + 1 for k in range(1, len(q) + 1))
        )

    @property
    def n(self) -> int:
        return len(self.q)

    def qk(self, k: int) -> int:
        self._check_index(k)
        return self.q[k - 1]

    def bk(self, k: int) -> int:
        """Start of the contiguous run [b_k, k-1] joined at step k."""
        self._check_index(k)
        return self.b[k - 1]

    def _check_index(self, k: int):
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"index {k} outside 1..{self.n}")


def validate_nonleaping(q: Sequence[int]) -> NonLeapingSequence:
    return NonLeapingSequence(tuple(q))


@dataclass(frozen=True)
class CliquePathSpec:
    """Clique sizes p_1..p_m of a path of cliques glued along edges.

    Expands to the size sequence 0, 1, [2..p_1-1], ..., [2..p_m-1]. m = 0 is
    allowed and denotes the single edge on two vertices.
    """

    p: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.p)
        object.__setattr__(self, "p", p)
        for i, pi in enumerate(p, start=1):
            if pi < 3:
                raise PartTooSmall(f"clique size p_{i} = {pi} must be at least 3")

    @property
    def n(self) -> int:
        return 2 + sum(pi - 2 for pi in self.p)


def expand_clique_path_spec(spec: CliquePathSpec) -> NonLeapingSequence:
    q = [0, 1]
    for pi in spec.p:
        q.extend(range(2, pi))
    return NonLeapingSequence(tuple(q))


def admissible_anchors(
    base: NonLeapingSequence, k: int, prior_anchors: Sequence[int]
) -> frozenset[int]:
    """Anchor choices at step k given the anchors chosen for steps 3..k-1.

    These are the members of W_{k-1} lying below b_k. The set always has
    exactly 1 + b_k - b_{k-1} elements, whatever the prior choices were.
    """
    if not 3 <= k <= base.n:
        raise IndexOutOfRange(f"anchor index {k} outside 3..{base.n}")
    prior = tuple(prior_anchors)
    if len(prior) != k - 3:
        raise InputError(f"expected {k - 3} prior anchors for step {k}, got {len(prior)}")
    if k == 3:
        window_prev = {1}
    else:
        window_prev = {prior[-1], *range(base.bk(k - 1), k - 1)}
    return frozenset(x for x in window_prev if x < base.bk(k))


@dataclass(frozen=True)
class NeighborhoodSequence:
    """A size sequence together with one anchor per step: a single CP graph."""

    base: NonLeapingSequence
    anchors: tuple[int, ...]  # a_3 .. a_n

    def __post_init__(self):
        anchors = tuple(self.anchors)
        object.__setattr__(self, "anchors", anchors)
        if len(anchors) != self.base.n - 2:
            raise InputError(
                f"need {self.base.n - 2} anchors for n = {self.base.n}, got {len(anchors)}"
            )
        for k in range(3, self.base.n + 1):
            a = anchors[k - 3]
            if a not in admissible_anchors(self.base, k, anchors[: k - 3]):
                raise InputError(f"anchor a_{k} = {a} is not admissible")

    @property
    def n(self) -> int:
        return self.base.n

    def ak(self, k: int) -> int:
        if not 2 <= k <= self.n:
            raise IndexOutOfRange(f"anchor index {k} outside 2..{self.n}")
        return 1 if k == 2 else self.anchors[k - 3]

    def window(self, k: int) -> frozenset[int]:
        """W_k, the set of earlier vertices joined to vertex k."""
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"index {k} outside 1..{self.n}")
        if k == 1:
            return frozenset()
        if k == 2:
            return frozenset({1})
        return frozenset({self.ak(k), *range(self.base.bk(k), k)})


def enumerate_neighborhood_sequences(
    base: NonLeapingSequence, limit: int | None = None
) -> Iterator[NeighborhoodSequence]:
    """All anchor choices for the given size sequence, in ascending anchor order."""

    def rec(prefix: list[int]) -> Iterator[NeighborhoodSequence]:
        k = len(prefix) + 3
        if k > base.n:
            yield NeighborhoodSequence(base, tuple(prefix))
            return
        for a in sorted(admissible_anchors(base, k, prefix)):
            prefix.append(a)
            yield from rec(prefix)
            prefix.pop()

    stream = rec([])
    return stream if limit is None else itertools.islice(stream, limit)


def count_neighborhood_sequences(base: NonLeapingSequence) -> int:
    """Number of members, as the product of admissible-anchor set sizes.

    The step-k set has 1 + b_k - b_{k-1} elements independent of prior
    choices, so the product telescopes off the b sequence alone.
    """
    total = 1
    for k in range(3, base.n + 1):
        total *= 1 + base.bk(k) - base.bk(k - 1)
    return total


def minimal_anchors(base: NonLeapingSequence) -> tuple[int, ...]:
    """The member taking the smallest admissible anchor at every step."""
    anchors: list[int] = []
    for k in range(3, base.n + 1):
        anchors.append(min(admissible_anchors(base, k, anchors)))
    return tuple(anchors)


def iter_nonleaping_sequences(n: int) -> Iterator[NonLeapingSequence]:
    """All non-leaping sequences of length n, lexicographically. Test-suite helper."""
    if n < 2:
        raise InputError("sequences have length at least 2")

    def rec(q: list[int]) -> Iterator[NonLeapingSequence]:
        if len(q) == n:
            yield NonLeapingSequence(tuple(q))
            return
        for qk in range(2, q[-1] + 2):
            q.append(qk)
            yield from rec(q)
            q.pop()

    yield from rec([0, 1])


def parse_sequence_literal(text: str) -> NonLeapingSequence:
    """Parse either a plain size sequence ("0,1,2,2,3") or shorthand ("2:3,4,3")."""
    if ":" in text:
        return expand_clique_path_spec(parse_spec_literal(text))
    parts = [p.strip() for p in text.split(",")]
    try:
        q = tuple(int(p) for p in parts if p != "")
    except ValueError:
        raise InputError(f"bad sequence literal: {text!r}") from None
    if len(q) != len(parts):
        raise InputError(f"bad sequence literal: {text!r}")
    return validate_nonleaping(q)


def parse_spec_literal(text: str) -> CliquePathSpec:
    """Parse clique-path shorthand "2:3,4,3" (or bare "3,4,3"; "2:" is the edge)."""
    body = text.strip()
    if ":" in body:
        head, _, body = body.partition(":")
        if head.strip() != "2":
            raise InputError(f"shorthand must start '2:', got {text!r}")
    body = body.strip()
    if body == "":
        return CliquePathSpec(())
    try:
        p = tuple(int(x.strip()) for x in body.split(","))
    except ValueError:
        raise InputError(f"bad clique-path literal: {text!r}") from None
    return CliquePathSpec(p)


def parse_anchor_literal(text: str) -> tuple[int, ...]:
    """Parse a comma-separated anchor vector; empty string means no anchors."""
    body = text.strip()
    if body == "":
        return ()
    try:
        return tuple(int(x.strip()) for x in body.split(","))
    except ValueError:
        raise InputError(f"bad anchor literal: {text!r}") from None
