"""Bundled example graphs and their independently recorded matrices.

The edge lists in data/ and the matrices here were transcribed by hand and
double-checked entry by entry; the suites rebuild the same objects from the
construction rules and compare. Names describe the graphs: the cp8 family
is CP(0,1,2,2,2,2,3,3), whose "chain" member strings its windows along the
recent vertices while the "hub" member anchors everything at vertex 1.
"""

from __future__ import annotations

from importlib import resources

from .errors import InputError
from .graphs import LabeledGraph, parse_edge_list
from .linalg import Inertia
from .matrices import IntMatrix

CP8_SEQ = (0, 1, 2, 2, 2, 2, 3, 3)
CP8_CHAIN_ANCHORS = (1, 2, 3, 4, 4, 5)
CP8_HUB_ANCHORS = (1, 1, 1, 1, 1, 1)

CP8_CHAIN_DISTANCES = IntMatrix.from_rows(
    [
        [0, 1, 1, 2, 2, 3, 3, 3],
        [1, 0, 1, 1, 2, 2, 2, 3],
        [1, 1, 0, 1, 1, 2, 2, 2],
        [2, 1, 1, 0, 1, 1, 1, 2],
        [2, 2, 1, 1, 0, 1, 1, 1],
        [3, 2, 2, 1, 1, 0, 1, 1],
        [3, 2, 2, 1, 1, 1, 0, 1],
        [3, 3, 2, 2, 1, 1, 1, 0],
    ]
)

CP8_CHAIN_REDUCER = IntMatrix.from_rows(
    [
        [1, 0, 0, 1, 0, 0, 0, 0],
        [0, 1, -1, -1, 1, 0, 0, 0],
        [0, 0, 1, -1, -1, 1, 0, 0],
        [0, 0, 0, 1, -1, -1, 0, 1],
        [0, 0, 0, 0, 1, -1, 0, -1],
        [0, 0, 0, 0, 0, 1, -1, 0],
        [0, 0, 0, 0, 0, 0, 1, -1],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ]
)

CP8_HUB_DISTANCES = IntMatrix.from_rows(
    [
        [0, 1, 1, 1, 1, 1, 1, 1],
        [1, 0, 1, 2, 2, 2, 2, 2],
        [1, 1, 0, 1, 2, 2, 2, 2],
        [1, 2, 1, 0, 1, 2, 2, 2],
        [1, 2, 2, 1, 0, 1, 1, 2],
        [1, 2, 2, 2, 1, 0, 1, 1],
        [1, 2, 2, 2, 1, 1, 0, 1],
        [1, 2, 2, 2, 2, 1, 1, 0],
    ]
)

CP8_HUB_REDUCER = IntMatrix.from_rows(
    [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, -1, 0, 0, 0, 0, 0],
        [0, 0, 1, -1, 0, 0, 0, 0],
        [0, 0, 0, 1, -1, 0, 0, 0],
        [0, 0, 0, 0, 1, -1, 0, 0],
        [0, 0, 0, 0, 0, 1, -1, 0],
        [0, 0, 0, 0, 0, 0, 1, -1],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ]
)

CP8_REDUCED_ADJACENCY = IntMatrix.from_rows(
    [
        [0, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 1, 1, 0, 0, 0, 0],
        [0, 1, -2, 0, 1, 0, 0, 0],
        [0, 1, 0, -2, 0, 1, 0, 0],
        [0, 0, 1, 0, -2, 0, 0, 1],
        [0, 0, 0, 1, 0, -2, 1, -1],
        [0, 0, 0, 0, 0, 1, -2, 1],
        [0, 0, 0, 0, 1, -1, 1, -2],
    ]
)

# the three 2-trees on six vertices whose distance determinants first show
# the family is not determinant-constant
TWO_TREE_6_DETERMINANTS = {
    "two_tree_6a": -8,
    "two_tree_6b": -9,
    "two_tree_6c": -9,
}

# a member of the 2-clique path family with cliques 3, 4, 3, 4
SEESAW_CP_SPEC = (3, 4, 3, 4)
SEESAW_CP_ANCHORS = (1, 2, 2, 3, 3, 3)
SEESAW_CP_DET = -15
SEESAW_CP_INERTIA = Inertia(1, 7, 0)
SEESAW_CP_COF = -8

FIXTURE_NAMES = (
    "two_tree_6a",
    "two_tree_6b",
    "two_tree_6c",
    "cp8_chain",
    "cp8_hub",
    "c5_cp8_chain",
    "c5_cp8_hub",
    "seesaw_cp",
)


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise InputError(f"unknown fixture {name!r}")
    return resources.files("cpgraphs").joinpath(f"data/{name}.edges").read_text()


def fixture_graph(name: str) -> LabeledGraph:
    return parse_edge_list(fixture_text(name))
