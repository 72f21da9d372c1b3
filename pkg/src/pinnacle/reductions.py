"""Instance transformations and certificate checks for the hard decision problems.

Deciding whether a graph has a pinnacle set of a given size, or has a
given set as a pinnacle set, is NP-complete; both inherit hardness from
independent set.  This module provides the executable pieces: the
universal-vertex gadget that forces connectivity, the two answer-
preserving instance maps, and the polynomial-time certificate verifiers
that witness membership in NP.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graphs import (
    Graph,
    Labeling,
    PinnacleSet,
    connected_components,
    is_connected,
    is_independent,
    pinnacles,
)

__all__ = [
    "DecisionInstance",
    "add_universal_vertex",
    "reduce_to_pinnacle_existence",
    "reduce_to_pinnacle_size",
    "verify_existence_certificate",
    "verify_size_certificate",
]

KINDS = ("independent_set", "pinnacle_size", "pinnacle_existence")


@dataclass(frozen=True)
class DecisionInstance:
    """One instance of the three decision problems.

    ``independent_set`` and ``pinnacle_size`` carry the threshold ``k``
    ("size at least k"); ``pinnacle_existence`` carries the target set.
    """

    kind: str
    graph: Graph
    k: int | None = None
    target_set: PinnacleSet | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown instance kind {self.kind!r}")
        if self.kind in ("independent_set", "pinnacle_size"):
            if self.k is None or self.target_set is not None:
                raise ValueError(f"{self.kind} instances carry k only")
            if not 1 <= self.k <= max(self.graph.n, 1):
                raise ValueError(f"need 1 <= k <= n, got k={self.k}")
        else:
            if self.target_set is None or self.k is not None:
                raise ValueError("pinnacle_existence instances carry a target set only")


def add_universal_vertex(g: Graph) -> Graph:
    """A new vertex adjacent to everything; the result is connected."""
    new = g.n
    return Graph(g.n + 1, list(g.edges) + [(v, new) for v in range(g.n)])


def reduce_to_pinnacle_size(inst: DecisionInstance) -> DecisionInstance:
    """Map an independent-set instance to an equivalent pinnacle-size instance.

    On connected graphs the two questions coincide, so the instance passes
    through unchanged; a disconnected graph first gains a universal
    vertex, which preserves the answer for ``k >= 2``.  For ``k = 1`` both
    questions are trivially yes on a nonempty graph and the instance is
    left untouched.
    """
    if inst.kind != "independent_set":
        raise ValueError(f"expected an independent_set instance, got {inst.kind!r}")
    if inst.graph.n == 0:
        raise ValueError("cannot reduce an empty graph")
    h = inst.graph
    if inst.k >= 2 and not is_connected(h):
        h = add_universal_vertex(h)
    return DecisionInstance(kind="pinnacle_size", graph=h, k=inst.k)


def reduce_to_pinnacle_existence(inst: DecisionInstance) -> DecisionInstance:
    """Map an independent-set instance to a pinnacle-existence instance.

    The target is the top-``k`` block of the (gadgeted, if needed)
    graph: a connected graph has an independent set of size ``k`` exactly
    when that block is one of its pinnacle sets.  Unlike the size
    reduction, the gadget is applied to every disconnected input: a
    disconnected graph never has the top-1 block as a pinnacle set, so
    even ``k = 1`` needs the connectivity repair.
    """
    if inst.kind != "independent_set":
        raise ValueError(f"expected an independent_set instance, got {inst.kind!r}")
    if inst.graph.n == 0:
        raise ValueError("cannot reduce an empty graph")
    h = inst.graph
    if not is_connected(h):
        h = add_universal_vertex(h)
    return DecisionInstance(
        kind="pinnacle_existence",
        graph=h,
        target_set=PinnacleSet.max_set(h.n, inst.k),
    )


def verify_size_certificate(g: Graph, k: int, witness: Iterable[int]) -> bool:
    """Polynomial check that ``witness`` proves a pinnacle set of size >= ``k``.

    The witness must have at least ``k`` vertices, be independent, and
    reach every vertex of the graph.
    """
    w = frozenset(witness)
    for v in w:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"witness vertex {v!r} out of range for n={g.n}")
    if len(w) < k:
        return False
    if not is_independent(g, w):
        return False
    touched = [c for c in connected_components(g) if c & w]
    return sum(len(c) for c in touched) == g.n


def verify_existence_certificate(
    g: Graph, s: PinnacleSet | Iterable[int], lam: Labeling | Iterable[int]
) -> bool:
    """Polynomial check that the labeling realizes ``s`` exactly."""
    return pinnacles(g, lam) == PinnacleSet(s)
