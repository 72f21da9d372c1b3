"""Ground truth by exhaustive search over all ``n!`` labelings.

Everything else in this package is cross-checked against these routines
at desk scale, so they stay as close to the definitions as possible: a
plain scan over permutations for enumeration and counting, and a label-
by-label backtracking search for realizability.  A size guard refuses
silently large inputs; callers must raise it explicitly.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .graphs import Graph, Labeling, PinnacleSet

__all__ = [
    "DEFAULT_GUARD",
    "GuardExceeded",
    "PinnacleCatalog",
    "count_labelings_with_pinnacle_set",
    "enumerate_pinnacle_sets",
    "find_labeling",
]

DEFAULT_GUARD = 10


class GuardExceeded(ValueError):
    """The graph is larger than the caller's brute-force budget."""


def _check_guard(g: Graph, max_n_guard: int) -> None:
    if g.n == 0:
        raise ValueError("labeling operations require at least one vertex")
    if g.n > max_n_guard:
        raise GuardExceeded(
            f"n={g.n} exceeds the brute-force guard {max_n_guard}; "
            "pass a larger max_n_guard explicitly to proceed"
        )


@dataclass(frozen=True)
class PinnacleCatalog:
    """All distinct pinnacle sets of a graph, grouped by size.

    ``by_size[k]`` lists the size-``k`` sets in lexicographic order, so the
    catalog is identical no matter how the scan was scheduled.
    """

    n: int
    by_size: Mapping[int, tuple[PinnacleSet, ...]]

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.by_size.values())

    def sizes(self) -> list[int]:
        return sorted(self.by_size)

    def sets_of_size(self, k: int) -> tuple[PinnacleSet, ...]:
        return self.by_size.get(k, ())

    def all_sets(self) -> Iterator[PinnacleSet]:
        for k in self.sizes():
            yield from self.by_size[k]

    def __contains__(self, s) -> bool:
        t = PinnacleSet(s)
        return t in self.by_size.get(len(t), ())


@lru_cache(maxsize=None)
def _pinnacle_distribution(g: Graph) -> dict[tuple[int, ...], int]:
    """Map each pinnacle set (as a sorted tuple) to its number of labelings."""
    n = g.n
    nbrs = g.neighbors
    counts: dict[tuple[int, ...], int] = {}
    rng = range(n)
    for labels in permutations(range(1, n + 1)):
        pins = []
        for v in rng:
            lv = labels[v]
            for u in nbrs[v]:
                if labels[u] > lv:
                    break
            else:
                pins.append(lv)
        pins.sort()
        key = tuple(pins)
        counts[key] = counts.get(key, 0) + 1
    return counts


def enumerate_pinnacle_sets(g: Graph, max_n_guard: int = DEFAULT_GUARD) -> PinnacleCatalog:
    """Every distinct pinnacle set of ``g``, found by scanning all labelings."""
    _check_guard(g, max_n_guard)
    by_size: dict[int, list[PinnacleSet]] = {}
    for key in _pinnacle_distribution(g):
        by_size.setdefault(len(key), []).append(PinnacleSet(key))
    return PinnacleCatalog(
        n=g.n,
        by_size={k: tuple(sorted(v)) for k, v in sorted(by_size.items())},
    )


def count_labelings_with_pinnacle_set(
    g: Graph, s: PinnacleSet | Iterable[int], max_n_guard: int = DEFAULT_GUARD
) -> int:
    """Exact number of labelings of ``g`` whose pinnacle set equals ``s``."""
    _check_guard(g, max_n_guard)
    key = tuple(PinnacleSet(s))
    return _pinnacle_distribution(g).get(key, 0)


def find_labeling(
    g: Graph, s: PinnacleSet | Iterable[int], max_n_guard: int = DEFAULT_GUARD
) -> Labeling | None:
    """Some labeling of ``g`` with pinnacle set exactly ``s``, or ``None``.

    Labels are placed from ``n`` down to ``1``.  Because every label
    already placed is larger, a vertex becomes a pinnacle exactly when it
    has no labeled neighbour at the moment it receives its label, which
    makes the pinnacle constraint checkable as the search goes.
    """
    _check_guard(g, max_n_guard)
    s = PinnacleSet(s)
    n = g.n
    if s and s[-1] > n:
        raise ValueError(f"target {s} uses labels above n={n}")
    want = set(s)
    # pins_left[lab] = how many target labels are <= lab (still to be placed).
    pins_left = [0] * (n + 2)
    for lab in range(1, n + 1):
        pins_left[lab] = pins_left[lab - 1] + (1 if lab in want else 0)
    nbr_mask = [0] * n
    for v in range(n):
        for u in g.neighbors[v]:
            nbr_mask[v] |= 1 << u
    assignment = [0] * n

    def place(lab: int, labeled: int) -> bool:
        if lab == 0:
            return True
        unlabeled = [v for v in range(n) if not (labeled >> v) & 1]
        free = [v for v in unlabeled if not nbr_mask[v] & labeled]
        # The free set only shrinks, so there must be room for every
        # pinnacle label yet to come.
        if pins_left[lab] > len(free):
            return False
        candidates = free if lab in want else [v for v in unlabeled if nbr_mask[v] & labeled]
        for v in candidates:
            assignment[v] = lab
            if place(lab - 1, labeled | (1 << v)):
                return True
        return False

    if place(n, 0):
        return Labeling(assignment)
    return None
