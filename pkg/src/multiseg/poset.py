"""Posets of multisegments under elementary operations.

The order is decided two independent ways: breadth-first closure under
elementary operations (the defining description, used as a small-scale
oracle) and a rank-function criterion (the production test, quadratic in
the size of the support).  Their agreement is enforced by the test suite,
not assumed here.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache

from .core import Multisegment, elementary_operation, linked, weight
from .errors import ResourceLimitError

DEFAULT_MAX_POSET_SIZE = 50_000


@dataclass(frozen=True, slots=True)
class RankTable:
    """Counts ``r[(i, j)]`` of segments containing ``[i, j]``, for all
    ``i <= j`` inside the support hull.  ``r[(i, i)]`` equals the weight at
    ``i``; widening ``[i, j]`` can only decrease the count.
    """

    r: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.r)


@cache
def rank_table(a: Multisegment) -> RankTable:
    hull = a.support_hull()
    if hull is None:
        return RankTable(())
    lo, hi = hull
    counts: dict[tuple[int, int], int] = {
        (i, j): 0 for i in range(lo, hi + 1) for j in range(i, hi + 1)
    }
    for s in a.segments:
        for i in range(s.begin, s.end + 1):
            for j in range(i, s.end + 1):
                counts[(i, j)] += 1
    return RankTable(tuple(sorted(counts.items())))


def leq_rank(b: Multisegment, a: Multisegment) -> bool:
    """Decide ``b <= a`` by the rank criterion: equal weights and
    ``r_ij(b) >= r_ij(a)`` for every interval in the common hull.
    """
    if weight(b) != weight(a):
        return False
    rb = rank_table(b).r
    ra = rank_table(a).r
    return all(vb >= va for (_, vb), (_, va) in zip(rb, ra))


def _op_results(a: Multisegment) -> set[Multisegment]:
    """All multisegments one elementary operation below ``a``."""
    out: set[Multisegment] = set()
    segs = a.segments
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if linked(segs[i], segs[j]):
                out.add(elementary_operation(a, i, j))
    return out


@dataclass(frozen=True)
class MultisegmentPoset:
    """Closure of a root multisegment under elementary operations.

    ``edges`` holds every (parent, child) pair one elementary operation
    apart; a single operation may skip ranks, so these are not all cover
    relations.  Use :meth:`covers` for the transitive reduction.
    """

    root: Multisegment
    elements: frozenset[Multisegment]
    edges: frozenset[tuple[Multisegment, Multisegment]]

    def __len__(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[Multisegment]:
        return sorted(self.elements, key=Multisegment.sort_key)

    def children(self) -> dict[Multisegment, list[Multisegment]]:
        out: dict[Multisegment, list[Multisegment]] = {m: [] for m in self.elements}
        for parent, child in self.edges:
            out[parent].append(child)
        for kids in out.values():
            kids.sort(key=Multisegment.sort_key)
        return out

    def minimal(self) -> Multisegment:
        """The unique element with no outgoing operation."""
        sinks = [m for m in self.elements if not _op_results(m)]
        if len(sinks) != 1:
            raise AssertionError(f"expected a unique minimal element, got {len(sinks)}")
        return sinks[0]

    def covers(self) -> list[tuple[Multisegment, Multisegment]]:
        """Transitive reduction of the operation edges."""
        kids = self.children()
        order = sorted(self.elements, key=lambda m: (_rank_total(m), m.sort_key()))
        # Children always have strictly larger total rank, so descending
        # order processes every child before its parents.
        desc: dict[Multisegment, set[Multisegment]] = {}
        for m in reversed(order):
            below: set[Multisegment] = set()
            for c in kids[m]:
                below.add(c)
                below |= desc[c]
            desc[m] = below
        out: list[tuple[Multisegment, Multisegment]] = []
        for parent in order:
            for child in kids[parent]:
                if not any(child in desc[other] for other in kids[parent] if other != child):
                    out.append((parent, child))
        return out


def _rank_total(m: Multisegment) -> int:
    return sum(v for _, v in rank_table(m).r)


def generate_poset(
    a: Multisegment, max_size: int = DEFAULT_MAX_POSET_SIZE
) -> MultisegmentPoset:
    """Breadth-first closure of ``{a}`` under all elementary operations,
    deduplicated by canonical form.  Raises :class:`ResourceLimitError`
    when more than ``max_size`` elements appear.
    """
    elements: set[Multisegment] = {a}
    edges: set[tuple[Multisegment, Multisegment]] = set()
    frontier = [a]
    while frontier:
        nxt: list[Multisegment] = []
        for parent in frontier:
            for child in _op_results(parent):
                edges.add((parent, child))
                if child not in elements:
                    elements.add(child)
                    nxt.append(child)
                    if len(elements) > max_size:
                        raise ResourceLimitError(
                            f"poset of {parent.to_json()} exceeds cap {max_size}"
                        )
        frontier = nxt
    return MultisegmentPoset(a, frozenset(elements), frozenset(edges))


def minimal_element(a: Multisegment) -> Multisegment:
    """The unique multisegment below ``a`` with no linked pair, reached by
    applying elementary operations until none applies.  The result does not
    depend on the order of operations.
    """
    current = a
    while True:
        segs = current.segments
        found = None
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                if linked(segs[i], segs[j]):
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            return current
        current = elementary_operation(current, *found)


def hasse_dot(p: MultisegmentPoset) -> str:
    """DOT digraph of the poset: one node per element labeled by its JSON
    form, one edge per cover relation (transitive reduction applied).
    """
    ordered = p.sorted_elements()
    ids = {m: f"n{i}" for i, m in enumerate(ordered)}
    lines = ["digraph poset {"]
    for m in ordered:
        label = json.dumps(m.to_json(), separators=(",", ":")).replace('"', '\\"')
        lines.append(f'  {ids[m]} [label="{label}"];')
    for parent, child in sorted(p.covers(), key=lambda e: (e[0].sort_key(), e[1].sort_key())):
        lines.append(f"  {ids[parent]} -> {ids[child]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
