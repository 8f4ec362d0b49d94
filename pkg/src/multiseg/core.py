"""Segments, multisegments and their elementary combinatorics.

A segment is a finite interval of consecutive integers ``[begin, end]``.  A
multisegment is a finite multiset of segments, stored here in a canonical
order so that structural equality and hashing agree with multiset equality.
All values in this module are immutable and safe to share between threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class Segment:
    """Closed integer interval ``[begin, end]`` with ``begin <= end``.

    >>> Segment(1, 3).length
    3
    """

    begin: int
    end: int

    def __post_init__(self) -> None:
        if self.begin > self.end:
            raise ValueError(f"empty segment [{self.begin},{self.end}]")

    @property
    def length(self) -> int:
        return self.end - self.begin + 1

    def contains(self, k: int) -> bool:
        return self.begin <= k <= self.end

    def covers(self, other: Segment) -> bool:
        return self.begin <= other.begin and other.end <= self.end

    def drop_end(self) -> Segment | None:
        """``[b,e] -> [b,e-1]``, or None for a singleton."""
        if self.begin == self.end:
            return None
        return Segment(self.begin, self.end - 1)

    def drop_begin(self) -> Segment | None:
        """``[b,e] -> [b+1,e]``, or None for a singleton."""
        if self.begin == self.end:
            return None
        return Segment(self.begin + 1, self.end)

    def extend_end(self) -> Segment:
        return Segment(self.begin, self.end + 1)

    def extend_begin(self) -> Segment:
        return Segment(self.begin - 1, self.end)

    def mirrored(self) -> Segment:
        """Reflection ``[b,e] -> [-e,-b]``; swaps the roles of ends and begins."""
        return Segment(-self.end, -self.begin)

    def as_pair(self) -> list[int]:
        return [self.begin, self.end]


def precedes(d1: Segment, d2: Segment) -> bool:
    """Strict total order on segments: earlier end wins, then larger begin.

    >>> precedes(Segment(1, 2), Segment(2, 3))
    True
    >>> precedes(Segment(2, 3), Segment(1, 3))
    True
    >>> precedes(Segment(1, 2), Segment(1, 2))
    False
    """
    if d1.end != d2.end:
        return d1.end < d2.end
    return d1.begin > d2.begin


def linked(d1: Segment, d2: Segment) -> bool:
    """True iff the set union of the two intervals is an interval differing
    from both inputs.  Juxtaposed segments (touching, disjoint) are linked;
    nested or equal segments are not.
    """
    union = segment_union(d1, d2)
    return union is not None and union != d1 and union != d2


def segment_union(d1: Segment, d2: Segment) -> Segment | None:
    """Union of the two intervals if it is again an interval, else None."""
    lo, hi = min(d1.begin, d2.begin), max(d1.end, d2.end)
    # The union is an interval iff the two pieces overlap or touch.
    if min(d1.end, d2.end) + 1 < max(d1.begin, d2.begin):
        return None
    return Segment(lo, hi)


def segment_intersection(d1: Segment, d2: Segment) -> Segment | None:
    lo, hi = max(d1.begin, d2.begin), min(d1.end, d2.end)
    if lo > hi:
        return None
    return Segment(lo, hi)


def _canonical_key(seg: Segment) -> tuple[int, int]:
    # Well-ordering used for storage: ends descending, then begins ascending.
    return (-seg.end, seg.begin)


@dataclass(frozen=True, slots=True)
class Multisegment:
    """Canonically ordered multiset of segments.

    Equal multisets compare equal structurally, so multisegments can key
    dictionaries and memo tables.  The empty multisegment is valid (it is
    the unit of the ring built on top of these values).
    """

    segments: tuple[Segment, ...]

    def __init__(self, segments: Iterable[Segment] = ()) -> None:
        ordered = tuple(sorted(segments, key=_canonical_key))
        object.__setattr__(self, "segments", ordered)

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, int] | list[int]]) -> Multisegment:
        return Multisegment(Segment(int(b), int(e)) for b, e in pairs)

    @staticmethod
    def from_json(data: object) -> Multisegment:
        if not isinstance(data, dict) or "segments" not in data:
            raise ValueError("multisegment JSON must be {'segments': [[b,e],...]}")
        pairs = data["segments"]
        if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
            for p in pairs
        ):
            raise ValueError("multisegment segments must be [begin, end] integer pairs")
        return Multisegment.from_pairs(pairs)

    def to_json(self) -> dict:
        return {"segments": [s.as_pair() for s in self.segments]}

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __bool__(self) -> bool:
        return bool(self.segments)

    @property
    def degree(self) -> int:
        return sum(s.length for s in self.segments)

    def ends(self) -> tuple[int, ...]:
        """End multiset, sorted ascending."""
        return tuple(sorted(s.end for s in self.segments))

    def begins(self) -> tuple[int, ...]:
        """Begin multiset, sorted ascending."""
        return tuple(sorted(s.begin for s in self.segments))

    def count_end(self, k: int) -> int:
        return sum(1 for s in self.segments if s.end == k)

    def count_begin(self, k: int) -> int:
        return sum(1 for s in self.segments if s.begin == k)

    def support_hull(self) -> tuple[int, int] | None:
        """Smallest interval containing every segment, or None if empty."""
        if not self.segments:
            return None
        return (min(s.begin for s in self.segments), max(s.end for s in self.segments))

    def translated(self, offset: int) -> Multisegment:
        return Multisegment(Segment(s.begin + offset, s.end + offset) for s in self.segments)

    def mirrored(self) -> Multisegment:
        """Reflect every segment; ends become begins and vice versa."""
        return Multisegment(s.mirrored() for s in self.segments)

    def replace_at(self, index: int, new: Segment | None) -> Multisegment:
        """Copy with the segment at ``index`` replaced (or dropped if None)."""
        rest = list(self.segments)
        if new is None:
            del rest[index]
        else:
            rest[index] = new
        return Multisegment(rest)

    def sort_key(self) -> tuple:
        return tuple((s.begin, s.end) for s in self.segments)


@dataclass(frozen=True, slots=True)
class WeightFunction:
    """Finitely supported map k -> number of segments covering k."""

    counts: tuple[tuple[int, int], ...]

    def __init__(self, counts: Iterable[tuple[int, int]]) -> None:
        cleaned = tuple(sorted((k, c) for k, c in counts if c))
        if any(c < 0 for _, c in cleaned):
            raise ValueError("weight function values must be nonnegative")
        object.__setattr__(self, "counts", cleaned)

    def __getitem__(self, k: int) -> int:
        for key, c in self.counts:
            if key == k:
                return c
        return 0

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)


@cache
def weight(a: Multisegment) -> WeightFunction:
    """Pointwise count of segments of ``a`` covering each integer.

    >>> weight(Multisegment.from_pairs([(1, 1), (2, 2), (2, 2), (3, 3)])).as_dict()
    {1: 1, 2: 2, 3: 1}
    """
    counts: dict[int, int] = {}
    for s in a.segments:
        for k in range(s.begin, s.end + 1):
            counts[k] = counts.get(k, 0) + 1
    return WeightFunction(counts.items())


def elementary_operation(a: Multisegment, i: int, j: int) -> Multisegment:
    """Replace the linked segments at positions ``i`` and ``j`` by their
    union and (if nonempty) intersection.  Degree and weight are preserved.
    """
    d1, d2 = a.segments[i], a.segments[j]
    if not linked(d1, d2):
        raise DomainError(f"segments {d1} and {d2} are not linked")
    union = segment_union(d1, d2)
    assert union is not None
    inter = segment_intersection(d1, d2)
    rest = [s for t, s in enumerate(a.segments) if t not in (i, j)]
    rest.append(union)
    if inter is not None:
        rest.append(inter)
    return Multisegment(rest)


def is_regular(a: Multisegment) -> bool:
    """All begins distinct and all ends distinct."""
    begins = a.begins()
    ends = a.ends()
    return len(set(begins)) == len(begins) and len(set(ends)) == len(ends)


def is_symmetric(a: Multisegment) -> bool:
    """Regular, and every pair of segments overlaps (max begin <= min end)."""
    if not a.segments:
        return True
    if not is_regular(a):
        return False
    return max(a.begins()) <= min(a.ends())
