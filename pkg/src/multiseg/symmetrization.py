"""Symmetrization of multisegments.

Any multisegment can be grown, by repeatedly extending segments one step
at a time, into a symmetric one whose poset is a copy of a symmetric
group; the growth record is a triple of descent data whose iterated
truncations recover the original.  Stage one separates duplicated ends,
stage two duplicated begins (making the multisegment regular), stage
three raises low ends until every pair of segments overlaps.  Every stage
output is validated against its defining invariants rather than trusted:
the round trip and the stepwise truncation hypotheses are asserted.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .core import Multisegment, Segment, is_regular, is_symmetric
from .errors import DomainError, InvariantError
from .poset import DEFAULT_MAX_POSET_SIZE, generate_poset, leq_rank
from .truncation import BEGIN, END, DescentPath, _hypothesis, _truncate, truncate_path


@dataclass(frozen=True, slots=True)
class SymmetrizationData:
    """A symmetric multisegment together with the growth record needed to
    truncate back down to the original.

    Recovery order undoes the stages last-first: end truncation along
    ``c3``, then begin truncation along ``c2``, then end truncation along
    ``c1``.
    """

    original: Multisegment
    ordinary: Multisegment
    symmetric: Multisegment
    c1: Multisegment
    c2: Multisegment
    c3: Multisegment

    def recovery_paths(self) -> tuple[DescentPath, DescentPath, DescentPath]:
        return (
            DescentPath.from_multisegment(self.c3, END),
            DescentPath.from_multisegment(self.c2, BEGIN),
            DescentPath.from_multisegment(self.c1, END),
        )

    def recover(self, x: Multisegment) -> Multisegment:
        for path in self.recovery_paths():
            x = truncate_path(x, path)
        return x


def _first_gap_above(values: set[int], start: int) -> int:
    k = start + 1
    while k in values:
        k += 1
    return k


def _spread_ends(a: Multisegment) -> tuple[Multisegment, list[Segment]]:
    """Extend segments rightward until all ends are distinct, recording one
    interval of newly created end values per pass.
    """
    current = a
    recorded: list[Segment] = []
    while True:
        ends = list(current.ends())
        duplicated = sorted(e for e in set(ends) if ends.count(e) > 1)
        if not duplicated:
            return current, recorded
        e_dup = duplicated[0]
        end_set = set(ends)
        ell = _first_gap_above(end_set, e_dup)
        segs = list(current.segments)
        # The longest duplicate is extended so that it covers, rather than
        # links to, the duplicates left behind.
        candidates = [i for i, s in enumerate(segs) if s.end == e_dup]
        designated = min(candidates, key=lambda i: segs[i].begin)
        grown = [
            s.extend_end() if (i == designated or e_dup < s.end <= ell) else s
            for i, s in enumerate(segs)
        ]
        recorded.append(Segment(e_dup + 1, ell))
        current = Multisegment(grown)


def ordinarize(a: Multisegment) -> tuple[Multisegment, Multisegment, Multisegment]:
    """Grow ``a`` into a regular multisegment ``b``; returns ``(b, c1, c2)``
    where end truncation along ``c1`` after begin truncation along ``c2``
    recovers ``a``.
    """
    if not a:
        raise DomainError("cannot ordinarize the empty multisegment")
    after_ends, rec_end = _spread_ends(a)
    mirrored, rec_begin_mirrored = _spread_ends(after_ends.mirrored())
    ordinary = mirrored.mirrored()
    c1 = Multisegment(rec_end)
    c2 = Multisegment(s.mirrored() for s in rec_begin_mirrored)
    _check(is_regular(ordinary), "ordinarization did not produce a regular multisegment")
    _check(
        _recover(ordinary, [(c2, BEGIN), (c1, END)]) == a,
        "ordinarization round trip failed",
    )
    _check(
        _self_member(ordinary, [(c2, BEGIN), (c1, END)]),
        "ordinary multisegment violates its own descent hypotheses",
    )
    return ordinary, c1, c2


def symmetrize_ordinary(b: Multisegment) -> tuple[Multisegment, Multisegment]:
    """Raise the low ends of a regular multisegment until every begin is
    at most every end; returns ``(b_sym, c3)`` with
    ``truncate_path(b_sym, end path of c3) == b``.
    """
    if not is_regular(b):
        raise DomainError("symmetrization stage needs a regular multisegment")
    current = b
    recorded: list[Segment] = []
    while current and max(current.begins()) > min(current.ends()):
        e_star = min(current.ends())
        end_set = set(current.ends())
        ell = _first_gap_above(end_set, e_star)
        # Shift the whole consecutive run of ends starting at the minimum;
        # distinctness of ends is preserved because ell is unoccupied.
        current = Multisegment(
            s.extend_end() if e_star <= s.end < ell else s for s in current.segments
        )
        recorded.append(Segment(e_star + 1, ell))
    c3 = Multisegment(recorded)
    _check(is_symmetric(current), "stage produced a non-symmetric multisegment")
    _check(len(current) == len(b), "stage changed the number of segments")
    _check(
        _recover(current, [(c3, END)]) == b,
        "symmetrization round trip failed",
    )
    _check(
        _self_member(current, [(c3, END)]),
        "symmetric multisegment violates its own descent hypotheses",
    )
    return current, c3


def symmetrize(a: Multisegment) -> SymmetrizationData:
    """Full pipeline: ordinarize, then symmetrize, with all recovery and
    membership invariants asserted.
    """
    if not a:
        raise DomainError("cannot symmetrize the empty multisegment")
    ordinary, c1, c2 = ordinarize(a)
    symmetric, c3 = symmetrize_ordinary(ordinary)
    data = SymmetrizationData(
        original=a, ordinary=ordinary, symmetric=symmetric, c1=c1, c2=c2, c3=c3
    )
    _check(data.recover(symmetric) == a, "pipeline round trip failed")
    _check(
        _self_member(symmetric, _stage_list(data)),
        "pipeline output violates its own descent hypotheses",
    )
    return data


def _stage_list(data: SymmetrizationData) -> list[tuple[Multisegment, str]]:
    return [(data.c3, END), (data.c2, BEGIN), (data.c1, END)]


def _recover(x: Multisegment, stages: list[tuple[Multisegment, str]]) -> Multisegment:
    for c, side in stages:
        x = truncate_path(x, DescentPath.from_multisegment(c, side))
    return x


def _walk_member(
    x: Multisegment, root: Multisegment, stages: list[tuple[Multisegment, str]]
) -> tuple[bool, Multisegment]:
    """Check the stepwise truncation hypotheses for ``x`` under ``root``
    along all stages; returns (membership, final truncation of ``x``).
    """
    for c, side in stages:
        for k in DescentPath.from_multisegment(c, side).steps:
            if not _hypothesis(x, root, k, side):
                return False, x
            root = _truncate(root, k, side)
            x = _truncate(x, k, side)
    return True, x


def _self_member(root: Multisegment, stages: list[tuple[Multisegment, str]]) -> bool:
    ok, _ = _walk_member(root, root, stages)
    return ok


@cache
def _lift_table(
    data: SymmetrizationData, max_size: int
) -> dict[Multisegment, Multisegment]:
    """Bijection from the poset of the original onto the members of the
    symmetric poset satisfying every stepwise hypothesis.
    """
    stages = _stage_list(data)
    sym_poset = generate_poset(data.symmetric, max_size=max_size)
    table: dict[Multisegment, Multisegment] = {}
    for x in sym_poset.elements:
        ok, image = _walk_member(x, data.symmetric, stages)
        if not ok:
            continue
        if image in table:
            raise InvariantError(f"two lifts truncate to {image.to_json()}")
        table[image] = x
    expected = generate_poset(data.original, max_size=max_size).elements
    if set(table) != expected:
        raise InvariantError("lift is not a bijection onto the original poset")
    return table


def lift(
    data: SymmetrizationData,
    b: Multisegment,
    max_size: int = DEFAULT_MAX_POSET_SIZE,
) -> Multisegment:
    """The unique multisegment in the symmetric poset whose descent path
    truncates to ``b``.  Multiplicities are preserved along the lift.
    """
    if not leq_rank(b, data.original):
        raise DomainError("multisegment is not below the original")
    return _lift_table(data, max_size)[b]


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantError(message)
