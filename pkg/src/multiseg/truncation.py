"""Truncation operators, descent sets and the truncation bijections.

End truncation at ``k`` shortens every segment ending exactly at ``k`` by
one (deleting singletons); begin truncation mirrors this on beginnings.
Restricted to the descent set of a root multisegment, truncation is a
bijection onto the poset of the truncated root, with an explicitly
computable inverse; iterating it over paths of indices is the engine of
the symmetrization pipeline.

Begin-side operations are obtained from end-side ones by reflecting all
segments through 0, which swaps the two kinds of truncation.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Multisegment, Segment, linked, weight
from .errors import DomainError, InvariantError
from .poset import DEFAULT_MAX_POSET_SIZE, generate_poset, leq_rank, minimal_element

END = "end"
BEGIN = "begin"


def truncate_end(a: Multisegment, k: int) -> Multisegment:
    """Shorten every segment ending exactly at ``k``; drop ``[k,k]``."""
    out: list[Segment] = []
    for s in a.segments:
        if s.end == k:
            shrunk = s.drop_end()
            if shrunk is not None:
                out.append(shrunk)
        else:
            out.append(s)
    return Multisegment(out)


def truncate_begin(a: Multisegment, k: int) -> Multisegment:
    """Shorten every segment beginning exactly at ``k``; drop ``[k,k]``."""
    out: list[Segment] = []
    for s in a.segments:
        if s.begin == k:
            shrunk = s.drop_begin()
            if shrunk is not None:
                out.append(shrunk)
        else:
            out.append(s)
    return Multisegment(out)


def _truncate(a: Multisegment, k: int, side: str) -> Multisegment:
    return truncate_end(a, k) if side == END else truncate_begin(a, k)


@dataclass(frozen=True, slots=True)
class DescentPath:
    """Ordered truncation indices on one side.

    For a single segment ``[k, l]`` the end-side steps are ``k, k+1, ..., l``
    and the begin-side steps are ``l, l-1, ..., k``.  For a multisegment the
    segments are processed so that the most recently "grown" interval is
    undone first: ends descending on the end side, begins ascending on the
    begin side.
    """

    side: str
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.side not in (END, BEGIN):
            raise ValueError(f"side must be {END!r} or {BEGIN!r}")

    @staticmethod
    def from_segment(seg: Segment, side: str) -> DescentPath:
        if side == END:
            return DescentPath(END, tuple(range(seg.begin, seg.end + 1)))
        return DescentPath(BEGIN, tuple(range(seg.end, seg.begin - 1, -1)))

    @staticmethod
    def from_multisegment(c: Multisegment, side: str) -> DescentPath:
        if side == END:
            ordered = sorted(c.segments, key=lambda s: (-s.end, s.begin))
        else:
            ordered = sorted(c.segments, key=lambda s: (s.begin, -s.end))
        steps: list[int] = []
        for seg in ordered:
            steps.extend(DescentPath.from_segment(seg, side).steps)
        return DescentPath(side, tuple(steps))


def truncate_path(a: Multisegment, path: DescentPath) -> Multisegment:
    current = a
    for k in path.steps:
        current = _truncate(current, k, path.side)
    return current


def hypothesis_end(b: Multisegment, a: Multisegment, k: int) -> bool:
    """Degree of the end-truncation matches the root's, and ``b`` has no
    linked pair of segments ending at ``k-1`` and ``k``.  Membership of
    ``b`` in the poset of ``a`` is the caller's responsibility.
    """
    if truncate_end(b, k).degree != truncate_end(a, k).degree:
        return False
    enders = [s for s in b.segments if s.end == k]
    preceders = [s for s in b.segments if s.end == k - 1]
    return not any(linked(s, t) for s in enders for t in preceders)


def hypothesis_begin(b: Multisegment, a: Multisegment, k: int) -> bool:
    """Mirror of :func:`hypothesis_end`: no linked pair beginning at ``k``
    and ``k+1``, with matching begin-truncation degrees.
    """
    return hypothesis_end(b.mirrored(), a.mirrored(), -k)


def _hypothesis(b: Multisegment, a: Multisegment, k: int, side: str) -> bool:
    return hypothesis_end(b, a, k) if side == END else hypothesis_begin(b, a, k)


def descent_set(
    a: Multisegment,
    k: int,
    side: str = END,
    max_size: int = DEFAULT_MAX_POSET_SIZE,
) -> set[Multisegment]:
    """Elements of the poset of ``a`` on which truncation at ``k`` is a
    bijection: same truncated degree as ``a`` and no obstructing linked pair.
    """
    poset = generate_poset(a, max_size=max_size)
    return {c for c in poset.elements if _hypothesis(c, a, k, side)}


def descent_set_path(
    a: Multisegment,
    path: DescentPath,
    max_size: int = DEFAULT_MAX_POSET_SIZE,
) -> set[Multisegment]:
    """Iterated descent set: the hypothesis must hold at every step, with
    the root truncating alongside the candidate.
    """
    poset = generate_poset(a, max_size=max_size)
    out: set[Multisegment] = set()
    for c in poset.elements:
        if in_descent_path(c, a, path):
            out.add(c)
    return out


def in_descent_path(c: Multisegment, a: Multisegment, path: DescentPath) -> bool:
    """Check the stepwise hypotheses for ``c`` along ``path`` under root
    ``a``; assumes ``c`` is in the poset of ``a``.
    """
    root, x = a, c
    for k in path.steps:
        if not _hypothesis(x, root, k, path.side):
            return False
        root = _truncate(root, k, path.side)
        x = _truncate(x, k, path.side)
    return True


def psi_k(c: Multisegment, k: int, side: str = END) -> Multisegment:
    """The truncation map; bijective when restricted to a descent set."""
    return _truncate(c, k, side)


def psi_path(c: Multisegment, path: DescentPath) -> Multisegment:
    return truncate_path(c, path)


def psi_k_inverse(
    a: Multisegment, k: int, d: Multisegment, side: str = END
) -> Multisegment:
    """The unique element of the descent set of ``a`` at ``k`` that
    truncates to ``d``.

    Candidates are built from ``d`` by re-extending segments that end at
    ``k-1`` (begin at ``k+1`` on the begin side) and adding singletons
    ``[k]``, so that exactly as many segments hit ``k`` as in ``a``; the
    survivor of the membership and hypothesis filters is required to be
    unique.
    """
    if side == BEGIN:
        lifted = psi_k_inverse(a.mirrored(), -k, d.mirrored(), END)
        return lifted.mirrored()
    if not leq_rank(d, truncate_end(a, k)):
        raise DomainError("target is not below the truncated root")
    ell = a.count_end(k)
    positions = [i for i, s in enumerate(d.segments) if s.end == k - 1]
    survivors: set[Multisegment] = set()
    for j in range(min(ell, len(positions)) + 1):
        for combo in combinations(positions, j):
            segs = list(d.segments)
            for i in combo:
                segs[i] = segs[i].extend_end()
            segs.extend(Segment(k, k) for _ in range(ell - j))
            candidate = Multisegment(segs)
            if leq_rank(candidate, a) and hypothesis_end(candidate, a, k):
                survivors.add(candidate)
    if len(survivors) != 1:
        raise InvariantError(
            f"expected a unique preimage at k={k}, found {len(survivors)}"
        )
    return survivors.pop()


def psi_path_inverse(a: Multisegment, path: DescentPath, d: Multisegment) -> Multisegment:
    """Invert the iterated truncation step by step, walking the roots
    forward and the preimages backward.
    """
    roots = [a]
    for k in path.steps:
        roots.append(_truncate(roots[-1], k, path.side))
    if not leq_rank(d, roots[-1]):
        raise DomainError("target is not below the fully truncated root")
    x = d
    for i in range(len(path.steps) - 1, -1, -1):
        x = psi_k_inverse(roots[i], path.steps[i], x, path.side)
    return x


def minimal_lift(a: Multisegment, k: int, side: str = END) -> Multisegment:
    """Explicit element of the descent set of ``a`` at ``k`` that truncates
    to the minimal element below the truncated root.

    The construction branches on how the weights at ``k-1`` and ``k``
    compare: surplus at ``k-1`` re-extends the longest segments ending
    there; a deficit adds singletons ``[k]``.
    """
    if side == BEGIN:
        return minimal_lift(a.mirrored(), -k, END).mirrored()
    amin = minimal_element(truncate_end(a, k))
    ell = a.count_end(k)
    w = weight(a)
    phi_prev, phi_k = w[k - 1], w[k]
    # Canonical storage sorts equal-end segments by ascending begin, i.e.
    # longest first here.
    a0 = [s for s in amin.segments if s.end == k - 1]
    others = [s for s in amin.segments if s.end != k - 1]
    if phi_prev > phi_k:
        r = phi_prev - phi_k + ell
        _require(len(a0) == r, f"expected {r} segments ending at {k - 1}")
        c = Multisegment(
            others + [s.extend_end() for s in a0[:ell]] + a0[ell:]
        )
    elif phi_prev > phi_k - ell:
        r = phi_prev - phi_k + ell
        _require(len(a0) == r, f"expected {r} segments ending at {k - 1}")
        c = Multisegment(
            others
            + [s.extend_end() for s in a0]
            + [Segment(k, k) for _ in range(ell - r)]
        )
    else:
        _require(not a0, f"expected no segments ending at {k - 1}")
        c = Multisegment(list(amin.segments) + [Segment(k, k) for _ in range(ell)])
    _require(leq_rank(c, a), "lift fell outside the poset of the root")
    _require(hypothesis_end(c, a, k), "lift violates the truncation hypothesis")
    _require(truncate_end(c, k) == amin, "lift does not truncate to the minimum")
    return c


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantError(message)
