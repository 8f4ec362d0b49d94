"""Multiplicities of simple constituents in induced products.

``mult(b, a)`` is computed by growing ``a`` into a symmetric multisegment,
lifting ``b`` alongside, reading both off as permutations and evaluating a
Kazhdan-Lusztig polynomial at 1.  For symmetric ``a`` the permutation
reading applies directly; both evaluation routes are kept and compared,
making the pipeline self-auditing.

The relation type machinery transports whole posets between multisegments
whose segments interact identically, leaving every multiplicity unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Multisegment, Segment, is_symmetric, linked, segment_intersection, weight
from .errors import DomainError, InvariantError
from .poset import DEFAULT_MAX_POSET_SIZE, generate_poset, leq_rank
from .symmetrization import SymmetrizationData, lift, symmetrize
from .weyl import Permutation, kl_polynomial, phi_inverse


class RelationType(Enum):
    COVERS = "covers"
    LINKED_NOT_JUXTAPOSED = "linked_not_juxtaposed"
    JUXTAPOSED = "juxtaposed"
    UNRELATED = "unrelated"


def relation_type(d1: Segment, d2: Segment) -> RelationType:
    """Classify how two segments interact; exactly one case applies.

    Containment in either direction counts as covering, so the result does
    not depend on the order of the arguments.
    """
    if d1.covers(d2) or d2.covers(d1):
        return RelationType.COVERS
    if linked(d1, d2):
        if segment_intersection(d1, d2) is None:
            return RelationType.JUXTAPOSED
        return RelationType.LINKED_NOT_JUXTAPOSED
    return RelationType.UNRELATED


@dataclass(frozen=True)
class RelationTypeMap:
    """Order- and relation-type-preserving alignment of two multisegments,
    with the induced value maps on ends and begins.
    """

    source: Multisegment
    target: Multisegment
    end_map: tuple[tuple[int, int], ...]
    begin_map: tuple[tuple[int, int], ...]

    def map_end(self, value: int) -> int:
        return dict(self.end_map)[value]

    def map_begin(self, value: int) -> int:
        return dict(self.begin_map)[value]


def _aligned(ms: Multisegment) -> list[Segment]:
    # Ascending in the segment order: by end, then by descending begin.
    return sorted(ms.segments, key=lambda s: (s.end, -s.begin))


def _value_map(pairs: list[tuple[int, int]]) -> dict[int, int] | None:
    """Build a map from aligned value pairs; fails unless it is single
    valued and strictly increasing (hence an order isomorphism of the two
    value multisets).
    """
    out: dict[int, int] = {}
    for x, y in pairs:
        if out.get(x, y) != y:
            return None
        out[x] = y
    keys = sorted(out)
    values = [out[k] for k in keys]
    if any(v2 <= v1 for v1, v2 in zip(values, values[1:])):
        return None
    return out


def same_relation_type(a: Multisegment, a2: Multisegment) -> RelationTypeMap | None:
    """Alignment of the two canonically sorted segment lists, verified to
    preserve relation types and to induce consistent end/begin value maps.
    Equal segments are interchangeable, so only the canonical alignment
    needs to be tested.
    """
    if len(a) != len(a2):
        return None
    left = _aligned(a)
    right = _aligned(a2)
    end_map = _value_map([(s.end, t.end) for s, t in zip(left, right)])
    begin_map = _value_map([(s.begin, t.begin) for s, t in zip(left, right)])
    if end_map is None or begin_map is None:
        return None
    for i in range(len(left)):
        for j in range(i + 1, len(left)):
            if relation_type(left[i], left[j]) != relation_type(right[i], right[j]):
                return None
    return RelationTypeMap(
        source=a,
        target=a2,
        end_map=tuple(sorted(end_map.items())),
        begin_map=tuple(sorted(begin_map.items())),
    )


def xi_transport(mapping: RelationTypeMap, b: Multisegment) -> Multisegment:
    """Transport an element of the source poset along the relation-type
    alignment; a poset bijection onto the target's poset.
    """
    if not leq_rank(b, mapping.source):
        raise DomainError("multisegment is not below the map's source")
    begin_map = dict(mapping.begin_map)
    end_map = dict(mapping.end_map)
    return Multisegment(
        Segment(begin_map[s.begin], end_map[s.end]) for s in b.segments
    )


def standard_base(sym: Multisegment) -> Multisegment:
    """Symmetric base pairing the sorted begins with the sorted ends; its
    poset contains every multisegment with those begins and ends.
    """
    if not is_symmetric(sym):
        raise DomainError("base construction needs a symmetric multisegment")
    begins = sorted(sym.begins())
    ends = sorted(sym.ends())
    return Multisegment(Segment(b, e) for b, e in zip(begins, ends))


def _kl_value(base: Multisegment, upper: Multisegment, lower: Multisegment) -> int:
    w: Permutation = phi_inverse(base, upper)
    v: Permutation = phi_inverse(base, lower)
    return kl_polynomial(w, v).evaluate(1)


def mult(
    b: Multisegment, a: Multisegment, max_size: int = DEFAULT_MAX_POSET_SIZE
) -> int:
    """Multiplicity of the simple object labeled ``b`` in the induced
    product labeled ``a``; zero unless ``b`` is below ``a``.
    """
    if weight(b) != weight(a) or not leq_rank(b, a):
        return 0
    if b == a:
        return 1
    if is_symmetric(a):
        base = standard_base(a)
        direct = _kl_value(base, a, b)
        audited = _mult_via_pipeline(b, a, max_size)
        if direct != audited:
            raise InvariantError(
                f"evaluation routes disagree: {direct} != {audited}"
            )
        return direct
    return _mult_via_pipeline(b, a, max_size)


def _mult_via_pipeline(b: Multisegment, a: Multisegment, max_size: int) -> int:
    data = symmetrize(a)
    b_sym = lift(data, b, max_size=max_size)
    base = standard_base(data.symmetric)
    return _kl_value(base, data.symmetric, b_sym)


_MATRIX_CACHE: dict[tuple[Multisegment, int], dict[Multisegment, int]] = {}


def mult_matrix(
    a: Multisegment, max_size: int = DEFAULT_MAX_POSET_SIZE
) -> dict[Multisegment, int]:
    """Multiplicities of every element below ``a``; all values are positive
    and the diagonal entry is 1.
    """
    key = (a, max_size)
    cached = _MATRIX_CACHE.get(key)
    if cached is not None:
        return cached
    poset = generate_poset(a, max_size=max_size)
    out: dict[Multisegment, int] = {}
    if len(poset) == 1:
        out[a] = 1
    elif is_symmetric(a):
        base = standard_base(a)
        for b in poset.elements:
            out[b] = _kl_value(base, a, b)
    else:
        data: SymmetrizationData = symmetrize(a)
        base = standard_base(data.symmetric)
        for b in poset.elements:
            out[b] = _kl_value(base, data.symmetric, lift(data, b, max_size=max_size))
    if out[a] != 1 or any(m < 1 for m in out.values()):
        raise InvariantError("multiplicity matrix must be unitriangular positive")
    _MATRIX_CACHE[key] = out
    return out
