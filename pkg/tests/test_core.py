import pytest
from conftest import all_multisegments

from multiseg import (
    DomainError,
    Multisegment,
    Segment,
    elementary_operation,
    is_regular,
    is_symmetric,
    linked,
    precedes,
    weight,
)
from multiseg.core import segment_intersection, segment_union


def ms(*pairs):
    return Multisegment.from_pairs(pairs)


def test_segment_rejects_empty_interval():
    with pytest.raises(ValueError):
        Segment(3, 2)


def test_precedes_examples():
    assert precedes(Segment(1, 2), Segment(2, 3))
    assert precedes(Segment(2, 3), Segment(1, 3))
    assert not precedes(Segment(1, 2), Segment(1, 2))


def test_precedes_is_a_strict_total_order_on_distinct_segments():
    segs = [Segment(i, j) for i in range(-1, 3) for j in range(i, 3)]
    for s in segs:
        for t in segs:
            if s == t:
                assert not precedes(s, t)
            else:
                assert precedes(s, t) != precedes(t, s)


def test_linked_examples():
    assert linked(Segment(1, 3), Segment(2, 4))
    assert linked(Segment(1, 2), Segment(3, 4))  # juxtaposed
    assert not linked(Segment(1, 4), Segment(2, 3))  # containment
    assert not linked(Segment(1, 1), Segment(1, 1))
    assert not linked(Segment(1, 1), Segment(3, 3))


def test_segment_union_intersection():
    assert segment_union(Segment(1, 2), Segment(4, 5)) is None
    assert segment_union(Segment(1, 2), Segment(3, 4)) == Segment(1, 4)
    assert segment_intersection(Segment(1, 2), Segment(3, 4)) is None
    assert segment_intersection(Segment(1, 3), Segment(2, 4)) == Segment(2, 3)


def test_elementary_operation_examples():
    assert elementary_operation(ms((1, 3), (2, 4)), 0, 1) == ms((1, 4), (2, 3))
    assert elementary_operation(ms((1, 1), (2, 2)), 0, 1) == ms((1, 2))
    a = ms((1, 2), (2, 3), (5, 5))
    i = a.segments.index(Segment(1, 2))
    j = a.segments.index(Segment(2, 3))
    assert elementary_operation(a, i, j) == ms((1, 3), (2, 2), (5, 5))


def test_elementary_operation_rejects_unlinked():
    with pytest.raises(DomainError):
        elementary_operation(ms((1, 4), (2, 3)), 0, 1)


def test_weight_examples():
    assert weight(ms((1, 1), (2, 2), (2, 2), (3, 3))).as_dict() == {1: 1, 2: 2, 3: 1}
    assert weight(Multisegment()).as_dict() == {}
    assert weight(ms((0, 1), (0, 1))).as_dict() == {0: 2, 1: 2}
    assert weight(ms((1, 3))).total == 3


def test_regular_and_symmetric_examples():
    assert is_regular(ms((1, 2), (2, 4), (4, 5)))
    assert is_symmetric(ms((1, 4), (2, 5), (3, 6)))
    assert is_regular(ms((1, 1), (2, 2)))
    assert not is_symmetric(ms((1, 1), (2, 2)))
    assert is_regular(Multisegment()) and is_symmetric(Multisegment())


def test_canonical_order_deterministic_and_idempotent():
    a = ms((1, 1), (3, 3), (2, 2), (2, 2))
    b = Multisegment(reversed(a.segments))
    assert a == b and hash(a) == hash(b)
    assert Multisegment(a.segments) == a
    # storage order: ends descending, ties by ascending begin
    c = ms((2, 3), (1, 3), (1, 1))
    assert [s.as_pair() for s in c.segments] == [[1, 3], [2, 3], [1, 1]]


def test_json_round_trip():
    a = ms((0, 1), (1, 3), (2, 2), (3, 4))
    assert Multisegment.from_json(a.to_json()) == a
    assert Multisegment.from_json({"segments": []}) == Multisegment()
    with pytest.raises(ValueError):
        Multisegment.from_json({"segs": []})
    with pytest.raises(ValueError):
        Multisegment.from_json({"segments": [[1]]})


def test_operation_invariants_small_exhaustive():
    """Degree/weight preservation, regularity heredity, and boundary
    sub-multisets under every elementary operation, degree <= 7."""
    for a in all_multisegments(7, lo=0, hi=3, anchored=False):
        ends = a.ends()
        begins = a.begins()
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                if not linked(a.segments[i], a.segments[j]):
                    continue
                b = elementary_operation(a, i, j)
                assert b.degree == a.degree
                assert weight(b) == weight(a)
                if is_regular(a):
                    assert is_regular(b)
                for value in b.ends():
                    assert b.ends().count(value) <= ends.count(value)
                for value in b.begins():
                    assert b.begins().count(value) <= begins.count(value)


def test_mirror_involution():
    for a in all_multisegments(5, lo=0, hi=3, anchored=False)[:400]:
        assert a.mirrored().mirrored() == a
        assert a.mirrored().degree == a.degree
