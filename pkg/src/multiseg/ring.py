"""Integer linear combinations of multisegments in two bases.

The product basis ("pi") multiplies by multiset union; the simple basis
("L") is related to it by the unitriangular multiplicity matrix, so the
change of basis is exact integer back-substitution.  Partial derivative
operators act as algebra morphisms on the product basis, optionally
shortening each segment at a prescribed end or begin value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import Multisegment
from .errors import DomainError, InvariantError
from .multiplicity import mult_matrix
from .poset import DEFAULT_MAX_POSET_SIZE
from .truncation import BEGIN, END, descent_set, truncate_end

PI = "pi"
L = "L"


@dataclass(frozen=True)
class RingElement:
    """Finite integer linear combination of multisegments tagged with a
    basis; zero coefficients are never stored.  The empty multisegment is
    the ring unit.
    """

    basis: str
    terms: tuple[tuple[Multisegment, int], ...]

    def __post_init__(self) -> None:
        if self.basis not in (PI, L):
            raise ValueError(f"unknown basis {self.basis!r}")

    @staticmethod
    def from_terms(basis: str, terms: Mapping[Multisegment, int] | Iterable[tuple[Multisegment, int]]) -> RingElement:
        acc: dict[Multisegment, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for ms, c in items:
            if c:
                acc[ms] = acc.get(ms, 0) + c
        cleaned = tuple(sorted(((m, c) for m, c in acc.items() if c), key=lambda t: t[0].sort_key()))
        return RingElement(basis, cleaned)

    def as_dict(self) -> dict[Multisegment, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"coeff": c, "multisegment": m.to_json()} for m, c in self.terms
            ],
        }

    @staticmethod
    def from_json(data: object) -> RingElement:
        if not isinstance(data, dict) or data.get("basis") not in (PI, L):
            raise ValueError("ring element JSON needs basis 'pi' or 'L'")
        raw = data.get("terms")
        if not isinstance(raw, list):
            raise ValueError("ring element JSON needs a list of terms")
        terms = []
        for entry in raw:
            if not isinstance(entry, dict) or not isinstance(entry.get("coeff"), int):
                raise ValueError("each term needs an integer 'coeff' and a 'multisegment'")
            terms.append((Multisegment.from_json(entry.get("multisegment")), entry["coeff"]))
        return RingElement.from_terms(data["basis"], terms)


def pi_element(a: Multisegment, coeff: int = 1) -> RingElement:
    return RingElement.from_terms(PI, [(a, coeff)])


def l_element(a: Multisegment, coeff: int = 1) -> RingElement:
    return RingElement.from_terms(L, [(a, coeff)])


def unit(basis: str = PI) -> RingElement:
    return RingElement.from_terms(basis, [(Multisegment(), 1)])


def add(x: RingElement, y: RingElement) -> RingElement:
    if x.basis != y.basis:
        raise DomainError("cannot add elements in different bases")
    return RingElement.from_terms(x.basis, list(x.terms) + list(y.terms))


def product(x: RingElement, y: RingElement) -> RingElement:
    """Bilinear extension of multiset union; product-basis elements only."""
    if x.basis != PI or y.basis != PI:
        raise DomainError("product is defined on the product basis; convert first")
    acc: dict[Multisegment, int] = {}
    for m1, c1 in x.terms:
        for m2, c2 in y.terms:
            merged = Multisegment(m1.segments + m2.segments)
            acc[merged] = acc.get(merged, 0) + c1 * c2
    return RingElement.from_terms(PI, acc)


def _derive_basis_term(a: Multisegment, i: int, side: str) -> dict[Multisegment, int]:
    """Expand the product over segments of (segment + shortened segment),
    the shortening applying where the end (resp. begin) equals ``i``.
    A shortened singleton contributes the unit.
    """
    acc: dict[Multisegment, int] = {Multisegment(): 1}
    for s in a.segments:
        grown: dict[Multisegment, int] = {}
        hits = s.end == i if side == END else s.begin == i
        shorter = (s.drop_end() if side == END else s.drop_begin()) if hits else None
        for partial, c in acc.items():
            with_s = Multisegment(partial.segments + (s,))
            grown[with_s] = grown.get(with_s, 0) + c
            if hits:
                reduced = (
                    partial
                    if shorter is None
                    else Multisegment(partial.segments + (shorter,))
                )
                grown[reduced] = grown.get(reduced, 0) + c
        acc = grown
    return acc


def _derive(x: RingElement, i: int, side: str) -> RingElement:
    if x.basis != PI:
        raise DomainError("derivatives act on the product basis; convert first")
    acc: dict[Multisegment, int] = {}
    for ms, c in x.terms:
        for out, k in _derive_basis_term(ms, i, side).items():
            acc[out] = acc.get(out, 0) + c * k
    return RingElement.from_terms(PI, acc)


def derivative_end(x: RingElement, i: int) -> RingElement:
    """Algebra morphism sending each segment ending at ``i`` to itself plus
    its end-shortening.

    >>> from .core import Multisegment
    >>> derivative_end(pi_element(Multisegment.from_pairs([(1, 2)])), 2).to_json()["terms"]
    [{'coeff': 1, 'multisegment': {'segments': [[1, 1]]}}, {'coeff': 1, 'multisegment': {'segments': [[1, 2]]}}]
    """
    return _derive(x, i, END)


def derivative_begin(x: RingElement, i: int) -> RingElement:
    return _derive(x, i, BEGIN)


def derivative_composite(x: RingElement, c: Multisegment, side: str = END) -> RingElement:
    """Compose single-index derivatives over a multisegment of indices.

    On the end side the segments act from the largest downward, indices
    ascending inside each segment; the begin side mirrors this.
    """
    ordered = sorted(c.segments, key=lambda s: (s.end, -s.begin))
    out = x
    if side == END:
        for seg in reversed(ordered):
            for k in range(seg.begin, seg.end + 1):
                out = _derive(out, k, END)
    else:
        for seg in ordered:
            for k in range(seg.end, seg.begin - 1, -1):
                out = _derive(out, k, BEGIN)
    return out


_PI_EXPANSION: dict[Multisegment, dict[Multisegment, int]] = {}


def _pi_expansion_of_l(a: Multisegment, max_size: int) -> dict[Multisegment, int]:
    """Product-basis expansion of a simple-basis generator, by exact
    back-substitution through the unitriangular multiplicity matrix.
    """
    cached = _PI_EXPANSION.get(a)
    if cached is not None:
        return cached
    acc: dict[Multisegment, int] = {a: 1}
    for b, m in mult_matrix(a, max_size=max_size).items():
        if b == a:
            continue
        for ms, c in _pi_expansion_of_l(b, max_size).items():
            acc[ms] = acc.get(ms, 0) - m * c
    acc = {ms: c for ms, c in acc.items() if c}
    _PI_EXPANSION[a] = acc
    return acc


def to_l_basis(x: RingElement, max_size: int = DEFAULT_MAX_POSET_SIZE) -> RingElement:
    if x.basis == L:
        return x
    acc: dict[Multisegment, int] = {}
    for ms, c in x.terms:
        for b, m in mult_matrix(ms, max_size=max_size).items():
            acc[b] = acc.get(b, 0) + c * m
    return RingElement.from_terms(L, acc)


def to_pi_basis(x: RingElement, max_size: int = DEFAULT_MAX_POSET_SIZE) -> RingElement:
    if x.basis == PI:
        return x
    acc: dict[Multisegment, int] = {}
    for ms, c in x.terms:
        for b, k in _pi_expansion_of_l(ms, max_size).items():
            acc[b] = acc.get(b, 0) + c * k
    return RingElement.from_terms(PI, acc)


def check_eq2(a: Multisegment, k: int, max_size: int = DEFAULT_MAX_POSET_SIZE) -> bool:
    """The truncated product expands over the descent set at ``k`` with the
    original multiplicities; evaluated exactly in the simple basis.
    """
    lhs = to_l_basis(pi_element(truncate_end(a, k)), max_size=max_size)
    matrix = mult_matrix(a, max_size=max_size)
    rhs_terms: dict[Multisegment, int] = {}
    for c in descent_set(a, k, side=END, max_size=max_size):
        key = truncate_end(c, k)
        rhs_terms[key] = rhs_terms.get(key, 0) + matrix[c]
    return lhs.as_dict() == rhs_terms


def derivative_l(
    a: Multisegment, i: int, side: str = END, max_size: int = DEFAULT_MAX_POSET_SIZE
) -> RingElement:
    """Derivative of a simple-basis generator, expanded back into the
    simple basis; coefficients are required to be nonnegative.
    """
    expanded = to_pi_basis(l_element(a), max_size=max_size)
    derived = _derive(expanded, i, side)
    out = to_l_basis(derived, max_size=max_size)
    negative = [m for m, c in out.terms if c < 0]
    if negative:
        raise InvariantError(
            f"negative coefficient in derivative of {a.to_json()} at {i}"
        )
    return out
