"""Symmetric-group combinatorics: Bruhat order, Kazhdan-Lusztig
polynomials, and the dictionary between permutations and the poset of a
symmetric multisegment.

Permutations are tuples in one-line notation with values ``1..n``, following
the usual convention that ``w[i-1]`` is the image of ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations as _itertools_permutations

from .core import Multisegment, Segment, is_symmetric
from .errors import DomainError, InvariantError

Permutation = tuple[int, ...]


def perm_from_string(text: str) -> Permutation:
    """Parse ``"1324"`` or ``"3,4,1,2"`` into one-line notation."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    try:
        w = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"not a permutation: {text!r}") from exc
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..n: {text!r}")
    return w


def perm_identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def perm_inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def perm_length(w: Permutation) -> int:
    """Inversion count.

    >>> perm_length((3, 4, 1, 2))
    4
    """
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


@cache
def all_perms(n: int) -> tuple[Permutation, ...]:
    return tuple(_itertools_permutations(range(1, n + 1)))


def swap_values(w: Permutation, i: int) -> Permutation:
    """Left multiplication by the simple transposition exchanging values
    ``i`` and ``i+1``.
    """
    trade = {i: i + 1, i + 1: i}
    return tuple(trade.get(v, v) for v in w)


def left_descents(w: Permutation) -> list[int]:
    """Values ``i`` with ``i`` appearing after ``i+1`` in one-line notation."""
    pos = {v: p for p, v in enumerate(w)}
    return [i for i in range(1, len(w)) if pos[i] > pos[i + 1]]


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Bruhat comparison by the sorted-prefix (dot) criterion.

    >>> bruhat_leq((1, 3, 2, 4), (3, 4, 1, 2))
    True
    >>> bruhat_leq((3, 4, 1, 2), (1, 3, 2, 4))
    False
    """
    if len(v) != len(w):
        raise DomainError("permutations must have the same size")
    for i in range(1, len(v)):
        pv = sorted(v[:i])
        pw = sorted(w[:i])
        if any(x > y for x, y in zip(pv, pw)):
            return False
    return True


@dataclass(frozen=True, slots=True)
class KLPolynomial:
    """Polynomial in ``q`` with nonnegative integer coefficients; the zero
    polynomial has an empty coefficient tuple.
    """

    coefficients: tuple[int, ...]

    def evaluate(self, q: int = 1) -> int:
        return sum(c * q**i for i, c in enumerate(self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                q = "q" if i == 1 else f"q^{i}"
                parts.append(q if c == 1 else f"{c}*{q}")
        return " + ".join(parts)


_ZERO: tuple[int, ...] = ()


def _padd(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _psub(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return _padd(p, tuple(-c for c in q))


def _pshift(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    return ((0,) * k + p) if p else p


def _pscale(p: tuple[int, ...], c: int) -> tuple[int, ...]:
    if c == 0:
        return _ZERO
    return tuple(c * x for x in p)


def _compute_column(w: Permutation, s: int, get_column) -> dict[Permutation, tuple[int, ...]]:
    """One step of the Kazhdan-Lusztig recursion for the whole column of
    ``w``, using the left descent ``s`` and previously computed columns.
    """
    v = swap_values(w, s)
    col_v = get_column(v)
    len_w = perm_length(w)
    mu_terms: list[tuple[Permutation, int, dict]] = []
    for z, poly in col_v.items():
        len_z = perm_length(z)
        gap = len_w - 1 - len_z - 1
        if gap < 0 or gap % 2:
            continue
        if gap // 2 >= len(poly) or not poly[gap // 2]:
            continue
        pos = {val: p for p, val in enumerate(z)}
        if pos[s] > pos[s + 1]:  # s z < z
            mu_terms.append((z, poly[gap // 2], get_column(z)))
    column: dict[Permutation, tuple[int, ...]] = {}
    below_w = [x for x in all_perms(len(w)) if bruhat_leq(x, w)]
    descending = []
    for x in below_w:
        pos = {val: p for p, val in enumerate(x)}
        if pos[s] > pos[s + 1]:
            descending.append(x)
    for x in descending:
        sx = swap_values(x, s)
        p = _padd(col_v.get(sx, _ZERO), _pshift(col_v.get(x, _ZERO), 1))
        for z, mu, col_z in mu_terms:
            term = col_z.get(x, _ZERO)
            if term:
                p = _psub(p, _pshift(_pscale(term, mu), (len_w - perm_length(z)) // 2))
        column[x] = p
    for x in below_w:
        if x not in column:
            column[x] = column[swap_values(x, s)]
    return column


_COLUMNS: dict[Permutation, dict[Permutation, tuple[int, ...]]] = {}


def _kl_column(w: Permutation) -> dict[Permutation, tuple[int, ...]]:
    """All polynomials ``P(x, w)`` for ``x <= w``, memoized per ``w``."""
    cached = _COLUMNS.get(w)
    if cached is not None:
        return cached
    descents = left_descents(w)
    if not descents:
        column = {w: (1,)}
    else:
        column = _compute_column(w, descents[0], _kl_column)
    _COLUMNS[w] = column
    return column


def kl_polynomial(x: Permutation, w: Permutation) -> KLPolynomial:
    """Kazhdan-Lusztig polynomial ``P(x, w)``; zero when ``x`` is not below
    ``w`` in Bruhat order.

    >>> str(kl_polynomial((1, 3, 2, 4), (3, 4, 1, 2)))
    '1 + q'
    """
    if len(x) != len(w):
        raise DomainError("permutations must have the same size")
    if not bruhat_leq(x, w):
        return KLPolynomial(_ZERO)
    poly = _kl_column(w)[x]
    if not poly or poly[0] != 1 or any(c < 0 for c in poly):
        raise InvariantError(f"malformed KL polynomial {poly} for {x}, {w}")
    if x != w and 2 * (len(poly) - 1) > perm_length(w) - perm_length(x) - 1:
        raise InvariantError(f"KL degree bound violated for {x}, {w}: {poly}")
    return KLPolynomial(poly)


def _sorted_boundary(base: Multisegment) -> tuple[list[int], list[int]]:
    if not is_symmetric(base):
        raise DomainError("base multisegment must be symmetric")
    return sorted(base.begins()), sorted(base.ends())


def phi(base: Multisegment, w: Permutation) -> Multisegment:
    """Pair the i-th begin of the symmetric base with the w(i)-th end.

    >>> base = Multisegment.from_pairs([(1, 2), (2, 3)])
    >>> phi(base, (2, 1)).to_json()
    {'segments': [[1, 3], [2, 2]]}
    """
    begins, ends = _sorted_boundary(base)
    if len(w) != len(begins):
        raise DomainError("permutation size must match the number of segments")
    return Multisegment(Segment(begins[i], ends[w[i] - 1]) for i in range(len(w)))


def phi_inverse(base: Multisegment, b: Multisegment) -> Permutation:
    """The unique permutation pairing begins of ``base`` with ends of ``b``;
    requires ``b`` to share the begin and end multisets of ``base``.
    """
    begins, ends = _sorted_boundary(base)
    if sorted(b.begins()) != begins or sorted(b.ends()) != ends:
        raise DomainError("begin/end multisets do not match the base")
    end_index = {e: i + 1 for i, e in enumerate(ends)}
    by_begin = {s.begin: s.end for s in b.segments}
    return tuple(end_index[by_begin[begin]] for begin in begins)
