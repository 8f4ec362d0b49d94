"""Acceptance suite: one test per criterion, each reporting a pass/fail
line in the terminal summary.  Tolerances are exact (integer combinatorics
throughout); the only numeric budgets are the stated runtimes."""
import itertools
import random
import time

from conftest import all_multisegments, random_multisegment, record_acceptance

import multiseg.multiplicity as multiplicity_module
import multiseg.symmetrization as symmetrization_module
import multiseg.weyl as weyl_module
from multiseg import (
    END,
    Multisegment,
    Segment,
    all_perms,
    bruhat_leq,
    check_eq2,
    derivative_l,
    descent_set,
    generate_poset,
    kl_polynomial,
    leq_rank,
    minimal_element,
    minimal_lift,
    mult,
    mult_matrix,
    phi,
    pi_element,
    psi_k_inverse,
    same_relation_type,
    to_l_basis,
    to_pi_basis,
    truncate_end,
    xi_transport,
)
from multiseg.poset import _rank_total


def ms(*pairs):
    return Multisegment.from_pairs(pairs)


FIVE = ms((1, 1), (2, 2), (2, 2), (3, 3))
RIGID = ms((1, 2), (2, 3))


def _fresh_caches():
    multiplicity_module._MATRIX_CACHE.clear()
    symmetrization_module._lift_table.cache_clear()
    weyl_module._COLUMNS.clear()


def test_criterion_01_worked_example():
    _fresh_caches()
    start = time.perf_counter()
    value = mult(RIGID, FIVE)
    elapsed = time.perf_counter() - start
    ok = value == 2 and elapsed < 1.0
    record_acceptance(
        1, "golden end-to-end multiplicity == 2", ok, f"value={value}, {elapsed:.3f}s"
    )
    assert value == 2
    assert elapsed < 1.0


def test_criterion_02_symmetrization_golden():
    from multiseg import symmetrize

    data = symmetrize(FIVE)
    ok = (
        data.ordinary == ms((0, 1), (1, 3), (2, 2), (3, 4))
        and data.c1 == ms((3, 4))
        and data.c2 == ms((0, 1))
        and data.symmetric == ms((0, 3), (1, 5), (2, 4), (3, 6))
    )
    record_acceptance(2, "symmetrization golden values", ok)
    assert ok


def _has_pattern(w, pattern):
    k = len(pattern)
    for idxs in itertools.combinations(range(len(w)), k):
        values = [w[i] for i in idxs]
        ranks = sorted(range(k), key=lambda t: values[t])
        relative = [0] * k
        for rank, t in enumerate(ranks):
            relative[t] = rank + 1
        if tuple(relative) == pattern:
            return True
    return False


def test_criterion_03_kl_golden_and_smoothness():
    golden = kl_polynomial((1, 3, 2, 4), (3, 4, 1, 2)).coefficients == (1, 1)
    violations = 0
    for w in all_perms(4):
        if _has_pattern(w, (3, 4, 1, 2)) or _has_pattern(w, (4, 2, 3, 1)):
            continue
        for x in all_perms(4):
            if bruhat_leq(x, w) and kl_polynomial(x, w).coefficients != (1,):
                violations += 1
    ok = golden and violations == 0
    record_acceptance(
        3, "KL golden 1+q and S4 smoothness sweep", ok, f"violations={violations}"
    )
    assert ok


def test_criterion_04_orbit_order_chain():
    low = ms((0, 1), (0, 1))
    mid = ms((0, 0), (1, 1), (0, 1))
    high = ms((0, 0), (0, 0), (1, 1), (1, 1))
    chain = [low, mid, high]
    rank_ok = all(
        leq_rank(chain[i], chain[j]) == (i <= j)
        for i in range(3)
        for j in range(3)
    )
    closure = generate_poset(high).elements
    closure_mid = generate_poset(mid).elements
    reach_ok = (
        closure == {low, mid, high}
        and closure_mid == {low, mid}
        and generate_poset(low).elements == {low}
    )
    ok = rank_ok and reach_ok
    record_acceptance(4, "rank-two orbit chain under both order oracles", ok)
    assert ok


def test_criterion_05_order_oracle_equivalence():
    start = time.perf_counter()
    disagreements = universes = pairs = 0
    for degree in range(0, 8):
        for comp in itertools.product(range(degree + 1), repeat=5):
            if sum(comp) != degree:
                continue
            top = Multisegment(
                Segment(k, k) for k, c in enumerate(comp) for _ in range(c)
            )
            poset = generate_poset(top)
            kids = poset.children()
            closure = {}
            for m in sorted(poset.elements, key=_rank_total, reverse=True):
                below = {m}
                for child in kids[m]:
                    below |= closure[child]
                closure[m] = below
            for x in poset.elements:
                below_x = closure[x]
                for y in poset.elements:
                    pairs += 1
                    if leq_rank(y, x) != (y in below_x):
                        disagreements += 1
            universes += 1
    elapsed = time.perf_counter() - start
    ok = disagreements == 0 and elapsed < 300.0
    record_acceptance(
        5,
        "order oracle equivalence, degree <= 7, width-5 window",
        ok,
        f"{universes} weights, {pairs} pairs, {elapsed:.1f}s",
    )
    assert ok


def _rich_random(rng, max_degree, min_degree=4, hi=4, max_len=4):
    from multiseg import linked

    while True:
        a = random_multisegment(rng, max_degree, hi=hi, max_len=max_len)
        if len(a) < 2 or a.degree < min_degree:
            continue
        segs = a.segments
        if any(
            linked(segs[i], segs[j])
            for i in range(len(segs))
            for j in range(i + 1, len(segs))
        ):
            return a


def test_criterion_06_truncation_bijection_suite():
    rng = random.Random(20240806)
    failures = 0
    cases = 0
    for _ in range(200):
        a = _rich_random(rng, 8, hi=3, max_len=3)
        lo, hi = a.support_hull()
        for k in range(lo, hi + 1):
            cases += 1
            members = sorted(descent_set(a, k), key=Multisegment.sort_key)
            images = [truncate_end(c, k) for c in members]
            target = generate_poset(truncate_end(a, k)).elements
            if len(set(images)) != len(images) or set(images) != target:
                failures += 1
                continue
            order_ok = all(
                leq_rank(c, d) == leq_rank(truncate_end(c, k), truncate_end(d, k))
                for c in members
                for d in members
            )
            lift_ok = minimal_lift(a, k) == psi_k_inverse(
                a, k, minimal_element(truncate_end(a, k))
            )
            if not (order_ok and lift_ok):
                failures += 1
    ok = failures == 0
    record_acceptance(
        6,
        "truncation bijection suite, 200 random roots",
        ok,
        f"{cases} (root, k) cases, failures={failures}",
    )
    assert ok


def test_criterion_07_symmetric_poset_cardinality_and_order_reversal():
    sizes_ok = True
    for n in (2, 3, 4, 5):
        base = ms(*[(i, n + i - 1) for i in range(1, n + 1)])
        if len(generate_poset(base)) != len(all_perms(n)):
            sizes_ok = False
    reversal_ok = True
    for n in (2, 3, 4):
        base = ms(*[(i, n + i - 1) for i in range(1, n + 1)])
        images = {w: phi(base, w) for w in all_perms(n)}
        for v in all_perms(n):
            for w in all_perms(n):
                if bruhat_leq(v, w) != leq_rank(images[w], images[v]):
                    reversal_ok = False
    ok = sizes_ok and reversal_ok
    record_acceptance(7, "symmetric poset sizes n! and order reversal", ok)
    assert ok


def test_criterion_08_ring_integration():
    start = time.perf_counter()
    eq2_failures = positivity_failures = 0
    universe = [a for a in all_multisegments(6, lo=0, hi=5) if a]
    for a in universe:
        lo, hi = a.support_hull()
        for k in range(lo, hi + 2):
            if not check_eq2(a, k):
                eq2_failures += 1
        for i in range(lo, hi + 1):
            try:
                derivative_l(a, i, side="end")
                derivative_l(a, i, side="begin")
            except Exception:
                positivity_failures += 1
    rng = random.Random(6)
    round_trip_ok = True
    for _ in range(20):
        element = pi_element(random_multisegment(rng, 6))
        if to_pi_basis(to_l_basis(element)) != element:
            round_trip_ok = False
    elapsed = time.perf_counter() - start
    ok = eq2_failures == 0 and positivity_failures == 0 and round_trip_ok
    record_acceptance(
        8,
        "ring integration: truncation identity, positivity, round trip",
        ok,
        f"{len(universe)} roots, {elapsed:.1f}s",
    )
    assert ok


def _gap_dilated(a, rng):
    lo, hi = a.support_hull()
    empty = [g for g in range(lo + 1, hi) if all(not s.contains(g) for s in a.segments)]
    if not empty:
        return None
    g = rng.choice(empty)
    t = rng.randint(1, 4)
    return Multisegment(
        Segment(s.begin + t, s.end + t) if s.begin > g else s for s in a.segments
    )


def test_criterion_09_relation_type_invariance():
    rng = random.Random(77)
    failures = 0
    checked = 0
    for _ in range(100):
        a = _rich_random(rng, 6, min_degree=5, hi=3, max_len=2)
        partners = [a.translated(rng.randint(-6, 6))]
        dilated = _gap_dilated(a, rng)
        if dilated is not None:
            partners.append(dilated)
        matrix = mult_matrix(a)
        for partner in partners:
            mapping = same_relation_type(a, partner)
            if mapping is None:
                failures += 1
                continue
            for b, value in matrix.items():
                checked += 1
                if mult(xi_transport(mapping, b), partner) != value:
                    failures += 1
    ok = failures == 0
    record_acceptance(
        9,
        "relation-type invariance of multiplicities",
        ok,
        f"{checked} (b, partner) checks, failures={failures}",
    )
    assert ok


def test_criterion_10_symmetric_self_audit():
    failures = 0
    pairs = 0
    for n in (2, 3, 4, 5):
        base = ms(*[(i, n + i - 1) for i in range(1, n + 1)])
        for w in all_perms(n):
            a = phi(base, w)
            for b in generate_poset(a).elements:
                pairs += 1
                try:
                    mult(b, a)  # raises if the two evaluation routes differ
                except Exception:
                    failures += 1
    ok = failures == 0
    record_acceptance(
        10,
        "direct KL route equals symmetrization route on symmetric posets",
        ok,
        f"{pairs} pairs, failures={failures}",
    )
    assert ok
