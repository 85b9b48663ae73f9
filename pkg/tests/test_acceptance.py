"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists
one PASS/FAIL line per criterion.
"""

import itertools
import time

import pytest

import oracles
from signed_partitions import stirling
from signed_partitions.bijection import decode, encode, enumerate_assignments, verify_bijection
from signed_partitions.core import parse
from signed_partitions.enumeration import count_by_pairs, enumerate_partitions
from signed_partitions.stirling import (
    StirlingTriangle,
    basis_coefficients_B,
    falling_factorial_B,
    pointwise_mismatches,
    stirling2,
    stirling2_B,
    verify_identity_A,
    verify_identity_B,
)


def _best_of(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


@pytest.mark.criterion("Table reproduction: all 28 cells of the type-B table, < 1 ms")
def test_table_reproduction(detail):
    def compute():
        tri = StirlingTriangle("B")
        return [[tri[n, k] for k in range(n + 1)] for n in range(7)]

    assert compute() == oracles.TABLE_B
    assert sum(len(r) for r in oracles.TABLE_B) == 28
    assert [[stirling2_B(n, k) for k in range(n + 1)] for n in range(7)] == oracles.TABLE_B
    elapsed = _best_of(compute)
    detail.text = f"{elapsed * 1e6:.0f} us"
    assert elapsed < 1e-3


@pytest.mark.criterion("Oracle equivalence: enumeration counts == recurrence for n <= 7, < 5 s")
def test_oracle_equivalence(detail):
    start = time.perf_counter()
    totals = {}
    for n in range(8):
        counted = count_by_pairs(n)
        recurrence = [stirling2_B(n, k) for k in range(n + 1)]
        assert counted == recurrence, n
        totals[n] = (sum(counted), sum(recurrence))
    elapsed = time.perf_counter() - start
    by_enumeration, by_recurrence = totals[7]
    assert by_enumeration == by_recurrence
    detail.text = f"n=7 total {by_enumeration} by both paths, {elapsed:.2f} s"
    assert elapsed < 5


@pytest.mark.criterion("Type-B identity: coefficients n <= 12, pointwise x in [-25,25] n <= 10, < 1 s")
def test_identity_type_b(detail):
    start = time.perf_counter()
    for n in range(13):
        report = verify_identity_B(n)
        assert report.equal and report.lhs == report.rhs, n
    for n in range(11):
        assert pointwise_mismatches("B", n, range(-25, 26)) == [], n
    elapsed = time.perf_counter() - start
    detail.text = f"{elapsed * 1e3:.1f} ms"
    assert elapsed < 1


@pytest.mark.criterion("Type-A identity: same regime plus brute-force S(n,k) for n <= 7, < 5 s")
def test_identity_type_a(detail):
    start = time.perf_counter()
    for n in range(8):
        assert [stirling2(n, k) for k in range(n + 1)] == [
            oracles.stirling2_by_listing(n, k) for k in range(n + 1)
        ], n
    for n in range(13):
        report = verify_identity_A(n)
        assert report.equal and report.lhs == report.rhs, n
    for n in range(11):
        assert pointwise_mismatches("A", n, range(-25, 26)) == [], n
    elapsed = time.perf_counter() - start
    detail.text = f"{elapsed * 1e3:.1f} ms"
    assert elapsed < 5


@pytest.mark.criterion("Golden bijection: worked example, choices (4,7), m=7 -> (1,4,5,7,4,2) and back")
def test_golden_bijection():
    p = parse("z:[1];p:[[2,-3,5],[4,-6]]", n=6)
    assert p.block_family() == {
        frozenset({1, -1}),
        frozenset({2, -3, 5}),
        frozenset({-2, 3, -5}),
        frozenset({4, -6}),
        frozenset({-4, 6}),
    }
    f = encode(p, (4, 7), 7)
    assert f.values == (1, 4, 5, 7, 4, 2)
    assert decode(f) == (p, (4, 7))


def _desk_grid():
    for n in range(6):
        for m in (1, 3, 5, 7, 9):
            if m**n <= 10**6:
                yield n, m


@pytest.mark.criterion("Exhaustive bijectivity: n <= 5, odd m <= 9, m^n <= 1e6, < 60 s")
def test_exhaustive_bijectivity(detail):
    start = time.perf_counter()
    cases = 0
    for n, m in _desk_grid():
        report = verify_bijection(n, m)
        assert report.distinct == report.generated == m**n, (n, m)
        assert report.decode_failures == 0 and report.encode_failures == 0, (n, m)
        assert report.passed
        cases += 1
    elapsed = time.perf_counter() - start
    detail.text = f"{cases} (n, m) cases, {elapsed:.1f} s"
    assert cases == 30
    assert elapsed < 60


@pytest.mark.criterion("Degenerate-pair rule: all-positive representatives still round-trip")
def test_degenerate_pair_rule(detail):
    single = parse("z:[];p:[[1]]")
    assert [f.values for _, f in enumerate_assignments(single, 3)] == [(2,), (3,)]
    for choices, f in enumerate_assignments(single, 3):
        assert decode(f) == (single, choices)

    checked = 0
    for n, m in _desk_grid():
        for p in enumerate_partitions(n):
            if 2 * p.k > m - 1 or not any(all(e > 0 for e in b) for b in p.pairs):
                continue
            for choices, f in enumerate_assignments(p, m):
                assert decode(f) == (p, choices)
                assert encode(*decode(f), m) == f
                checked += 1
    detail.text = f"{checked} instances"
    assert checked > 0


@pytest.mark.criterion("Property suite: [x]^B_k roots for k <= 10; basis change == triangle rows n <= 10")
def test_property_suite():
    for k in range(11):
        poly = falling_factorial_B(k)
        roots = {x for x in range(-2 * k - 5, 2 * k + 6) if poly(x) == 0}
        assert roots == set(range(1, 2 * k, 2)), k
        assert all(poly(x) != 0 for x in range(-2 * k, 2 * k + 1, 2))
    for n in range(11):
        assert basis_coefficients_B(n) == list(stirling.TRIANGLE_B.row(n)), n
        assert basis_coefficients_B(n) == [oracles.stirling2_B_closed(n, k) for k in range(n + 1)]


def test_grid_shape():
    assert sorted(_desk_grid()) == sorted(
        (n, m) for n, m in itertools.product(range(6), (1, 3, 5, 7, 9)) if m**n <= 10**6
    )
