"""Exponent-vector kernels: backend parity and cross-checks against naive math.

The compiled and pure-Python backends must be observationally identical, and
the socle-quotient driver must match a literal per-variable colon fold.
"""

from __future__ import annotations

import random

import pytest

from cnideals.kernels import get_backend, socle_quotient
from cnideals.limits import CapExceeded

PY = get_backend("python")
try:
    CY = get_backend("cython")
except ImportError:  # pure install: parity tests have nothing to compare
    CY = None

needs_compiled = pytest.mark.skipif(CY is None, reason="compiled backend not built")

BIG = 10**9


def random_vectors(rng: random.Random, n_max: int = 7, rows_max: int = 8, hi: int = 3):
    n = rng.randint(1, n_max)
    rows = [
        tuple(rng.randint(0, hi) for _ in range(n))
        for _ in range(rng.randint(1, rows_max))
    ]
    # a zero row is the unit monomial: legal, occasionally interesting
    return n, rows


def naive_minimal(rows):
    """Quadratic reference: keep rows not strictly divisible by another kept row."""
    uniq = sorted(set(rows))
    out = []
    for r in uniq:
        if not any(
            s != r and all(a <= b for a, b in zip(s, r)) for s in uniq
        ):
            out.append(r)
    return sorted(out)


class TestPurePrimitives:
    def test_minimal_vectors_matches_naive(self):
        rng = random.Random(11)
        for _ in range(300):
            _, rows = random_vectors(rng)
            assert list(PY.minimal_vectors(rows)) == naive_minimal(rows)

    def test_minimal_vectors_output_sorted_unique(self):
        rng = random.Random(12)
        for _ in range(100):
            _, rows = random_vectors(rng)
            out = list(PY.minimal_vectors(rows))
            assert out == sorted(set(out))

    def test_any_divides(self):
        gens = [(1, 0, 2), (0, 3, 0)]
        assert PY.any_divides(gens, (1, 0, 2))
        assert PY.any_divides(gens, (2, 3, 2))
        assert not PY.any_divides(gens, (1, 2, 1))

    def test_filter_outside_keeps_order(self):
        gens = [(2, 0), (0, 2)]
        vecs = [(1, 1), (2, 1), (0, 1), (3, 3)]
        assert list(PY.filter_outside(gens, vecs)) == [(1, 1), (0, 1)]

    def test_colon_is_componentwise_saturation(self):
        gens = [(2, 1, 0), (0, 0, 3)]
        assert list(PY.colon_vectors(gens, (1, 1, 1))) == sorted([(1, 0, 0), (0, 0, 2)])

    def test_intersect_respects_cap(self):
        a = [(1, 0), (0, 1)]
        b = [(2, 0), (0, 2), (1, 1)]
        with pytest.raises(CapExceeded):
            PY.intersect_vectors(a, b, 5)

    def test_expand_power_cap(self):
        gens = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        with pytest.raises(CapExceeded):
            PY.expand_power(gens, 6, 10)

    def test_search_witness_cap_is_upfront(self):
        with pytest.raises(CapExceeded):
            PY.search_witness([(1, 1, 1, 1)], 10, 4, 100)

    def test_search_witness_lex_order(self):
        # J = (x1, x2), t = 2: both x1 and x2 are witnesses; enumeration is
        # rightmost-fastest, so (0,1) must be found before (1,0)
        gens = [(1, 0), (0, 1)]
        w = PY.search_witness(gens, 2, 2, BIG)
        assert w == (0, 1)

    def test_search_witness_none_when_exhausted(self):
        # J = (x1): (J^t : m) = J^t for every t, no witness in any box
        assert PY.search_witness([(1, 0)], 2, 2, BIG) is None


class TestSocleQuotient:
    @staticmethod
    def literal(rows, impl):
        """(P : x_1) ∩ … ∩ (P : x_n) + P, foldered with full intermediates."""
        P = impl.minimal_vectors(rows)
        if not P:
            return [], []
        n = len(P[0])
        acc = None
        for i in range(n):
            unit_i = tuple(1 if j == i else 0 for j in range(n))
            ci = impl.colon_vectors(P, unit_i)
            acc = ci if acc is None else impl.intersect_vectors(acc, ci, BIG)
        q = impl.minimal_vectors(list(P) + list(acc))
        pset = set(P)
        return list(q), [v for v in q if v not in pset]

    def test_matches_literal_fold(self):
        rng = random.Random(13)
        for _ in range(200):
            _, rows = random_vectors(rng, n_max=5, rows_max=6, hi=3)
            got_q, got_new = socle_quotient(rows, BIG, impl=PY)
            want_q, want_new = self.literal(rows, PY)
            assert list(got_q) == want_q
            assert list(got_new) == want_new

    def test_principal_ideal_socle(self):
        # (x1^2: m) adds x1 — quotient gains (1,) as a new generator
        q, new = socle_quotient([(2,)], BIG, impl=PY)
        assert list(q) == [(1,)]
        assert list(new) == [(1,)]

    def test_maximal_power_socle(self):
        # P = m^2 in 2 vars: (P : m) = m, two new generators
        rows = [(2, 0), (1, 1), (0, 2)]
        q, new = socle_quotient(rows, BIG, impl=PY)
        assert set(new) == {(1, 0), (0, 1)}

    def test_saturated_ideal_has_no_socle(self):
        # P = (x1): colon by x2 returns P itself, fold exits early
        q, new = socle_quotient([(1, 0)], BIG, impl=PY)
        assert list(new) == []
        assert list(q) == [(1, 0)]


@needs_compiled
class TestBackendParity:
    def test_primitive_parity(self):
        rng = random.Random(20260816)
        for _ in range(300):
            n, rows = random_vectors(rng)
            assert list(PY.minimal_vectors(rows)) == list(CY.minimal_vectors(rows))

            probe = tuple(rng.randint(0, 4) for _ in range(n))
            assert PY.any_divides(rows, probe) == CY.any_divides(rows, probe)

            vecs = [tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(5)]
            assert list(PY.filter_outside(rows, vecs)) == list(
                CY.filter_outside(rows, vecs)
            )

            f = tuple(rng.randint(0, 2) for _ in range(n))
            assert list(PY.colon_vectors(rows, f)) == list(CY.colon_vectors(rows, f))

            _, rows2 = random_vectors(rng, n_max=n, rows_max=5)
            rows2 = [r + (0,) * (n - len(r)) for r in rows2]
            assert list(PY.intersect_vectors(rows, rows2, BIG)) == list(
                CY.intersect_vectors(rows, rows2, BIG)
            )

    def test_power_parity(self):
        rng = random.Random(7)
        for _ in range(120):
            n, rows = random_vectors(rng, n_max=5, rows_max=5, hi=2)
            t = rng.randint(1, 3)
            assert list(PY.expand_power(rows, t, BIG)) == list(
                CY.expand_power(rows, t, BIG)
            )
            probe = tuple(rng.randint(0, 2 * t) for _ in range(n))
            assert PY.power_divides(rows, t, probe) == CY.power_divides(rows, t, probe)

    def test_witness_search_parity(self):
        rng = random.Random(8)
        for _ in range(100):
            n = rng.randint(1, 4)
            rows = [
                tuple(rng.randint(0, 1) for _ in range(n))
                for _ in range(rng.randint(1, 4))
            ]
            rows = [r if any(r) else (1,) * n for r in rows]
            t = rng.randint(1, 3)
            assert PY.search_witness(rows, t, n, BIG) == CY.search_witness(
                rows, t, n, BIG
            )

    def test_socle_parity(self):
        rng = random.Random(9)
        for _ in range(150):
            _, rows = random_vectors(rng, n_max=5, rows_max=6)
            a = socle_quotient(rows, BIG, impl=PY)
            b = socle_quotient(rows, BIG, impl=CY)
            assert list(a[0]) == list(b[0]) and list(a[1]) == list(b[1])

    def test_compiled_caps_raise_too(self):
        with pytest.raises(CapExceeded):
            CY.expand_power([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 6, 10)
        with pytest.raises(CapExceeded):
            CY.search_witness([(1, 1, 1, 1)], 10, 4, 100)
        with pytest.raises(CapExceeded):
            CY.intersect_vectors([(1, 0), (0, 1)], [(2, 0), (0, 2), (1, 1)], 5)
