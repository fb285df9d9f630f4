from __future__ import annotations

import math
from decimal import Decimal, getcontext

import pytest
from hypothesis import given, strategies as st

from pegkit.codes import (
    BinaryCode,
    binary_entropy,
    covering_radius,
    cube_code_distribution,
    entropy_dimension_bound,
    free_radius,
    greedy_covering_code,
    hypercube_upper_envelope,
    hypercube_weight_lower_bound,
)
from pegkit.engine import reach
from pegkit.graphs import hypercube

getcontext().prec = 60
ROOT5 = Decimal(5).sqrt()


def brute_radius(m, words):
    return max(min(bin(x ^ c).count("1") for c in words) for x in range(1 << m))


def test_radius_examples():
    assert covering_radius(BinaryCode(4, (0,))) == 4
    assert covering_radius(BinaryCode(3, (0b000, 0b111))) == 1
    assert covering_radius(BinaryCode(3, tuple(range(8)))) == 0


@given(st.integers(1, 6).flatmap(lambda m: st.tuples(st.just(m), st.sets(st.integers(0, (1 << m) - 1), min_size=1))))
def test_radius_matches_brute_force(args):
    m, words = args
    assert covering_radius(BinaryCode(m, tuple(sorted(words)))) == brute_radius(m, words)


def test_greedy_examples():
    assert greedy_covering_code(2, 2).codewords == (0,)
    assert len(greedy_covering_code(3, 1)) == 2
    code = greedy_covering_code(4, 1)
    assert len(code) <= 4 and code.radius == 1


@given(st.integers(1, 8), st.integers(0, 8))
def test_greedy_meets_radius_and_sphere_bound(m, r):
    r = min(r, m)
    code = greedy_covering_code(m, r)
    assert brute_radius(m, code.codewords) <= r
    ball = sum(math.comb(m, k) for k in range(r + 1))
    assert len(code) * ball >= 1 << m


def test_code_validation():
    with pytest.raises(ValueError):
        BinaryCode(2, (0, 0))
    with pytest.raises(ValueError):
        BinaryCode(2, (4,))


@pytest.mark.parametrize("n", range(1, 40))
def test_free_radius_is_exact_ceiling(n):
    phi = (1 + ROOT5) / 2
    assert free_radius(n) == math.ceil(Decimal(n) / (phi + 2))


def test_cube_code_distribution_examples():
    assert len(cube_code_distribution(4)) == 4
    assert len(cube_code_distribution(5)) <= 8


@pytest.mark.parametrize("n", [4, 5])
def test_cube_code_distribution_reaches_everything(n):
    g = hypercube(n)
    assert reach(g, cube_code_distribution(n)).reachable_mask == g.full_mask


@pytest.mark.parametrize("n", range(1, 12))
def test_weight_lower_bound_is_exact_ceiling(n):
    assert hypercube_weight_lower_bound(n) == math.ceil((ROOT5 - 1) ** n)


def test_weight_lower_bound_examples():
    assert [hypercube_weight_lower_bound(n) for n in (1, 3, 4)] == [2, 2, 3]


def test_envelope_dominates_code_distribution():
    for n in (4, 5, 6):
        assert len(cube_code_distribution(n)) <= hypercube_upper_envelope(n)


def test_entropy_bound_examples():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0) == binary_entropy(1) == 0
    assert entropy_dimension_bound(8, 4) == pytest.approx(1.5 * 3 + 1)
    assert entropy_dimension_bound(3, 1) == pytest.approx(3.6226, abs=1e-3)
    assert entropy_dimension_bound(4, 0) == pytest.approx(4 + 1.5 * 2 + 1)
