"""Closed-form evaluators against an independent maximization oracle.

The extremal path counts are, by construction, products of central cluster
sizes of a braid whose sizes sum to n - 2 (two singleton ends), with the
path parity fixed by the part count's parity.  So the ground truth for
f2 / f2_odd / f2_even is "maximum product of positive integer parts with
total n - 2 and constrained part-count parity", computable directly: for a
fixed part count t the product is maximized by near-equal parts.
"""

import pytest
from hypothesis import given, settings, strategies as st

from braidcensus.formulas import (
    ExactCount,
    RealBound,
    f2,
    f2_even,
    f2_odd,
    m_lower,
    short_cycle_mass,
    vertex_cycle_bound,
)
from braidcensus.graphs import InputError


def max_part_product(total: int, count_parity: str) -> int:
    best = 0
    for t in range(1, total + 1):
        if count_parity == "odd" and t % 2 == 0:
            continue
        if count_parity == "even" and t % 2 == 1:
            continue
        q, r = divmod(total, t)
        best = max(best, (q + 1) ** r * q ** (t - r))
    return best


# ----------------------------------------------------------------------
# oracle equivalence (the substance of the closed forms)
# ----------------------------------------------------------------------


@pytest.mark.parametrize("n", range(4, 41))
def test_f2_equals_part_product_maximum(n):
    assert f2(n).value == max_part_product(n - 2, "any")


@pytest.mark.parametrize("n", range(10, 41))
def test_f2_odd_equals_odd_count_maximum(n):
    # path vertex count = central part count + 2, so odd paths <=> odd t
    assert f2_odd(n).value == max_part_product(n - 2, "odd")


@pytest.mark.parametrize("n", range(10, 41))
def test_f2_even_equals_even_count_maximum(n):
    assert f2_even(n).value == max_part_product(n - 2, "even")


# ----------------------------------------------------------------------
# pinned values
# ----------------------------------------------------------------------


def test_f2_small_values():
    assert [f2(n).value for n in range(4, 9)] == [2, 3, 4, 6, 9]


def test_f2_odd_values():
    assert f2_odd(10).value == 18
    assert f2_odd(11).value == 27
    assert f2_odd(13).value == 48


def test_f2_even_values():
    assert f2_even(10).value == 16
    assert f2_even(12).value == 36
    assert f2_even(13).value == 54


def test_m_lower_values():
    assert [m_lower(n).value for n in (12, 13, 14, 15)] == [225, 315, 294, 423]
    assert m_lower(21).value == 3 ** 7 + 12 * 21


def test_vertex_cycle_bound_values():
    assert vertex_cycle_bound(13, 6).value == pytest.approx(135.0)
    assert vertex_cycle_bound(9, 0).value == 0.0
    assert vertex_cycle_bound(9, 1).value == 0.0
    # non-integer exponent stays real
    assert vertex_cycle_bound(12, 6).value == pytest.approx(15 * 3 ** (5 / 3))


def test_short_cycle_mass_values():
    for n in range(1, 10):
        assert short_cycle_mass(n).value == 0
    assert short_cycle_mass(20).value == 210
    assert short_cycle_mass(30).value == 4525


# ----------------------------------------------------------------------
# structural identities and domains
# ----------------------------------------------------------------------


@given(st.integers(4, 200))
@settings(max_examples=80)
def test_f2_triples_when_n_grows_by_three(n):
    assert f2(n + 3).value == 3 * f2(n).value


@given(st.integers(10, 200))
@settings(max_examples=80)
def test_parity_split_identities(n):
    assert f2(n).value == max(f2_odd(n).value, f2_even(n).value)
    assert f2_even(n).value * 3 == f2_odd(n + 3).value
    assert f2_odd(n + 6).value == 9 * f2_odd(n).value


def test_domain_errors():
    for bad_call in (
        lambda: f2(3),
        lambda: f2_odd(9),
        lambda: f2_even(9),
        lambda: m_lower(11),
        lambda: vertex_cycle_bound(0, 0),
        lambda: vertex_cycle_bound(5, 5),
        lambda: vertex_cycle_bound(5, -1),
        lambda: short_cycle_mass(0),
    ):
        with pytest.raises(InputError):
            bad_call()


def test_wrapper_types():
    assert isinstance(f2(5), ExactCount)
    assert isinstance(vertex_cycle_bound(5, 2), RealBound)
    with pytest.raises(InputError):
        ExactCount(-1)
