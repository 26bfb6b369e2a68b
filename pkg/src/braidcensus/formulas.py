"""Closed-form counts and bounds for braid-structured extremal graphs.

Everything here is exact integer arithmetic on residue-dispatched
expressions; the only real-valued quantity is the per-vertex cycle bound,
whose exponent (n - d - 1)/3 need not be an integer.

The even-path count f2_even is not given anywhere as a closed form; we
define it as the product of the central cluster sizes of the even-parity
extremal braid family and verify that definition in tests against an
independent maximizer (max product of parts with an even part count) and
against the path census of the built graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import InputError

# Cycles shorter than ALPHA * n are "short"; their total is bounded by a
# crude binomial sum that is still exponentially smaller than 3^(n/3).
ALPHA = 0.11


@dataclass(frozen=True)
class ExactCount:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise InputError(f"count cannot be negative: {self.value}")


@dataclass(frozen=True)
class RealBound:
    value: float

    def __post_init__(self):
        if not math.isfinite(self.value) or self.value < 0:
            raise InputError(f"bound must be finite and >= 0: {self.value}")


def _pow3(k: int) -> int:
    assert k >= 0, f"negative exponent {k} means a residue rule is wrong"
    return 3 ** k


def f2(n: int) -> ExactCount:
    """Maximum number of induced paths between a fixed vertex pair."""
    if n < 4:
        raise InputError(f"f2 needs n >= 4, got {n}")
    r = n % 3
    if r == 2:
        return ExactCount(_pow3((n - 2) // 3))
    if r == 0:
        return ExactCount(4 * _pow3((n - 6) // 3))
    return ExactCount(2 * _pow3((n - 4) // 3))


def f2_odd(n: int) -> ExactCount:
    """Maximum number of induced odd paths (odd = odd vertex count)."""
    if n < 10:
        raise InputError(f"f2_odd needs n >= 10, got {n}")
    r = n % 6
    if r == 0:
        return ExactCount(4 * _pow3((n - 6) // 3))
    if r == 1:
        return ExactCount(2 ** 4 * _pow3((n - 10) // 3))
    if r == 2:
        return ExactCount(2 ** 3 * _pow3((n - 8) // 3))
    if r == 3:
        return ExactCount(2 ** 2 * _pow3((n - 6) // 3))
    if r == 4:
        return ExactCount(2 * _pow3((n - 4) // 3))
    return ExactCount(_pow3((n - 2) // 3))


def f2_even(n: int) -> ExactCount:
    """Maximum number of induced even paths: central-size product of the
    even-parity extremal family (equivalently f2_odd(n + 3) / 3)."""
    if n < 10:
        raise InputError(f"f2_even needs n >= 10, got {n}")
    r = n % 6
    if r == 0:
        return ExactCount(4 * _pow3((n - 6) // 3))  # two 2s
    if r == 1:
        return ExactCount(2 * _pow3((n - 4) // 3))  # one 2
    if r == 2:
        return ExactCount(_pow3((n - 2) // 3))  # all 3s
    if r == 3:
        return ExactCount(4 * _pow3((n - 6) // 3))  # one 4
    if r == 4:
        return ExactCount(2 ** 4 * _pow3((n - 10) // 3))  # two 4s / four 2s
    return ExactCount(2 ** 3 * _pow3((n - 8) // 3))  # three 2s


def m_lower(n: int) -> ExactCount:
    """Induced cycle count of the cyclic extremal construction; equals the
    true maximum for all sufficiently large n and (verified in tests)
    equals the census of build_H(n) for every n in 12..21."""
    if n < 12:
        raise InputError(f"m_lower needs n >= 12, got {n}")
    r = n % 3
    if r == 0:
        return ExactCount(_pow3(n // 3) + 12 * n)
    if r == 1:
        return ExactCount(4 * _pow3((n - 4) // 3) + 12 * n + 51)
    return ExactCount(2 * _pow3((n - 2) // 3) + 12 * n - 36)


def vertex_cycle_bound(n: int, d: int) -> RealBound:
    """Upper bound C(d,2) * 3^((n-d-1)/3) on the number of induced cycles
    through a fixed vertex of degree d in an n-vertex graph."""
    if n < 1:
        raise InputError(f"vertex_cycle_bound needs n >= 1, got {n}")
    if not 0 <= d < n:
        raise InputError(f"degree d must satisfy 0 <= d < n, got d={d}, n={n}")
    return RealBound(math.comb(d, 2) * 3.0 ** ((n - d - 1) / 3))


def short_cycle_mass(n: int) -> ExactCount:
    """Sum of C(n, i) for 1 <= i <= floor(ALPHA * n): a coarse cap on the
    number of induced cycles of length below ALPHA * n."""
    if n < 1:
        raise InputError(f"short_cycle_mass needs n >= 1, got {n}")
    top = 11 * n // 100  # floor(0.11 * n) in exact integer arithmetic
    return ExactCount(sum(math.comb(n, i) for i in range(1, top + 1)))
