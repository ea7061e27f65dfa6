"""Information retention decay and accumulation-utility curve families.

Retention follows an exponential decay from an initial fraction. Utility of
holding k pieces of information comes in two flavors: a diminishing-returns
curve whose increments shrink as the pile grows (harmonic partial sums), and
a compounding-interaction curve whose increments grow (power law). Scalar
arithmetic is plain Python so exact number types pass through untouched.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator


@dataclass(frozen=True)
class RetentionParams:
    """Initial retention fraction and per-time-unit decay rate."""

    initial: float = 1.0
    decay: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.initial <= 1.0:
            raise ValueError(f"initial retention must lie in [0, 1], got {self.initial}")
        if self.decay < 0:
            raise ValueError(f"decay must be >= 0, got {self.decay}")


DEFAULT_DECAY_GRID = (0.1, 0.3, 0.5, 1.0)


def retention(params: RetentionParams, t) -> float:
    """Fraction of information still held after time t: initial * exp(-decay*t)."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return params.initial * math.exp(-params.decay * t)


class CurveFamily(Enum):
    DIMINISHING = "diminishing"  # shrinking increments
    COMPOUNDING = "compounding"  # growing increments


@dataclass(frozen=True)
class UtilityCurve:
    """Utility of holding k information pieces, evaluated at integer k.

    The diminishing family is ``scale * (1 + 1/2 + ... + 1/k)``; the
    compounding family is ``scale * k**exponent`` with exponent > 1.
    """

    family: CurveFamily
    scale: float = 1.0
    exponent: float = 2.0

    def __post_init__(self):
        if self.scale < 0:
            raise ValueError(f"scale must be >= 0, got {self.scale}")
        if self.family is CurveFamily.COMPOUNDING and not self.exponent > 1:
            raise ValueError(f"exponent must be > 1, got {self.exponent}")


def diminishing_curve(scale=1.0) -> UtilityCurve:
    return UtilityCurve(family=CurveFamily.DIMINISHING, scale=scale)


def compounding_curve(scale=1.0, exponent=2.0) -> UtilityCurve:
    return UtilityCurve(family=CurveFamily.COMPOUNDING, scale=scale, exponent=exponent)


def increments(curve: UtilityCurve) -> Iterator:
    """Yield utility(k+1) - utility(k) for k = 0, 1, 2, ..."""
    k = 0
    while True:
        if curve.family is CurveFamily.DIMINISHING:
            yield curve.scale / (k + 1)
        else:
            yield curve.scale * ((k + 1) ** curve.exponent - k**curve.exponent)
        k += 1


def utility(curve: UtilityCurve, k: int):
    """Utility of holding k pieces; zero at k = 0."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"k must be an integer, got {k!r}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if curve.family is CurveFamily.COMPOUNDING:
        return curve.scale * k**curve.exponent
    total = 0
    for i in range(1, k + 1):
        total += curve.scale / i
    return total


def info_marginal_contribution(curve: UtilityCurve, k: int):
    """Utility gained by the (k+1)-th information piece."""
    return utility(curve, k + 1) - utility(curve, k)


@dataclass(frozen=True)
class IncrementVerdict:
    passed: bool
    violation_at: int | None = None


def check_increment_profile(curve: UtilityCurve, n: int) -> IncrementVerdict:
    """Verify the curve's increments behave as its family promises.

    Diminishing curves need nonincreasing increments over k < n, compounding
    curves nondecreasing ones. On failure the verdict carries the first k at
    which the comparison breaks.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    gen = increments(curve)
    prev = next(gen)
    for k in range(1, n):
        cur = next(gen)
        if curve.family is CurveFamily.DIMINISHING and cur > prev:
            return IncrementVerdict(passed=False, violation_at=k)
        if curve.family is CurveFamily.COMPOUNDING and cur < prev:
            return IncrementVerdict(passed=False, violation_at=k)
        prev = cur
    return IncrementVerdict(passed=True)
