"""Payoff evaluation for providers and consumers of competing news types.

Provider and consumer payoffs are affine in the cost (or disadvantage) of the
chosen news type. The repeated-game payoff for deceptive provision decays
linearly with the provider's accumulated credibility harm while the truthful
payoff stays flat, so the two cross at a computable harm level. All functions
use plain arithmetic and accept exact number types (e.g. Fraction) unchanged.
"""

from dataclasses import dataclass

from .errors import NoCrossover
from .market import NewsType


@dataclass(frozen=True)
class ProviderParams:
    """Provider payoff coefficients: payoff = base - cost_sensitivity * cost."""

    base: float
    cost_sensitivity: float

    def __post_init__(self):
        if self.cost_sensitivity < 0:
            raise ValueError("cost_sensitivity must be >= 0")


@dataclass(frozen=True)
class ConsumerParams:
    """Consumer payoff coefficients: payoff = base - disadvantage_sensitivity * disadvantage."""

    base: float
    disadvantage_sensitivity: float

    def __post_init__(self):
        if self.disadvantage_sensitivity < 0:
            raise ValueError("disadvantage_sensitivity must be >= 0")


@dataclass(frozen=True)
class CostSchedule:
    """Per-news-type provision costs and consumer disadvantages."""

    fake_cost: float = 0.0
    true_cost: float = 0.0
    fake_disadvantage: float = 0.0
    true_disadvantage: float = 0.0

    def __post_init__(self):
        for name in ("fake_cost", "true_cost", "fake_disadvantage", "true_disadvantage"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    def cost(self, kind: NewsType):
        return self.fake_cost if kind is NewsType.FAKE else self.true_cost

    def disadvantage(self, kind: NewsType):
        return self.fake_disadvantage if kind is NewsType.FAKE else self.true_disadvantage


@dataclass(frozen=True)
class HarmPayoffParams:
    """Repeated-game payoff knobs.

    ``fake_base`` is the payoff of deceptive provision before any harm has
    accrued, ``harm_penalty`` the payoff lost per unit of accumulated harm,
    and ``truth_payoff`` the flat payoff of truthful provision.
    """

    fake_base: float = 5.0
    harm_penalty: float = 2.0
    truth_payoff: float = 3.0

    def __post_init__(self):
        if not self.harm_penalty > 0:
            raise ValueError("harm_penalty must be > 0")


def provider_payoff(params: ProviderParams, kind: NewsType, costs: CostSchedule):
    """Affine provider payoff for supplying the given news type."""
    return params.base - params.cost_sensitivity * costs.cost(kind)


def consumer_payoff(params: ConsumerParams, kind: NewsType, costs: CostSchedule):
    """Affine consumer payoff for consuming the given news type."""
    return params.base - params.disadvantage_sensitivity * costs.disadvantage(kind)


def harm_payoff(params: HarmPayoffParams, action: NewsType, harm):
    """Per-round payoff of an action given the player's accumulated harm.

    Deceptive provision pays ``fake_base - harm_penalty * harm``; truthful
    provision pays ``truth_payoff`` regardless of harm.
    """
    if harm < 0:
        raise ValueError(f"harm must be >= 0, got {harm}")
    if action is NewsType.FAKE:
        return params.fake_base - params.harm_penalty * harm
    return params.truth_payoff


def crossover_harm(params: HarmPayoffParams):
    """Harm level at which deception and truth pay the same.

    Solves ``fake_base - harm_penalty * h = truth_payoff``. At the returned
    level the two payoffs are equal exactly, not merely within tolerance.

    Raises:
        NoCrossover: deception already pays less than truth at zero harm.
    """
    if params.fake_base < params.truth_payoff:
        raise NoCrossover(
            f"fake_base {params.fake_base} < truth_payoff {params.truth_payoff}; "
            "deception is dominated from the start"
        )
    return (params.fake_base - params.truth_payoff) / params.harm_penalty


def compensation(provider_coeff, consumer_coeff, quality, kind: NewsType):
    """Compensation for a provider-consumer pairing in the given market.

    The product of the provider coefficient, the consumer coefficient, and
    the quality of the news type supplied. ``kind`` labels which market's
    quality figure is being passed in; it does not change the arithmetic.
    """
    for name, v in (("provider_coeff", provider_coeff),
                    ("consumer_coeff", consumer_coeff),
                    ("quality", quality)):
        if v < 0:
            raise ValueError(f"{name} must be >= 0, got {v}")
    return provider_coeff * consumer_coeff * quality
