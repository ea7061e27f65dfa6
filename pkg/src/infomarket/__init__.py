"""Deterministic simulations of an information market.

Competing truthful and deceptive news: linear market clearing with a cobweb
stability check, affine and harm-decaying payoffs, deferred-acceptance
matching between providers and consumers, an iterated provision game with an
audience-quota threshold, ranked-ballot tallying with fractional surplus
transfers, retention/utility curve families, and comparative market-health
sweeps. A small CLI binds scenario files to the subsystems and emits CSV.
"""

from .analysis import (
    HealthCurve,
    MarketScenario,
    MarketState,
    SpreadGraph,
    comparative_sweep,
    graph_from_edges,
    market_health,
    min_cost_spread_path,
    reliability_marginal_contribution,
)
from .dynamics import (
    CurveFamily,
    RetentionParams,
    UtilityCurve,
    check_increment_profile,
    compounding_curve,
    diminishing_curve,
    info_marginal_contribution,
    retention,
    utility,
)
from .game import (
    AcceptanceRule,
    Action,
    GameState,
    StageGame,
    Strategy,
    TournamentRow,
    droop_acceptance_reached,
    max_compensation,
    nash_equilibria,
    play_iterated,
    run_tournament,
    strategy_by_name,
)
from .market import (
    Equilibrium,
    MarketParams,
    NewsType,
    Stability,
    StabilityReport,
    equilibrium_closed_form,
    equilibrium_numeric,
    stability_cobweb,
)
from .matching import (
    Matching,
    PreferenceProfile,
    SegmentLabel,
    gale_shapley,
    is_stable,
    marginal_contribution,
    rankings_from_scores,
    segment,
    segment_news,
)
from .payoffs import (
    ConsumerParams,
    CostSchedule,
    HarmPayoffParams,
    ProviderParams,
    compensation,
    consumer_payoff,
    crossover_harm,
    harm_payoff,
    provider_payoff,
)
from .scenario import Scenario, load_scenario, parse_scenario, serialize_scenario
from .voting import (
    Ballot,
    CountRound,
    ElectionResult,
    droop_quota,
    fptp_winner,
    meek_count,
    parse_ballots,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
