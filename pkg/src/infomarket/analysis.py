"""Market-health scoring, before/after parameter sweeps, and spread routing.

Health is the truthful share of total equilibrium consumption. Sweeps couple
an information-reliability level r to the two demand intercepts (truthful
demand scaled by r, deceptive demand by 1 - r) and trace health across a
grid, before and after a parameter change. The spread graph is a directed
channel network; the cheapest route between two channels is found with a
shortest-path search whose ties break toward the lexicographically smallest
node sequence.
"""

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InfeasibleEquilibrium,
    NoMarket,
    ParseError,
    TooFewPoints,
    Unreachable,
)
from .market import Equilibrium, MarketParams, equilibrium_closed_form


@dataclass(frozen=True)
class MarketState:
    """Solved (or infeasible) equilibria for both news types at one reliability."""

    fake: Equilibrium | None
    true: Equilibrium | None
    reliability: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.reliability <= 1.0:
            raise ValueError(f"reliability must lie in [0, 1], got {self.reliability}")


@dataclass(frozen=True)
class HealthCurve:
    """Health score sampled over strictly increasing reliability levels."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((r, h) for r, h in self.points))
        rs = [r for r, _ in self.points]
        if any(b <= a for a, b in zip(rs, rs[1:])):
            raise ValueError("reliability grid must be strictly increasing")
        if any(not 0 <= h <= 1 for _, h in self.points):
            raise ValueError("health scores must lie in [0, 1]")

    @property
    def reliabilities(self):
        return tuple(r for r, _ in self.points)

    @property
    def scores(self):
        return tuple(h for _, h in self.points)


@dataclass(frozen=True)
class MarketScenario:
    """Linear market coefficients for both news types."""

    fake: MarketParams
    true: MarketParams


def market_health(state: MarketState):
    """Truthful share of equilibrium consumption, in [0, 1].

    Infeasible sides contribute zero quantity.

    Raises:
        NoMarket: both sides infeasible (or carrying zero quantity).
    """
    q_fake = state.fake.quantity if state.fake is not None else 0.0
    q_true = state.true.quantity if state.true is not None else 0.0
    total = q_fake + q_true
    if total == 0:
        raise NoMarket("neither news type trades at equilibrium")
    return q_true / total


def _solve_or_none(params: MarketParams) -> Equilibrium | None:
    try:
        return equilibrium_closed_form(params)
    except InfeasibleEquilibrium:
        return None


def state_at_reliability(scenario: MarketScenario, r: float) -> MarketState:
    """Markets with demand intercepts modulated by reliability r.

    Truthful demand keeps the fraction r of its intercept, deceptive demand
    the fraction 1 - r; a zeroed intercept makes that side infeasible.
    """
    fake_b = scenario.fake.demand_intercept * (1.0 - r)
    true_b = scenario.true.demand_intercept * r
    fake = _solve_or_none(
        MarketParams(scenario.fake.supply_slope, fake_b, scenario.fake.demand_slope)
    )
    true = _solve_or_none(
        MarketParams(scenario.true.supply_slope, true_b, scenario.true.demand_slope)
    )
    return MarketState(fake=fake, true=true, reliability=r)


def comparative_sweep(
    base: MarketScenario,
    changed: MarketScenario,
    grid: Sequence[float],
) -> tuple[HealthCurve, HealthCurve]:
    """Health across the reliability grid before and after a parameter change."""
    if not grid:
        raise ValueError("reliability grid must be nonempty")
    if any(not 0 <= r <= 1 for r in grid):
        raise ValueError("reliability grid values must lie in [0, 1]")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("reliability grid must be strictly increasing")
    before = []
    after = []
    for r in grid:
        before.append((r, market_health(state_at_reliability(base, r))))
        after.append((r, market_health(state_at_reliability(changed, r))))
    return HealthCurve(points=tuple(before)), HealthCurve(points=tuple(after))


def reliability_marginal_contribution(curve: HealthCurve) -> list[tuple[float, float]]:
    """Successive health differences, each paired with its right endpoint.

    Raises:
        TooFewPoints: fewer than two samples on the curve.
    """
    pts = curve.points
    if len(pts) < 2:
        raise TooFewPoints("need at least two points to difference")
    return [(pts[i + 1][0], pts[i + 1][1] - pts[i][1]) for i in range(len(pts) - 1)]


@dataclass(frozen=True)
class SpreadGraph:
    """Directed channel network with nonnegative traversal costs."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))
        known = set(self.nodes)
        if len(known) != len(self.nodes):
            raise ValueError("duplicate node ids")
        for src, dst, cost in self.edges:
            if src == dst:
                raise ValueError(f"self-loop on {src!r}")
            if src not in known or dst not in known:
                raise ValueError(f"edge ({src!r}, {dst!r}) uses undeclared nodes")
            if cost < 0:
                raise ValueError(f"negative cost on edge ({src!r}, {dst!r})")


def graph_from_edges(edges: Iterable[tuple[str, str, float]]) -> SpreadGraph:
    """Build a graph whose node set is exactly the edge endpoints."""
    edges = tuple(edges)
    nodes = sorted({n for s, d, _ in edges for n in (s, d)})
    return SpreadGraph(nodes=tuple(nodes), edges=edges)


def parse_spread_graph(lines: Iterable[str]) -> SpreadGraph:
    """Parse edge-list text: one ``from to cost`` triple per line, # comments."""
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"graph line {lineno}: expected 'from to cost'")
        try:
            cost = float(parts[2])
        except ValueError:
            raise ParseError(f"graph line {lineno}: bad cost {parts[2]!r}") from None
        edges.append((parts[0], parts[1], cost))
    try:
        return graph_from_edges(edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_spread_graph(path) -> SpreadGraph:
    with open(path, encoding="utf-8") as f:
        return parse_spread_graph(f)


def min_cost_spread_path(
    graph: SpreadGraph, source: str, target: str
) -> tuple[float, list[str]]:
    """Cheapest route from source to target.

    Dijkstra's search over nonnegative costs; among equally cheap routes the
    lexicographically smallest node sequence wins. Keying the heap on
    (cost, path) makes that tie-break fall out of the pop order.

    Raises:
        Unreachable: no route exists.
    """
    known = set(graph.nodes)
    if source not in known or target not in known:
        raise ValueError(f"source/target must be graph nodes, got {source!r}, {target!r}")
    adjacency: dict[str, list[tuple[str, float]]] = {n: [] for n in graph.nodes}
    for src, dst, cost in graph.edges:
        adjacency[src].append((dst, cost))
    for nbrs in adjacency.values():
        nbrs.sort()
    heap: list[tuple[float, tuple[str, ...], str]] = [(0.0, (source,), source)]
    done = set()
    while heap:
        cost, path, node = heapq.heappop(heap)
        if node in done:
            continue
        if node == target:
            return cost, list(path)
        done.add(node)
        for nbr, edge_cost in adjacency[node]:
            if nbr not in done:
                heapq.heappush(heap, (cost + edge_cost, path + (nbr,), nbr))
    raise Unreachable(f"no route from {source!r} to {target!r}")
