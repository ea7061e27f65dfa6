"""Clearing the two news markets: closed form, bisection, and stability.

A linear market crosses supply a*p against demand b - c*p. The walkthrough
solves a few of them in closed form, confirms the answer with the bisection
route, shows what happens when the demand intercept cannot support a positive
price, and traces the cobweb iteration for attracting, neutral and repelling
configurations.
"""

from infomarket.errors import InfeasibleEquilibrium
from infomarket.market import (
    MarketParams,
    NewsType,
    equilibrium_closed_form,
    equilibrium_numeric,
    stability_cobweb,
)

print("=== Closed form vs bisection ===")
for label, params in [
    ("deceptive news", MarketParams(1.0, 10.0, 1.0)),
    ("truthful news", MarketParams(1.0, 8.0, 1.0)),
    ("steep supply", MarketParams(2.0, 12.0, 1.0)),
]:
    closed = equilibrium_closed_form(params)
    numeric = equilibrium_numeric(
        params.supply, params.demand, (0.0, params.demand_intercept / params.demand_slope)
    )
    print(
        f"{label:>14}: price {closed.price:.6f} quantity {closed.quantity:.6f} "
        f"(bisection price {numeric.price:.9f})"
    )

print()
print("=== An infeasible market ===")
try:
    equilibrium_closed_form(MarketParams(1.0, -3.0, 1.0))
except InfeasibleEquilibrium as exc:
    print(f"demand intercept -3 is rejected: {exc}")

print()
print("=== Nonlinear curves still clear ===")
eq = equilibrium_numeric(lambda p: p * p, lambda p: 10 - p, (0.0, 10.0))
print(f"supply p^2 against demand 10 - p clears at price {eq.price:.6f}")

print()
print("=== Cobweb stability ===")
for label, params, p0 in [
    ("attracting (a/c = 0.5)", MarketParams(1.0, 10.0, 2.0), 1.0),
    ("neutral    (a/c = 1.0)", MarketParams(1.0, 10.0, 1.0), 4.0),
    ("repelling  (a/c = 3.0)", MarketParams(3.0, 10.0, 1.0), 2.6),
]:
    report = stability_cobweb(params, p0, steps=8)
    trail = " -> ".join(f"{p:.3f}" for p in report.iterates[:6])
    print(f"{label}: {report.classification.value:<9} {p0:.3f} -> {trail}")

print()
print(f"both kinds of news: {[kind.value for kind in NewsType]}")
