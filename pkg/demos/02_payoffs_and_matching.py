"""Who gains what, and who pairs with whom.

Provider and consumer payoffs fall linearly in the cost (or disadvantage) of
the chosen news type, the repeated-game deception payoff decays with
accumulated harm until truth telling wins, and deferred acceptance pairs
outlets with readers so that nobody wants to defect to another partner.
"""

from infomarket.market import NewsType
from infomarket.matching import (
    balanced_profile,
    gale_shapley,
    is_stable,
    marginal_contribution,
    pair_count,
    segment,
)
from infomarket.payoffs import (
    ConsumerParams,
    CostSchedule,
    HarmPayoffParams,
    ProviderParams,
    consumer_payoff,
    crossover_harm,
    harm_payoff,
    provider_payoff,
)

costs = CostSchedule(fake_cost=1.0, true_cost=2.5, fake_disadvantage=2.0, true_disadvantage=0.5)

print("=== Affine payoffs ===")
outlet = ProviderParams(base=5.0, cost_sensitivity=1.2)
reader = ConsumerParams(base=3.0, disadvantage_sensitivity=1.0)
for kind in NewsType:
    print(
        f"{kind.value:>5} news: outlet {provider_payoff(outlet, kind, costs):+.2f}, "
        f"reader {consumer_payoff(reader, kind, costs):+.2f}, "
        f"segment {segment(kind).value}"
    )

print()
print("=== Harm erodes the deception premium ===")
params = HarmPayoffParams()  # 5 - 2h against a flat 3
cross = crossover_harm(params)
print(f"payoffs cross at harm level {cross}")
for h in (0, 0.5, 1, 2, 3):
    fake = harm_payoff(params, NewsType.FAKE, h)
    true = harm_payoff(params, NewsType.TRUE, h)
    mark = "<- deception still ahead" if fake > true else ""
    print(f"  harm {h}: deceive {fake:+.1f}  tell truth {true:+.1f} {mark}")

print()
print("=== Stable pairing of outlets and readers ===")
profile = balanced_profile(
    [
        ("blog", ["ana", "ben", "cal"]),
        ("herald", ["ben", "ana", "cal"]),
        ("wire", ["ana", "cal", "ben"]),
    ],
    [
        ("ana", ["wire", "herald", "blog"]),
        ("ben", ["herald", "blog", "wire"]),
        ("cal", ["blog", "wire", "herald"]),
    ],
)
match = gale_shapley(profile)
for provider, consumer in match.as_sorted_pairs():
    print(f"  {provider:>7} serves {consumer}")
check = is_stable(match, profile)
print(f"stable: {check.stable} (blocking pairs: {list(check.blocking_pairs)})")

print()
print("=== Marginal contribution of one outlet ===")
delta = marginal_contribution(profile, "wire", pair_count)
print(f"removing 'wire' changes the number of served readers by {delta}")
