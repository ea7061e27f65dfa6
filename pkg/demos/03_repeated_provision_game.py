"""The repeated provision game: strategies, harm, and the audience quota.

Two outlets repeatedly choose truthful or deceptive coverage. Deception pays
5 at first but each unit of accumulated harm knocks 2 off, while truth pays
a flat 3, so deceivers undercut themselves after the crossover. Acceptance
accrues every round (deceptive stories spread a bit faster) and crossing the
quota threshold marks the point where an outlet's narrative sticks.
"""

from infomarket.game import (
    AcceptanceRule,
    Action,
    StageGame,
    harm_stage_game,
    max_compensation,
    nash_equilibria,
    play_iterated,
    rounds_to_quota,
    run_tournament,
    strategy_by_name,
)
from infomarket.payoffs import HarmPayoffParams
from infomarket.voting import droop_quota

params = HarmPayoffParams()

print("=== One deceiver, round by round ===")
state = play_iterated(
    (strategy_by_name("AlwaysFake"), strategy_by_name("AlwaysTrue")), params, rounds=6
)
for r, payoff in enumerate(state.round_payoffs[0]):
    print(f"  round {r}: deceiver earns {payoff:+.1f}")
print(f"cumulative: deceiver {state.cumulative_payoffs[0]:+.1f}, "
      f"truth teller {state.cumulative_payoffs[1]:+.1f}")

print()
print("=== Tournament over the built-in strategies ===")
names = ("AlwaysTrue", "AlwaysFake", "TitForTat", "GrimTrigger")
rows = run_tournament([strategy_by_name(n) for n in names], params, rounds=15)
print(f"{'pairing':<28} {'payoffs':>16} {'rounds to quota'}")
for row in rows:
    quota_a = row.rounds_to_quota_a if row.rounds_to_quota_a else "never"
    quota_b = row.rounds_to_quota_b if row.rounds_to_quota_b else "never"
    print(
        f"{row.strategy_a + ' vs ' + row.strategy_b:<28} "
        f"{row.payoff_a:>7.1f} {row.payoff_b:>7.1f}  {quota_a} / {quota_b}"
    )

print()
print("=== The quota threshold ===")
audience, seats = 100.0, 2
print(f"audience {audience:.0f}, {seats} seats: quota {droop_quota(audience, seats)}")
rule = AcceptanceRule()
state = play_iterated(
    (strategy_by_name("AlwaysFake"), strategy_by_name("AlwaysTrue")),
    params, rounds=20, acceptance_rule=rule,
)
for player, label in ((0, "deceiver"), (1, "truth teller")):
    reached = rounds_to_quota(state, player, audience, seats)
    print(f"  {label} reaches the quota at round {reached if reached else 'never'}")

print()
print("=== Stage-game equilibria ===")
fresh = harm_stage_game(params)  # nobody has harmed themselves yet
burned = harm_stage_game(params, row_harm=2.0, col_harm=2.0)
fmt = lambda eqs: [f"({a.value}, {b.value})" for a, b in eqs]
print(f"at zero harm:   {fmt(nash_equilibria(fresh))}")
print(f"after harm 2.0: {fmt(nash_equilibria(burned))}")

pd = StageGame({
    (Action.TRUE, Action.TRUE): (3, 3),
    (Action.TRUE, Action.FAKE): (0, 5),
    (Action.FAKE, Action.TRUE): (5, 0),
    (Action.FAKE, Action.FAKE): (1, 1),
})
print(f"the classic dilemma shape: {fmt(nash_equilibria(pd))}")

print()
print("=== Who would pay the most for truth ===")
offers = [("p1", HarmPayoffParams(truth_payoff=3)), ("p2", HarmPayoffParams(truth_payoff=4))]
best = max_compensation(offers)
print(f"highest truthful payoff: {best.provider} (tied: {best.tied})")
