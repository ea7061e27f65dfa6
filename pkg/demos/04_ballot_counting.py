"""Counting ranked ballots three ways: plurality, quota, surplus transfer.

The same twenty ballots are tallied by first preferences (plurality), held
against the whole-vote quota, and finally run through the full multi-seat
count where elected candidates keep only the fraction of each arriving
ballot they need and pass the surplus down-ballot.
"""

from infomarket.voting import (
    Ballot,
    droop_quota,
    first_preference_totals,
    fptp_winner,
    meek_count,
    parse_ballots,
)

BALLOT_TEXT = """\
# twenty ballots over three outlets
10 : A > B
6 : B
4 : C > B
"""

ballots = parse_ballots(BALLOT_TEXT.splitlines())
candidates = sorted({c for b in ballots for c in b.ranking})
total = sum(b.weight for b in ballots)

print("=== First preferences (plurality) ===")
totals = first_preference_totals(ballots, candidates)
for cand in candidates:
    print(f"  {cand}: {totals[cand]:.0f}")
result = fptp_winner(totals)
print(f"plurality winner: {result.winner} (tied: {result.tied})")

print()
print("=== Whole-vote quota ===")
for seats in (1, 2):
    print(f"  {total:.0f} votes, {seats} seat(s): quota {droop_quota(total, seats)}")

print()
print("=== Full two-seat count with surplus transfers ===")
outcome = meek_count(ballots, candidates, seats=2)
for i, rnd in enumerate(outcome.rounds, start=1):
    shares = ", ".join(f"{cand} {rnd.totals[cand]:.4f}" for cand in candidates)
    happened = "; ".join(
        f"{event.candidate} {event.kind.value}{' (tie broken)' if event.tied else ''}"
        for event in rnd.events
    )
    print(f"  stage {i}: {shares} | quota {rnd.quota:.4f} | exhausted {rnd.exhausted:.4f}")
    if happened:
        print(f"           {happened}")
print(f"winners: {', '.join(outcome.winners)}")
print("final keep factors: "
      + ", ".join(f"{cand} {outcome.keep_factors[cand]:.6f}" for cand in candidates))
print("(the front runner keeps only 40% of each ballot; the rest flowed onward)")

print()
print("=== A dead heat resolved by exclusion ===")
tied = [Ballot(("A",), 3.0), Ballot(("B",), 3.0), Ballot(("C",), 3.0)]
outcome = meek_count(tied, ["A", "B", "C"], seats=2)
print(f"three equal camps, two seats: winners {', '.join(outcome.winners)} "
      f"(tie flagged: {outcome.tie_flagged})")
