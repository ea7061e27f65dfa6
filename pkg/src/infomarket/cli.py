"""Command-line front end: run one subsystem of a scenario, emit one CSV.

Usage::

    infomarket <subcommand> --scenario path/to/file.scn --out outdir
               [--seed N] [--grid 0.0,0.5,1.0]

Subcommands: equilibrium, match, game, vote-fptp, vote-meek, dynamics,
sweep, path. Output lands in ``<out>/<scenario-name>_<subcommand>.csv`` and
is byte-identical across reruns with the same inputs and seed. Set the
``INFOMARKET_LOG`` environment variable (DEBUG, INFO, ...) for verbosity.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys

from . import analysis, dynamics, game, market, matching, voting
from .errors import InfoMarketError, ParseError
from .payoffs import HarmPayoffParams
from .scenario import Scenario, format_number, load_scenario, resolve_path

logger = logging.getLogger("infomarket")

SUBCOMMANDS = (
    "equilibrium",
    "match",
    "game",
    "vote-fptp",
    "vote-meek",
    "dynamics",
    "sweep",
    "path",
)


def _fmt(x) -> str:
    return format_number(x)


def _require_section(scenario: Scenario, attr: str, section: str):
    value = getattr(scenario, attr)
    if value is None:
        raise ParseError(f"scenario {scenario.name!r} has no [{section}] section")
    return value


def _run_equilibrium(scenario, ctx):
    section = _require_section(scenario, "market", "market.fake] / [market.true")
    rows = []
    for kind, params in ((market.NewsType.FAKE, section.fake),
                         (market.NewsType.TRUE, section.true)):
        eq = market.equilibrium_closed_form(params)
        rows.append([kind.value, _fmt(eq.price), _fmt(eq.quantity)])
    return ["kind", "price", "quantity"], rows


def _run_match(scenario, ctx):
    profile = _require_section(scenario, "matching", "matching")
    result = matching.gale_shapley(profile, proposing=matching.PROVIDERS)
    rows = []
    for p, c in result.as_sorted_pairs():
        rows.append([
            p,
            c,
            str(profile.provider_prefs[p].index(c) + 1),
            str(profile.consumer_prefs[c].index(p) + 1),
        ])
    return ["provider", "consumer", "provider_rank", "consumer_rank"], rows


def _run_game(scenario, ctx):
    section = _require_section(scenario, "game", "game")
    params = scenario.payoffs if scenario.payoffs is not None else HarmPayoffParams()
    strategies = [game.strategy_by_name(name) for name in section.strategies]
    table = game.run_tournament(
        strategies,
        params=params,
        rounds=section.rounds,
        harm_rule=section.harm_rule,
        total_audience=section.audience,
        seats=section.seats,
        acceptance_rule=game.AcceptanceRule(
            true_gain=section.true_acceptance, fake_gain=section.fake_acceptance
        ),
    )
    rows = [
        [
            r.strategy_a,
            r.strategy_b,
            str(r.rounds),
            _fmt(r.payoff_a),
            _fmt(r.payoff_b),
            "" if r.rounds_to_quota_a is None else str(r.rounds_to_quota_a),
            "" if r.rounds_to_quota_b is None else str(r.rounds_to_quota_b),
        ]
        for r in table
    ]
    header = [
        "strategy_a", "strategy_b", "rounds",
        "payoff_a", "payoff_b", "rounds_to_quota_a", "rounds_to_quota_b",
    ]
    return header, rows


def _load_ballots(scenario, ctx):
    section = _require_section(scenario, "voting", "voting")
    ballots = voting.load_ballot_file(resolve_path(ctx["scenario_path"], section.ballots))
    candidates = sorted({c for b in ballots for c in b.ranking})
    if not candidates:
        raise ParseError("ballot file holds no rankings")
    return section, ballots, candidates


def _run_vote_fptp(scenario, ctx):
    _, ballots, candidates = _load_ballots(scenario, ctx)
    totals = voting.first_preference_totals(ballots, candidates)
    result = voting.fptp_winner(totals)
    rows = []
    for cand in candidates:
        is_winner = cand == result.winner
        rows.append([
            cand,
            _fmt(totals[cand]),
            "1" if is_winner else "0",
            "1" if is_winner and result.tied else "0",
        ])
    return ["candidate", "first_preference_votes", "winner", "tied"], rows


def _run_vote_meek(scenario, ctx):
    section, ballots, candidates = _load_ballots(scenario, ctx)
    result = voting.meek_count(ballots, candidates, section.seats, section.tolerance)
    status = {c: "hopeful" for c in candidates}
    rows = []
    for round_no, rnd in enumerate(result.rounds, start=1):
        for event in rnd.events:
            status[event.candidate] = event.kind.value
        for cand in candidates:
            rows.append([
                str(round_no),
                cand,
                _fmt(rnd.totals[cand]),
                _fmt(rnd.keep_factors[cand]),
                _fmt(rnd.quota),
                _fmt(rnd.exhausted),
                status[cand],
            ])
    header = ["round", "candidate", "total", "keep_factor", "quota", "exhausted", "status"]
    return header, rows


def _run_dynamics(scenario, ctx):
    section = _require_section(scenario, "dynamics", "dynamics")
    rows = []
    for decay in section.decay_grid:
        params = dynamics.RetentionParams(initial=section.initial_retention, decay=decay)
        for t in range(section.horizon + 1):
            rows.append(["retention", _fmt(decay), str(t), _fmt(dynamics.retention(params, t))])
    curves = (
        ("diminishing_utility", dynamics.diminishing_curve(section.diminishing_scale)),
        ("compounding_utility",
         dynamics.compounding_curve(section.compounding_scale, section.compounding_exponent)),
    )
    for label, curve in curves:
        for k in range(section.horizon + 1):
            rows.append([label, "", str(k), _fmt(dynamics.utility(curve, k))])
        marginal_label = label.replace("_utility", "_marginal")
        for k in range(section.horizon):
            rows.append([
                marginal_label, "", str(k),
                _fmt(dynamics.info_marginal_contribution(curve, k)),
            ])
    return ["series", "parameter", "x", "value"], rows


def _run_sweep(scenario, ctx):
    section = _require_section(scenario, "market", "market.fake] / [market.true")
    analysis_section = _require_section(scenario, "analysis", "analysis")
    grid = ctx["grid"] if ctx["grid"] is not None else analysis_section.reliability_grid
    if not grid:
        raise ParseError("no reliability grid: set [analysis] reliability_grid or pass --grid")
    base = analysis.MarketScenario(fake=section.fake, true=section.true)
    changed = analysis.MarketScenario(
        fake=analysis_section.changed_fake or section.fake,
        true=analysis_section.changed_true or section.true,
    )
    before, after = analysis.comparative_sweep(base, changed, grid)
    rows = []
    for i, (r, h_before) in enumerate(before.points):
        h_after = after.points[i][1]
        marginal = "" if i == 0 else _fmt(h_after - after.points[i - 1][1])
        rows.append([_fmt(r), _fmt(h_before), _fmt(h_after), marginal])
    return ["reliability", "health_before", "health_after", "marginal"], rows


def _run_path(scenario, ctx):
    section = _require_section(scenario, "analysis", "analysis")
    if not (section.graph and section.source and section.target):
        raise ParseError("[analysis] needs graph, source and target for the path subcommand")
    graph = analysis.load_spread_graph(resolve_path(ctx["scenario_path"], section.graph))
    cost, path = analysis.min_cost_spread_path(graph, section.source, section.target)
    return ["total_cost", "path"], [[_fmt(cost), ">".join(path)]]


_RUNNERS = {
    "equilibrium": _run_equilibrium,
    "match": _run_match,
    "game": _run_game,
    "vote-fptp": _run_vote_fptp,
    "vote-meek": _run_vote_meek,
    "dynamics": _run_dynamics,
    "sweep": _run_sweep,
    "path": _run_path,
}


def _parse_grid(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"--grid expects comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infomarket",
        description="Deterministic information-market simulations, one CSV per run.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=f"run the {name} pipeline of a scenario")
        p.add_argument("--scenario", required=True, help="scenario file path")
        p.add_argument("--out", required=True, help="output directory for the CSV")
        p.add_argument("--seed", type=int, default=None, help="override the scenario seed")
        p.add_argument("--grid", default=None,
                       help="comma-separated reliability grid (sweep only)")
    return parser


def main(argv=None) -> int:
    level = os.environ.get("INFOMARKET_LOG", "WARNING").upper()
    logging.basicConfig(level=level if hasattr(logging, level) else logging.WARNING)
    args = build_parser().parse_args(argv)
    try:
        scenario = load_scenario(args.scenario)
        seed = args.seed if args.seed is not None else scenario.seed
        if seed < 0:
            raise ParseError(f"--seed must be >= 0, got {seed}")
        ctx = {
            "scenario_path": args.scenario,
            "seed": seed,
            "grid": _parse_grid(args.grid) if args.grid is not None else None,
        }
        logger.info("running %s on scenario %s (seed %d)", args.subcommand, scenario.name, seed)
        header, rows = _RUNNERS[args.subcommand](scenario, ctx)
    except InfoMarketError as exc:
        print(f"error [{exc.module}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error [input]: {exc}", file=sys.stderr)
        return 1
    os.makedirs(args.out, exist_ok=True)
    out_path = os.path.join(args.out, f"{scenario.name}_{args.subcommand}.csv")
    with open(out_path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    logger.info("wrote %s", out_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
