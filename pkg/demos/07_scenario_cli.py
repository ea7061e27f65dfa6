"""Driving everything through one scenario file and the CLI.

A scenario binds market coefficients, payoffs, a preference profile, a game
configuration, ballots, curve parameters and a spread graph into a single
text file. Each CLI subcommand consumes the relevant section and writes one
CSV; identical inputs always reproduce identical bytes.
"""

import tempfile
from pathlib import Path

from infomarket.cli import SUBCOMMANDS, main
from infomarket.scenario import load_scenario, serialize_scenario

scenario_path = Path(__file__).resolve().parent.parent / "scenarios" / "newsroom.scn"
scenario = load_scenario(scenario_path)

print("=== The scenario, round-tripped through the canonical serializer ===")
print(serialize_scenario(scenario))

with tempfile.TemporaryDirectory() as tmp:
    print("=== One CSV per subcommand ===")
    for subcommand in SUBCOMMANDS:
        code = main([subcommand, "--scenario", str(scenario_path), "--out", tmp])
        out = Path(tmp) / f"{scenario.name}_{subcommand}.csv"
        lines = out.read_text().splitlines()
        print(f"$ infomarket {subcommand} ... -> {out.name} (exit {code}, {len(lines)} lines)")
        for line in lines[:3]:
            print(f"    {line}")
        if len(lines) > 3:
            print(f"    ... {len(lines) - 3} more")
        print()

print("rerunning any of these reproduces the files byte for byte")
