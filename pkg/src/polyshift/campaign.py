"""Seeded fuzz campaigns over instance families and laws.

A campaign fans a deterministic stream of instances over the selected law
checkers, folds the verdicts into per-law per-family tallies and re-verifies
every counterexample from its serialized payload before reporting it.
Tallies are reproducible byte for byte; wall-clock timings are reported
separately and excluded from the reproducible section.
"""

from __future__ import annotations

import json
import os
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .generators import FAMILIES, InstanceRecipe, generate
from .laws import EXHAUSTED, FAILS, LAWS, reverify, run_law

_I_PARAMETERIZED = {"gen-degrees", "strong-persistence", "ass-chain", "stabilization"}
_K_PARAMETERIZED = _I_PARAMETERIZED | {
    "hs1-product",
    "betti-monotone",
    "depth-monotone",
    "reg-v-linear",
}
_POLYMATROIDAL_ONLY = {
    "hs-polymatroidal",
    "hs1-product",
    "gen-degrees",
    "strong-persistence",
    "ass-chain",
    "betti-monotone",
    "depth-monotone",
    "reg-v-linear",
    "stabilization",
}
_LINEAR_ONLY = {"socle-recovery", "top-socle"}
_COMPONENTWISE_ONLY = {"componentwise-closure"}


def threads_from_env(default=1) -> int:
    raw = os.environ.get("POLYSHIFT_THREADS", "")
    try:
        return max(1, int(raw)) if raw else default
    except ValueError:
        return default


@dataclass(frozen=True)
class CampaignConfig:
    families: tuple = ("veronese", "borel", "multipartite-edge", "transversal-product")
    count: int = 50
    seed: int = 0
    laws: tuple = ("hs-polymatroidal", "hs1-product")
    i_list: tuple = (1, 2)
    k_max: int = 3
    n_max: int = 4
    threads: int = 1

    def to_json(self) -> dict:
        return {
            "families": list(self.families),
            "count": self.count,
            "seed": self.seed,
            "laws": list(self.laws),
            "i_list": list(self.i_list),
            "k_max": self.k_max,
            "n_max": self.n_max,
        }

    @classmethod
    def from_json(cls, data) -> "CampaignConfig":
        if isinstance(data, str):
            data = json.loads(data)
        kw = {k: tuple(v) if isinstance(v, list) else v for k, v in data.items()}
        kw.pop("threads", None)
        return cls(**kw)


@dataclass
class CampaignReport:
    config: CampaignConfig
    tallies: dict
    counterexamples: list
    timings: dict
    environment: dict

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "tallies": self.tallies,
            "counterexamples": self.counterexamples,
            "timings": self.timings,
            "environment": self.environment,
        }

    def tallies_json(self) -> str:
        """Canonical reproducible section: config, tallies, counterexamples."""
        return json.dumps(
            {
                "config": self.config.to_json(),
                "tallies": self.tallies,
                "counterexamples": self.counterexamples,
            },
            sort_keys=True,
            separators=(",", ":"),
        )

    def verdict_lines(self, verdicts) -> str:
        return "\n".join(json.dumps(v, sort_keys=True) for v in verdicts)

    def summary_markdown(self) -> str:
        lines = [
            "| law | family | holds | fails | exhausted | observed | worst wall (s) |",
            "|---|---|---|---|---|---|---|",
        ]
        for law in sorted(self.tallies):
            for fam in sorted(self.tallies[law]):
                t = self.tallies[law][fam]
                worst = self.timings.get("worst", {}).get(f"{law}/{fam}", 0.0)
                lines.append(
                    f"| {law} | {fam} | {t.get('holds-in-range', 0)} | "
                    f"{t.get('fails-with-counterexample', 0)} | {t.get('resource-exhausted', 0)} | "
                    f"{t.get('observed', 0)} | {worst:.3f} |"
                )
        total = sum(sum(t.values()) for fams in self.tallies.values() for t in fams.values())
        lines.append("")
        lines.append(f"{total} verdicts, {len(self.counterexamples)} counterexample(s).")
        return "\n".join(lines)

    def summary_csv(self) -> str:
        lines = ["law,family,holds,fails,exhausted,observed"]
        for law in sorted(self.tallies):
            for fam in sorted(self.tallies[law]):
                t = self.tallies[law][fam]
                lines.append(
                    f"{law},{fam},{t.get('holds-in-range', 0)},{t.get('fails-with-counterexample', 0)},"
                    f"{t.get('resource-exhausted', 0)},{t.get('observed', 0)}"
                )
        return "\n".join(lines)


def _law_calls(config: CampaignConfig, law_id: str):
    """Parameter sets a law runs with inside one campaign."""
    calls = []
    if law_id in _I_PARAMETERIZED:
        for i in config.i_list:
            calls.append({"i": i, "k_max": config.k_max})
    elif law_id in _K_PARAMETERIZED:
        calls.append({"k_max": config.k_max})
    else:
        calls.append({})
    return calls


def _run_instance(payload):
    """Worker: evaluate all requested laws on one instance index."""
    config_json, idx = payload
    config = CampaignConfig.from_json(config_json)
    family = config.families[idx % len(config.families)]
    recipe = InstanceRecipe(family, {"n_max": config.n_max}, seed=config.seed * 1_000_003 + idx)
    ideal = generate(recipe)
    out = []
    from .polymatroids import is_componentwise_polymatroidal, is_polymatroidal
    from .resolution import has_linear_resolution

    poly = is_polymatroidal(ideal)
    for law_id in config.laws:
        if law_id in _POLYMATROIDAL_ONLY and not poly:
            continue
        if law_id in _LINEAR_ONLY and not (poly or has_linear_resolution(ideal)):
            continue
        if law_id in _COMPONENTWISE_ONLY and not (poly or is_componentwise_polymatroidal(ideal)):
            continue
        for kwargs in _law_calls(config, law_id):
            verdict = run_law(law_id, ideal, **kwargs)
            vj = verdict.to_json()
            vj["family"] = family
            vj["index"] = idx
            vj["recipe"] = recipe.to_json()
            out.append(vj)
    return out


def run_campaign(config: CampaignConfig, verdict_sink=None) -> CampaignReport:
    """Execute the campaign; deterministic fold ordered by instance index.

    verdict_sink, when given, receives every verdict dict in order (for
    JSON-lines streaming).
    """
    t0 = time.time()
    payloads = [(config.to_json(), idx) for idx in range(config.count)]
    if config.threads > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            per_instance = list(pool.map(_run_instance, payloads, chunksize=4))
    else:
        per_instance = [_run_instance(p) for p in payloads]

    tallies = {}
    counterexamples = []
    worst = {}
    for verdicts in per_instance:
        for vj in verdicts:
            law, fam = vj["law"], vj["family"]
            tallies.setdefault(law, {}).setdefault(fam, {})
            tallies[law][fam][vj["status"]] = tallies[law][fam].get(vj["status"], 0) + 1
            wall = vj["cost"].get("wall_s", 0.0)
            key = f"{law}/{fam}"
            worst[key] = max(worst.get(key, 0.0), wall)
            if vj["status"] == FAILS:
                clean = {k: v for k, v in vj.items() if k != "cost"}
                clean["reverified"] = bool(reverify(vj))
                counterexamples.append(clean)
            if verdict_sink is not None:
                verdict_sink(vj)

    report = CampaignReport(
        config=config,
        tallies=tallies,
        counterexamples=counterexamples,
        timings={"total_s": round(time.time() - t0, 3), "worst": {k: round(v, 6) for k, v in worst.items()}},
        environment={
            "python": sys.version.split()[0],
            "platform": platform.platform(),
            "package": "polyshift 0.1.0",
        },
    )
    return report


def exit_code_for(report: CampaignReport) -> int:
    """0 all passed, 1 counterexample found, 3 resource exhaustion only."""
    if report.counterexamples:
        return 1
    exhausted = sum(
        t.get(EXHAUSTED, 0) for fams in report.tallies.values() for t in fams.values()
    )
    return 3 if exhausted else 0
