"""The full property suite over a seeded corpus, as used by ``posmach check``."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..crumble import crumble
from ..machines import MACHINES
from ..syntax import parse_positive
from .checks import bisimulate, check_run, diamond_check, right_ctx_agreement, strategy_checks
from .generators import corpus

__all__ = ["PropertyResult", "run_suite", "DIAMOND_EXAMPLE"]

DIAMOND_EXAMPLE = r"z[x <- y y][z <- (\w.w) y'][y <- \x'.x']"


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"{verdict} {self.name}: {self.checked} checked, {len(self.failures)} failures ({self.seconds:.2f}s)"


def run_suite(seed: int = 0, corpus_n: int = 500, budget: int = 1000, diamond_n: int = 300,
              diamond_depth: int = 4) -> list[PropertyResult]:
    items = [(s, crumble(t)) for s, t in corpus(seed, corpus_n)]
    results = []

    def timed(res: PropertyResult, fn) -> None:
        t0 = time.perf_counter()
        fn(res)
        res.seconds = time.perf_counter() - t0
        results.append(res)

    def bisim(res: PropertyResult) -> None:
        for s, t in items:
            for m in MACHINES.values():
                rep = bisimulate(t, budget, m)
                res.checked += 1
                if not rep.ok:
                    res.failures.append(f"seed {s} ({m.name}): {rep.mismatches[:1]}")

    def diamond(res: PropertyResult) -> None:
        r = diamond_check(parse_positive(DIAMOND_EXAMPLE), 2)
        res.checked += 1
        if not r.ok:
            res.failures.append(f"example: {r.counterexample}")
        for s, t in items[:diamond_n]:
            r = diamond_check(t, diamond_depth)
            res.checked += 1
            if not r.ok:
                res.failures.append(f"seed {s}: {r.counterexample}")

    def strategy(res: PropertyResult) -> None:
        for s, t in items:
            res.checked += 1
            res.failures.extend(f"seed {s}: {p}" for p in strategy_checks(t, trace=200))

    def contexts(res: PropertyResult) -> None:
        ok, n, ce = right_ctx_agreement(4)
        res.checked = n
        if not ok:
            res.failures.append(f"disagreement on {ce}")

    def invariants(res: PropertyResult) -> None:
        for s, t in items:
            rc = check_run(t, budget)
            res.checked += 1
            res.failures.extend(f"seed {s}: {v}" for v in rc.violations)

    timed(PropertyResult("bisimulation"), bisim)
    timed(PropertyResult("diamond"), diamond)
    timed(PropertyResult("strategy"), strategy)
    timed(PropertyResult("right contexts"), contexts)
    timed(PropertyResult("invariants and bounds"), invariants)
    return results
