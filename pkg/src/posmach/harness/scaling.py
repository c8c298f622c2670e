"""Natural versus sliced machine: cumulative principal cost under doubling budgets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..machines import NATURAL, PRINCIPAL, SLICED, RunReport, run_machine
from ..syntax import PositiveTerm, size

__all__ = ["ScalingRow", "ScalingReport", "scaling_experiment", "bilinear_constant"]


@dataclass(frozen=True)
class ScalingRow:
    budget: int
    natural_cost: int
    sliced_cost: int
    natural_max_m: int      # most expensive single m transition
    sliced_max_m: int


@dataclass
class ScalingReport:
    initial_size: int
    rows: list[ScalingRow] = field(default_factory=list)

    @staticmethod
    def _ratios(costs: list[int]) -> list[float | None]:
        return [b / a if a else None for a, b in zip(costs, costs[1:])]

    @property
    def natural_ratios(self) -> list[float | None]:
        return self._ratios([r.natural_cost for r in self.rows])

    @property
    def sliced_ratios(self) -> list[float | None]:
        return self._ratios([r.sliced_cost for r in self.rows])

    def table(self) -> str:
        lines = [f"|t0| = {self.initial_size}",
                 f"{'budget':>8} {'natural':>12} {'ratio':>7} {'sliced':>10} {'ratio':>7} {'nat max m':>10} {'sl max m':>9}"]
        nr = [None] + self.natural_ratios
        sr = [None] + self.sliced_ratios
        fmt = lambda r: f"{r:7.3f}" if r is not None else f"{'-':>7}"
        for row, a, b in zip(self.rows, nr, sr):
            lines.append(f"{row.budget:>8} {row.natural_cost:>12} {fmt(a)} {row.sliced_cost:>10} {fmt(b)}"
                         f" {row.natural_max_m:>10} {row.sliced_max_m:>9}")
        return "\n".join(lines)

    def as_records(self) -> list[dict]:
        out = []
        nr = [None] + self.natural_ratios
        sr = [None] + self.sliced_ratios
        for row, a, b in zip(self.rows, nr, sr):
            out.append({"budget": row.budget, "natural_cost": row.natural_cost, "sliced_cost": row.sliced_cost,
                        "natural_ratio": a, "sliced_ratio": b, "natural_max_m": row.natural_max_m,
                        "sliced_max_m": row.sliced_max_m, "term_size": self.initial_size})
        return out


def _principal(report: RunReport) -> tuple[int, int]:
    costs = [c for l, c in report.cost_samples if l in PRINCIPAL]
    m = [c for l, c in report.cost_samples if l == "m"]
    return sum(costs), max(m, default=0)


def scaling_experiment(family: PositiveTerm | Callable[[], PositiveTerm], budgets: Sequence[int]) -> ScalingReport:
    """Run both machines on one term for each principal budget."""
    t = family() if callable(family) else family
    budgets = list(budgets)
    if any(b < 0 for b in budgets) or any(a >= b for a, b in zip(budgets, budgets[1:])):
        raise ValueError("budgets must be non-negative and strictly increasing")
    rep = ScalingReport(size(t))
    for k in budgets:
        nc, nm = _principal(run_machine(NATURAL, t, k))
        sc, sm = _principal(run_machine(SLICED, t, k))
        rep.rows.append(ScalingRow(k, nc, sc, nm, sm))
    return rep


def bilinear_constant(report: RunReport) -> float:
    """Total cost of a run over ``|t0| * (|m| + 1)``."""
    return sum(c for _, c in report.cost_samples) / (report.initial_size * (report.count("m") + 1))
