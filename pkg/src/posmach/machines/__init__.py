"""The natural and the sliced positive machines."""
from __future__ import annotations

from ..syntax import NameSupply, PositiveTerm
from .core import (
    LABELS, PRINCIPAL, SEARCH, Environment, Machine, RunReport, Step, iterate, run_machine, show_env,
)
from .natural import (
    NATURAL, NaturalState, natural_init, natural_peek, natural_read_back, natural_step, show_natural,
)
from .sliced import (
    SLICED, Slice, SliceStack, SlicedState, check_state_invariants, read_back, read_back_env,
    show_sliced, sliced_init, sliced_peek, sliced_step,
)

MACHINES = {"natural": NATURAL, "sliced": SLICED}


def natural_run(t: PositiveTerm, budget: int, supply: NameSupply | None = None, observer=None) -> RunReport:
    return run_machine(NATURAL, t, budget, supply, observer)


def sliced_run(t: PositiveTerm, budget: int, supply: NameSupply | None = None, observer=None) -> RunReport:
    return run_machine(SLICED, t, budget, supply, observer)


def trace_lines(machine: Machine, t: PositiveTerm, budget: int, supply: NameSupply | None = None) -> list[str]:
    """One line for the initial state, then one per transition: ``label | state``."""
    if supply is None:
        supply = NameSupply.above(t)
    state = machine.init(t, supply)
    lines = [f"init | {machine.show_state(state)}"]
    for _, step in iterate(machine, state, supply, budget):
        lines.append(f"{step.label} | {machine.show_state(step.state)}")
    return lines


def metrics(report: RunReport, readback: bool = True) -> dict:
    """The run as a flat, JSON-ready record."""
    counts = {l: report.count(l) for l in ("m", "e", "sea1", "sea2", "sea3")}
    rename = report.cost("m", "sea3")
    copy = report.cost("e")
    search = report.cost("sea1", "sea2")
    rb = None
    if readback:
        rb = str(MACHINES[report.machine].read_back(report.final))
    return {
        "machine": report.machine,
        "term_size": report.initial_size,
        "counts": counts,
        "cost": {"rename": rename, "copy": copy, "search": search, "total": rename + copy + search},
        "status": report.status,
        "readback": rb,
    }


__all__ = [
    "LABELS", "PRINCIPAL", "SEARCH", "Environment", "Machine", "RunReport", "Step", "iterate",
    "run_machine", "show_env", "NATURAL", "NaturalState", "natural_init", "natural_peek",
    "natural_read_back", "natural_step", "show_natural", "SLICED", "Slice", "SliceStack",
    "SlicedState", "check_state_invariants", "read_back", "read_back_env", "show_sliced",
    "sliced_init", "sliced_peek", "sliced_step", "MACHINES", "natural_run", "sliced_run",
    "trace_lines", "metrics",
]
