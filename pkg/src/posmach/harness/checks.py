"""Executable versions of the correctness and complexity properties."""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Literal

from ..calculus import enumerate_redexes, is_right_io, is_right_oi, right_redex
from ..machines import (
    PRINCIPAL, SLICED, Machine, RunReport, SlicedState, check_state_invariants,
    run_machine,
)
from ..syntax import (
    Abs, Bite, ES, NameSupply, OpenContext, PositiveTerm, RedexApp, Var, VarApp, VarId,
    alpha_eq, canonical, named, size,
)

__all__ = [
    "BisimReport", "bisimulate", "diamond_check", "DiamondResult", "strategy_checks",
    "right_ctx_agreement", "check_bounds", "check_run", "RunCheck",
]


@dataclass
class BisimReport:
    machine: str
    steps_checked: int = 0
    label_counts_strategy: Counter = field(default_factory=Counter)
    label_counts_machine: Counter = field(default_factory=Counter)
    mismatches: list[tuple[int, str, str]] = field(default_factory=list)
    halted: bool = False

    @property
    def status(self) -> Literal["pass", "fail"]:
        same = all(self.label_counts_strategy[a] == self.label_counts_machine[a] for a in PRINCIPAL)
        return "pass" if same and not self.mismatches else "fail"

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def bisimulate(t: PositiveTerm, budget: int, machine: Machine = SLICED) -> BisimReport:
    """Run ``machine`` and the right strategy in lockstep.

    Each principal transition must be matched by one strategy step with the
    same label and an alpha-equal read-back; search transitions must leave
    the read-back unchanged; a final state must read back to a normal term.
    """
    rep = BisimReport(machine.name)
    supply = NameSupply.above(t)
    state = machine.init(t, supply)
    current = machine.read_back(state)
    if not alpha_eq(current, t):
        rep.mismatches.append((0, "readback", "initial state does not read back to the term"))
        return rep
    strategy_term = current
    principal = 0
    while True:
        label = machine.peek(state)
        if label is None:
            rep.halted = True
            if right_redex(strategy_term) is not None:
                rep.mismatches.append((rep.steps_checked, "halt", f"final state but {strategy_term} has a redex"))
            break
        if label in PRINCIPAL:
            if principal >= budget:
                break
            principal += 1
        # the strategy draws fresh names from where the machine starts, so
        # read-backs usually agree on the nose and alpha_eq is a fallback
        start = supply.next_id
        step = machine.step(state, supply)
        rep.steps_checked += 1
        i = rep.steps_checked
        after = machine.read_back(step.state)
        if step.label in PRINCIPAL:
            rep.label_counts_machine[step.label] += 1
            r = right_redex(strategy_term, assume_clean=True)
            if r is None:
                rep.mismatches.append((i, "label", f"{step.label} transition on a normal term"))
                break
            rep.label_counts_strategy[r.label] += 1
            strategy_term = r.reduct(NameSupply(start))
            if r.label != step.label:
                rep.mismatches.append((i, "label", f"machine {step.label}, strategy {r.label}"))
                break
            if strategy_term != after and not alpha_eq(strategy_term, after):
                rep.mismatches.append((i, "readback", f"{after} vs {strategy_term}"))
                break
        elif after != current:
            rep.mismatches.append((i, "readback", f"{step.label} changed {current} into {after}"))
            break
        current = after
        state = step.state
    return rep


# ------------------------------------------------------------------ diamond

@dataclass
class DiamondResult:
    ok: bool
    terms_checked: int
    counterexample: tuple | None = None


def diamond_check(t: PositiveTerm, depth: int = 4, size_cap: int = 80) -> DiamondResult:
    """At every term reachable in ``depth`` steps, any two distinct reducts join in one step each."""
    reducts_memo: dict[tuple, dict[tuple, PositiveTerm]] = {}

    def reducts(u: PositiveTerm) -> dict[tuple, PositiveTerm]:
        key = canonical(u)
        got = reducts_memo.get(key)
        if got is None:
            supply = NameSupply.above(u)
            got = {}
            for r in enumerate_redexes(u):
                v = r.reduct(supply)
                got.setdefault(canonical(v), v)
            reducts_memo[key] = got
        return got

    frontier = {canonical(t): t}
    seen = set(frontier)
    checked = 0
    for level in range(depth + 1):
        nxt = {}
        for u in frontier.values():
            if size(u) > size_cap:
                continue
            checked += 1
            rs = reducts(u)
            for (k1, u1), (k2, u2) in itertools.combinations(rs.items(), 2):
                if size(u1) > size_cap or size(u2) > size_cap:
                    continue
                if not reducts(u1).keys() & reducts(u2).keys():
                    return DiamondResult(False, checked, (u, u1, u2))
            if level < depth:
                for k, v in rs.items():
                    if k not in seen:
                        seen.add(k)
                        nxt[k] = v
        frontier = nxt
    return DiamondResult(True, checked)


# ----------------------------------------------------------------- strategy

def _strategy_problems(u: PositiveTerm) -> tuple[list[str], list]:
    redexes = enumerate_redexes(u)
    problems = []
    right = []
    for r in redexes:
        pos = r.position
        oi = is_right_oi(pos)
        if oi != is_right_io(pos):
            problems.append(f"right-context definitions disagree on {pos}")
        if oi:
            right.append(r)
    if len(right) > 1:
        problems.append(f"{len(right)} right redexes in {u}")
    if redexes and not right:
        problems.append(f"no right redex in non-normal {u}")
    chosen = right_redex(u)
    if (chosen is None) != (not right) or (right and chosen.depth != right[0].depth):
        problems.append(f"strategy picks the wrong redex in {u}")
    return problems, redexes


def strategy_checks(t: PositiveTerm, depth: int = 3, limit: int = 200, trace: int = 0) -> list[str]:
    """Determinism and no premature stops of the right strategy.

    Checked on every term reachable from ``t`` in ``depth`` steps of any kind
    (at most ``limit`` of them), and on the first ``trace`` terms of the right
    evaluation of ``t``.  Rightness of positions is decided by the outside-in
    definition, and compared with the inside-out one and with the strategy's
    own choice.
    """
    problems: list[str] = []
    u = t
    supply = NameSupply.above(t)
    for _ in range(trace):
        found, _ = _strategy_problems(u)
        problems.extend(found)
        r = right_redex(u)
        if r is None:
            break
        u = r.reduct(supply)
    frontier = [t]
    seen = {canonical(t)}
    for level in range(depth + 1):
        nxt = []
        for u in frontier:
            found, redexes = _strategy_problems(u)
            problems.extend(found)
            if level < depth:
                supply = NameSupply.above(u)
                for r in redexes:
                    v = r.reduct(supply)
                    k = canonical(v)
                    if k not in seen and len(seen) < limit:
                        seen.add(k)
                        nxt.append(v)
        frontier = nxt
    return problems


# ------------------------------------------------------------ right contexts

def default_bites(alphabet: Iterable[VarId]) -> list[Bite]:
    """Bites differing in what the right-context definitions inspect.

    Both definitions only look at the shape of a bite and at the applied
    variable of ``y z``, so bodies and arguments are fixed to one variable.
    """
    c = named("c")
    body = Var(c)
    return [VarApp(y, c) for y in alphabet] + [Abs(c, body), RedexApp(Abs(c, body), c)]


def right_ctx_agreement(max_entries: int = 4, alphabet: Iterable[VarId] | None = None,
                        bites: list[Bite] | None = None) -> tuple[bool, int, OpenContext | None]:
    """Compare the two right-context definitions on every context up to ``max_entries`` entries.

    Returns ``(ok, contexts_checked, first_counterexample)``.
    """
    alphabet = list(alphabet) if alphabet is not None else [named(s) for s in ("x", "y", "z")]
    if bites is None:
        bites = default_bites(alphabet)
    entries = [(x, b) for x in alphabet for b in bites]
    checked = 0
    for n in range(max_entries + 1):
        for combo in itertools.product(entries, repeat=n):
            O = OpenContext(combo)
            checked += 1
            if is_right_oi(O) != is_right_io(O):
                return False, checked, O
    return True, checked, None


def random_contexts(seed: int, count: int, max_entries: int = 6) -> Iterable[OpenContext]:
    """Contexts over the full bite grammar with small random bodies."""
    rng = random.Random(seed)
    names = [named(s) for s in ("x", "y", "z", "w")]

    def term(d: int):
        t = Var(rng.choice(names))
        for _ in range(rng.randint(0, 2 if d else 0)):
            t = ES(t, rng.choice(names), bite(d - 1))
        return t

    def bite(d: int) -> Bite:
        k = rng.randrange(3) if d >= 0 else 0
        if k == 0:
            return VarApp(rng.choice(names), rng.choice(names))
        if k == 1:
            return Abs(rng.choice(names), term(d))
        return RedexApp(Abs(rng.choice(names), term(d)), rng.choice(names))

    for _ in range(count):
        yield OpenContext(tuple((rng.choice(names), bite(1)) for _ in range(rng.randint(0, max_entries))))


# ------------------------------------------------------------------- bounds

def check_bounds(report: RunReport) -> list[str]:
    """Transition-count and per-transition cost bounds of a sliced run."""
    problems = []
    n = report.initial_size
    m, e = report.count("m"), report.count("e")
    s1, s2, s3 = report.count("sea1"), report.count("sea2"), report.count("sea3")
    if e > m + 1:
        problems.append(f"|e| = {e} > |m| + 1 = {m + 1}")
    if s3 > m:
        problems.append(f"|sea3| = {s3} > |m| = {m}")
    if s1 + s2 > n * (e + s3 + 1):
        problems.append(f"|sea1| + |sea2| = {s1 + s2} > {n} * {e + s3 + 1}")
    for i, (label, cost) in enumerate(report.cost_samples):
        if label in ("e", "m", "sea3") and cost > n:
            problems.append(f"transition {i} ({label}) costs {cost} > {n}")
        if label in ("sea1", "sea2") and cost != 1:
            problems.append(f"transition {i} ({label}) costs {cost} != 1")
    return problems


@dataclass
class RunCheck:
    report: RunReport
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_run(t: PositiveTerm, budget: int) -> RunCheck:
    """Run the sliced machine checking every state on the way.

    Besides the state invariants, each burst of search transitions must be
    no longer than the active slice plus the slice bodies at its start, and
    a final state must be ``(ε, x, E)`` reading back to a normal term.
    """
    violations: list[str] = []
    n = size(t)
    burst = [0, None]

    def measure(s: SlicedState) -> int:
        return size(s.active) + sum(size(sl.body) for sl in s.stack)

    def observe(src, step) -> None:
        if burst[1] is None:
            burst[1] = measure(src)
            v = check_state_invariants(src, n)
            violations.extend(f"initial state: {p}" for p in v)
        i = len(labels)
        labels.append(step.label)
        for p in check_state_invariants(step.state, n, after_e=step.label == "e"):
            violations.append(f"after transition {i} ({step.label}): {p}")
        if step.label in PRINCIPAL:
            burst[0] = 0
            burst[1] = measure(step.state)
        else:
            burst[0] += 1
            if burst[0] > burst[1]:
                violations.append(f"search burst longer than {burst[1]} at transition {i}")

    labels: list[str] = []
    report = run_machine(SLICED, t, budget, observer=observe)
    if burst[1] is None:
        violations.extend(f"initial state: {p}" for p in check_state_invariants(report.final, n))
    violations.extend(check_bounds(report))
    if report.status == "normal":
        final = report.final
        if final.stack or not isinstance(final.active, Var):
            violations.append("final state is not of the shape (ε, x, E)")
        if enumerate_redexes(SLICED.read_back(final)):
            violations.append("final state reads back to a term with redexes")
    return RunCheck(report, violations)
