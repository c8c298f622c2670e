"""Pieces shared by both machines: labels, the environment, and the run driver."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Literal, NamedTuple

from ..syntax import Bite, NameSupply, OpenContext, PositiveTerm, VarId, show_bite, size

__all__ = [
    "LABELS", "PRINCIPAL", "SEARCH", "Environment", "Step", "Machine", "RunReport",
    "run_machine", "iterate", "show_env",
]

LABELS = ("sea1", "sea2", "sea3", "e", "m")
PRINCIPAL = frozenset({"e", "m"})
SEARCH = frozenset({"sea1", "sea2", "sea3"})

Status = Literal["normal", "budget_exhausted"]


class _Cell(NamedTuple):
    binder: VarId
    bite: Bite
    next: "_Cell | None"


class _Index:
    __slots__ = ("table", "tip")

    def __init__(self):
        self.table: dict[VarId, list[tuple[int, Bite]]] = {}
        self.tip: _Cell | None = None


class Environment:
    """Persistent stack of ``[x <- b]`` entries, most recent first.

    Lookups go through a table shared by every environment of one run.  Each
    table entry remembers the depth at which it was pushed, so an older
    environment of the same run ignores entries pushed after it.  Pushing onto
    an environment that is no longer the newest one starts a fresh table.
    """

    __slots__ = ("_cell", "_len", "_index")

    def __init__(self, _cell: _Cell | None = None, _len: int = 0, _index: _Index | None = None):
        self._cell = _cell
        self._len = _len
        if _index is None:
            _index = _Index()
            _index.tip = _cell
            for depth, (x, b) in enumerate(reversed(list(self))):
                _index.table.setdefault(x, []).append((depth, b))
        self._index = _index

    @classmethod
    def empty(cls) -> "Environment":
        return cls()

    @classmethod
    def of(cls, entries) -> "Environment":
        """From ``(binder, bite)`` pairs given most recent first."""
        env = cls()
        for x, b in reversed(list(entries)):
            env = env.push(x, b)
        return env

    def push(self, x: VarId, b: Bite) -> "Environment":
        cell = _Cell(x, b, self._cell)
        if self._index.tip is self._cell:
            index = self._index
        else:
            index = _Index()
            for depth, (y, c) in enumerate(reversed(list(self))):
                index.table.setdefault(y, []).append((depth, c))
        index.table.setdefault(x, []).append((self._len, b))
        index.tip = cell
        return Environment(cell, self._len + 1, index)

    def lookup(self, x: VarId) -> Bite | None:
        for depth, b in reversed(self._index.table.get(x, ())):
            if depth < self._len:
                return b
        return None

    def __contains__(self, x: VarId) -> bool:
        return self.lookup(x) is not None

    def __len__(self) -> int:
        return self._len

    def __iter__(self) -> Iterator[tuple[VarId, Bite]]:
        c = self._cell
        while c is not None:
            yield c.binder, c.bite
            c = c.next

    def as_context(self) -> OpenContext:
        """The read-back: the most recent entry is the innermost one."""
        return OpenContext(tuple(self))

    def __eq__(self, other) -> bool:
        return isinstance(other, Environment) and list(self) == list(other)

    def __repr__(self) -> str:
        return f"Environment({show_env(self)})"


def show_env(env: Environment) -> str:
    return " : ".join([f"[{x} <- {show_bite(b)}]" for x, b in env] + ["ε"])


class Step(NamedTuple):
    state: Any
    label: str
    cost: int


class Machine(NamedTuple):
    name: str
    init: Callable[..., Any]
    step: Callable[[Any, NameSupply], Step | None]
    peek: Callable[[Any], str | None]
    read_back: Callable[[Any], PositiveTerm]
    show_state: Callable[[Any], str]


@dataclass
class RunReport:
    machine: str
    counts: Counter
    cost_samples: list[tuple[str, int]]
    status: Status
    final: Any
    initial: Any
    initial_size: int
    labels: list[str] = field(default_factory=list)

    @property
    def transitions(self) -> int:
        return len(self.cost_samples)

    def count(self, label: str) -> int:
        return self.counts.get(label, 0)

    def cost(self, *labels: str) -> int:
        return sum(c for l, c in self.cost_samples if l in labels)

    @property
    def principal_cost(self) -> int:
        return self.cost("e", "m")


def iterate(machine: Machine, state, supply: NameSupply, budget: int) -> Iterator[tuple[Any, Step]]:
    """Yield ``(source, step)`` pairs.

    At most ``budget`` principal transitions are taken; search transitions
    that follow the last one still run until a principal one or the end.
    """
    principal = 0
    while True:
        nxt = machine.peek(state)
        if nxt is None:
            return
        if nxt in PRINCIPAL:
            if principal >= budget:
                return
            principal += 1
        step = machine.step(state, supply)
        yield state, step
        state = step.state


def run_machine(machine: Machine, t: PositiveTerm, budget: int, supply: NameSupply | None = None,
                observer: Callable[[Any, Step], None] | None = None) -> RunReport:
    if supply is None:
        supply = NameSupply.above(t)
    state = machine.init(t, supply)
    initial = state
    counts: Counter = Counter()
    samples: list[tuple[str, int]] = []
    labels: list[str] = []
    for _, step in iterate(machine, state, supply, budget):
        counts[step.label] += 1
        samples.append((step.label, step.cost))
        labels.append(step.label)
        if observer is not None:
            observer(state, step)
        state = step.state
    status: Status = "normal" if machine.peek(state) is None else "budget_exhausted"
    return RunReport(machine.name, counts, samples, status, state, initial, size(t), labels)
