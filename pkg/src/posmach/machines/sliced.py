"""The sliced machine: slice stack, active slice, global environment.

The m-transition keeps the applied abstraction's body whole and postpones
merging it with the code on its left: the left part goes on the slice stack
as ``t[x <- .]`` and is merged back by sea3 once the active slice has been
reduced to a variable.  Every renaming then scans a sub-term of the initial
term only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from ..syntax import (
    Abs, ES, NameSupply, OpenContext, PositiveTerm, RedexApp, Var, VarId,
    alpha_copy, binders, bite_free_vars, free_vars, head_split, is_clean, max_fresh_id, plug, show,
    size, subst_var,
)
from ..calculus import is_right_oi
from .core import Environment, Machine, Step, show_env

__all__ = [
    "Slice", "SliceStack", "SlicedState", "sliced_init", "sliced_step", "sliced_peek",
    "read_back", "read_back_env", "check_state_invariants", "show_sliced", "SLICED",
]


class Slice(NamedTuple):
    """``body[binder <- .]``."""

    body: PositiveTerm
    binder: VarId

    def __str__(self) -> str:
        return f"{show(self.body)}[{self.binder} <- ·]"


class SliceStack:
    """Persistent LIFO of slices."""

    __slots__ = ("top", "rest", "_len", "_merged", "_solid")

    def __init__(self, top: Slice | None = None, rest: "SliceStack | None" = None):
        self.top = top
        self.rest = rest
        self._len = 0 if top is None else 1 + len(rest)
        self._merged: dict[VarId, PositiveTerm] = {}
        # nearest stack at or below this one whose top is not x[x <- .];
        # those slices merge to the plain head, so merge skips runs of them
        if top is not None and isinstance(top.body, Var) and top.body.name == top.binder:
            self._solid = rest._solid
        else:
            self._solid = self

    def merge(self, head: VarId) -> PositiveTerm:
        """The stack read back around a variable ``head`` coming from above.

        Stacks are shared between successive states, so results are cached.
        """
        out = self._merged.get(head)
        if out is not None:
            return out
        # iterative: collect the cache misses top-down, then build bottom-up
        chain = []
        s, h = self._solid, head
        while s._len:
            hit = s._merged.get(h)
            if hit is not None:
                break
            ctx, h2 = head_split(subst_var(s.top.body, s.top.binder, h))
            chain.append((s, h, ctx))
            s, h = s.rest._solid, h2
        else:
            hit = Var(h)
        out = hit
        for node, h, ctx in reversed(chain):
            out = plug(ctx, out)
            node._merged[h] = out
        if self._solid is not self:
            self._merged[head] = out
        return out

    def push(self, s: Slice) -> "SliceStack":
        return SliceStack(s, self)

    def __len__(self) -> int:
        return self._len

    def __bool__(self) -> bool:
        return self._len > 0

    def __iter__(self) -> Iterator[Slice]:
        """From the top of the stack down."""
        s = self
        while s._len:
            yield s.top
            s = s.rest

    def __eq__(self, other) -> bool:
        return isinstance(other, SliceStack) and list(self) == list(other)

    def __str__(self) -> str:
        return " : ".join(["ε"] + [str(s) for s in reversed(list(self))])


EMPTY_STACK = SliceStack()


@dataclass(frozen=True)
class SlicedState:
    stack: SliceStack
    active: PositiveTerm
    env: Environment

    def __str__(self) -> str:
        return show_sliced(self)


def sliced_init(t: PositiveTerm, supply: NameSupply) -> SlicedState:
    supply.reserve(max_fresh_id(t))
    active = t if is_clean(t) else alpha_copy(t, supply)
    return SlicedState(EMPTY_STACK, active, Environment.empty())


def sliced_peek(s: SlicedState) -> str | None:
    a = s.active
    if isinstance(a, Var):
        return "sea3" if s.stack else None
    b = a.bite
    if isinstance(b, Abs):
        return "sea1"
    if isinstance(b, RedexApp):
        return "m"
    return "e" if isinstance(s.env.lookup(b.fn), Abs) else "sea2"


def sliced_step(s: SlicedState, supply: NameSupply) -> Step | None:
    a = s.active
    if isinstance(a, Var):
        if not s.stack:
            return None
        sl = s.stack.top
        return Step(SlicedState(s.stack.rest, subst_var(sl.body, sl.binder, a.name, supply), s.env),
                    "sea3", size(sl.body))
    t, x, b = a.body, a.binder, a.bite
    if isinstance(b, Abs):
        return Step(SlicedState(s.stack, t, s.env.push(x, b)), "sea1", 1)
    if isinstance(b, RedexApp):
        body = subst_var(b.body, b.binder, b.arg, supply)
        return Step(SlicedState(s.stack.push(Slice(t, x)), body, s.env), "m", size(b.body))
    target = s.env.lookup(b.fn)
    if isinstance(target, Abs):
        copy = alpha_copy(target, supply)
        return Step(SlicedState(s.stack, ES(t, x, RedexApp(copy, b.arg)), s.env), "e", size(target))
    return Step(SlicedState(s.stack, t, s.env.push(x, b)), "sea2", 1)


def read_back_env(env: Environment) -> OpenContext:
    return env.as_context()


def read_back(s: SlicedState) -> PositiveTerm:
    """Merge the slices into the active slice, top first, then plug into the environment."""
    ctx, head = head_split(s.active)
    t = plug(ctx, s.stack.merge(head))
    for x, b in s.env:
        t = ES(t, x, b)
    return t


def show_sliced(s: SlicedState) -> str:
    return f"{s.stack} | {show(s.active)} | {show_env(s.env)}"


# --------------------------------------------------------------- invariants

def check_state_invariants(s: SlicedState, initial_size: int, after_e: bool = False) -> list[str]:
    """Clauses violated by ``s`` (empty when all hold).

    * ``contextual``: the environment reads back to a right context;
    * ``well-bound``: binders are pairwise distinct, bound names occur only in
      their scope, and an environment name occurs only to the left of its entry;
    * ``sub-term``: every term of the state is no bigger than the initial
      term, the active slice excepted right after an e-transition.
    """
    problems: list[str] = []
    env = list(s.env)
    if not is_right_oi(OpenContext(tuple(env))):
        problems.append("contextual: the environment is not a right context")

    slices = list(s.stack)
    slice_fvs = [free_vars(sl.body) - {sl.binder} for sl in slices]
    env_fvs = [bite_free_vars(b) for _, b in env]
    active_fv = free_vars(s.active)

    internal = binders(s.active)
    for sl in slices:
        internal += binders(sl.body)
    for _, b in env:
        internal += binders(b)
    names = internal + [sl.binder for sl in slices] + [x for x, _ in env]
    if len(names) != len(set(names)):
        seen: set[VarId] = set()
        dup = sorted({str(v) for v in names if v in seen or seen.add(v)})
        problems.append("well-bound: repeated binders " + ", ".join(dup))

    all_free = set(active_fv).union(*slice_fvs, *env_fvs)
    # a slice's own hole was removed from its free variables above
    stray = (set(internal) | {sl.binder for sl in slices}) & all_free
    if stray:
        problems.append("well-bound: names escaping their scope " + ", ".join(sorted(map(str, stray))))

    # an environment name may occur in the stack, the active slice and newer entries only
    older: set[VarId] = set()
    late = []
    for (x, _), fv in zip(reversed(env), reversed(env_fvs)):
        older |= fv
        if x in older:
            late.append(str(x))
    if late:
        problems.append("well-bound: environment names used on their right " + ", ".join(late))

    big = []
    if not after_e and size(s.active) > initial_size:
        big.append("active")
    for sl in slices:
        if size(sl.body) > initial_size:
            big.append(f"slice {sl.binder}")
    for x, b in env:
        if size(b) > initial_size:
            big.append(f"entry {x}")
    if big:
        problems.append("sub-term: larger than the initial term: " + ", ".join(big))
    return problems


SLICED = Machine("sliced", sliced_init, sliced_step, sliced_peek, read_back, show_sliced)
