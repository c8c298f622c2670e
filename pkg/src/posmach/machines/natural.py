"""The natural machine: active code and right context.

Its m-transition merges the code on the left of the redex into the body of
the applied abstraction straight away, renaming over the whole left part.
That part keeps growing on looping terms, which is where the machine
loses bi-linearity.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..syntax import (
    Abs, ES, NameSupply, OpenContext, PositiveTerm, RedexApp, Var,
    alpha_copy, head_split, is_clean, max_fresh_id, plug, show, size, subst_var,
)
from .core import Environment, Machine, Step, show_env

__all__ = ["NaturalState", "natural_init", "natural_step", "natural_peek", "natural_read_back",
           "show_natural", "NATURAL"]


@dataclass(frozen=True)
class NaturalState:
    active: PositiveTerm
    renv: Environment     # the right context, innermost entry first

    @property
    def rctx(self) -> OpenContext:
        return self.renv.as_context()

    def __str__(self) -> str:
        return show_natural(self)


def natural_init(t: PositiveTerm, supply: NameSupply) -> NaturalState:
    supply.reserve(max_fresh_id(t))
    return NaturalState(t if is_clean(t) else alpha_copy(t, supply), Environment.empty())


def natural_peek(s: NaturalState) -> str | None:
    a = s.active
    if isinstance(a, Var):
        return None
    b = a.bite
    if isinstance(b, Abs):
        return "sea1"
    if isinstance(b, RedexApp):
        return "m"
    return "e" if isinstance(s.renv.lookup(b.fn), Abs) else "sea2"


def natural_step(s: NaturalState, supply: NameSupply) -> Step | None:
    a = s.active
    if isinstance(a, Var):
        return None
    t, x, b = a.body, a.binder, a.bite
    if isinstance(b, Abs):
        return Step(NaturalState(t, s.renv.push(x, b)), "sea1", 1)
    if isinstance(b, RedexApp):
        # O<t{x<-z}>{y<-w}; y only occurs in the body, so rename there first
        body = subst_var(b.body, b.binder, b.arg, supply)
        O, z = head_split(body)
        active = plug(O, subst_var(t, x, z, supply))
        return Step(NaturalState(active, s.renv), "m", size(t) + size(b.body))
    target = s.renv.lookup(b.fn)
    if isinstance(target, Abs):
        copy = alpha_copy(target, supply)
        return Step(NaturalState(ES(t, x, RedexApp(copy, b.arg)), s.renv), "e", size(target))
    return Step(NaturalState(t, s.renv.push(x, b)), "sea2", 1)


def natural_read_back(s: NaturalState) -> PositiveTerm:
    t = s.active
    for x, b in s.renv:
        t = ES(t, x, b)
    return t


def show_natural(s: NaturalState) -> str:
    return f"{show(s.active)} | {show_env(s.renv)}"


NATURAL = Machine("natural", natural_init, natural_step, natural_peek, natural_read_back, show_natural)
