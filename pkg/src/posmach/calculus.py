"""Rewriting in the positive calculus: contexts, redexes and the right strategy.

Redex positions are open contexts.  For a redex sitting at a spine entry
(the shared beta-redex for ``m``, the applied variable ``[x <- y z]`` for
``e``) the position is the context made of every entry outside that one.

Terms are read up to alpha: when a term is not clean (distinct binders, no
binder also free) it is first renamed, and redexes refer to the renamed copy.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

from .syntax import (
    Abs, Bite, ES, NameSupply, OpenContext, PositiveTerm, RedexApp, VarApp, VarId,
    alpha_copy, head_split, is_clean, plug, size, spine, subst_var,
)

__all__ = [
    "ctx_dom", "ctx_lookup", "plug", "afv", "is_right_oi", "is_right_io",
    "Redex", "enumerate_redexes", "root_m", "root_e", "right_redex", "right_step",
    "right_eval", "EvalTrace", "one_step_reducts",
]

Label = Literal["m", "e"]


def ctx_dom(O: OpenContext) -> set[VarId]:
    return O.dom()


def ctx_lookup(O: OpenContext, x: VarId) -> Bite | None:
    return O.lookup(x)


def afv(O: OpenContext) -> set[VarId]:
    """Variables applied in ``O`` (outside abstraction bodies) and not bound by it."""
    acc: set[VarId] = set()
    for x, b in O.entries:          # from the hole outwards
        acc.discard(x)
        if isinstance(b, VarApp):
            acc.add(b.fn)
    return acc


def is_right_oi(O: OpenContext) -> bool:
    """Right context, outside-in definition (grown by adding outer entries)."""
    acc: set[VarId] = set()
    for x, b in O.entries:
        if isinstance(b, RedexApp):
            return False
        if isinstance(b, Abs):
            if x in acc:
                return False
            acc.discard(x)
        else:
            acc.discard(x)
            acc.add(b.fn)
    return True


def is_right_io(O: OpenContext) -> bool:
    """Right context, inside-out definition (grown by adding inner entries)."""
    outer: dict[VarId, Bite] = {}
    for x, b in reversed(O.entries):
        if isinstance(b, RedexApp):
            return False
        if isinstance(b, VarApp) and isinstance(outer.get(b.fn), Abs):
            return False
        outer[x] = b
    return True


# ------------------------------------------------------------------ redexes

@dataclass(eq=False)
class Redex:
    """A redex of ``term``.

    ``depth`` counts spine entries from the outside (0 is the outermost ES).
    For e-redexes ``abs_depth`` is the entry binding the applied variable to
    an abstraction.
    """

    label: Label
    term: PositiveTerm
    depth: int
    abs_depth: int | None
    nodes: list = field(repr=False)     # spine nodes, outermost first, at least down to the redex

    @property
    def node(self) -> ES:
        return self.nodes[self.depth]

    @property
    def position(self) -> OpenContext:
        return OpenContext(tuple((n.binder, n.bite) for n in reversed(self.nodes[:self.depth])))

    @property
    def abstraction(self) -> Abs:
        """The abstraction involved: the applied one for m, the copied one for e."""
        if self.label == "m":
            return self.node.bite.abs
        return self.nodes[self.abs_depth].bite

    def reduct(self, supply: NameSupply | None = None) -> PositiveTerm:
        node = self.node
        if self.label == "m":
            out = root_m(node.body, node.binder, node.bite, supply)
        else:
            if supply is None:
                supply = NameSupply.above(self.term)
            copy = alpha_copy(self.abstraction, supply)
            out = ES(node.body, node.binder, RedexApp(copy, node.bite.arg))
        for n in reversed(self.nodes[:self.depth]):
            out = ES(out, n.binder, n.bite)
        return out

    def __repr__(self) -> str:
        return f"Redex({self.label}, depth={self.depth})"


def _cleaned(t: PositiveTerm) -> PositiveTerm:
    return t if is_clean(t) else alpha_copy(t, NameSupply.above(t))


def enumerate_redexes(t: PositiveTerm) -> list[Redex]:
    """All m- and e-redexes of ``t``, from the outside in."""
    t = _cleaned(t)
    nodes, _ = spine(t)
    bound: dict[VarId, int] = {}
    found: list[Redex] = []
    # walking inwards, ``bound`` holds the nearest outer binder of each name
    for d, n in enumerate(nodes):
        b = n.bite
        if isinstance(b, RedexApp):
            found.append(Redex("m", t, d, None, nodes))
        elif isinstance(b, VarApp):
            j = bound.get(b.fn)
            if j is not None and isinstance(nodes[j].bite, Abs):
                found.append(Redex("e", t, d, j, nodes))
        bound[n.binder] = d
    return found


def root_m(t: PositiveTerm, x: VarId, bite: RedexApp, supply: NameSupply | None = None) -> PositiveTerm:
    """``t[x <- (\\y.O<z>) w]`` reduces to ``O<t{x <- z}>{y <- w}``."""
    body = subst_var(bite.body, bite.binder, bite.arg, supply)
    O, z = head_split(body)
    return plug(O, subst_var(t, x, z, supply))


def root_e(t: PositiveTerm, O: OpenContext, x: VarId, y: VarId, z: VarId, abs: Abs,
           supply: NameSupply) -> PositiveTerm:
    """``O<t[x <- y z]>[y <- abs]`` reduces to ``O<t[x <- abs' z]>[y <- abs]``, abs' a fresh copy."""
    if y in O.dom():
        raise ValueError(f"{y} is rebound by the context")
    copy = alpha_copy(abs, supply)
    return ES(plug(O, ES(t, x, RedexApp(copy, z))), y, abs)


def one_step_reducts(t: PositiveTerm, supply: NameSupply | None = None) -> list[tuple[Label, PositiveTerm]]:
    out = []
    for r in enumerate_redexes(t):
        out.append((r.label, r.reduct(supply)))
    return out


# ------------------------------------------------------------ right strategy

def right_redex(t: PositiveTerm, assume_clean: bool = False) -> Redex | None:
    """The redex whose position is a right context, if any.

    Positions are nested, so walking the spine from the outside with the
    inside-out definition decides all of them at once: every position up to
    the first redex met is a right context, and none after it is.  The walk
    stops there.  ``assume_clean`` skips the renaming check for callers that
    know the term is clean.
    """
    if not assume_clean:
        t = _cleaned(t)
    nodes = []
    outer: dict[VarId, int] = {}
    u = t
    while isinstance(u, ES):
        d = len(nodes)
        nodes.append(u)
        b = u.bite
        if isinstance(b, RedexApp):
            return Redex("m", t, d, None, nodes)
        if isinstance(b, VarApp):
            j = outer.get(b.fn)
            if j is not None and isinstance(nodes[j].bite, Abs):
                return Redex("e", t, d, j, nodes)
        outer[u.binder] = d
        u = u.body
    return None


def right_step(t: PositiveTerm, supply: NameSupply | None = None) -> tuple[PositiveTerm, Label] | None:
    r = right_redex(t)
    if r is None:
        return None
    return r.reduct(supply), r.label


@dataclass
class EvalTrace:
    initial: PositiveTerm
    steps: list[tuple[Label, PositiveTerm]]
    status: Literal["normal", "budget_exhausted"]
    counts: Counter
    copied_sizes: list[int]

    @property
    def result(self) -> PositiveTerm:
        return self.steps[-1][1] if self.steps else self.initial


def right_eval(t: PositiveTerm, budget: int, supply: NameSupply | None = None) -> EvalTrace:
    if supply is None:
        supply = NameSupply.above(t)
    steps: list[tuple[Label, PositiveTerm]] = []
    counts: Counter = Counter()
    copied: list[int] = []
    cur = t
    while True:
        r = right_redex(cur)
        if r is None:
            status = "normal"
            break
        if len(steps) >= budget:
            status = "budget_exhausted"
            break
        if r.label == "e":
            copied.append(size(r.abstraction))
        cur = r.reduct(supply)
        counts[r.label] += 1
        steps.append((r.label, cur))
    return EvalTrace(t, steps, status, counts, copied)
