"""Translation of ordinary lambda-terms into positive terms, and back.

Every application gets its own explicit substitution, arguments are evaluated
first by the right strategy (their spine sits outside the function's), and an
abstraction is shared through a fresh ES unless it is directly applied.
"""
from __future__ import annotations

from .syntax import (
    Abs, App, ES, LambdaTerm, Lam, LVar, NameSupply, PositiveTerm, RedexApp, Var, VarApp,
    VarId, spine,
)

__all__ = ["crumble", "unfold", "UnfoldOverflow", "lambda_alpha_eq", "lambda_size", "lambda_free_vars"]


def crumble(t: LambdaTerm, supply: NameSupply | None = None) -> PositiveTerm:
    if supply is None:
        supply = NameSupply.above(t)
    else:
        supply.reserve(NameSupply.above(t).next_id - 1)
    return _positive(_rename_binders(t, {}, supply), supply)


def _positive(t: LambdaTerm, supply: NameSupply) -> PositiveTerm:
    head, entries = _crumble(t, supply)
    if isinstance(head, Abs):
        v = supply.fresh()
        head, entries = v, [(v, head)]
    out: PositiveTerm = Var(head)
    for x, b in entries:
        out = ES(out, x, b)
    return out


def _rename_binders(t: LambdaTerm, ren: dict, supply: NameSupply) -> LambdaTerm:
    # preorder, so binders get numbered in reading order
    match t:
        case LVar(name=x):
            return LVar(ren.get(x, x))
        case Lam(binder=x, body=b):
            fresh = supply.fresh()
            return Lam(fresh, _rename_binders(b, {**ren, x: fresh}, supply))
        case App(fn=f, arg=a):
            return App(_rename_binders(f, ren, supply), _rename_binders(a, ren, supply))
    raise TypeError(f"not a lambda term: {t!r}")


def _crumble(t: LambdaTerm, supply: NameSupply) -> tuple[VarId | Abs, list]:
    """Head (a variable, or an abstraction bite) and spine entries in printed order."""
    match t:
        case LVar(name=x):
            return x, []
        case Lam(binder=x, body=b):
            return Abs(x, _positive(b, supply)), []
        case App(fn=f, arg=a):
            w = supply.fresh()
            fh, fs = _crumble(f, supply)
            ah, as_ = _crumble(a, supply)
            if isinstance(ah, Abs):
                v = supply.fresh()
                as_ = as_ + [(v, ah)]
                ah = v
            if isinstance(fh, Abs):
                bite = RedexApp(fh, ah)
            else:
                bite = VarApp(fh, ah)
            return w, [(w, bite)] + fs + as_
    raise TypeError(f"not a lambda term: {t!r}")


# ---------------------------------------------------------------- unfolding

class UnfoldOverflow(RuntimeError):
    pass


def unfold(t: PositiveTerm, limit: int = 10**6) -> LambdaTerm:
    """Replace every ES by meta-level substitution."""
    budget = [limit]
    return _unfold(t, budget)


def _charge(budget: list, n: int) -> None:
    budget[0] -= n
    if budget[0] < 0:
        raise UnfoldOverflow("unfolded term exceeds the size limit")


def _unfold(t: PositiveTerm, budget: list) -> LambdaTerm:
    nodes, head = spine(t)
    out: LambdaTerm = LVar(head)
    for n in reversed(nodes):
        out = _lsubst(out, n.binder, _unfold_bite(n.bite, budget), budget)
    return out


def _unfold_bite(b, budget: list) -> LambdaTerm:
    match b:
        case VarApp(fn=f, arg=a):
            return App(LVar(f), LVar(a))
        case Abs(binder=y, body=u):
            return Lam(y, _unfold(u, budget))
        case RedexApp(abs=ab, arg=a):
            return App(Lam(ab.binder, _unfold(ab.body, budget)), LVar(a))
    raise TypeError(f"not a bite: {b!r}")


def lambda_free_vars(t: LambdaTerm) -> set[VarId]:
    match t:
        case LVar(name=x):
            return {x}
        case Lam(binder=x, body=b):
            return lambda_free_vars(b) - {x}
        case App(fn=f, arg=a):
            return lambda_free_vars(f) | lambda_free_vars(a)
    raise TypeError(f"not a lambda term: {t!r}")


def lambda_size(t: LambdaTerm) -> int:
    """Number of nodes."""
    match t:
        case LVar():
            return 1
        case Lam(body=b):
            return 1 + lambda_size(b)
        case App(fn=f, arg=a):
            return 1 + lambda_size(f) + lambda_size(a)
    raise TypeError(f"not a lambda term: {t!r}")


def _lsubst(t: LambdaTerm, x: VarId, s: LambdaTerm, budget: list, fv: set | None = None) -> LambdaTerm:
    """Capture-avoiding ``t{x := s}``."""
    match t:
        case LVar(name=y):
            if y == x:
                _charge(budget, lambda_size(s))
                return s
            return t
        case App(fn=f, arg=a):
            _charge(budget, 1)
            return App(_lsubst(f, x, s, budget, fv), _lsubst(a, x, s, budget, fv))
        case Lam(binder=y, body=b):
            _charge(budget, 1)
            if y == x:
                return t
            if fv is None:
                fv = lambda_free_vars(s)
            if y in fv and x in lambda_free_vars(b):
                fresh = NameSupply.above(t, s, x).fresh()
                b = _lsubst(b, y, LVar(fresh), budget)
                y = fresh
            return Lam(y, _lsubst(b, x, s, budget, fv))
    raise TypeError(f"not a lambda term: {t!r}")


def lambda_alpha_eq(a: LambdaTerm, b: LambdaTerm) -> bool:
    return _lkey(a, {}, 0) == _lkey(b, {}, 0)


def _lkey(t: LambdaTerm, env: dict, depth: int):
    match t:
        case LVar(name=x):
            k = env.get(x)
            return ("b", depth - k) if k is not None else ("f", x.id)
        case Lam(binder=x, body=b):
            return ("l", _lkey(b, {**env, x: depth}, depth + 1))
        case App(fn=f, arg=a):
            return ("a", _lkey(f, env, depth), _lkey(a, env, depth))
    raise TypeError(f"not a lambda term: {t!r}")
