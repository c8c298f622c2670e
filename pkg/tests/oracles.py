"""Reference implementations used as test oracles, independent of the library's algorithms."""
import itertools

from posmach.crumble import lambda_free_vars
from posmach.syntax import App, Lam, LVar, VarId

_fresh = itertools.count(10**7)


def lsubst(t, x, s):
    if isinstance(t, LVar):
        return s if t.name == x else t
    if isinstance(t, App):
        return App(lsubst(t.fn, x, s), lsubst(t.arg, x, s))
    if t.binder == x:
        return t
    if t.binder in lambda_free_vars(s):
        y = VarId(next(_fresh))
        return Lam(y, lsubst(lsubst(t.body, t.binder, LVar(y)), x, s))
    return Lam(t.binder, lsubst(t.body, x, s))


class Stuck(Exception):
    pass


def weak_cbv(t, fuel=300):
    """Closed call-by-value to a value, right-to-left arguments first.  Returns (value, beta steps)."""
    steps = 0

    def ev(t):
        nonlocal steps
        if isinstance(t, (LVar, Lam)):
            return t
        a = ev(t.arg)
        f = ev(t.fn)
        if not isinstance(f, Lam):
            raise Stuck(t)
        steps += 1
        if steps > fuel:
            raise OverflowError
        return ev(lsubst(f.body, f.binder, a))

    return ev(t), steps

