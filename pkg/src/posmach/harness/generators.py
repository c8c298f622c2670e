"""Term generators: seeded random lambda-terms and the named families."""
from __future__ import annotations

import random
from typing import Callable

from ..crumble import crumble
from ..syntax import App, LambdaTerm, Lam, LVar, PositiveTerm, named, parse_lambda, parse_positive

__all__ = [
    "gen_random_lambda", "omega_lambda", "omega_positive", "tau3", "tau3_loop", "church",
    "gen_families", "corpus", "random_positive",
]

_BINDERS = [named(s) for s in ("x", "y", "z", "w")]
_FREE = [named(s) for s in ("a", "b", "c")]


def gen_random_lambda(seed: int, size: int, closed: bool = True) -> LambdaTerm:
    """A term with exactly ``size`` nodes (``size >= 2`` when closed).

    Variables pick an enclosing binder with probability 0.8 and a free name
    otherwise (never free when ``closed``).  Binder names come from a small
    pool, so shadowing is common.
    """
    if size < 1:
        raise ValueError("size must be positive")
    rng = random.Random(seed)
    if closed:
        size = max(size, 2)
    return _gen(rng, size, (), closed)


def _gen(rng: random.Random, n: int, scope: tuple, closed: bool) -> LambdaTerm:
    need_binder = closed and not scope
    if n == 1:
        if scope and (closed or rng.random() < 0.8):
            return LVar(rng.choice(scope))
        return LVar(rng.choice(_FREE))
    if n == 2 or (need_binder and n < 5) or (n >= 3 and rng.random() < 0.3):
        x = rng.choice(_BINDERS)
        return Lam(x, _gen(rng, n - 1, scope + (x,), closed))
    lo, hi = (2, n - 3) if need_binder else (1, n - 2)
    k = rng.randint(lo, hi)
    return App(_gen(rng, k, scope, closed), _gen(rng, n - 1 - k, scope, closed))


def random_positive(seed: int, size: int, closed: bool = True) -> PositiveTerm:
    return crumble(gen_random_lambda(seed, size, closed))


def omega_lambda() -> LambdaTerm:
    return parse_lambda(r"(\y.y y)(\z.z z)")


def omega_positive() -> PositiveTerm:
    """The shared form of the looping term, as the machines first meet it."""
    return parse_positive(r"x[x <- y y][y <- \z.w[w <- z z]]")


def tau3() -> PositiveTerm:
    return parse_positive("x[x <- y z][z <- y y]")


def tau3_loop() -> PositiveTerm:
    """``tau3[y <- \\y.tau3]``: the shared form of ``d d`` with ``d = \\x.x(x x)``."""
    return parse_positive(r"x[x <- y z][z <- y y][y <- \y.x[x <- y z][z <- y y]]")


def church(n: int, m: int) -> PositiveTerm:
    """``c_n c_m f x`` with Church numerals ``c_k = \\f.\\x.f(...(f x))``."""
    def numeral(k: int) -> LambdaTerm:
        f, x = named("f"), named("x")
        body: LambdaTerm = LVar(x)
        for _ in range(k):
            body = App(LVar(f), body)
        return Lam(f, Lam(x, body))

    t = App(App(App(numeral(n), numeral(m)), LVar(named("f"))), LVar(named("x")))
    return crumble(t)


def gen_families() -> dict[str, Callable[..., PositiveTerm]]:
    return {
        "omega": lambda: crumble(omega_lambda()),
        "omega_positive": omega_positive,
        "tau3_loop": tau3_loop,
        "church": church,
    }


def corpus(seed: int, n: int, max_size: int = 40) -> list[tuple[int, LambdaTerm]]:
    """``n`` random terms alternating closed and open, sizes in ``[1, max_size]``."""
    rng = random.Random(seed)
    out = []
    for i in range(n):
        s = rng.randint(1, max_size)
        item_seed = rng.randrange(2**32)
        out.append((item_seed, gen_random_lambda(item_seed, s, closed=(i % 2 == 0))))
    return out
