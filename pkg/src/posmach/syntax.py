"""Terms of the ordinary and of the positive lambda-calculus.

Variables are interned integer ids.  Names written in source text are
interned process-wide (negative ids, printed with their source spelling);
names drawn from a :class:`NameSupply` get positive ids and print as ``v<id>``.
A source name of the form ``v<n>`` denotes the supply-issued variable ``n``,
so printing and re-parsing any term gives back the very same term.

Positive terms are a head variable under a spine of explicit substitutions::

    pterm ::= var | pterm '[' var '<-' bite ']'
    bite  ::= var var | '\\' var '.' pterm | '(' '\\' var '.' pterm ')' var

Spines can get long (machine runs grow them), so everything that walks a
spine does it with a loop; only abstraction bodies are recursed into.
"""
from __future__ import annotations

import itertools
import re
import weakref
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

__all__ = [
    "VarId", "NameSupply", "named",
    "LVar", "Lam", "App", "LambdaTerm",
    "VarApp", "Abs", "RedexApp", "Bite",
    "Var", "ES", "PositiveTerm", "OpenContext",
    "ParseError", "parse_lambda", "parse_positive",
    "show", "show_bite", "show_lambda",
    "free_vars", "bite_free_vars", "binders", "subst_var", "alpha_copy",
    "size", "bite_size", "well_bound", "is_clean", "head_split", "plug",
    "spine", "alpha_eq", "canonical", "max_fresh_id",
]


# ---------------------------------------------------------------- variables

class VarId:
    """A variable.  Identity is the integer ``id``; ``hint`` is display only.

    Instances are interned by id, so equality and hashing are the default
    identity ones, which keeps the hot paths in C.
    """

    __slots__ = ("id", "hint", "__weakref__")
    _pool: "weakref.WeakValueDictionary[int, VarId]" = weakref.WeakValueDictionary()

    def __new__(cls, id: int, hint: str | None = None) -> "VarId":
        v = cls._pool.get(id)
        if v is None:
            v = object.__new__(cls)
            object.__setattr__(v, "id", id)
            object.__setattr__(v, "hint", hint)
            cls._pool[id] = v
        return v

    def __setattr__(self, name, value):
        raise AttributeError("VarId is immutable")

    def __reduce__(self):
        return VarId, (self.id, self.hint)

    def __lt__(self, other: "VarId") -> bool:
        return self.id < other.id

    def __str__(self) -> str:
        return self.hint if self.hint is not None else f"v{self.id}"

    def __repr__(self) -> str:
        return f"VarId({self})"


_FRESH_SPELLING = re.compile(r"v(\d+)\Z")
_interned: dict[str, VarId] = {}
_interned_ids = itertools.count(-1, -1)


def named(name: str) -> VarId:
    """The variable spelled ``name`` in source text."""
    m = _FRESH_SPELLING.match(name)
    if m:
        return VarId(int(m.group(1)))
    v = _interned.get(name)
    if v is None:
        v = _interned.setdefault(name, VarId(next(_interned_ids), name))
    return v


class NameSupply:
    """Deterministic generator of fresh variables (ids strictly increasing)."""

    def __init__(self, start: int = 1):
        self.next_id = start

    def fresh(self) -> VarId:
        v = VarId(self.next_id)
        self.next_id += 1
        return v

    def reserve(self, ident: int) -> None:
        """Make sure ``ident`` is never issued."""
        if ident >= self.next_id:
            self.next_id = ident + 1

    @classmethod
    def above(cls, *things) -> "NameSupply":
        """A supply whose names are fresh for every term, bite or variable given."""
        return cls(max(1, max((max_fresh_id(t) for t in things), default=0) + 1))

    def __repr__(self) -> str:
        return f"NameSupply(next_id={self.next_id})"


# ---------------------------------------------------------- ordinary terms

@dataclass(frozen=True, slots=True)
class LVar:
    name: VarId

    def __str__(self) -> str:
        return show_lambda(self)


@dataclass(frozen=True, slots=True)
class Lam:
    binder: VarId
    body: LambdaTerm

    def __str__(self) -> str:
        return show_lambda(self)


@dataclass(frozen=True, slots=True)
class App:
    fn: LambdaTerm
    arg: LambdaTerm

    def __str__(self) -> str:
        return show_lambda(self)


LambdaTerm = Union[LVar, Lam, App]


# ---------------------------------------------------------- positive terms

class _Term:
    """Shared behaviour of positive terms: spine-iterative equality and printing."""

    __slots__ = ()

    def __eq__(self, other):
        if not isinstance(other, _Term):
            return NotImplemented
        return self is other or _same(self, other)

    def __hash__(self):
        return hash(_serialize(self, canonical=False))

    def __str__(self) -> str:
        return show(self)

    def __repr__(self) -> str:
        return f"<{show(self)}>"


# not frozen: frozen dataclasses are noticeably slower to build, and machine
# runs build a lot of nodes; nothing ever mutates a term
@dataclass(slots=True, eq=False, repr=False)
class Var(_Term):
    name: VarId


@dataclass(slots=True, eq=False, repr=False)
class ES(_Term):
    """``body[binder <- bite]``; ``binder`` scopes over ``body`` only."""

    body: PositiveTerm
    binder: VarId
    bite: Bite


PositiveTerm = Union[Var, ES]


@dataclass(frozen=True, slots=True)
class VarApp:
    """The bite ``fn arg``."""

    fn: VarId
    arg: VarId

    def __str__(self) -> str:
        return show_bite(self)


@dataclass(frozen=True, slots=True)
class Abs:
    """The bite ``\\binder.body``."""

    binder: VarId
    body: PositiveTerm

    def __str__(self) -> str:
        return show_bite(self)


@dataclass(frozen=True, slots=True)
class RedexApp:
    """The bite ``(\\y.u) arg``."""

    abs: Abs
    arg: VarId

    @property
    def binder(self) -> VarId:
        return self.abs.binder

    @property
    def body(self) -> PositiveTerm:
        return self.abs.body

    def __str__(self) -> str:
        return show_bite(self)


Bite = Union[VarApp, Abs, RedexApp]


@dataclass(frozen=True, slots=True)
class OpenContext:
    """A spine of explicit substitutions with a hole.

    ``entries`` is in printed order, i.e. ``entries[0]`` is next to the hole
    and ``entries[-1]`` is the outermost substitution.
    """

    entries: tuple[tuple[VarId, Bite], ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[VarId, Bite]]:
        return iter(self.entries)

    def dom(self) -> set[VarId]:
        return {x for x, _ in self.entries}

    def lookup(self, x: VarId) -> Bite | None:
        # innermost binding wins on contexts that bind x twice
        for y, b in self.entries:
            if y == x:
                return b
        return None

    def extend_outer(self, x: VarId, b: Bite) -> "OpenContext":
        """``O[x <- b]``."""
        return OpenContext(self.entries + ((x, b),))

    def extend_inner(self, x: VarId, b: Bite) -> "OpenContext":
        """``O<<.>[x <- b]>``."""
        return OpenContext(((x, b),) + self.entries)

    def __str__(self) -> str:
        return "<.>" + "".join(f"[{x} <- {show_bite(b)}]" for x, b in self.entries)


# --------------------------------------------------------------- structure

def spine(t: PositiveTerm) -> tuple[list[ES], VarId]:
    """The ES nodes of ``t``, outermost first, and its head variable."""
    nodes = []
    while isinstance(t, ES):
        nodes.append(t)
        t = t.body
    return nodes, t.name


def _rebuild(inner: PositiveTerm, entries: Iterable[tuple[VarId, Bite]]) -> PositiveTerm:
    # entries given innermost first
    for x, b in entries:
        inner = ES(inner, x, b)
    return inner


def plug(ctx: OpenContext, t: PositiveTerm) -> PositiveTerm:
    """Fill the hole of ``ctx`` with ``t``.  Capture is intended."""
    return _rebuild(t, ctx.entries)


def head_split(t: PositiveTerm) -> tuple[OpenContext, VarId]:
    """The unique ``(O, x)`` with ``plug(O, Var(x)) == t``."""
    nodes, head = spine(t)
    return OpenContext(tuple((n.binder, n.bite) for n in reversed(nodes))), head


def size(t: PositiveTerm | Bite) -> int:
    if not isinstance(t, _Term):
        return bite_size(t)
    n = 1
    while isinstance(t, ES):
        n += bite_size(t.bite)
        t = t.body
    return n


def bite_size(b: Bite) -> int:
    match b:
        case VarApp():
            return 2
        case Abs(body=u):
            return 1 + size(u)
        case RedexApp(abs=a):
            return 2 + size(a.body)
    raise TypeError(f"not a bite: {b!r}")


def free_vars(t: PositiveTerm) -> set[VarId]:
    if not isinstance(t, _Term):
        return bite_free_vars(t)
    nodes, head = spine(t)
    fv = {head}
    for n in reversed(nodes):
        fv.discard(n.binder)
        fv |= bite_free_vars(n.bite)
    return fv


def bite_free_vars(b: Bite) -> set[VarId]:
    match b:
        case VarApp(fn=y, arg=z):
            return {y, z}
        case Abs(binder=y, body=u):
            fv = free_vars(u)
            fv.discard(y)
            return fv
        case RedexApp(abs=a, arg=z):
            fv = bite_free_vars(a)
            fv.add(z)
            return fv
    raise TypeError(f"not a bite: {b!r}")


def binders(t: PositiveTerm | Bite) -> list[VarId]:
    """Every binding occurrence (ES and abstraction binders), with repetitions."""
    out: list[VarId] = []
    _collect_binders(t, out)
    return out


def _collect_binders(t, out: list[VarId]) -> None:
    if isinstance(t, Abs):
        out.append(t.binder)
        _collect_binders(t.body, out)
        return
    if isinstance(t, RedexApp):
        _collect_binders(t.abs, out)
        return
    if isinstance(t, VarApp):
        return
    while isinstance(t, ES):
        out.append(t.binder)
        if not isinstance(t.bite, VarApp):
            _collect_binders(t.bite, out)
        t = t.body


def well_bound(t: PositiveTerm | Bite) -> bool:
    """Whether all binders of ``t`` are pairwise distinct."""
    bs = binders(t)
    return len(bs) == len(set(bs))


def is_clean(t: PositiveTerm | Bite) -> bool:
    """Well-bound, and no bound name also occurs free."""
    seen: set[VarId] = set()
    free: set[VarId] = set()
    if isinstance(t, _Term):
        ok = _clean_term(t, set(), seen, free)
    else:
        ok = _clean_bite(t, set(), seen, free)
    return ok and free.isdisjoint(seen)


def _clean_term(t: PositiveTerm, scope: set, seen: set, free: set) -> bool:
    # binders must be new; occurrences outside every scope are collected as free
    nodes, head = spine(t)
    added = []
    ok = True
    for n in nodes:
        if not _clean_bite(n.bite, scope, seen, free) or n.binder in seen:
            ok = False
            break
        seen.add(n.binder)
        scope.add(n.binder)
        added.append(n.binder)
    if ok and head not in scope:
        free.add(head)
    scope.difference_update(added)
    return ok


def _clean_bite(b: Bite, scope: set, seen: set, free: set) -> bool:
    if isinstance(b, VarApp):
        if b.fn not in scope:
            free.add(b.fn)
        if b.arg not in scope:
            free.add(b.arg)
        return True
    if isinstance(b, RedexApp):
        if b.arg not in scope:
            free.add(b.arg)
        b = b.abs
    if b.binder in seen:
        return False
    seen.add(b.binder)
    scope.add(b.binder)
    ok = _clean_term(b.body, scope, seen, free)
    scope.discard(b.binder)
    return ok


def max_fresh_id(t) -> int:
    """Largest supply-issued id occurring in ``t`` (0 if none)."""
    if isinstance(t, VarId):
        return max(t.id, 0)
    if isinstance(t, OpenContext):
        return max((max(max_fresh_id(x), max_fresh_id(b)) for x, b in t.entries), default=0)
    if isinstance(t, (LVar, Lam, App)):
        return _lambda_max_id(t)
    match t:
        case VarApp(fn=y, arg=z):
            return max(y.id, z.id, 0)
        case Abs(binder=y, body=u):
            return max(y.id, max_fresh_id(u))
        case RedexApp(abs=a, arg=z):
            return max(z.id, max_fresh_id(a))
    nodes, head = spine(t)
    m = max(head.id, 0)
    for n in nodes:
        m = max(m, n.binder.id, max_fresh_id(n.bite))
    return m


def _lambda_max_id(t: LambdaTerm) -> int:
    match t:
        case LVar(name=x):
            return max(x.id, 0)
        case Lam(binder=x, body=b):
            return max(x.id, _lambda_max_id(b))
        case App(fn=f, arg=a):
            return max(_lambda_max_id(f), _lambda_max_id(a))
    raise TypeError(f"not a lambda term: {t!r}")


# ------------------------------------------------------------ renamings

def subst_var(t: PositiveTerm, x: VarId, z: VarId, supply: NameSupply | None = None) -> PositiveTerm:
    """Capture-avoiding ``t{x <- z}``.

    A binder named ``z`` whose scope contains a free ``x`` is renamed to a
    fresh variable (from ``supply`` when given).  Never happens on well-bound
    inputs with a fresh ``z``.
    """
    if x == z:
        return t
    nodes, head = spine(t)
    entries = [(n.binder, n.bite) for n in nodes]   # outermost first
    tail: PositiveTerm | None = None
    cut = len(nodes)
    changed = False
    for i, n in enumerate(nodes):
        b = _subst_bite(n.bite, x, z, supply)
        if b is not n.bite:
            entries[i] = (n.binder, b)
            changed = True
        if n.binder == x:
            tail, cut = n.body, i + 1
            break
        if n.binder == z and x in free_vars(n.body):
            fresh = supply.fresh() if supply else NameSupply.above(t, x, z).fresh()
            body = subst_var(subst_var(n.body, z, fresh, supply), x, z, supply)
            entries[i] = (fresh, entries[i][1])
            tail, cut, changed = body, i + 1, True
            break
    if tail is None:
        if head == x:
            tail, changed = Var(z), True
        else:
            tail = nodes[-1].body if nodes else t
    if not changed:
        return t
    return _rebuild(tail, reversed(entries[:cut]))


def _subst_bite(b: Bite, x: VarId, z: VarId, supply: NameSupply | None) -> Bite:
    match b:
        case VarApp(fn=f, arg=a):
            if f == x or a == x:
                return VarApp(z if f == x else f, z if a == x else a)
            return b
        case Abs():
            return _subst_abs(b, x, z, supply)
        case RedexApp(abs=ab, arg=a):
            nab = _subst_abs(ab, x, z, supply)
            if nab is ab and a != x:
                return b
            return RedexApp(nab, z if a == x else a)
    raise TypeError(f"not a bite: {b!r}")


def _subst_abs(b: Abs, x: VarId, z: VarId, supply: NameSupply | None) -> Abs:
    y, u = b.binder, b.body
    if y == x:
        return b
    if y == z and x in free_vars(u):
        fresh = supply.fresh() if supply else NameSupply.above(u, x, z).fresh()
        return Abs(fresh, subst_var(subst_var(u, z, fresh, supply), x, z, supply))
    nu = subst_var(u, x, z, supply)
    return b if nu is u else Abs(y, nu)


_MISSING = object()


def alpha_copy(t, supply: NameSupply, avoid: Iterable[VarId] = ()):
    """Rename every bound name of a term or bite to a fresh one."""
    for v in avoid:
        supply.reserve(v.id)
    if isinstance(t, _Term):
        return _copy_term(t, {}, supply)
    return _copy_bite(t, {}, supply)


def _copy_term(t: PositiveTerm, ren: dict, supply: NameSupply) -> PositiveTerm:
    nodes, head = spine(t)
    saved = []
    entries = []
    for n in nodes:
        b = _copy_bite(n.bite, ren, supply)
        fresh = supply.fresh()
        saved.append((n.binder, ren.get(n.binder, _MISSING)))
        ren[n.binder] = fresh
        entries.append((fresh, b))
    out = _rebuild(Var(ren.get(head, head)), reversed(entries))
    for x, old in reversed(saved):
        if old is _MISSING:
            del ren[x]
        else:
            ren[x] = old
    return out


def _copy_bite(b: Bite, ren: dict, supply: NameSupply) -> Bite:
    match b:
        case VarApp(fn=f, arg=a):
            return VarApp(ren.get(f, f), ren.get(a, a))
        case Abs(binder=y, body=u):
            fresh = supply.fresh()
            old = ren.get(y, _MISSING)
            ren[y] = fresh
            nu = _copy_term(u, ren, supply)
            if old is _MISSING:
                del ren[y]
            else:
                ren[y] = old
            return Abs(fresh, nu)
        case RedexApp(abs=ab, arg=a):
            return RedexApp(_copy_bite(ab, ren, supply), ren.get(a, a))
    raise TypeError(f"not a bite: {b!r}")


# ------------------------------------------------------- alpha-equivalence

def _serialize(t, canonical: bool) -> tuple:
    """Flat token sequence; with ``canonical`` bound names become binding indices."""
    out: list = []
    ren: dict[VarId, int] = {}
    counter = itertools.count()

    def var(v: VarId) -> None:
        k = ren.get(v) if canonical else None
        if k is None:
            out.append("f")
            out.append(v.id)
        else:
            out.append("b")
            out.append(k)

    def bind(v: VarId):
        old = ren.get(v, _MISSING)
        if canonical:
            ren[v] = next(counter)
        else:
            out.append(v.id)
        return old

    def restore(v: VarId, old) -> None:
        if not canonical:
            return
        if old is _MISSING:
            del ren[v]
        else:
            ren[v] = old

    def term(u) -> None:
        nodes, head = spine(u)
        out.append("T")
        out.append(len(nodes))
        saved = []
        for n in nodes:
            bite(n.bite)
            saved.append((n.binder, bind(n.binder)))
        var(head)
        for v, old in reversed(saved):
            restore(v, old)

    def bite(b) -> None:
        match b:
            case VarApp(fn=f, arg=a):
                out.append("a")
                var(f)
                var(a)
            case Abs():
                out.append("l")
                abstraction(b)
            case RedexApp(abs=ab, arg=a):
                out.append("r")
                abstraction(ab)
                var(a)
            case _:
                raise TypeError(f"not a bite: {b!r}")

    def abstraction(b: Abs) -> None:
        old = bind(b.binder)
        term(b.body)
        restore(b.binder, old)

    if isinstance(t, _Term):
        term(t)
    else:
        bite(t)
    return tuple(out)


def _same(a: PositiveTerm, b: PositiveTerm) -> bool:
    """Syntactic equality, walking both spines; shared sub-objects are skipped."""
    while True:
        if a is b:
            return True
        if isinstance(a, Var) or isinstance(b, Var):
            return isinstance(a, Var) and isinstance(b, Var) and a.name == b.name
        if a.binder != b.binder or not (a.bite is b.bite or a.bite == b.bite):
            return False
        a, b = a.body, b.body


def canonical(t: PositiveTerm | Bite) -> tuple:
    """A hashable key equal for exactly the alpha-equivalent terms."""
    return _serialize(t, canonical=True)


def alpha_eq(a: PositiveTerm | Bite, b: PositiveTerm | Bite) -> bool:
    """Equality up to renaming of bound names."""
    ra: dict[VarId, int] = {}
    rb: dict[VarId, int] = {}
    depth = [0]

    def var(x: VarId, y: VarId) -> bool:
        i, j = ra.get(x), rb.get(y)
        return i == j if (i is not None or j is not None) else x == y

    def bind(x: VarId, y: VarId):
        k = depth[0]
        depth[0] += 1
        old = (ra.get(x, _MISSING), rb.get(y, _MISSING))
        ra[x] = k
        rb[y] = k
        return old

    def unbind(x: VarId, y: VarId, old) -> None:
        for ren, v, o in ((ra, x, old[0]), (rb, y, old[1])):
            if o is _MISSING:
                del ren[v]
            else:
                ren[v] = o

    def term(s, t) -> bool:
        ns, hs = spine(s)
        nt, ht = spine(t)
        if len(ns) != len(nt):
            return False
        saved = []
        ok = True
        for n, m in zip(ns, nt):
            if not bite(n.bite, m.bite):
                ok = False
                break
            saved.append((n.binder, m.binder, bind(n.binder, m.binder)))
        ok = ok and var(hs, ht)
        for x, y, old in reversed(saved):
            unbind(x, y, old)
        return ok

    def bite(p, q) -> bool:
        if type(p) is not type(q):
            return False
        if isinstance(p, VarApp):
            return var(p.fn, q.fn) and var(p.arg, q.arg)
        if isinstance(p, RedexApp):
            if not var(p.arg, q.arg):
                return False
            p, q = p.abs, q.abs
        old = bind(p.binder, q.binder)
        ok = term(p.body, q.body)
        unbind(p.binder, q.binder, old)
        return ok

    if isinstance(a, _Term) and isinstance(b, _Term):
        return term(a, b)
    if isinstance(a, _Term) or isinstance(b, _Term):
        return False
    return bite(a, b)


# ---------------------------------------------------------------- printing

def show(t: PositiveTerm) -> str:
    nodes, head = spine(t)
    parts = [str(head)]
    for n in reversed(nodes):
        parts.append(f"[{n.binder} <- {show_bite(n.bite)}]")
    return "".join(parts)


def show_bite(b: Bite) -> str:
    match b:
        case VarApp(fn=f, arg=a):
            return f"{f} {a}"
        case Abs(binder=y, body=u):
            return f"\\{y}.{show(u)}"
        case RedexApp(abs=ab, arg=a):
            return f"(\\{ab.binder}.{show(ab.body)}) {a}"
    raise TypeError(f"not a bite: {b!r}")


def show_lambda(t: LambdaTerm) -> str:
    match t:
        case LVar(name=x):
            return str(x)
        case Lam(binder=x, body=b):
            return f"\\{x}.{show_lambda(b)}"
        case App(fn=f, arg=a):
            left = f"({show_lambda(f)})" if isinstance(f, Lam) else show_lambda(f)
            right = show_lambda(a) if isinstance(a, LVar) else f"({show_lambda(a)})"
            return f"{left} {right}"
    raise TypeError(f"not a lambda term: {t!r}")


# ----------------------------------------------------------------- parsing

class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(<-|←)|([\\λ.()\[\]])|([A-Za-z_][A-Za-z0-9_'′]*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("<-", "<-", start))
        elif m.group(2):
            sym = "\\" if m.group(2) == "λ" else m.group(2)
            tokens.append((sym, sym, start))
        else:
            tokens.append(("name", m.group(3), start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][2]

    def expect(self, kind: str) -> str:
        k, value, pos = self.tokens[self.i]
        if k != kind:
            shown = "end of input" if k == "eof" else repr(value)
            raise ParseError(f"expected {kind!r}, found {shown}", pos)
        self.i += 1
        return value

    def name(self) -> VarId:
        return named(self.expect("name"))

    def done(self) -> None:
        self.expect("eof")

    # lambda terms
    def lterm(self) -> LambdaTerm:
        items: list[LambdaTerm] = []
        while True:
            if self.kind == "\\":
                items.append(self.lam())
                break
            if self.kind == "name":
                items.append(LVar(self.name()))
            elif self.kind == "(":
                self.i += 1
                items.append(self.lterm())
                self.expect(")")
            else:
                break
        if not items:
            k, value, pos = self.tokens[self.i]
            raise ParseError(f"expected a term, found {'end of input' if k == 'eof' else repr(value)}", pos)
        t = items[0]
        for a in items[1:]:
            t = App(t, a)
        return t

    def lam(self) -> Lam:
        self.expect("\\")
        xs = [self.name()]
        while self.kind != ".":     # \x y.t is sugar for \x.\y.t
            xs.append(self.name())
        self.i += 1
        t = self.lterm()
        for x in reversed(xs):
            t = Lam(x, t)
        return t

    # positive terms
    def pterm(self) -> PositiveTerm:
        t: PositiveTerm = Var(self.name())
        while self.kind == "[":
            self.i += 1
            x = self.name()
            self.expect("<-")
            b = self.bite()
            self.expect("]")
            t = ES(t, x, b)
        return t

    def bite(self) -> Bite:
        start = self.pos()
        if self.kind == "\\":
            return self.pabs()
        if self.kind == "(":
            self.i += 1
            if self.kind != "\\":
                raise ParseError("not a positive term: only an abstraction may be applied", self.pos())
            ab = self.pabs()
            self.expect(")")
            if self.kind != "name":
                raise ParseError("not a positive term: arguments must be variables", self.pos())
            return RedexApp(ab, self.name())
        y = self.name()
        if self.kind != "name":
            if self.kind == "]":
                raise ParseError("not a positive term: a variable cannot be shared", start)
            raise ParseError("not a positive term: arguments must be variables", self.pos())
        z = self.name()
        if self.kind != "]":
            raise ParseError("not a positive term: applications cannot be nested", self.pos())
        return VarApp(y, z)

    def pabs(self) -> Abs:
        self.expect("\\")
        y = self.name()
        self.expect(".")
        return Abs(y, self.pterm())


def parse_lambda(text: str) -> LambdaTerm:
    """Parse ``term ::= var | \\var.term | term term | (term)``."""
    p = _Parser(text)
    t = p.lterm()
    p.done()
    return t


def parse_positive(text: str) -> PositiveTerm:
    p = _Parser(text)
    t = p.pterm()
    p.done()
    return t
