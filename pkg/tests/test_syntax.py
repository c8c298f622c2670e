import pytest

from posmach.syntax import (
    ES, Abs, NameSupply, OpenContext, ParseError, RedexApp, Var, VarApp, VarId, alpha_copy, alpha_eq,
    binders, canonical, free_vars, head_split, is_clean, named, parse_lambda, parse_positive, plug,
    show, show_lambda, size, spine, subst_var, well_bound,
)

P = parse_positive


def ref_size(t):
    # definitional size, written independently of the library's iterative one
    if isinstance(t, Var):
        return 1
    b = t.bite
    if isinstance(b, VarApp):
        bs = 2
    elif isinstance(b, Abs):
        bs = 1 + ref_size(b.body)
    else:
        bs = 2 + ref_size(b.abs.body)
    return ref_size(t.body) + bs


def test_names_intern():
    assert named("x") == named("x")
    assert named("v7") == VarId(7)
    assert named("x") != named("y")
    assert str(named("x'")) == "x'"


def test_supply_is_monotone():
    s = NameSupply(3)
    assert [s.fresh(), s.fresh()] == [VarId(3), VarId(4)]
    s.reserve(10)
    assert s.fresh() == VarId(11)
    assert NameSupply.above(P("v12[v12 <- v3 v5]")).next_id == 13


@pytest.mark.parametrize("text", [
    "x",
    "x[x <- y z]",
    r"x[x <- \y.y]",
    r"v4[v4 <- (\v1.v5[v5 <- v1 v1]) v6][v6 <- (\v2.v2) v7][v7 <- \v3.v3]",
    r"x[x <- y z][x' <- y' z][y' <- \w'.w'][y <- \w.w]",
])
def test_positive_round_trip(text):
    t = P(text)
    assert show(t) == text
    assert P(show(t)) == t


def test_unicode_arrows_and_lambda():
    assert P("x[x ← λy.y]") == P(r"x[x <- \y.y]")


@pytest.mark.parametrize("text", [
    "x x",                      # application as a term
    "x[x <- (y z) w]",          # nested application
    "x[x <- y]",                # shared variable
    "x[x <- y z",               # unclosed
    "",
    r"x[x <- \y.y y]",          # application under lambda
])
def test_positive_rejects(text):
    with pytest.raises(ParseError):
        P(text)


def test_lambda_parse():
    assert show_lambda(parse_lambda(r"\x y.x y (z w)")) == r"\x.\y.x y (z w)"
    with pytest.raises(ParseError):
        parse_lambda(r"(\x.")


def test_size_examples():
    assert size(P("x")) == 1
    assert size(P("x[x <- y z]")) == 3
    assert size(P(r"x[x <- \y.y]")) == 3
    assert size(P(r"x[x <- (\y.y) z]")) == 4
    t = P(r"v4[v4 <- (\v1.v5[v5 <- v1 v1]) v6][v6 <- (\v2.v2) v7][v7 <- \v3.v3]")
    assert size(t) == ref_size(t) == 11


def test_size_is_alpha_invariant():
    t = P(r"x[x <- (\y.w[w <- y y]) z][z <- \q.q]")
    assert size(alpha_copy(t, NameSupply(100))) == size(t)


def test_free_vars_and_binders():
    t = P(r"x[x <- y z][z <- \w.w]")
    assert free_vars(t) == {named("y")}
    assert set(binders(t)) == {named("x"), named("z"), named("w")}
    assert well_bound(t)
    assert not well_bound(P(r"x[x <- y z][z <- \x.x]"))


def test_is_clean():
    assert is_clean(P(r"x[x <- y z][z <- \w.w]"))
    assert not is_clean(P(r"x[x <- y z][z <- \x.x]"))     # repeated binder
    assert not is_clean(P(r"x[x <- y z][y <- \w.x]"))     # x bound and also free


def test_spine_and_head():
    t = P(r"x[x <- y z][z <- \w.w]")
    nodes, head = spine(t)
    assert head == named("x")
    assert [n.binder for n in nodes] == [named("z"), named("x")]
    O, h = head_split(t)
    assert h == named("x") and plug(O, Var(h)) == t
    assert O.entries[0][0] == named("x")        # nearest the hole first


def test_context_lookup_innermost():
    O = OpenContext(((named("x"), VarApp(named("a"), named("b"))), (named("x"), Abs(named("q"), Var(named("q"))))))
    assert isinstance(O.lookup(named("x")), VarApp)
    assert O.dom() == {named("x")}


def test_subst_capture_avoiding():
    t = P(r"x[x <- \y.w[w <- y q]]")
    out = subst_var(t, named("q"), named("y"), NameSupply(100))
    # the inner y must be renamed, the substituted y stays free
    assert named("y") in free_vars(out)
    assert alpha_eq(out, P(r"x[x <- \u.w[w <- u y]]"))


def test_subst_respects_rebinding():
    t = P(r"a[a <- x b][x <- c d]")
    out = subst_var(t, named("x"), named("e"))
    # the outer ES binds x for the body only; its bite still sees free names
    assert out == P(r"a[a <- x b][x <- c d]")
    out = subst_var(P(r"a[a <- c b][b <- x x]"), named("x"), named("e"))
    assert out == P(r"a[a <- c b][b <- e e]")


def test_alpha_eq():
    assert alpha_eq(P(r"x[x <- y z][z <- \w.w]"), P(r"a[a <- y b][b <- \c.c]"))
    assert not alpha_eq(P("x[x <- y z]"), P("x[x <- z y]"))
    assert not alpha_eq(P("x[x <- y z]"), P("a[a <- b z]"))          # free names differ
    assert canonical(P(r"x[x <- \y.y]")) == canonical(P(r"u[u <- \v.v]"))


def test_alpha_copy_is_fresh_and_equal():
    t = P(r"x[x <- (\y.w[w <- y y]) z][z <- \q.q]")
    c = alpha_copy(t, NameSupply(50))
    assert alpha_eq(c, t)
    assert not set(binders(c)) & set(binders(t))
    assert free_vars(c) == free_vars(t)


def test_ast_equality_is_structural():
    assert P("x[x <- y z]") == P("x[x <- y z]")
    assert hash(P("x[x <- y z]")) == hash(P("x[x <- y z]"))
    assert P("x[x <- y z]") != P("x[x <- y y]")
    assert ES(Var(named("x")), named("x"), RedexApp(Abs(named("y"), Var(named("y"))), named("z"))) == \
        P(r"x[x <- (\y.y) z]")
