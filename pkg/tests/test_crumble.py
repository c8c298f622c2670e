import pytest

from posmach.crumble import (
    UnfoldOverflow, crumble, lambda_alpha_eq, lambda_free_vars, lambda_size, unfold,
)
from posmach.harness.generators import gen_random_lambda
from posmach.syntax import (
    NameSupply, alpha_eq, free_vars, is_clean, named, parse_lambda, parse_positive, show,
)

L, P = parse_lambda, parse_positive


def test_sample_crumble_exact():
    t = crumble(L(r"(\x.x x)((\z.z)(\z.z))"))
    assert show(t) == r"v4[v4 <- (\v1.v5[v5 <- v1 v1]) v6][v6 <- (\v2.v2) v7][v7 <- \v3.v3]"


def test_omega_shape():
    t = crumble(L(r"(\y.y y)(\z.z z)"))
    assert alpha_eq(t, P(r"a[a <- (\y.b[b <- y y]) c][c <- \z.d[d <- z z]]"))


@pytest.mark.parametrize("src,expected", [
    ("x", "x"),
    ("x y", "a[a <- x y]"),
    (r"\x.x", r"a[a <- \x.x]"),
    ("x y z", "a[a <- b z][b <- x y]"),
    ("x (y z)", "a[a <- x b][b <- y z]"),
    (r"(\x.x) y", r"a[a <- (\x.x) y]"),
    (r"x (\y.y)", r"a[a <- x b][b <- \y.y]"),
])
def test_small_crumbles(src, expected):
    assert alpha_eq(crumble(L(src)), P(expected))


def test_crumble_is_clean_and_keeps_free_names():
    for seed in range(50):
        lt = gen_random_lambda(seed, 30, closed=False)
        t = crumble(lt)
        assert is_clean(t)
        assert free_vars(t) == lambda_free_vars(lt)


def test_crumble_respects_supply():
    s = NameSupply(40)
    t = crumble(L(r"\x.x"), s)
    assert s.next_id > 40
    assert show(t).startswith("v4")


def test_unfold_inverts():
    for src in [r"(\x.x x)((\z.z)(\z.z))", r"\f.\x.f (f x)", "a (b c) (d e)"]:
        assert lambda_alpha_eq(unfold(crumble(L(src))), L(src))


def test_unfold_overflow():
    # each entry doubles the unfolded size
    big = "r" + "".join(f"[{'r' if i == 0 else f'q{i}'} <- q{i + 1} q{i + 1}]" for i in range(40))
    with pytest.raises(UnfoldOverflow):
        unfold(P(big), limit=10**4)
    assert lambda_size(unfold(P("a[a <- b b]"))) == 3


def test_lambda_alpha_eq():
    assert lambda_alpha_eq(L(r"\x.x y"), L(r"\z.z y"))
    assert not lambda_alpha_eq(L(r"\x.x y"), L(r"\y.y y"))
    assert lambda_free_vars(L(r"\x.x y")) == {named("y")}
