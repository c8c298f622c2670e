import pytest

from posmach.calculus import is_right_io, is_right_oi, one_step_reducts
from posmach.crumble import crumble, lambda_free_vars, lambda_size
from posmach.harness import (
    bilinear_constant, bisimulate, check_bounds, check_run, church, corpus, diamond_check,
    gen_families, gen_random_lambda, omega_lambda, omega_positive, random_contexts,
    right_ctx_agreement, scaling_experiment, strategy_checks, tau3, tau3_loop,
)
from posmach.harness.suite import DIAMOND_EXAMPLE, run_suite
from posmach.machines import NATURAL, SLICED, Step, natural_run, sliced_run
from posmach.machines.sliced import SlicedState, sliced_step
from posmach.syntax import Abs, OpenContext, Var, VarApp, alpha_eq, named, parse_lambda, parse_positive, size

P = parse_positive
SAMPLE = crumble(parse_lambda(r"(\x.x x)((\z.z)(\z.z))"))


def test_bisim_sample():
    rep = bisimulate(SAMPLE, 100)
    assert rep.ok and rep.halted
    assert rep.label_counts_machine == {"m": 3, "e": 1}
    assert rep.steps_checked == 8


def test_bisim_variable():
    rep = bisimulate(P("x"), 5)
    assert rep.ok and rep.steps_checked == 0


@pytest.mark.parametrize("machine", [SLICED, NATURAL])
def test_bisim_omega_truncated(machine):
    rep = bisimulate(omega_positive(), 50, machine)
    assert rep.ok and not rep.halted
    assert sum(rep.label_counts_machine.values()) == 50


def test_bisim_catches_a_broken_machine():
    # sea3 that forgets to rename the popped slice
    def bad_step(s, supply):
        st = sliced_step(s, supply)
        if st is not None and st.label == "sea3":
            return Step(SlicedState(s.stack.rest, s.stack.top.body, s.env), "sea3", st.cost)
        return st

    broken = SLICED._replace(name="broken", step=bad_step)
    rep = bisimulate(SAMPLE, 100, broken)
    assert not rep.ok
    assert rep.mismatches[0][1] == "readback"


def test_diamond_example():
    assert diamond_check(P(DIAMOND_EXAMPLE), 2).ok
    # the square of the example closes on this term
    t = P(DIAMOND_EXAMPLE)
    joined = P(r"y'[x <- (\x'.x') y][y <- \x'.x']")
    firsts = [u for _, u in one_step_reducts(t)]
    assert len(firsts) == 2
    for u in firsts:
        assert any(alpha_eq(v, joined) for _, v in one_step_reducts(u))


def test_diamond_normal_is_vacuous():
    r = diamond_check(P("x[x <- y z]"))
    assert r.ok and r.terms_checked == 1


def test_diamond_omega():
    r = diamond_check(crumble(omega_lambda()), 3)
    assert r.ok and r.counterexample is None


def test_strategy_checks_examples():
    assert strategy_checks(P(r"x[x <- y z][x' <- y' z][y' <- \w'.w'][y <- \w.w]")) == []
    assert strategy_checks(P("x")) == []
    assert strategy_checks(tau3_loop(), depth=2, trace=50) == []


def test_right_ctx_agreement():
    ok, n, ce = right_ctx_agreement(0)
    assert ok and n == 1
    ok, n, ce = right_ctx_agreement(2)
    assert ok and ce is None
    x, y, z, w = (named(s) for s in "xyzw")
    O = OpenContext(((x, VarApp(y, z)), (y, Abs(w, Var(w)))))
    assert not is_right_oi(O) and not is_right_io(O)


def test_random_contexts_agree():
    for O in random_contexts(7, 2000):
        assert is_right_oi(O) == is_right_io(O)


def test_bounds_sample():
    rep = sliced_run(SAMPLE, 100)
    assert check_bounds(rep) == []
    assert rep.count("e") <= rep.count("m") + 1
    assert rep.count("sea3") <= rep.count("m")


def test_bounds_empty_run():
    assert check_bounds(sliced_run(P("x"), 10)) == []


def test_bounds_flag_natural_costs():
    # the natural machine's m costs outgrow the initial size on the loop
    problems = check_bounds(natural_run(tau3_loop(), 40))
    assert any("costs" in p for p in problems)


def test_check_run():
    rc = check_run(SAMPLE, 100)
    assert rc.ok and rc.report.status == "normal"
    assert check_run(tau3_loop(), 100).ok


def test_scaling_budget_zero():
    rep = scaling_experiment(tau3_loop, [0])
    assert rep.rows[0].natural_cost == 0 and rep.rows[0].sliced_cost == 0


def test_scaling_rejects_bad_budgets():
    with pytest.raises(ValueError):
        scaling_experiment(tau3_loop, [8, 4])


def test_scaling_small():
    rep = scaling_experiment(tau3_loop(), [16, 32, 64])
    assert rep.initial_size == 11
    assert all(r == 2.0 for r in rep.sliced_ratios)
    assert all(r > 2.5 for r in rep.natural_ratios)
    assert "budget" in rep.table()
    assert len(rep.as_records()) == 3


def test_natural_m_cost_grows_on_loop():
    rep = natural_run(tau3_loop(), 60)
    m = [c for l, c in rep.cost_samples if l == "m"]
    # first iteration may be cheap; afterwards each m is dearer than the last
    assert all(a < b for a, b in zip(m[1:], m[2:]))
    s = sliced_run(tau3_loop(), 60)
    assert max(c for l, c in s.cost_samples if l == "m") <= 11


def test_church_normalizes_bilinearly():
    for n, m in [(2, 2), (3, 2), (2, 3)]:
        rep = sliced_run(church(n, m), 10**5)
        assert rep.status == "normal"
        c = bilinear_constant(rep)
        assert 0 < c <= 2


def test_generators_deterministic():
    assert gen_random_lambda(5, 20) == gen_random_lambda(5, 20)
    assert corpus(1, 10) == corpus(1, 10)
    for s in range(30):
        assert lambda_size(gen_random_lambda(s, 17)) == 17
        assert not lambda_free_vars(gen_random_lambda(s, 17, closed=True))


def test_families():
    fam = gen_families()
    assert set(fam) >= {"omega", "tau3_loop", "church"}
    assert alpha_eq(crumble(omega_lambda()), fam["omega"]())
    assert alpha_eq(omega_positive(), P(r"x[x <- y y][y <- \z.w[w <- z z]]"))
    assert tau3() == P("x[x <- y z][z <- y y]")
    assert size(tau3_loop()) == 11


def test_suite_small():
    res = run_suite(seed=2, corpus_n=20, budget=200, diamond_n=10)
    assert [r.name for r in res] == ["bisimulation", "diamond", "strategy", "right contexts",
                                     "invariants and bounds"]
    assert all(r.ok for r in res)
