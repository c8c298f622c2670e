"""Property checks, term generators and the scaling experiment."""
from .checks import (
    BisimReport, DiamondResult, RunCheck, bisimulate, check_bounds, check_run, diamond_check,
    random_contexts, right_ctx_agreement, strategy_checks,
)
from .generators import (
    church, corpus, gen_families, gen_random_lambda, omega_lambda, omega_positive, random_positive,
    tau3, tau3_loop,
)
from .scaling import ScalingReport, ScalingRow, bilinear_constant, scaling_experiment
from .suite import PropertyResult, run_suite

__all__ = [
    "BisimReport", "DiamondResult", "RunCheck", "bisimulate", "check_bounds", "check_run",
    "diamond_check", "random_contexts", "right_ctx_agreement", "strategy_checks", "church", "corpus",
    "gen_families", "gen_random_lambda", "omega_lambda", "omega_positive", "random_positive", "tau3",
    "tau3_loop", "ScalingReport", "ScalingRow", "bilinear_constant", "scaling_experiment",
    "PropertyResult", "run_suite",
]
