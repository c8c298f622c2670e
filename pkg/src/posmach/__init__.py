"""Positive lambda-calculus: right strategy, natural and sliced machines, and checks."""
from .calculus import right_eval, right_redex, right_step
from .crumble import crumble, unfold
from .machines import NATURAL, SLICED, natural_run, sliced_run
from .syntax import alpha_eq, parse_lambda, parse_positive, show

__version__ = "0.1.0"

__all__ = [
    "right_eval", "right_redex", "right_step", "crumble", "unfold", "NATURAL", "SLICED",
    "natural_run", "sliced_run", "alpha_eq", "parse_lambda", "parse_positive", "show",
]
