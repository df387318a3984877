"""Counting hyper-(b-ary) expansions and checking their maximal order."""

from .envelope import (H_eval, fib, h_eval, h_slope, maximal_order_constant,
                       record_position, tilde_knot)
from .linrep import LinearRep, evaluate, evaluate_at, stern_rep
from .numeral import DigitString, psi, to_digits, value, zero_one_shadow
from .oracle import count_expansions, list_expansions
from .stern import s, s_range

__all__ = [
    "DigitString", "H_eval", "LinearRep", "count_expansions", "evaluate",
    "evaluate_at", "fib", "h_eval", "h_slope", "list_expansions",
    "maximal_order_constant", "psi", "record_position", "s", "s_range",
    "stern_rep", "tilde_knot", "to_digits", "value", "zero_one_shadow",
]
