#!/usr/bin/env python3
"""
Bound expressions ("envelopes") and the ratio of a measured count to them.

Fractional powers are evaluated with mpmath in a local context and printed in
fixed notation with config.DECIMAL_DIGITS significant digits; integer-valued
envelopes are printed exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from mpmath.ctx_mp import MPContext

import config


@dataclass(frozen=True)
class Envelope:
    name: str
    expression: str
    value: str
    approx: bool
    ratio: Optional[str]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "expression": self.expression,
            "value": self.value,
            "approx": self.approx,
            "ratio": self.ratio,
            "ratio_approx": self.ratio is not None,
        }


def _context() -> MPContext:
    ctx = MPContext()
    ctx.dps = config.DECIMAL_DIGITS + 10
    return ctx


def format_decimal(ctx: MPContext, value) -> str:
    return ctx.nstr(value, config.DECIMAL_DIGITS, min_fixed=-ctx.inf, max_fixed=ctx.inf)


def _ratio(ctx: MPContext, count: int, value) -> Optional[str]:
    if value == 0:
        return None
    return format_decimal(ctx, ctx.mpf(count) / value)


def exact_envelope(name: str, expression: str, value: int, count: int) -> Envelope:
    ctx = _context()
    return Envelope(name, expression, str(value), False, _ratio(ctx, count, ctx.mpf(value)))


def power(ctx: MPContext, n: int, exponent: Fraction):
    return ctx.power(ctx.mpf(n), ctx.mpf(exponent.numerator) / exponent.denominator)


def incidence_envelopes(n_p: int, n_q: int, count: int) -> List[Envelope]:
    """Envelopes of an incidence count |Z(F) x (P x Q)|."""
    ctx = _context()
    two_thirds = Fraction(2, 3)
    st_value = power(ctx, n_p, two_thirds) * power(ctx, n_q, two_thirds) + n_p + n_q
    product = power(ctx, n_p, two_thirds) * power(ctx, n_q, two_thirds)
    return [
        Envelope("szemeredi_trotter", "|P|^(2/3)*|Q|^(2/3) + |P| + |Q|",
                 format_decimal(ctx, st_value), True, _ratio(ctx, count, st_value)),
        Envelope("grid_term", "|P|^(2/3)*|Q|^(2/3)",
                 format_decimal(ctx, product), True, _ratio(ctx, count, product)),
        exact_envelope("linear", "|P| + |Q|", n_p + n_q, count),
        exact_envelope("dimension_two", "max(|P|, |Q|)", max(n_p, n_q), count),
    ]


def power_envelope(name: str, n: int, exponent: Fraction, count: int) -> Envelope:
    """|P|^exponent; exact when the power is an integer."""
    ctx = _context()
    expression = f"|P|^({exponent})" if exponent.denominator != 1 else f"|P|^{exponent}"
    if exponent.denominator == 1:
        return exact_envelope(name, expression, n ** exponent.numerator, count)
    value = power(ctx, n, exponent)
    return Envelope(name, expression, format_decimal(ctx, value), True, _ratio(ctx, count, value))

