"""Rate bounds and exact-rate accounting, all in exact rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .construct import ConstructionParams, code_params


def rate_availability_bound(r, t):
    """Product bound on the rate of codes with locality r and
    availability t: prod_{j=1..t} 1/(1 + 1/(j r))."""
    if r < 1 or t < 1:
        raise ValueError("need r >= 1 and t >= 1")
    out = Fraction(1)
    for j in range(1, t + 1):
        out *= 1 / (1 + Fraction(1, j * r))
    return out


def rate_2seq_bound(r):
    """Rate-optimal bound for two sequential erasures: r/(r+2)."""
    return Fraction(r, r + 2)


def rate_3seq_bound(r):
    """Upper bound for three sequential erasures: (r/(r+1))^2."""
    return Fraction(r, r + 1) ** 2


def rate_resolvable(r, t):
    """Rate of the resolvable-configuration family:
    (1 + (t-1)/r + 1/r^2)^-1.  Stated for odd t >= 3; callers flag
    other t rather than failing."""
    return 1 / (1 + Fraction(t - 1, r) + Fraction(1, r * r))


def rate_formula(r, t_i, delta):
    """Literal evaluation of the quoted closed-form rate
    (1 + ceil(t/r) + ceil(1/r^2)(delta-1))^-1 with t = t_i(delta-1).

    On the worked instance this diverges from the true k/n; reports
    juxtapose both rather than asserting equality.
    """
    t = t_i * (delta - 1)
    denom = 1 + math.ceil(t / r) + math.ceil(Fraction(1, r * r)) * (delta - 1)
    return Fraction(1, denom)


def exact_rate(params: ConstructionParams):
    """k/n from the additive block-length formula."""
    cp = code_params(params)
    return Fraction(cp["k"], cp["n"])


@dataclass
class RateReport:
    r: int
    t_i: int
    delta: int
    t: int
    exact: Fraction | None
    formula: Fraction
    availability_bound: Fraction
    seq2_bound: Fraction
    seq3_bound: Fraction
    resolvable_rate: Fraction
    notes: list

    def to_dict(self):
        def fr(x):
            return None if x is None else f"{x.numerator}/{x.denominator}"
        return {
            "r": self.r, "t_i": self.t_i, "delta": self.delta, "t": self.t,
            "exact_rate": fr(self.exact),
            "closed_form_rate": fr(self.formula),
            "availability_bound": fr(self.availability_bound),
            "2seq_bound": fr(self.seq2_bound),
            "3seq_bound": fr(self.seq3_bound),
            "resolvable_family_rate": fr(self.resolvable_rate),
            "notes": list(self.notes),
        }


def rate_report(r, t_i, delta, params: ConstructionParams = None):
    """Collect every applicable bound next to the construction's exact
    rate, flagging hypothesis violations and divergences."""
    t = t_i * (delta - 1)
    notes = []
    exact = None
    if params is not None:
        exact = exact_rate(params)
    formula = rate_formula(r, t_i, delta)
    if exact is not None and exact != formula:
        notes.append(
            f"closed-form rate {formula} diverges from exact rate {exact}")
    if not (t >= 3 and t % 2 == 1):
        notes.append(
            f"resolvable-family rate stated for odd t >= 3; t = {t} is outside")
    return RateReport(
        r=r, t_i=t_i, delta=delta, t=t,
        exact=exact,
        formula=formula,
        availability_bound=rate_availability_bound(r, t),
        seq2_bound=rate_2seq_bound(r),
        seq3_bound=rate_3seq_bound(r),
        resolvable_rate=rate_resolvable(r, t),
        notes=notes,
    )
