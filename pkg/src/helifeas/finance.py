"""Capital budgeting: NPV, IRR, payback and production pricing."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import ConfigError, DomainError

IRR_LOWER = -0.999
IRR_UPPER = 10.0
PROTOTYPE_COST = 6_733_070.0
URIEL_UNIT_PRICE = 1_000_000.0


class PaybackMode(str, Enum):
    UNDISCOUNTED = "undiscounted"
    DISCOUNTED = "discounted"


@dataclass(frozen=True)
class CashFlowSeries:
    """Investment at t=0 (positive magnitude) and the flows for years 1..n."""

    investment: float
    flows: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "flows", tuple(float(f) for f in self.flows))
        if not self.flows:
            raise DomainError("a cash-flow series needs at least one period")
        if self.investment < 0:
            raise DomainError("investment must be >= 0")

    @classmethod
    def constant(cls, investment: float, flow: float, years: int) -> CashFlowSeries:
        return cls(investment, (flow,) * years)

    def scaled(self, factor: float) -> CashFlowSeries:
        return CashFlowSeries(self.investment * factor, tuple(f * factor for f in self.flows))

    @property
    def sign_changes(self) -> int:
        signs = [s for s in (_sign(-self.investment), *map(_sign, self.flows)) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    @property
    def conventional(self) -> bool:
        return self.sign_changes <= 1


@dataclass(frozen=True)
class FinanceParams:
    marr: float = 0.18
    horizon_years: int = 15
    max_payback_years: int = 5
    payback_mode: PaybackMode = PaybackMode.UNDISCOUNTED

    def __post_init__(self) -> None:
        if self.marr <= -1:
            raise ConfigError("marr must be > -1")
        if self.horizon_years < 1 or self.max_payback_years < 0:
            raise ConfigError("horizon_years must be >= 1 and max_payback_years >= 0")
        object.__setattr__(self, "payback_mode", PaybackMode(self.payback_mode))


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def npv(series: CashFlowSeries, rate: float) -> float:
    """``-I + sum(FC_t / (1 + rate)**t)`` for t = 1..n."""
    if rate <= -1:
        raise DomainError(f"discount rate {rate} must be > -1")
    growth = 1.0 + rate
    total = 0.0
    discount = 1.0
    for flow in series.flows:
        discount /= growth
        total += flow * discount
    return total - series.investment


def _bisect(f, lo: float, hi: float, f_lo: float) -> float:
    """Halve a sign-change bracket until it cannot shrink in floating point."""
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if _sign(f_mid) == _sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return lo if abs(f_lo) <= abs(f(hi)) else hi


def irr_roots(series: CashFlowSeries, lower: float = IRR_LOWER, upper: float = IRR_UPPER) -> list[float]:
    """All IRR roots found in ``[lower, upper]``, ascending.

    A series with one sign change has at most one root (Descartes), so a
    single bracket suffices; otherwise the interval is scanned on a grid
    uniform in ``log(1 + r)`` before refining each bracket.
    """
    def f(r: float) -> float:
        return npv(series, r)

    if series.sign_changes == 0:
        return []
    if series.conventional:
        grid = [lower, upper]
    else:
        lo_log, hi_log = math.log1p(lower), math.log1p(upper)
        steps = 2000
        grid = [math.expm1(lo_log + (hi_log - lo_log) * i / steps) for i in range(steps + 1)]
        grid[-1] = upper

    values = [f(r) for r in grid]
    roots = [r for r, v in zip(grid, values) if v == 0.0]
    for a, b, fa, fb in zip(grid, grid[1:], values, values[1:]):
        if _sign(fa) * _sign(fb) < 0:
            roots.append(_bisect(f, a, b, fa))
    return sorted(roots)


def irr(series: CashFlowSeries) -> float | None:
    """Internal rate of return, or ``None`` when no root lies in [-0.999, 10].

    For non-conventional series with several roots the one nearest zero is
    returned; check ``series.conventional`` to detect that case.
    """
    roots = irr_roots(series)
    if not roots:
        return None
    return min(roots, key=abs)


def payback(series: CashFlowSeries, params: FinanceParams = FinanceParams()) -> int | None:
    """First year whose cumulative (optionally MARR-discounted) flows reach the investment."""
    cumulative = 0.0
    discount = 1.0
    for year, flow in enumerate(series.flows, start=1):
        if params.payback_mode is PaybackMode.DISCOUNTED:
            discount /= 1.0 + params.marr
            cumulative += flow * discount
        else:
            cumulative += flow
        # Relative slack absorbs float error on exact break-even.
        if cumulative >= series.investment * (1 - 1e-12):
            return year
    return None


def production_price(prototype_cost: float = PROTOTYPE_COST, divisor: float = 5.5) -> float:
    """Series-production unit price for a prototype costing ``prototype_cost``.

    Prototypes run 5 to 6 times the production price, so ``divisor`` must
    lie in [5, 6].
    """
    if not 5.0 <= divisor <= 6.0:
        raise DomainError(f"divisor {divisor} outside [5, 6]")
    return prototype_cost / divisor
