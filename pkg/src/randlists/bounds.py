"""Closed-form quantities: palette thresholds, component tail bounds, exact
gadget probabilities, union-bound term ratios, integral bounds, and the
order-of-growth formula registry.

Every registry formula sets its unspecified asymptotic constants to 1 and is
flagged "order-of-growth-only": no such constant is pinned anywhere, and
pretending otherwise would fabricate precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction
from typing import Callable, NamedTuple, Union

ORDER_ONLY_FLAG = "order-of-growth-only"
EXACT_RATIONAL_LIMIT = 10**6
_DECIMAL_DIGITS = 50

Number = Union[Fraction, float]


@dataclass(frozen=True)
class ThresholdQuery:
    """Parameters of the palette-size threshold formulas."""

    n: int
    delta: int
    k: int
    m: int | None = None
    g: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need n >= 1")
        if not 1 <= self.delta < self.n:
            raise ValueError("need 1 <= delta < n")
        if self.k < 1:
            raise ValueError("need k >= 1")


class GeneralThreshold(NamedTuple):
    m_growth: float  # n^(1/k^2) * delta^(1/k)
    m_floor: float  # 3 k^2 delta


class HFreeThreshold(NamedTuple):
    upper_growth: float  # sufficiency: n^(2/(k(g+1))) * delta^(2g/(k(g+1)))
    lower_growth: float  # blow-up construction: n^(1/(k(g+1))) * delta^(g/(k(g+1)))
    m_floor: float


def threshold_general(q: ThresholdQuery) -> GeneralThreshold:
    """Growth and floor terms of the palette threshold for general graphs."""
    growth = q.n ** (1.0 / q.k**2) * q.delta ** (1.0 / q.k)
    return GeneralThreshold(growth, 3.0 * q.k**2 * q.delta)


def threshold_hfree(q: ThresholdQuery) -> HFreeThreshold:
    """Threshold terms for graphs avoiding a family with choosability
    threshold g: the sufficiency growth term and the non-colourability
    construction growth term (its square root in the exponents)."""
    if q.g is None or q.g < 1:
        raise ValueError("need g >= 1")
    denom = q.k * (q.g + 1)
    upper = q.n ** (2.0 / denom) * q.delta ** (2.0 * q.g / denom)
    lower = q.n ** (1.0 / denom) * q.delta ** (q.g / denom)
    return HFreeThreshold(upper, lower, 3.0 * q.k**2 * q.delta)


def component_tail_bound(n: int, delta: int, k: int, m: int, a: float) -> float:
    """Union-bound value n * (e*delta)^a * (k^2/m)^a for a component of order
    exceeding a. Evaluated in log-space; overflows report inf."""
    if n < 1 or delta < 1 or k < 1 or m < 1:
        raise ValueError("n, delta, k, m must be positive")
    if a < 0:
        raise ValueError("need a >= 0")
    log_value = math.log(n) + a * (1.0 + math.log(delta)) + a * math.log(k * k / m)
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class GadgetProbability:
    """Exact (or high-precision) probabilities for the blow-up gadget.

    q_copy: probability one copy is bad; p_bad_exists: probability some copy
    is bad; colourable_upper = 1 - p_bad_exists bounds P(colourable) from
    above. ``exact`` tells whether values are Fractions or floats.
    """

    q_copy: Number
    p_bad_exists: Number
    colourable_upper: Number
    exact: bool


def gadget_probability(
    n: int, delta: int, k: int, m: int, d: int, order_g0: int
) -> GadgetProbability:
    """Bad-copy probabilities for the planted blow-up construction.

    One copy is bad iff every origin class contains a vertex whose list
    equals the planted one; classes are disjoint, copies independent.
    Exact rationals while C(m,k) and the exponents stay small, else
    50-digit decimal arithmetic collapsed to floats.
    """
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    if d < 0:
        raise ValueError("need d >= 0")
    if order_g0 < 1:
        raise ValueError("need order_g0 >= 1")
    copies = n // delta
    if copies < 1:
        raise ValueError("need at least one copy: n // delta >= 1")
    c_mk = math.comb(m, k)
    feasible = c_mk <= EXACT_RATIONAL_LIMIT and d * order_g0 * copies <= 10**5
    if feasible:
        miss = (1 - Fraction(1, c_mk)) ** d
        q_copy = (1 - miss) ** order_g0
        colourable_upper = (1 - q_copy) ** copies
        return GadgetProbability(q_copy, 1 - colourable_upper, colourable_upper, True)
    getcontext().prec = _DECIMAL_DIGITS
    miss_d = (1 - Decimal(1) / Decimal(c_mk)) ** d
    q_copy_d = (1 - miss_d) ** order_g0
    upper_d = (1 - q_copy_d) ** copies
    return GadgetProbability(
        float(q_copy_d), float(1 - upper_d), float(upper_d), False
    )


class TermRatio(NamedTuple):
    exact_ratio: float  # e*delta*k^k*(i+1)^k*((i+1)/i)^(k*i) / m^(k/2)
    coarse_upper: float  # e^(k+1)*k^k*delta*(i+1)^k / m^(k/2)


def witness_term_ratio(n: int, delta: int, k: int, m: int, i: int) -> TermRatio:
    """Ratio of consecutive union-bound terms over witness orders.

    The terms are f(i) = n*(e*delta)^(i-1)*(k*i)^(k*i)*m^(-i*k/2); their
    ratio is independent of n. The coarse upper form replaces
    ((i+1)/i)^(k*i) by e^k, so exact <= coarse always.
    """
    if n < 1 or delta < 1 or k < 1 or m < 1:
        raise ValueError("n, delta, k, m must be positive")
    if i < 1:
        raise ValueError("need i >= 1")
    log_common = math.log(delta) + k * math.log(k) + k * math.log(i + 1) \
        - 0.5 * k * math.log(m)
    exact = math.exp(1.0 + k * i * math.log((i + 1) / i) + log_common)
    coarse = math.exp(k + 1.0 + log_common)
    if exact > coarse * (1 + 1e-12):
        raise AssertionError("exact ratio exceeded its coarse upper form")
    return TermRatio(exact, coarse)


@dataclass(frozen=True)
class IntegralQuery:
    """Parameters of the integral bound for x^(-alpha) * (log x)^(-beta)."""

    s: float
    n: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not self.n >= self.s >= 2:
            raise ValueError("need n >= s >= 2")
        if not 0 < self.alpha < 1:
            raise ValueError("need 0 < alpha < 1")
        if not self.beta > 0:
            raise ValueError("need beta > 0")

    @property
    def margin(self) -> float:
        return 1.0 - self.alpha - self.beta / math.log(self.s)


class IntegralCheck(NamedTuple):
    quadrature_value: float
    closed_form: float
    holds: bool


def adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, rel_tol: float = 1e-6
) -> float:
    """Adaptive Simpson quadrature with interval bisection.

    The local acceptance threshold is relative to the running whole-interval
    estimate; Richardson extrapolation sharpens accepted panels.
    """
    if a == b:
        return 0.0
    if a > b:
        return -adaptive_simpson(f, b, a, rel_tol)

    def simpson(fa: float, fm: float, fb: float, h: float) -> float:
        return h / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(
        x0: float, x2: float, f0: float, f1: float, f2: float,
        whole: float, eps: float, depth: int,
    ) -> float:
        xm = (x0 + x2) / 2.0
        xl = (x0 + xm) / 2.0
        xr = (xm + x2) / 2.0
        fl, fr = f(xl), f(xr)
        left = simpson(f0, fl, f1, xm - x0)
        right = simpson(f1, fr, f2, x2 - xm)
        delta = left + right - whole
        if depth >= 60 or abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0
        return recurse(x0, xm, f0, fl, f1, left, eps / 2.0, depth + 1) + recurse(
            xm, x2, f1, fr, f2, right, eps / 2.0, depth + 1
        )

    # geometric pre-split keeps the recursion shallow on huge ranges; each
    # piece gets a tolerance relative to its own crude estimate, so the
    # overall relative error tracks rel_tol
    pieces = []
    lo = a
    while lo < b:
        hi = min(b, lo * 2.0 if lo > 0 else (lo + 1.0))
        if hi <= lo:
            hi = b
        pieces.append((lo, hi))
        lo = hi
    total = 0.0
    for x0, x2 in pieces:
        xm = (x0 + x2) / 2.0
        f0, f1, f2 = f(x0), f(xm), f(x2)
        whole = simpson(f0, f1, f2, x2 - x0)
        eps = rel_tol * (abs(whole) or 1e-300)
        total += recurse(x0, x2, f0, f1, f2, whole, eps, 0)
    return total


def integral_bound_check(q: IntegralQuery, rel_tol: float = 1e-6) -> IntegralCheck:
    """Quadrature of the integral versus its closed-form upper bound."""
    if q.margin <= 0:
        raise ValueError(
            "bound inapplicable: 1 - alpha - beta/log(s) must be positive"
        )
    closed = q.margin**-1 * q.n ** (1.0 - q.alpha) * math.log(q.n) ** (-q.beta)

    def integrand(x: float) -> float:
        return x ** (-q.alpha) * math.log(x) ** (-q.beta)

    value = adaptive_simpson(integrand, q.s, q.n, rel_tol)
    return IntegralCheck(value, closed, value <= closed)


# --- order-of-growth registry -------------------------------------------

@dataclass(frozen=True)
class FormulaDef:
    params: tuple[str, ...]
    domain: Callable[..., bool]
    fn: Callable[..., float]
    note: str


@dataclass(frozen=True)
class OrderValue:
    id: str
    params: dict[str, float]
    value: float
    flags: tuple[str, ...] = field(default=(ORDER_ONLY_FLAG,))

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "value": self.value,
            "flags": list(self.flags),
        }


def _log(x: float) -> float:
    return math.log(x)


REGISTRY: dict[str, FormulaDef] = {
    "R_clique_lower": FormulaDef(
        ("r", "t"),
        lambda r, t: r >= 3 and t >= 2,
        lambda r, t: t ** ((r + 1) / 2) / _log(t) ** ((r + 1) / 2 - 1 / (r - 2)),
        "Ramsey number of K_r vs K_t, lower order",
    ),
    "R_clique_upper": FormulaDef(
        ("r", "t"),
        lambda r, t: r >= 3 and t >= 2,
        lambda r, t: t ** (r - 1) / _log(t) ** (r - 2),
        "Ramsey number of K_r vs K_t, upper order",
    ),
    "R_odd_cycle_lower": FormulaDef(
        ("l", "t"),
        lambda l, t: l >= 2 and t >= 2,
        lambda l, t: t ** (2 * l / (2 * l - 1)) / _log(t) ** (2 / (2 * l - 1)),
        "Ramsey number of C_{2l+1} vs K_t, lower order",
    ),
    "R_odd_cycle_upper": FormulaDef(
        ("l", "t"),
        lambda l, t: l >= 2 and t >= 2,
        lambda l, t: t ** ((l + 1) / l) / _log(t) ** (1 / l),
        "Ramsey number of C_{2l+1} vs K_t, upper order",
    ),
    "R_even_cycle_lower": FormulaDef(
        ("l", "t"),
        lambda l, t: l >= 2 and t >= 2,
        lambda l, t: t ** ((2 * l - 1) / (2 * l - 2)) / _log(t),
        "Ramsey number of C_{2l} vs K_t, lower order",
    ),
    "R_even_cycle_upper": FormulaDef(
        ("l", "t"),
        lambda l, t: l >= 2 and t >= 2,
        lambda l, t: (t / _log(t)) ** (l / (l - 1)),
        "Ramsey number of C_{2l} vs K_t, upper order",
    ),
    "chi_Kr_free": FormulaDef(
        ("r", "n"),
        lambda r, n: r >= 3 and n >= 2,
        lambda r, n: (n / _log(n)) ** ((r - 2) / (r - 1)),
        "chromatic number order for K_r-free graphs",
    ),
    "chi_odd_cycle_free": FormulaDef(
        ("l", "n"),
        lambda l, n: l >= 2 and n >= 2,
        lambda l, n: (n / _log(n)) ** (1 / (l + 1)),
        "chromatic number order for C_{2l+1}-free graphs",
    ),
    "chi_even_cycle_free": FormulaDef(
        ("l", "n"),
        lambda l, n: l >= 2 and n >= 2,
        lambda l, n: n ** (1 / l) / _log(n),
        "chromatic number order for C_{2l}-free graphs",
    ),
    "ch_multipartite": FormulaDef(
        ("m", "r"),
        lambda m, r: m >= 2 and r >= 2,
        lambda m, r: r * _log(m),
        "choice number order of the complete r-partite graph with parts of size m",
    ),
    "g_general_upper": FormulaDef(
        ("t", "k"),
        lambda t, k: t >= 2 and k >= 1,
        lambda t, k: t * math.exp(k / t),
        "upper order of the choosability threshold when the forbidden graph "
        "has chromatic number t+1",
    ),
    "g_clique_lower": FormulaDef(
        ("r", "k"),
        lambda r, k: r >= 3 and k >= 2,
        lambda r, k: k ** ((r - 1) / (r - 2)) * _log(k) ** (-1 / (r - 2)),
        "lower order of the K_r-free choosability threshold",
    ),
    "g_clique_upper": FormulaDef(
        ("r", "k"),
        lambda r, k: r >= 3 and k >= 2,
        lambda r, k: k ** ((r + 1) / (r - 1))
        * _log(k) ** ((r + 1) / (r - 1) - 2 / ((r - 1) * (r - 2))),
        "upper order of the K_r-free choosability threshold",
    ),
    "g_odd_cycle_lower": FormulaDef(
        ("l", "k"),
        lambda l, k: l >= 2 and k >= 2,
        lambda l, k: k ** (l + 1) * _log(k) ** (-l),
        "lower order of the C_{2l+1}-free choosability threshold",
    ),
    "g_odd_cycle_upper": FormulaDef(
        ("l", "k"),
        lambda l, k: l >= 2 and k >= 2,
        lambda l, k: k ** (2 * l) * _log(k) ** 2,
        "upper order of the C_{2l+1}-free choosability threshold",
    ),
    "g_even_cycle_lower": FormulaDef(
        ("l", "k"),
        lambda l, k: l >= 2 and k >= 2,
        lambda l, k: float(k**l),
        "lower order of the C_{2l}-free choosability threshold",
    ),
    "g_even_cycle_upper": FormulaDef(
        ("l", "k"),
        lambda l, k: l >= 2 and k >= 2,
        lambda l, k: (k * _log(k)) ** (2 * l - 2),
        "upper order of the C_{2l}-free choosability threshold",
    ),
    "hfree_exponent_clique": FormulaDef(
        ("r", "k"),
        lambda r, k: r >= 3 and k >= 2,
        lambda r, k: k ** (-(2 * r - 3) / (r - 2)) * _log(k) ** (1 / (r - 2)),
        "exponent of n in the K_r-free palette threshold "
        "(combine as n**value * delta**(2/k))",
    ),
    "hfree_exponent_odd_cycle": FormulaDef(
        ("l", "k"),
        lambda l, k: l >= 2 and k >= 2,
        lambda l, k: k ** (-(l + 2)) * _log(k) ** l,
        "exponent of n in the C_{2l+1}-free palette threshold",
    ),
    "hfree_exponent_even_cycle": FormulaDef(
        ("l", "k"),
        lambda l, k: l >= 2 and k >= 2,
        lambda l, k: k ** (-(l + 1.0)),
        "exponent of n in the C_{2l}-free palette threshold",
    ),
}


def evaluate_order(formula_id: str, **params: float) -> OrderValue:
    """Evaluate a registered order-of-growth expression with constants 1."""
    if formula_id not in REGISTRY:
        raise KeyError(f"unknown formula id: {formula_id!r}")
    spec = REGISTRY[formula_id]
    missing = [p for p in spec.params if p not in params]
    extra = [p for p in params if p not in spec.params]
    if missing or extra:
        raise ValueError(
            f"{formula_id} takes params {spec.params}; "
            f"missing {missing}, unexpected {extra}"
        )
    args = {p: params[p] for p in spec.params}
    if not spec.domain(**args):
        raise ValueError(f"params {args} outside the domain of {formula_id}")
    return OrderValue(formula_id, args, float(spec.fn(**args)))
