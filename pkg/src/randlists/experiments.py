"""Reproducible Monte Carlo experiments over random list-assignments.

Each trial's randomness is a pure function of (master seed, trial index), and
aggregation is a commutative fold over per-trial records, so worker count and
scheduling never change the output: identical (command, seed) pairs produce
byte-identical CSV.

Trials that exceed the solver cap are excluded from the estimate and
reported in the ``errors`` column, never conflated with "non-colourable".
"""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import GadgetProbability, component_tail_bound, gadget_probability
from .dangerous import dangerous_subgraph
from .errors import ComponentTooLargeError
from .gadget import GadgetInstance, has_bad_copy
from .graphs import Graph
from .lists import sample_assignment
from .rng import Seed
from .solver import DEFAULT_COMPONENT_CAP, is_colourable

Z95 = 1.959963984540054

CSV_HEADER = (
    "graph,n,delta,k,m,trials,successes,p_hat,ci_low,ci_high,seed,"
    "max_comp_p50,max_comp_max,errors"
)


def wilson_interval(successes: int, total: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if total <= 0:
        raise ValueError("total must be positive")
    if not 0 <= successes <= total:
        raise ValueError("successes out of range")
    p = successes / total
    z2 = z * z
    denom = 1.0 + z2 / total
    centre = (p + z2 / (2.0 * total)) / denom
    margin = (z / denom) * math.sqrt(p * (1.0 - p) / total + z2 / (4.0 * total * total))
    return max(0.0, centre - margin), min(1.0, centre + margin)


@dataclass(frozen=True)
class EstimateRecord:
    """One Monte Carlo estimate; fully determines a replayable run."""

    graph_label: str
    n: int
    delta: int
    k: int
    m: int
    trials: int
    successes: int
    errors: int
    seed: int
    p_hat: float
    ci_low: float
    ci_high: float
    max_comp_p50: int
    max_comp_max: int

    def csv_row(self) -> str:
        return ",".join(
            [
                self.graph_label,
                str(self.n),
                str(self.delta),
                str(self.k),
                str(self.m),
                str(self.trials),
                str(self.successes),
                f"{self.p_hat:.6f}",
                f"{self.ci_low:.6f}",
                f"{self.ci_high:.6f}",
                str(self.seed),
                str(self.max_comp_p50),
                str(self.max_comp_max),
                str(self.errors),
            ]
        )


def _colour_trial(
    g: Graph, k: int, m: int, master: int, index: int, cap: int
) -> tuple[int, int, int]:
    """(success, error, max component order) for one trial."""
    l = sample_assignment(g.n, k, m, Seed(master, index))
    b = dangerous_subgraph(g, l)
    try:
        ok, _ = is_colourable(g, l, cap=cap, b=b)
    except ComponentTooLargeError:
        return 0, 1, b.max_order
    return int(ok), 0, b.max_order


def _colour_chunk(args) -> list[tuple[int, int, int]]:
    g, k, m, master, lo, hi, cap = args
    return [_colour_trial(g, k, m, master, i, cap) for i in range(lo, hi)]


def _map_chunks(worker, static, trials: int, workers: int) -> list:
    """Run trials in contiguous chunks; results keep trial order."""
    if workers <= 1:
        return worker(static + (0, trials))
    workers = min(workers, trials) or 1
    bounds = [
        (trials * i // workers, trials * (i + 1) // workers) for i in range(workers)
    ]
    chunks = [static + (lo, hi) for lo, hi in bounds if lo < hi]
    out: list = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(worker, chunks):
            out.extend(part)
    return out


def _finish_record(
    label: str,
    g: Graph,
    k: int,
    m: int,
    trials: int,
    master: int,
    results: list[tuple[int, int, int]],
) -> EstimateRecord:
    successes = sum(r[0] for r in results)
    errors = sum(r[1] for r in results)
    orders = [r[2] for r in results]
    valid = trials - errors
    if valid > 0:
        p_hat = successes / valid
        ci_low, ci_high = wilson_interval(successes, valid)
    else:
        p_hat = float("nan")
        ci_low = ci_high = float("nan")
    return EstimateRecord(
        graph_label=label,
        n=g.n,
        delta=g.max_degree,
        k=k,
        m=m,
        trials=trials,
        successes=successes,
        errors=errors,
        seed=master,
        p_hat=p_hat,
        ci_low=ci_low,
        ci_high=ci_high,
        max_comp_p50=statistics.median_low(orders),
        max_comp_max=max(orders),
    )


def mc_colourable(
    g: Graph,
    k: int,
    m: int,
    trials: int,
    master: int,
    workers: int = 1,
    cap: int = DEFAULT_COMPONENT_CAP,
    label: str = "graph",
) -> EstimateRecord:
    """Estimate P(g is colourable from a random (k,m)-assignment)."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    results = _map_chunks(_colour_chunk, (g, k, m, master, cap), trials, workers)
    return _finish_record(label, g, k, m, trials, master, results)


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[EstimateRecord, ...]
    thresholds: dict[str, float]

    def to_csv(self) -> str:
        return "\n".join([CSV_HEADER] + [r.csv_row() for r in self.rows]) + "\n"


def sweep(
    g: Graph,
    k: int,
    m_values: list[int],
    trials: int,
    master: int,
    workers: int = 1,
    cap: int = DEFAULT_COMPONENT_CAP,
    label: str = "graph",
    g_threshold: int | None = None,
) -> SweepResult:
    """One estimate per palette size, plus the threshold formula values."""
    if not m_values:
        raise ValueError("m_values must be non-empty")
    if sorted(m_values) != list(m_values):
        raise ValueError("m_values must be ascending")
    from .bounds import ThresholdQuery, threshold_general, threshold_hfree

    rows = tuple(
        mc_colourable(g, k, m, trials, master, workers=workers, cap=cap, label=label)
        for m in m_values
    )
    q = ThresholdQuery(n=g.n, delta=max(g.max_degree, 1), k=k, g=g_threshold)
    general = threshold_general(q)
    thresholds = {"m_growth": general.m_growth, "m_floor": general.m_floor}
    if g_threshold is not None:
        hfree = threshold_hfree(q)
        thresholds["hfree_upper_growth"] = hfree.upper_growth
        thresholds["hfree_lower_growth"] = hfree.lower_growth
    return SweepResult(rows=rows, thresholds=thresholds)


def _component_trial(g: Graph, k: int, m: int, master: int, index: int) -> int:
    l = sample_assignment(g.n, k, m, Seed(master, index))
    return dangerous_subgraph(g, l).max_order


def _component_chunk(args) -> list[int]:
    g, k, m, master, lo, hi = args
    return [_component_trial(g, k, m, master, i) for i in range(lo, hi)]


@dataclass(frozen=True)
class ComponentExperiment:
    """Distribution of the largest dangerous-component order per trial."""

    graph_label: str
    n: int
    delta: int
    k: int
    m: int
    trials: int
    seed: int
    orders: tuple[int, ...]
    threshold: float  # 20 * ln(n)
    exceed_count: int
    union_bound: float  # tail bound at exactly that order

    def quantiles(self) -> dict[str, int]:
        s = sorted(self.orders)
        pick = lambda q: s[min(len(s) - 1, int(q * len(s)))]
        return {
            "min": s[0],
            "p25": pick(0.25),
            "p50": pick(0.50),
            "p75": pick(0.75),
            "p90": pick(0.90),
            "max": s[-1],
        }

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_label,
            "n": self.n,
            "delta": self.delta,
            "k": self.k,
            "m": self.m,
            "trials": self.trials,
            "seed": self.seed,
            "quantiles": self.quantiles(),
            "threshold_20_log_n": self.threshold,
            "trials_exceeding_threshold": self.exceed_count,
            "union_bound_at_threshold": self.union_bound,
        }


def component_experiment(
    g: Graph,
    k: int,
    m: int,
    trials: int,
    master: int,
    workers: int = 1,
    label: str = "graph",
) -> ComponentExperiment:
    """Per-trial max dangerous-component order versus the 20*ln(n) bound."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    orders = _map_chunks(_component_chunk, (g, k, m, master), trials, workers)
    threshold = 20.0 * math.log(g.n) if g.n > 1 else 0.0
    exceed = sum(1 for o in orders if o > threshold)
    union = component_tail_bound(g.n, max(g.max_degree, 1), k, m, threshold)
    return ComponentExperiment(
        graph_label=label,
        n=g.n,
        delta=g.max_degree,
        k=k,
        m=m,
        trials=trials,
        seed=master,
        orders=tuple(orders),
        threshold=threshold,
        exceed_count=exceed,
        union_bound=union,
    )


def _gadget_trial(
    inst: GadgetInstance, k: int, m: int, master: int, index: int, cap: int
) -> tuple[int, int, int]:
    l = sample_assignment(inst.graph.n, k, m, Seed(master, index))
    bad = int(has_bad_copy(inst, l))
    try:
        ok, _ = is_colourable(inst.graph, l, cap=cap)
    except ComponentTooLargeError:
        return bad, 0, 1
    return bad, int(ok), 0


def _gadget_chunk(args) -> list[tuple[int, int, int]]:
    inst, k, m, master, lo, hi, cap = args
    return [_gadget_trial(inst, k, m, master, i, cap) for i in range(lo, hi)]


@dataclass(frozen=True)
class GadgetExperiment:
    """Estimates for the gadget cross-check against the exact formula."""

    trials: int
    seed: int
    p_bad: float
    p_colourable: float
    errors: int
    exact: GadgetProbability
    sigma_bad: float
    sigma_upper: float
    bad_within_3_sigma: bool
    colourable_below_upper: bool

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "p_bad": self.p_bad,
            "p_colourable": self.p_colourable,
            "errors": self.errors,
            "exact_q_copy": float(self.exact.q_copy),
            "exact_p_bad": float(self.exact.p_bad_exists),
            "exact_colourable_upper": float(self.exact.colourable_upper),
            "exact_arithmetic": self.exact.exact,
            "bad_within_3_sigma": self.bad_within_3_sigma,
            "colourable_below_upper": self.colourable_below_upper,
        }


def gadget_experiment(
    inst: GadgetInstance,
    k: int,
    m: int,
    trials: int,
    master: int,
    workers: int = 1,
    cap: int = DEFAULT_COMPONENT_CAP,
    strict: bool = True,
) -> GadgetExperiment:
    """Estimate P(bad copy) and P(colourable); cross-check the exact values.

    With ``strict``, a bad-copy estimate farther than 3 binomial sigma from
    the exact probability, or a colourability estimate above the exact upper
    bound plus 3 sigma, raises: this experiment is the formula's test.
    """
    if trials < 1:
        raise ValueError("need trials >= 1")
    if k != inst.k:
        raise ValueError(f"instance planted lists have size {inst.k}, got k={k}")
    results = _map_chunks(
        _gadget_chunk, (inst, k, m, master, cap), trials, workers
    )
    bad = sum(r[0] for r in results)
    colourable = sum(r[1] for r in results)
    errors = sum(r[2] for r in results)
    valid = trials - errors
    exact = gadget_probability(
        inst.graph.n, inst.delta, k, m, inst.d, inst.g0.n
    )
    p_bad_exact = float(exact.p_bad_exists)
    upper = float(exact.colourable_upper)
    p_bad_hat = bad / trials
    p_col_hat = colourable / valid if valid else float("nan")
    sigma_bad = math.sqrt(max(p_bad_exact * (1 - p_bad_exact), 1e-300) / trials)
    sigma_upper = math.sqrt(max(upper * (1 - upper), 1e-300) / max(valid, 1))
    ok_bad = abs(p_bad_hat - p_bad_exact) <= 3.0 * sigma_bad
    ok_upper = p_col_hat <= upper + 3.0 * sigma_upper
    result = GadgetExperiment(
        trials=trials,
        seed=master,
        p_bad=p_bad_hat,
        p_colourable=p_col_hat,
        errors=errors,
        exact=exact,
        sigma_bad=sigma_bad,
        sigma_upper=sigma_upper,
        bad_within_3_sigma=ok_bad,
        colourable_below_upper=ok_upper,
    )
    if strict and not (ok_bad and ok_upper):
        raise RuntimeError(
            "gadget cross-check failed: "
            f"p_bad={p_bad_hat:.6f} vs exact {p_bad_exact:.6f} "
            f"(3 sigma = {3 * sigma_bad:.6f}); "
            f"p_colourable={p_col_hat:.6f} vs upper {upper:.6f}"
        )
    return result
