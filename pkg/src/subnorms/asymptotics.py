"""Growth and boundedness of composed maps: slopes A and B, linear envelopes.

For a dominated pair the ratio h(x)/x converges at infinity to its infimum
(the asymptotic slope A), and A equals lim_{t->0+} s1(t)/s2(t), classifying
the generators as infinities of lower or same order.  The small-argument
slope B bounds h above; together A*x <= h(x) <= B*x is the linear envelope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .generators import DEFAULT_TOL, INF, IntervalGrid, ToleranceProfile, geval
from .ordering import (
    ComposedMap,
    CriterionReport,
    FAILS,
    HOLDS,
    NOT_APPLICABLE,
    direct_compare,
    dominated_or_equal,
    map_samples,
    subadditivity_test,
)

_REL_TOL = 1e-3  # convergence window for the probe sequences

ORDER_LOWER = "order_lower"       # A = 0: s1 is an infinity of lower order
SAME_ORDER = "same_order"         # 0 < A < inf: same order of infinity
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class SlopeEstimate:
    value: float
    converged: bool
    sequence: list = field(default_factory=list)  # (probe, ratio) pairs
    note: str = ""
    sample_infimum: float | None = None

    def serialize(self) -> str:
        lines = [f"value: {self.value:.9g}", f"converged: {self.converged}",
                 f"note: {self.note}"]
        for probe, ratio in self.sequence:
            lines.append(f"probe: {probe:.3g} ratio: {ratio:.9g}")
        return "\n".join(lines)


def _classify(value: float) -> str:
    if not math.isfinite(value):
        return UNBOUNDED
    if abs(value) <= _REL_TOL:
        return ORDER_LOWER
    return SAME_ORDER


def _probe_limit(pairs: list[tuple[float, float]]) -> tuple[float, bool]:
    ratios = [r for _, r in pairs if math.isfinite(r)]
    if len(ratios) < 2:
        return INF, False
    last, prev = ratios[-1], ratios[-2]
    converged = abs(last - prev) <= _REL_TOL * max(1.0, abs(last))
    if len(ratios) < len(pairs):  # some probes overflowed
        return INF, False
    return last, converged


def asymptotic_slope_A(m: ComposedMap, grid: IntervalGrid | None = None,
                       tol: ToleranceProfile = DEFAULT_TOL) -> SlopeEstimate:
    """A = lim_{x->inf} h(x)/x, estimated as lim_{t->0+} s1(t)/s2(t).

    Fixture maps without generators probe h(x)/x directly at growing x.
    Divergence is reported as inf with converged=False, not an error.
    """
    pairs = []
    if m.lhs is not None and m.rhs is not None:
        for k in range(1, 13):
            t = 10.0 ** (-k)
            ratio = float(geval(m.lhs, t)) / float(geval(m.rhs, t))
            pairs.append((t, ratio))
    else:
        base = max(1.0, m.domain_start)
        for k in range(1, 13):
            x = base * 10.0 ** k
            pairs.append((x, float(m(x)) / x))
    value, converged = _probe_limit(pairs)
    grid = grid or IntervalGrid.uniform(101)
    u = map_samples(m, grid)
    u = u[u > 0]
    inf_phi = float(np.min(m(u) / u)) if u.size else None
    return SlopeEstimate(value=value, converged=converged, sequence=pairs,
                         note=_classify(value), sample_infimum=inf_phi)


def small_slope_B(m: ComposedMap, grid: IntervalGrid | None = None,
                  tol: ToleranceProfile = DEFAULT_TOL) -> SlopeEstimate:
    """B bounding h(x) <= B*x.

    Strict-pair case (domain start 0): the limit of h(x)/x as x -> 0+.
    Normalized proper pair: the supremum of h(x)/x over samples, which the
    subadditivity bound caps at 2.
    """
    grid = grid or IntervalGrid.uniform(101)
    if m.domain_start == 0.0:
        pairs = []
        for k in range(1, 13):
            x = 10.0 ** (-k)
            pairs.append((x, float(m(x)) / x))
        value, converged = _probe_limit(pairs)
        return SlopeEstimate(value=value, converged=converged, sequence=pairs,
                             note=_classify(value))
    if m.both_normalized:
        u = map_samples(m, grid)
        u = u[u >= m.domain_start]
        phi = m(u) / u
        value = float(np.max(phi))
        note = "sup over samples" + ("" if value <= 2.0 + tol.verdict_margin
                                     else "; exceeds the theoretical bound 2")
        k = int(np.argmax(phi))
        return SlopeEstimate(value=value, converged=True,
                             sequence=[(float(u[k]), value)], note=note)
    return SlopeEstimate(value=math.nan, converged=False,
                         note="not_applicable: mixed unnormalized pair")


def linear_envelope_check(m: ComposedMap, A: float, B: float,
                          grid: IntervalGrid,
                          tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """A*x <= h(x) <= B*x across samples."""
    if not (A <= B and math.isfinite(A) and math.isfinite(B)):
        return CriterionReport("linear_envelope_check", NOT_APPLICABLE,
                               notes="need finite A <= B")
    u = map_samples(m, grid)
    u = u[u > 0]
    hu = m(u)
    allow = tol.verdict_margin * np.maximum(1.0, u)
    below = A * u - hu  # positive entries violate the lower envelope
    above = hu - B * u
    res = np.maximum(below, above)
    k = int(np.argmax(res - allow))
    wc = (float(u[k]), float(res[k]))
    notes = ""
    phi = hu / u
    if phi[-1] > 10.0 * np.median(phi) and phi[-1] > phi[u.size // 2]:
        notes = "h(x)/x unbounded on samples; h itself is unbounded"
    if np.any(res > allow):
        return CriterionReport("linear_envelope_check", FAILS, wc, notes=notes)
    return CriterionReport("linear_envelope_check", HOLDS, wc, notes=notes)


def section4_equivalences(m: ComposedMap, grid: IntervalGrid,
                          tol: ToleranceProfile = DEFAULT_TOL,
                          pair=None) -> dict[str, CriterionReport]:
    """The three growth-based order predicates, each cross-checked.

    (a) convex profile: finite asymptotic slope must coincide with the
        subadditivity verdict;
    (b) non-increasing bounded profile: forces dominance plus the A/B envelope;
    (c) concave h with sup phi <= 1: dominance iff A <= phi <= 1.

    ``pair = (S1, S2)`` adds the grid oracle to each cross-check.
    """
    u = map_samples(m, grid)
    u = u[u > 0]
    hu = m(u)
    phi = hu / u
    margin = tol.verdict_margin

    subadd = subadditivity_test(m, grid, tol)
    dominated = subadd.holds
    if pair is not None:
        oracle = direct_compare(pair[0], pair[1], grid, tol)
        dominated = dominated_or_equal(oracle)

    A_est = asymptotic_slope_A(m, grid, tol)

    # midpoint convexity of phi
    U, V = u[:, None], u[None, :]
    PU, PV = phi[:, None], phi[None, :]
    phimid = m((U + V) / 2.0) / ((U + V) / 2.0)
    phi_convex = bool(np.all(phimid - (PU + PV) / 2.0
                             <= margin * np.maximum(1.0, np.abs(PU) + np.abs(PV))))
    out: dict[str, CriterionReport] = {}

    if phi_convex:
        predicted = A_est.converged and math.isfinite(A_est.value)
        verdict = HOLDS if predicted == dominated else FAILS
        out["convex_profile"] = CriterionReport(
            "section4_convex_profile", verdict,
            notes=f"finite slope predicts dominance={predicted}, "
                  f"actual={dominated}", details={"A": A_est.value})
    else:
        out["convex_profile"] = CriterionReport(
            "section4_convex_profile", NOT_APPLICABLE,
            notes="phi not midpoint-convex on samples")

    phi_noninc = bool(np.all(np.diff(phi)
                             <= margin * np.maximum(1.0, np.abs(phi[:-1]))))
    phi_bounded = bool(np.all(np.isfinite(phi)))
    if phi_noninc and phi_bounded:
        B = float(np.max(phi))
        env = linear_envelope_check(m, min(A_est.value, B), B, grid, tol)
        ok = dominated and env.holds
        out["monotone_profile"] = CriterionReport(
            "section4_monotone_profile", HOLDS if ok else FAILS,
            notes=f"dominance={dominated}, envelope={env.verdict}",
            details={"A": A_est.value, "B": B})
    else:
        out["monotone_profile"] = CriterionReport(
            "section4_monotone_profile", NOT_APPLICABLE,
            notes="phi not non-increasing and bounded")

    HU, HV = hu[:, None], hu[None, :]
    hmid = m((U + V) / 2.0)
    h_concave = bool(np.all((HU + HV) / 2.0 - hmid
                            <= margin + 1e-9 * (np.abs(HU) + np.abs(HV))))
    sup_phi = float(np.max(phi))
    if h_concave and sup_phi <= 1.0 + margin:
        A = A_est.value if math.isfinite(A_est.value) else 0.0
        enveloped = bool(np.all((phi >= A - margin) & (phi <= 1.0 + margin)))
        verdict = HOLDS if enveloped == dominated else FAILS
        out["concave_envelope"] = CriterionReport(
            "section4_concave_envelope", verdict,
            notes=f"A<=phi<=1 is {enveloped}, dominance is {dominated}",
            details={"A": A, "sup_phi": sup_phi})
    else:
        out["concave_envelope"] = CriterionReport(
            "section4_concave_envelope", NOT_APPLICABLE,
            notes="h not concave with sup phi <= 1")
    return out
