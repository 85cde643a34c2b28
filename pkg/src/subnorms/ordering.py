"""Deciding and certifying the pointwise order of t-subnorms.

The ground truth is a brute-force grid oracle (:func:`direct_compare`).
Every other test here is a criterion on the composed map h = s1 o s2^{-1}:
subadditivity of h characterizes S1 <= S2 exactly; linearity characterizes
equality; concavity, generator ratio, ratio profile and derivative ratio are
sufficient certificates; submultiplicative-additivity handles dominance by a
strict t-norm through its product isomorphism.  Criteria never override the
oracle: the public :func:`compare` runs cheap certificates first and falls
back to the grid scan, recording which path decided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .generators import (
    DEFAULT_TOL,
    Generator,
    IntervalGrid,
    ParameterError,
    ToleranceProfile,
    derivative,
    geval,
    ginvert,
    normalize,
)
from .operators import (
    FamilySpec,
    Fixture,
    Operator,
    TSubnorm,
    make_family,
)

# verdict tags
DOMINATES = "dominates"
DOMINATED = "dominated"
EQUAL = "equal"
INCOMPARABLE = "incomparable"
UNKNOWN = "unknown"

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"

# Absolute verdict margin plus a float-noise allowance proportional to the
# magnitudes involved: h values reach ~1e12 near the infinity asymptote, where
# a flat 1e-6 margin would flag pure round-off as a violation.
_NOISE = 1e-9


def _slack(margin: float, *mags) -> np.ndarray:
    scale = sum(np.where(np.isfinite(m), np.abs(m), 0.0) for m in mags)
    return margin + _NOISE * scale


def _sanitize(res: np.ndarray) -> np.ndarray:
    """inf - inf residuals are the exact infinity branch: trivially satisfied."""
    return np.where(np.isnan(res), -np.inf, res)


@dataclass(frozen=True)
class ComposedMap:
    """h = s1 o s2^{-1} on [s2(1), inf]; strictly increasing, h(s2(1)) = s1(1).

    Fixture maps (an explicit callable h with its domain start) share the
    same interface so the converse-failure examples can be exercised.
    """

    h: Callable[[np.ndarray], np.ndarray]
    domain_start: float
    lhs: Generator | None = None
    rhs: Generator | None = None
    label: str = "h"

    def __call__(self, u):
        return self.h(np.asarray(u, dtype=float))

    @property
    def both_normalized(self) -> bool:
        if self.lhs is not None and self.rhs is not None:
            return (self.lhs.boundary_at_one == 1.0
                    and self.rhs.boundary_at_one == 1.0)
        # fixture on [1, inf] is treated as the normalized-pair case
        return self.domain_start == 1.0


def compose(s1: Generator, s2: Generator,
            tol: ToleranceProfile = DEFAULT_TOL) -> ComposedMap:
    def h(u):
        return geval(s1, ginvert(s2, u, tol))

    return ComposedMap(h=h, domain_start=s2.boundary_at_one, lhs=s1, rhs=s2,
                       label=f"{s1.label} o inv({s2.label})")


def from_callable(h: Callable, domain_start: float, label: str = "h") -> ComposedMap:
    return ComposedMap(h=h, domain_start=domain_start, label=label)


def map_samples(m: ComposedMap, grid: IntervalGrid) -> np.ndarray:
    """Abscissae for criterion scans.

    Generator-backed maps sample u = s2(x) over the grid plus decade points
    down to epsilon_floor, reaching u ~ s2(1e-6); the exact infinity branch is
    handled separately (h(inf) = inf makes subadditivity trivial there).
    Fixture maps sample geometrically from the domain start.
    """
    if m.rhs is not None:
        xs = np.unique(np.concatenate([
            grid.points,
            np.geomspace(grid.epsilon_floor, 0.1, 6),
        ]))
        u = geval(m.rhs, xs)
        u = u[np.isfinite(u)]
    else:
        u = m.domain_start + np.concatenate(
            [[0.0], np.geomspace(1e-4, 1e6, 51)])
    return np.unique(u)


@dataclass(frozen=True)
class ComparisonVerdict:
    relation: str
    witnesses: list = field(default_factory=list)  # (x, y, lhs, rhs) tuples
    criterion: str = "direct_compare"
    margin: float = DEFAULT_TOL.verdict_margin


@dataclass(frozen=True)
class CriterionReport:
    criterion: str
    verdict: str
    worst_case: tuple | None = None  # sample point(s) + residual
    notes: str = ""
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS


def _serialize_witness(w: tuple) -> str:
    return " ".join(f"{v:.9g}" for v in w)


def serialize_verdict(v: ComparisonVerdict) -> str:
    """Stable text record: criterion, verdict, witnesses, margin."""
    lines = [f"criterion: {v.criterion}", f"verdict: {v.relation}"]
    for w in v.witnesses:
        lines.append(f"witness: {_serialize_witness(w)}")
    lines.append(f"margin: {v.margin:g}")
    return "\n".join(lines)


def serialize_report(r: CriterionReport) -> str:
    lines = [f"criterion: {r.criterion}", f"verdict: {r.verdict}"]
    if r.worst_case is not None:
        lines.append(f"worst_case: {_serialize_witness(r.worst_case)}")
    if r.notes:
        lines.append(f"notes: {r.notes}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# the oracle


def direct_compare(S1: Operator, S2: Operator, grid: IntervalGrid,
                   tol: ToleranceProfile = DEFAULT_TOL) -> ComparisonVerdict:
    """Brute-force pointwise comparison over grid x grid; the ground truth."""
    pts = np.concatenate([[0.0], grid.points])
    X, Y = pts[:, None], pts[None, :]
    d = S1.surface(X, Y, tol) - S2.surface(X, Y, tol)
    m = tol.verdict_margin
    hi, lo = float(np.max(d)), float(np.min(d))

    def witness(idx):
        i, j = np.unravel_index(idx, d.shape)
        x, y = float(pts[i]), float(pts[j])
        return (x, y, float(S1.surface(x, y, tol)), float(S2.surface(x, y, tol)))

    if hi <= m and lo >= -m:
        relation, wits = EQUAL, [witness(int(np.argmax(np.abs(d))))]
    elif hi <= m:
        relation, wits = DOMINATED, [witness(int(np.argmin(d)))]
    elif lo >= -m:
        relation, wits = DOMINATES, [witness(int(np.argmax(d)))]
    else:
        relation = INCOMPARABLE
        wits = [witness(int(np.argmax(d))), witness(int(np.argmin(d)))]
    return ComparisonVerdict(relation=relation, witnesses=wits,
                             criterion="direct_compare", margin=m)


def dominated_or_equal(v: ComparisonVerdict) -> bool:
    return v.relation in (DOMINATED, EQUAL)


# ---------------------------------------------------------------------------
# criteria on the composed map


def subadditivity_test(m: ComposedMap, grid: IntervalGrid,
                       tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """h(u+v) <= h(u) + h(v) over all sample pairs; exact iff S1 <= S2."""
    u = map_samples(m, grid)
    hu = m(u)
    U, V = u[:, None], u[None, :]
    HU, HV = hu[:, None], hu[None, :]
    huv = m(U + V)
    res = _sanitize(huv - HU - HV)
    allow = _slack(tol.verdict_margin, HU, HV)
    bad = res > allow
    worst = int(np.argmax(res - allow))
    i, j = np.unravel_index(worst, res.shape)
    wc = (float(u[i]), float(u[j]), float(res[i, j]))
    if np.any(bad):
        return CriterionReport("subadditivity_test", FAILS, wc,
                               notes="superadditive pair found")
    return CriterionReport("subadditivity_test", HOLDS, wc)


def equality_test(m: ComposedMap, grid: IntervalGrid,
                  tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """h is homogeneous linear (h(u) = c*u, c > 0) iff S1 = S2."""
    u = map_samples(m, grid)
    hu = m(u)
    nz = u[u > 0]
    if nz.size == 0:
        return CriterionReport("equality_test", NOT_APPLICABLE,
                               notes="no nonzero sample for the fit")
    u0 = float(np.median(nz))
    c = float(m(u0)) / u0
    res = np.abs(hu - c * u)
    allow = tol.verdict_margin * np.maximum(1.0, np.abs(u))
    worst = int(np.argmax(res - allow))
    wc = (float(u[worst]), float(res[worst]))
    if c > 0 and np.all(res <= allow):
        return CriterionReport("equality_test", HOLDS, wc, details={"c": c})
    return CriterionReport("equality_test", FAILS, wc, details={"c": c})


def concavity_criterion(m: ComposedMap, grid: IntervalGrid,
                        tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """Midpoint concavity of h, plus h(u) <= u in the both-normalized case.

    Sufficient only: subadditivity does not imply concavity, and without the
    upper bound a concave h can fail subadditivity (the affine-with-offset
    counterexamples).
    """
    u = map_samples(m, grid)
    hu = m(u)
    U, V = u[:, None], u[None, :]
    HU, HV = hu[:, None], hu[None, :]
    hmid = m((U + V) / 2.0)
    res = _sanitize((HU + HV) / 2.0 - hmid)  # positive entries violate concavity
    allow = _slack(tol.verdict_margin, HU, HV)
    concave = bool(np.all(res <= allow))
    i, j = np.unravel_index(int(np.argmax(res - allow)), res.shape)
    wc = (float(u[i]), float(u[j]), float(res[i, j]))
    details = {"midpoint_concave": concave, "upper_bound_ok": None}
    notes = ""
    side_ok = True
    if m.both_normalized:
        over = hu - u
        side_ok = bool(np.all(over <= tol.verdict_margin * np.maximum(1.0, u)))
        details["upper_bound_ok"] = side_ok
        if not side_ok:
            k = int(np.argmax(over))
            wc = (float(u[k]), float(over[k]))
            notes = "h(u) <= u fails (normalized-pair side condition)"
    if concave and side_ok:
        return CriterionReport("concavity_criterion", HOLDS, wc, details=details)
    if not concave:
        notes = notes or "midpoint concavity fails"
    return CriterionReport("concavity_criterion", FAILS, wc, notes=notes,
                           details=details)


def quasi_homogeneity_criterion(
        m: ComposedMap, grid: IntervalGrid,
        t_samples=(1.0, 1.5, 2.0, 3.0, 5.0, 10.0),
        tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """Under convexity of h: h(t*x) <= t*h(x) for t >= 1 iff S1 <= S2."""
    u = map_samples(m, grid)
    hu = m(u)
    U, V = u[:, None], u[None, :]
    HU, HV = hu[:, None], hu[None, :]
    hmid = m((U + V) / 2.0)
    convex_res = _sanitize(hmid - (HU + HV) / 2.0)
    if np.any(convex_res > _slack(tol.verdict_margin, HU, HV)):
        return CriterionReport("quasi_homogeneity_criterion", NOT_APPLICABLE,
                               notes="h is not midpoint-convex on samples")
    worst_wc, worst_gap = None, -math.inf
    for t in t_samples:
        if t < 1:
            raise ParameterError("t samples must be >= 1")
        res = m(t * u) - t * hu
        allow = _slack(tol.verdict_margin, t * hu)
        gap = float(np.max(res - allow))
        if gap > worst_gap:
            k = int(np.argmax(res - allow))
            worst_gap, worst_wc = gap, (t, float(u[k]), float(res[k]))
    if worst_gap > 0:
        return CriterionReport("quasi_homogeneity_criterion", FAILS, worst_wc)
    return CriterionReport("quasi_homogeneity_criterion", HOLDS, worst_wc)


def ratio_criterion(s1: Generator, s2: Generator, grid: IntervalGrid,
                    tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """s1/s2 non-decreasing on (0,1) forces S1 <= S2 (sufficient only)."""
    xs = np.unique(np.concatenate([
        np.geomspace(grid.epsilon_floor, 0.1, 6), grid.interior]))
    r = geval(s1, xs) / geval(s2, xs)
    drops = -np.diff(r)  # positive entries are decreases
    allow = tol.verdict_margin * np.maximum(1.0, np.abs(r[:-1]))
    k = int(np.argmax(drops - allow))
    wc = (float(xs[k]), float(xs[k + 1]), float(drops[k]))
    if np.any(drops > allow):
        return CriterionReport("ratio_criterion", FAILS, wc,
                               notes="generator ratio decreases")
    return CriterionReport("ratio_criterion", HOLDS, wc)


def ratio_profile_criterion(m: ComposedMap, grid: IntervalGrid,
                            tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """phi(u) = h(u)/u non-increasing forces S1 <= S2 (sufficient only)."""
    u = map_samples(m, grid)
    u = u[u > 0]
    if u.size < 2:
        return CriterionReport("ratio_profile_criterion", NOT_APPLICABLE,
                               notes="not enough positive samples")
    phi = m(u) / u
    rises = np.diff(phi)
    allow = tol.verdict_margin * np.maximum(1.0, np.abs(phi[:-1]))
    k = int(np.argmax(rises - allow))
    wc = (float(u[k]), float(u[k + 1]), float(rises[k]))
    if np.any(rises > allow):
        return CriterionReport("ratio_profile_criterion", FAILS, wc,
                               notes="profile increases")
    return CriterionReport("ratio_profile_criterion", HOLDS, wc)


def derivative_ratio_criterion(s1: Generator, s2: Generator, grid: IntervalGrid,
                               tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """s1'/s2' non-decreasing (plus s1 <= s2 when both normalized) => S1 <= S2."""
    lo = max(float(grid.points[0]), 1e-4)
    xs = grid.points[(grid.points >= lo) & (grid.points <= 1 - 1e-4)]
    if xs.size < 3:
        xs = np.linspace(0.05, 0.95, 19)
    try:
        d1 = np.array([derivative(s1, float(x), tol) for x in xs])
        d2 = np.array([derivative(s2, float(x), tol) for x in xs])
    except Exception as exc:  # endpoint differentiation failure
        return CriterionReport("derivative_ratio_criterion", NOT_APPLICABLE,
                               notes=f"differentiation failed: {exc}")
    if not (np.all(np.isfinite(d1)) and np.all(np.isfinite(d2))
            and np.all(d2 != 0)):
        return CriterionReport("derivative_ratio_criterion", NOT_APPLICABLE,
                               notes="non-finite derivative samples")
    r = d1 / d2
    drops = -np.diff(r)
    # finite differences carry more noise than closed forms; widen the slack
    allow = 1e-4 * np.maximum(1.0, np.abs(r[:-1]))
    k = int(np.argmax(drops - allow))
    wc = (float(xs[k]), float(xs[k + 1]), float(drops[k]))
    if np.any(drops > allow):
        return CriterionReport("derivative_ratio_criterion", FAILS, wc,
                               notes="derivative ratio decreases")
    both_norm = (s1.boundary_at_one == 1.0 and s2.boundary_at_one == 1.0)
    if both_norm:
        v1, v2 = geval(s1, xs), geval(s2, xs)
        over = v1 - v2
        if np.any(over > tol.verdict_margin * np.maximum(1.0, np.abs(v2))):
            k = int(np.argmax(over))
            return CriterionReport(
                "derivative_ratio_criterion", FAILS,
                (float(xs[k]), float(over[k])),
                notes="s1 <= s2 fails (normalized-pair side condition)")
    return CriterionReport("derivative_ratio_criterion", HOLDS, wc)


# ---------------------------------------------------------------------------
# dominance by / equality with a strict t-norm


def _product_transport(s: Generator, t: Generator, u: np.ndarray,
                       tol: ToleranceProfile) -> np.ndarray:
    """g(u) = s(t^{-1}(-ln u)) on (0,1]; t's product isomorphism pullback."""
    with np.errstate(divide="ignore"):
        w = -np.log(u)
    return geval(s, ginvert(t, w, tol))


def strict_dominance_test(S: TSubnorm, T: TSubnorm, grid: IntervalGrid,
                          tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """S <= T iff g(u) = s(t^{-1}(-ln u)) is submultiplicative-additive."""
    if not isinstance(T, TSubnorm) or not T.is_strict:
        return CriterionReport("strict_dominance_test", NOT_APPLICABLE,
                               notes="right operand is not a strict t-norm")
    if not S.is_proper:
        return CriterionReport("strict_dominance_test", NOT_APPLICABLE,
                               notes="left operand is not proper")
    s = normalize(S.generator)
    t = T.generator
    u = np.unique(np.concatenate([
        np.geomspace(grid.epsilon_floor, 0.1, 6), grid.points]))
    g = _product_transport(s, t, u, tol)
    U, V = u[:, None], u[None, :]
    GU, GV = g[:, None], g[None, :]
    guv = _product_transport(s, t, U * V, tol)
    res = _sanitize(guv - GU - GV)
    allow = _slack(tol.verdict_margin, GU, GV)
    i, j = np.unravel_index(int(np.argmax(res - allow)), res.shape)
    wc = (float(u[i]), float(u[j]), float(res[i, j]))
    if np.any(res > allow):
        return CriterionReport("strict_dominance_test", FAILS, wc,
                               notes="submultiplicative-additivity fails")
    return CriterionReport("strict_dominance_test", HOLDS, wc)


def logarithmic_equality_test(S: TSubnorm, T: TSubnorm, grid: IntervalGrid,
                              tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """S = T iff g(u) = s(t^{-1}(-ln u)) equals -c*ln u for some c > 0."""
    if not isinstance(T, TSubnorm) or not T.is_strict:
        return CriterionReport("logarithmic_equality_test", NOT_APPLICABLE,
                               notes="right operand is not a strict t-norm")
    s, t = S.generator, T.generator
    u = np.unique(np.concatenate([
        np.geomspace(grid.epsilon_floor, 0.1, 6), grid.interior]))
    g = _product_transport(s, t, u, tol)
    u0 = float(np.median(u))
    c = float(_product_transport(s, t, np.asarray(u0), tol)) / (-math.log(u0))
    lnu = np.log(u)
    res = np.abs(g + c * lnu)
    allow = tol.verdict_margin * np.maximum(1.0, np.abs(lnu))
    k = int(np.argmax(res - allow))
    wc = (float(u[k]), float(res[k]))
    if c > 0 and np.all(res <= allow):
        return CriterionReport("logarithmic_equality_test", HOLDS, wc,
                               details={"c": c})
    return CriterionReport("logarithmic_equality_test", FAILS, wc,
                           details={"c": c}, notes="g is not logarithmic")


# ---------------------------------------------------------------------------
# guards


def _power(op: Operator, x: float, n: int) -> float:
    """x_op^{(n)}: the n-fold diagonal power."""
    acc = x
    for _ in range(n - 1):
        acc = float(op.surface(x, acc))
        if acc == 0.0:
            return 0.0
    return acc


def nilpotent_guard(S: Operator, T_nilpotent: Fixture, grid: IntervalGrid,
                    tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """S <= T always fails for nilpotent T: some power hits 0 under T only."""
    if not getattr(T_nilpotent, "nilpotent", False):
        return CriterionReport("nilpotent_guard", NOT_APPLICABLE,
                               notes="right operand is not a nilpotent fixture")
    candidates = [0.6, 0.5, 0.8] + [float(x) for x in grid.interior[::-1]]
    for x in candidates:
        if not 0 < x < 1:
            continue
        acc, n = x, 1
        while acc > 0.0 and n < 500:
            acc = float(T_nilpotent.surface(x, acc))
            n += 1
        if acc > 0.0:
            continue  # fixture never vanished here; try another point
        s_power = _power(S, x, n)
        if s_power > tol.verdict_margin:
            return CriterionReport(
                "nilpotent_guard", FAILS, (x, float(n), s_power, 0.0),
                notes="power witness: x_T^(n) = 0 < x_S^(n)",
                details={"x": x, "n": n, "s_power": s_power})
    return CriterionReport("nilpotent_guard", NOT_APPLICABLE,
                           notes="no vanishing power found on the grid")


def proper_never_dominates_tnorm_check(
        S: TSubnorm, T: Operator, grid: IntervalGrid,
        tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """T <= S is impossible for proper S: S(x,1) < x = T(x,1) somewhere."""
    if not (isinstance(S, TSubnorm) and S.is_proper):
        return CriterionReport("proper_never_dominates_tnorm_check",
                               NOT_APPLICABLE, notes="left operand not proper")
    xs = grid.points
    gap = xs - S.surface(xs, np.asarray(1.0), tol)
    k = int(np.argmax(gap))
    if gap[k] > tol.verdict_margin:
        x = float(xs[k])
        return CriterionReport(
            "proper_never_dominates_tnorm_check", HOLDS,
            (x, float(S.surface(x, 1.0)), x),
            notes="boundary-row witness S(x,1) < x")
    return CriterionReport("proper_never_dominates_tnorm_check", FAILS,
                           (float(xs[k]), float(gap[k])),
                           notes="no boundary gap found")


# ---------------------------------------------------------------------------
# dispatch, family scans, public compare


def _section3_generator(S: TSubnorm) -> Generator:
    """The generator used by criteria: normalized for proper subnorms."""
    g = S.generator
    return normalize(g) if g.boundary_at_one > 0 else g


def run_criterion(name: str, S1: TSubnorm, S2: TSubnorm, grid: IntervalGrid,
                  tol: ToleranceProfile = DEFAULT_TOL) -> CriterionReport:
    """Run a named order criterion for the claim S1 <= S2 (or S1 = S2)."""
    s1, s2 = _section3_generator(S1), _section3_generator(S2)
    m = compose(s1, s2, tol)
    if name == "subadditivity":
        return subadditivity_test(m, grid, tol)
    if name == "equality":
        return equality_test(m, grid, tol)
    if name == "concavity":
        return concavity_criterion(m, grid, tol)
    if name == "quasi_homogeneity":
        return quasi_homogeneity_criterion(m, grid, tol=tol)
    if name == "ratio":
        return ratio_criterion(s1, s2, grid, tol)
    if name == "ratio_profile":
        return ratio_profile_criterion(m, grid, tol)
    if name == "derivative_ratio":
        return derivative_ratio_criterion(s1, s2, grid, tol)
    if name == "strict_dominance":
        return strict_dominance_test(S1, S2, grid, tol)
    if name == "logarithmic_equality":
        return logarithmic_equality_test(S1, S2, grid, tol)
    raise ParameterError(f"unknown criterion {name!r}")

CRITERION_NAMES = ("subadditivity", "equality", "concavity", "quasi_homogeneity",
                   "ratio", "ratio_profile", "derivative_ratio",
                   "strict_dominance", "logarithmic_equality")


def family_monotonicity_scan(family: str, fixed_params: dict,
                             lambdas: list[float], criterion: str,
                             grid: IntervalGrid,
                             tol: ToleranceProfile = DEFAULT_TOL) -> dict:
    """Order a one-parameter family chain and certify each adjacent pair.

    For each adjacent (lam_i, lam_{i+1}) the oracle fixes the direction and
    the named criterion is run on the dominated pair; the report records
    agreement and the overall chain direction.
    """
    if len(lambdas) < 2:
        raise ParameterError("scan needs at least two parameter values")
    members = [make_family(FamilySpec(family, {**fixed_params, "l": lam}), tol)
               for lam in lambdas]
    steps = []
    directions = set()
    for (la, Sa), (lb, Sb) in zip(zip(lambdas, members),
                                  zip(lambdas[1:], members[1:])):
        oracle = direct_compare(Sa, Sb, grid, tol)
        if oracle.relation == DOMINATED:
            direction = "increasing"
            lo, hi = Sa, Sb
        elif oracle.relation == DOMINATES:
            direction = "decreasing"
            lo, hi = Sb, Sa
        else:
            direction = oracle.relation
            lo, hi = Sa, Sb
        report = run_criterion(criterion, lo, hi, grid, tol)
        directions.add(direction)
        steps.append({
            "pair": (la, lb),
            "oracle": oracle,
            "direction": direction,
            "criterion": report,
            "agree": report.holds and direction in ("increasing", "decreasing"),
        })
    chain = directions.pop() if len(directions) == 1 else "mixed"
    return {"family": family, "lambdas": list(lambdas),
            "chain": chain, "steps": steps}


def compare(S1: Operator, S2: Operator, grid: IntervalGrid,
            tol: ToleranceProfile = DEFAULT_TOL,
            criterion: str | None = None) -> ComparisonVerdict:
    """Public order query: cheap certificates first, grid oracle as fallback.

    ``criterion`` forces a single named test (its holds/fails outcome is
    reported next to the oracle verdict via the criterion field).
    """
    both_generated = isinstance(S1, TSubnorm) and isinstance(S2, TSubnorm)
    if criterion is not None:
        if not both_generated:
            raise ParameterError("named criteria need generator-backed operands")
        rep = run_criterion(criterion, S1, S2, grid, tol)
        oracle = direct_compare(S1, S2, grid, tol)
        return ComparisonVerdict(relation=oracle.relation,
                                 witnesses=oracle.witnesses,
                                 criterion=f"{criterion}:{rep.verdict}",
                                 margin=tol.verdict_margin)
    if both_generated:
        if run_criterion("equality", S1, S2, grid, tol).holds:
            return ComparisonVerdict(EQUAL, [], "equality_test",
                                     tol.verdict_margin)
        for name in ("ratio", "ratio_profile", "concavity"):
            if run_criterion(name, S1, S2, grid, tol).holds:
                return ComparisonVerdict(DOMINATED, [], f"{name}_criterion",
                                         tol.verdict_margin)
            if run_criterion(name, S2, S1, grid, tol).holds:
                return ComparisonVerdict(DOMINATES, [], f"{name}_criterion",
                                         tol.verdict_margin)
    return direct_compare(S1, S2, grid, tol)
