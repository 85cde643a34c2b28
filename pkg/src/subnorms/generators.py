"""Additive generators on [0,1] with values in the extended half-line [0, inf].

A generator is a continuous, strictly decreasing map s : [0,1] -> [s(1), inf]
with s(0) = inf.  It fully determines a continuous cancellative t-subnorm via
S(x, y) = s^{-1}(s(x) + s(y)); see :mod:`subnorms.operators`.

Infinity is the IEEE float ``inf``: it is an exact tagged state of float64
(not a large sentinel), saturates under addition and compares greater than
every finite value, which is precisely the arithmetic the codomain needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

INF = math.inf

# kind tags
CLOSED_INVERSE = "closed_form_with_closed_inverse"
NUMERIC_INVERSE = "closed_form_numeric_inverse"


class DomainError(ValueError):
    """Argument outside the operation's domain (or NaN)."""


class ParameterError(ValueError):
    """Constructor parameter outside its admissible range."""


class NormalizationError(ValueError):
    """Normalization requested for a generator with s(1) = 0."""


class GeneratorValidationError(ValueError):
    """A sampled generator invariant (decrease, continuity, endpoints) failed."""


@dataclass(frozen=True)
class ToleranceProfile:
    """Numeric tolerances shared across the library."""

    abs_eval_tol: float = 1e-9
    inversion_tol: float = 1e-12
    verdict_margin: float = 1e-6
    derivative_step: float = 1e-6

    def __post_init__(self):
        for name in ("abs_eval_tol", "inversion_tol", "verdict_margin", "derivative_step"):
            if not getattr(self, name) > 0:
                raise ParameterError(f"{name} must be strictly positive")
        if not self.inversion_tol < self.verdict_margin:
            raise ParameterError("inversion_tol must be smaller than verdict_margin")


DEFAULT_TOL = ToleranceProfile()


@dataclass(frozen=True)
class IntervalGrid:
    """Ordered finite sample of (0, 1], always containing 1."""

    points: np.ndarray
    epsilon_floor: float = 1e-6

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        object.__setattr__(self, "points", pts)
        if pts.ndim != 1 or pts.size == 0:
            raise ParameterError("grid needs at least one point")
        if np.any(np.diff(pts) <= 0):
            raise ParameterError("grid points must be strictly increasing")
        if pts[0] <= 0 or pts[-1] > 1:
            raise ParameterError("grid points must lie in (0, 1]")
        if pts[-1] != 1.0:
            raise ParameterError("grid must include 1")

    @classmethod
    def uniform(cls, n: int, epsilon_floor: float = 1e-6) -> "IntervalGrid":
        """n-point uniform grid on [0,1] with the zero endpoint dropped."""
        if n < 2:
            raise ParameterError("uniform grid needs n >= 2")
        return cls(np.linspace(0.0, 1.0, n)[1:], epsilon_floor)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator | None = None,
               epsilon_floor: float = 1e-6) -> "IntervalGrid":
        """Fresh random grid in (0,1] including 1; for robustness re-checks."""
        rng = rng or np.random.default_rng()
        pts = np.sort(rng.uniform(epsilon_floor, 1.0, size=n - 1))
        pts = np.unique(np.append(pts, 1.0))
        return cls(pts, epsilon_floor)

    @property
    def interior(self) -> np.ndarray:
        """Points strictly inside (0, 1)."""
        return self.points[self.points < 1.0]


@dataclass(frozen=True)
class Generator:
    """An additive generator s : [0,1] -> [s(1), inf].

    ``fn`` evaluates s on (0,1] (vectorized over numpy arrays); x = 0 maps to
    inf in :func:`geval` regardless of what ``fn`` does there.  When ``kind``
    is CLOSED_INVERSE, ``inverse_fn`` must map [s(1), inf] back to [0,1] and
    tolerate ``inf`` (returning 0).
    """

    fn: Callable[[np.ndarray], np.ndarray]
    boundary_at_one: float
    label: str
    kind: str = CLOSED_INVERSE
    inverse_fn: Callable[[np.ndarray], np.ndarray] | None = None
    family: str | None = None
    params: tuple = ()

    def __post_init__(self):
        if self.boundary_at_one < 0 or not math.isfinite(self.boundary_at_one):
            raise ParameterError("boundary_at_one must be finite and >= 0")
        if self.kind == CLOSED_INVERSE and self.inverse_fn is None:
            raise ParameterError("closed-inverse generator requires inverse_fn")

    def spec_record(self) -> str:
        """Serializable text record: label, family, parameters."""
        pars = ",".join(f"{p:g}" for p in self.params)
        return f"{self.label}|{self.family or 'custom'}|{pars}"

    # convenience wrappers so g(x) etc. read naturally
    def __call__(self, x):
        return geval(self, x)


def _check_unit_interval(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0) or np.any(arr > 1):
        raise DomainError(f"argument {x!r} outside [0, 1]")
    return arr


def geval(g: Generator, x):
    """Evaluate s(x) for x in [0,1]; exactly inf at x = 0."""
    arr = _check_unit_interval(x)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.full(arr.shape, INF)
    pos = arr > 0
    if np.any(pos):
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            vals = np.asarray(g.fn(arr[pos]), dtype=float)
        # a closed form may produce nan at an interior overflow; promote to inf
        vals = np.where(np.isnan(vals), INF, vals)
        out[pos] = vals
    return float(out[0]) if scalar else out


def _bisect_invert(g: Generator, u: np.ndarray, tol: ToleranceProfile) -> np.ndarray:
    """Monotone bisection on [0,1]; bracket guaranteed by strict decrease."""
    lo = np.zeros_like(u)
    hi = np.ones_like(u)
    for _ in range(200):
        if np.all(hi - lo < tol.inversion_tol):
            break
        mid = 0.5 * (lo + hi)
        smid = geval(g, mid)
        high_side = smid > u  # s(mid) above target -> root is to the right
        lo = np.where(high_side, mid, lo)
        hi = np.where(high_side, hi, mid)
    return 0.5 * (lo + hi)


def ginvert(g: Generator, u, tol: ToleranceProfile = DEFAULT_TOL):
    """Invert s on its range [s(1), inf]; u = inf maps to 0."""
    arr = np.asarray(u, dtype=float)
    if np.any(np.isnan(arr)):
        raise DomainError("cannot invert NaN")
    if np.any(arr < g.boundary_at_one - tol.inversion_tol):
        bad = np.min(arr)
        raise DomainError(
            f"value {bad!r} below s(1) = {g.boundary_at_one}; use pseudo_invert")
    scalar = arr.ndim == 0
    arr = np.atleast_1d(np.maximum(arr, g.boundary_at_one))
    out = np.zeros(arr.shape)
    fin = np.isfinite(arr)
    if np.any(fin):
        if g.kind == CLOSED_INVERSE:
            with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
                vals = np.asarray(g.inverse_fn(arr[fin]), dtype=float)
            out[fin] = np.clip(np.where(np.isnan(vals), 0.0, vals), 0.0, 1.0)
        else:
            out[fin] = _bisect_invert(g, arr[fin], tol)
    return float(out[0]) if scalar else out


def pseudo_invert(g: Generator, u, tol: ToleranceProfile = DEFAULT_TOL):
    """sup{x | s(x) > u}: clamps to 1 below s(1), the true inverse above."""
    arr = np.asarray(u, dtype=float)
    if np.any(np.isnan(arr)):
        raise DomainError("cannot pseudo-invert NaN")
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.ones(arr.shape)
    above = arr > g.boundary_at_one
    if np.any(above):
        out[above] = ginvert(g, arr[above], tol)
    return float(out[0]) if scalar else out


def normalize(g: Generator) -> Generator:
    """Divide by s(1), yielding the unique representative with s(1) = 1.

    The induced operator is unchanged: additive generators are unique up to a
    positive multiplicative constant.
    """
    c = g.boundary_at_one
    if c == 0:
        raise NormalizationError(
            f"{g.label}: s(1) = 0 (t-norm case), no normalized representative")
    if c == 1.0:
        return g
    inv = None
    if g.inverse_fn is not None:
        inv = lambda u, _f=g.inverse_fn, _c=c: _f(u * _c)
    return Generator(
        fn=lambda x, _f=g.fn, _c=c: _f(x) / _c,
        boundary_at_one=1.0,
        label=f"{g.label}/norm",
        kind=g.kind,
        inverse_fn=inv,
        family=g.family,
        params=g.params,
    )


def affine_shift(g: Generator, c: float, b: float) -> Generator:
    """The generator x -> c*s(x) + b (c > 0).

    With s(1) = 1, 0 < c <= 1 and b = 1 - c the induced operator is weaker
    than the original; with s(1) = 0 and b = 1 the result generates a proper
    subnorm weaker than the original strict t-norm.
    """
    if not c > 0:
        raise ParameterError("affine shift requires c > 0")
    new_boundary = c * g.boundary_at_one + b
    if new_boundary < 0:
        raise ParameterError("shift makes s(1) negative")
    inv = None
    if g.inverse_fn is not None:
        inv = lambda u, _f=g.inverse_fn, _c=c, _b=b: _f((u - _b) / _c)
    return Generator(
        fn=lambda x, _f=g.fn, _c=c, _b=b: _c * _f(x) + _b,
        boundary_at_one=new_boundary,
        label=f"{c:g}*{g.label}+{b:g}",
        kind=g.kind,
        inverse_fn=inv,
        family=g.family,
        params=g.params,
    )


def derivative(g: Generator, x: float, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """Finite-difference s'(x) on (0,1); negative for any valid generator."""
    if not 0 < x < 1 or math.isnan(x):
        raise DomainError(f"derivative needs x in (0, 1), got {x!r}")
    h = tol.derivative_step * max(1.0, abs(x))
    if x - h <= 0:
        return (geval(g, x + h) - geval(g, x)) / h
    if x + h >= 1:
        return (geval(g, x) - geval(g, x - h)) / h
    return (geval(g, x + h) - geval(g, x - h)) / (2 * h)


def validate_generator(g: Generator, grid: IntervalGrid | None = None,
                       tol: ToleranceProfile = DEFAULT_TOL) -> None:
    """Sampled invariant check; raises GeneratorValidationError on failure.

    Checks s(0) = inf, s(1) = boundary_at_one, strict decrease across the
    grid, continuity near grid points, and inversion consistency.
    """
    grid = grid or IntervalGrid.uniform(41)
    if geval(g, 0.0) != INF:
        raise GeneratorValidationError(f"{g.label}: s(0) must be inf")
    v1 = geval(g, 1.0)
    if abs(v1 - g.boundary_at_one) > tol.abs_eval_tol * max(1.0, abs(v1)):
        raise GeneratorValidationError(
            f"{g.label}: s(1) = {v1} disagrees with declared {g.boundary_at_one}")
    xs = np.append(grid.epsilon_floor, grid.points)
    vals = geval(g, xs)
    if np.any(np.diff(vals) >= 0):
        i = int(np.argmax(np.diff(vals) >= 0))
        raise GeneratorValidationError(
            f"{g.label}: not strictly decreasing near x = {xs[i]:.6g}")
    # sampled continuity: a 1e-6 step must move the value by a tiny fraction
    interior = grid.points[(grid.points > 2 * grid.epsilon_floor) & (grid.points < 1)]
    if interior.size:
        base = geval(g, interior)
        jump = np.abs(geval(g, interior + grid.epsilon_floor) - base)
        if np.any(jump > 1e-2 * np.maximum(1.0, np.abs(base))):
            worst = interior[int(np.argmax(jump))]
            raise GeneratorValidationError(
                f"{g.label}: discontinuity suspected near x = {worst:.6g}")
    # round-trip on a few range values
    us = vals[np.isfinite(vals)][:8]
    if us.size:
        back = geval(g, ginvert(g, us, tol))
        if np.any(np.abs(back - us) > 1e-6 * np.maximum(1.0, np.abs(us))):
            raise GeneratorValidationError(f"{g.label}: inversion round trip failed")


def closed_form(fn, inverse_fn, boundary_at_one, label, family=None, params=()):
    """Shorthand for a generator with both directions in closed form."""
    return Generator(fn=fn, inverse_fn=inverse_fn, boundary_at_one=boundary_at_one,
                     label=label, kind=CLOSED_INVERSE, family=family,
                     params=tuple(params))


def numeric_inverse(fn, boundary_at_one, label, family=None, params=()):
    """Generator whose inverse is obtained by bisection."""
    return Generator(fn=fn, inverse_fn=None, boundary_at_one=boundary_at_one,
                     label=label, kind=NUMERIC_INVERSE, family=family,
                     params=tuple(params))
