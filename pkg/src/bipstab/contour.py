"""Rectangle contours: Rouché margin sampling and argument-principle zero counts.

Everything here is sampled numerical evidence, not a certified bound: the
margin check establishes min(|f| - |f+g|) > 0 on a dense sampling of the
contour plus adaptive refinement around local minima, and the zero counter
accumulates phase steps (refined until each step is below pi/2) whose total
must come out an integer multiple of 2*pi.

The two rectangles used throughout are

    GAMMA = [-3, 1] x [-2, 2]      (right edge on Re(z) = 1)
    BETA  = [-3, 0] x [-2, 2]      (right edge on the imaginary axis)

and the bundled comparison pairs (f, g) are the ones that pin the roots of
y^n + y^m - 1 inside GAMMA:

    p21:  f = -z^(m+1) - z^m,      g = z^(m+1) + z^m - 1
    p22:  f = -z^n,                g = z^n + z^2 - 1          (n >= 4)
    p23:  f = -(z^n + z - 1),      g = z^n + z^3 - 1          (n >= 5)
    t3:   f = -z^(m+k) - z^m,      g = z^(m+k) + z^m - 1      (k >= 2)
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cpoly import binary_pow
from .errors import (
    ContourError,
    EvaluationError,
    InvalidInputError,
    RefinementDepthError,
    ZeroOnContourError,
)

DEFAULT_SAMPLES_PER_EDGE = 4096
MARGIN_VARIATION_TOL = 1e-3
MARGIN_REFINE_DEPTH = 20
PHASE_STEP_LIMIT = math.pi / 2
ZERO_ON_CONTOUR_TOL = 1e-12
WINDING_REFINE_DEPTH = 32


@dataclass(frozen=True)
class ContourSpec:
    """Axis-aligned rectangle traversed counterclockwise from (re_max, im_min)."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    samples_per_edge: int = DEFAULT_SAMPLES_PER_EDGE

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise InvalidInputError("degenerate rectangle")
        if self.samples_per_edge < 64:
            raise InvalidInputError("samples_per_edge must be >= 64")

    def corners(self) -> tuple[complex, complex, complex, complex]:
        return (
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
            complex(self.re_min, self.im_min),
        )

    def sample_points(self) -> np.ndarray:
        """4*samples_per_edge points, each corner included exactly once.

        Each edge contributes the half-open segment [start, end), so
        consecutive samples (cyclically) always lie on a single edge.
        """
        s = self.samples_per_edge
        t = np.arange(s) / s
        c0, c1, c2, c3 = self.corners()
        edges = [c0 + (c1 - c0) * t, c1 + (c2 - c1) * t, c2 + (c3 - c2) * t, c3 + (c0 - c3) * t]
        return np.concatenate(edges)

    def with_samples(self, samples_per_edge: int) -> "ContourSpec":
        return ContourSpec(self.re_min, self.re_max, self.im_min, self.im_max, samples_per_edge)

    def contains(self, z: complex, margin: float = 0.0) -> bool:
        return (self.re_min + margin < z.real < self.re_max - margin
                and self.im_min + margin < z.imag < self.im_max - margin)


GAMMA = ContourSpec(-3.0, 1.0, -2.0, 2.0)
BETA = ContourSpec(-3.0, 0.0, -2.0, 2.0)


@dataclass(frozen=True)
class RouchePair:
    """Comparison pair for |f + g| < |f| checks; both callables must accept
    scalars and numpy arrays."""

    f: Callable
    g: Callable
    label: str


@dataclass(frozen=True)
class MarginReport:
    min_margin: float
    argmin_point: complex
    refined: bool


def _check_finite(values: np.ndarray, points: np.ndarray, what: str):
    bad = ~np.isfinite(values)
    if bad.any():
        where = points[np.argmax(bad)]
        raise EvaluationError(f"{what} not finite on contour at {where}", location=complex(where))


def rouche_margin(pair: RouchePair, c: ContourSpec) -> MarginReport:
    """min over the contour of |f(z)| - |f(z) + g(z)|, adaptively refined.

    Samples all four edges uniformly, then runs a bracket-shrinking bisection
    around every local minimum until the margin varies by less than
    MARGIN_VARIATION_TOL across the bracket (or depth 20 is hit).
    """
    pts = c.sample_points()
    fv = np.asarray(pair.f(pts))
    gv = np.asarray(pair.g(pts))
    _check_finite(fv, pts, f"f [{pair.label}]")
    _check_finite(gv, pts, f"g [{pair.label}]")
    margin = np.abs(fv) - np.abs(fv + gv)

    def margin_at(z: complex) -> float:
        f = pair.f(z)
        g = pair.g(z)
        if not (cmath.isfinite(f) and cmath.isfinite(g)):
            raise EvaluationError(f"non-finite value at {z}", location=z)
        return abs(f) - abs(f + g)

    best = float(margin.min())
    best_z = complex(pts[int(margin.argmin())])
    refined = False

    prev = np.roll(margin, 1)
    nxt = np.roll(margin, -1)
    local_min = np.where((margin <= prev) & (margin <= nxt))[0]
    n = len(pts)
    for i in local_min:
        za, zm, zb = pts[(i - 1) % n], pts[i], pts[(i + 1) % n]
        va, vm, vb = margin[(i - 1) % n], margin[i], margin[(i + 1) % n]
        # two consecutive-pair segments: each lies on a single edge
        for (z1, v1, z2, v2) in ((za, va, zm, vm), (zm, vm, zb, vb)):
            lo_z, lo_v = _refine_min_on_segment(margin_at, z1, v1, z2, v2)
            if lo_v < best:
                best, best_z, refined = lo_v, lo_z, True
    return MarginReport(min_margin=best, argmin_point=best_z, refined=refined)


def _refine_min_on_segment(fn, z1: complex, v1: float, z2: complex, v2: float):
    """Bracket-shrinking bisection for the minimum of fn on segment [z1, z2]."""
    zm = 0.5 * (z1 + z2)
    vm = fn(zm)
    a, m, b = (z1, v1), (zm, vm), (z2, v2)
    for _ in range(MARGIN_REFINE_DEPTH):
        vals = (a[1], m[1], b[1])
        if max(vals) - min(vals) < MARGIN_VARIATION_TOL:
            break
        zl = 0.5 * (a[0] + m[0])
        zr = 0.5 * (m[0] + b[0])
        pts5 = [a, (zl, fn(zl)), m, (zr, fn(zr)), b]
        j = min(range(5), key=lambda i: pts5[i][1])
        if j == 0:
            a, m, b = pts5[0], pts5[1], pts5[2]
        elif j == 4:
            a, m, b = pts5[2], pts5[3], pts5[4]
        else:
            a, m, b = pts5[j - 1], pts5[j], pts5[j + 1]
    return min((a, m, b), key=lambda p: p[1])


def winding_zero_count(func: Callable, c: ContourSpec) -> int:
    """Number of zeros enclosed by the contour, via total argument change / 2*pi.

    Phase steps between consecutive samples are taken on the nearest branch;
    any step exceeding pi/2 is split recursively.  Raises ZeroOnContourError
    if a sampled value has modulus below ZERO_ON_CONTOUR_TOL, and
    RefinementDepthError if subdivision cannot bring the steps down.
    """
    pts = c.sample_points()
    vals = np.asarray(func(pts))
    _check_finite(vals, pts, "function")
    small = np.abs(vals) < ZERO_ON_CONTOUR_TOL
    if small.any():
        where = pts[int(np.argmax(small))]
        raise ZeroOnContourError(f"zero on contour at {where}", location=complex(where))

    nxt_vals = np.roll(vals, -1)
    steps = np.angle(nxt_vals * np.conj(vals))
    total = 0.0
    needs = np.where(np.abs(steps) > PHASE_STEP_LIMIT)[0]
    total += float(steps[np.abs(steps) <= PHASE_STEP_LIMIT].sum())
    n = len(pts)
    for i in needs:
        z1, z2 = complex(pts[i]), complex(pts[(i + 1) % n])
        v1, v2 = complex(vals[i]), complex(vals[(i + 1) % n])
        total += _refined_arg_steps(func, z1, v1, z2, v2, WINDING_REFINE_DEPTH)
    turns = total / (2.0 * math.pi)
    count = round(turns)
    if abs(turns - count) > 0.25:
        raise ContourError(f"argument sum {turns:.6f} turns is not integral")
    return int(count)


def _refined_arg_steps(func, z1, v1, z2, v2, depth) -> float:
    d = cmath.phase(v2 * v1.conjugate())
    if abs(d) <= PHASE_STEP_LIMIT:
        return d
    if depth <= 0:
        raise RefinementDepthError(f"phase refinement exhausted near {z1}")
    zm = 0.5 * (z1 + z2)
    vm = complex(func(zm))
    if not cmath.isfinite(vm):
        raise EvaluationError(f"non-finite value at {zm}", location=zm)
    if abs(vm) < ZERO_ON_CONTOUR_TOL:
        raise ZeroOnContourError(f"zero on contour at {zm}", location=zm)
    return (_refined_arg_steps(func, z1, v1, zm, vm, depth - 1)
            + _refined_arg_steps(func, zm, vm, z2, v2, depth - 1))


# ---------------------------------------------------------------------------
# bundled comparison scenarios
# ---------------------------------------------------------------------------

def scenario_p21(m: int) -> tuple[RouchePair, ContourSpec]:
    """Pair pinning all m+1 roots of y^(m+1) + y^m - 1 inside GAMMA."""
    if m < 1:
        raise InvalidInputError("p21 requires m >= 1")

    def f(z):
        return -binary_pow(z, m + 1) - binary_pow(z, m)

    def g(z):
        return binary_pow(z, m + 1) + binary_pow(z, m) - 1

    return RouchePair(f, g, f"p21(m={m})"), GAMMA


def scenario_p22(n: int) -> tuple[RouchePair, ContourSpec]:
    """Pair pinning all n roots of y^n + y^2 - 1 inside GAMMA; needs n >= 4."""
    if n < 4:
        raise InvalidInputError("p22 requires n >= 4")

    def f(z):
        return -binary_pow(z, n)

    def g(z):
        return binary_pow(z, n) + binary_pow(z, 2) - 1

    return RouchePair(f, g, f"p22(n={n})"), GAMMA


def scenario_p23(n: int) -> tuple[RouchePair, ContourSpec]:
    """Pair comparing y^n + y^3 - 1 against -(y^n + y - 1); needs n >= 5."""
    if n < 5:
        raise InvalidInputError("p23 requires n >= 5")

    def f(z):
        return -binary_pow(z, n) - z + 1

    def g(z):
        return binary_pow(z, n) + binary_pow(z, 3) - 1

    return RouchePair(f, g, f"p23(n={n})"), GAMMA


def scenario_t3(m: int, k: int) -> tuple[RouchePair, ContourSpec]:
    """Near-balanced pair: f = -z^(m+k) - z^m against g = z^(m+k) + z^m - 1."""
    if m < 1:
        raise InvalidInputError("t3 requires m >= 1")
    if k < 2:
        raise InvalidInputError("t3 requires k >= 2")

    def f(z):
        return -binary_pow(z, m + k) - binary_pow(z, m)

    def g(z):
        return binary_pow(z, m + k) + binary_pow(z, m) - 1

    return RouchePair(f, g, f"t3(m={m},k={k})"), GAMMA


def builtin_scenarios() -> dict:
    """Name -> constructor registry for the bundled scenarios."""
    return {"p21": scenario_p21, "p22": scenario_p22, "p23": scenario_p23, "t3": scenario_t3}
