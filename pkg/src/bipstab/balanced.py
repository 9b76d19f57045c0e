"""Thresholds for nearly balanced complete bipartite graphs K_{m,m+k}.

On the right edge Re(z) = 1 of the GAMMA rectangle, write z = 1 + i*tan(theta)
so |z| = sec(theta) with sec(theta) in [1, sqrt(5)].  The squared comparison
magnitude |z^m (z^k + 1)|^2 factors as sec(theta)^(2m) * P_k(sec(theta)) with

    P_k(t) = t^(2k) + 1 + 2 * t^k * cos(k*theta),        t = sec(theta),

and t^k * cos(k*theta) is an exact integer polynomial in t obtained from the
cosine multiple-angle recursion (t * cos(theta) = 1 collapses one factor):

    D_0 = 1,  D_1 = 1,  D_j = 2*D_(j-1) - t^2 * D_(j-2),  P_k = t^(2k) + 1 + 2*D_k.

Let c_k be the minimum of P_k on [1, sqrt(5)].  If c_k > 1, the comparison
magnitude exceeds 1 for every m >= 1 and K_{m,m+k} is stable outright (this
holds for k <= 6).  Otherwise P_k(1) = 4 guarantees a window [1, 1+delta]
with P_k >= 2 there, and K_{m,m+k} is stable for every

    m > N(k) = ceil( ln(1/c_k) / (2*ln(1 + delta(k))) ).

delta(k) is taken maximal (first crossing of P_k = 2), which makes N(k) as
small as the construction allows.  For k >= 7 and m <= N(k) nothing is
guaranteed either way; empirical verdicts for those cells come from the
stability module and should be labelled as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import InvalidInputError
from .graphs import IntPolynomial

SQRT5 = math.sqrt(5.0)
SCAN_SAMPLES = 10001
BISECT_TOL = 1e-12


@dataclass(frozen=True)
class PkPolynomial:
    """P_k as an exact integer polynomial in t = sec(theta), degree 2k."""

    k: int
    coefficients: IntPolynomial

    def __call__(self, t: float) -> float:
        return self.coefficients(t)

    def derivative(self) -> Callable[[float], float]:
        d = self.coefficients.derivative()
        return lambda t: d(t)


@dataclass(frozen=True)
class BalancedThreshold:
    k: int
    c_k: float
    minimizer_t: float
    delta_k: float
    N_k: int


def pk_polynomial(k: int) -> PkPolynomial:
    """Build P_k(t) = t^(2k) + 1 + 2*t^k*cos(k*theta) exactly."""
    if k < 2:
        raise InvalidInputError("P_k is defined for k >= 2")
    d_prev = IntPolynomial((1,))  # t^0 * cos(0*theta)
    d_cur = IntPolynomial((1,))   # t^1 * cos(1*theta) = t * (1/t)
    t_sq = IntPolynomial((0, 0, 1))
    for _ in range(2, k + 1):
        d_prev, d_cur = d_cur, d_cur.scale(2) - t_sq * d_prev
    poly = IntPolynomial.monomial(2 * k) + IntPolynomial((1,)) + d_cur.scale(2)
    return PkPolynomial(k=k, coefficients=poly)


def minimize_on_interval(p: Callable[[float], float], lo: float, hi: float,
                         tol: float = 1e-12,
                         derivative: Callable[[float], float] | None = None,
                         samples: int = SCAN_SAMPLES) -> tuple[float, float]:
    """(argmin, min) of a continuous function on [lo, hi].

    Dense scan, golden-section refinement of the best bracket, then a short
    Newton polish on the derivative when one is supplied.  Endpoints are
    always candidate minimizers.
    """
    if not lo < hi:
        raise InvalidInputError("empty interval")
    step = (hi - lo) / (samples - 1)
    xs = [lo + i * step for i in range(samples)]
    xs[-1] = hi
    vals = [p(x) for x in xs]
    i_best = min(range(samples), key=vals.__getitem__)
    a = xs[max(i_best - 1, 0)]
    b = xs[min(i_best + 1, samples - 1)]

    # golden-section shrink of [a, b]
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = p(c), p(d)
    while b - a > max(tol, 1e-14 * max(abs(a), abs(b), 1.0)):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = p(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = p(d)
    x_best = 0.5 * (a + b)
    v_best = p(x_best)

    if derivative is not None:
        x = x_best
        for _ in range(40):
            g = derivative(x)
            if g == 0:
                break
            h = 1e-7 * max(1.0, abs(x))
            curv = (derivative(x + h) - derivative(x - h)) / (2 * h)
            if curv <= 0:
                break
            x_new = x - g / curv
            if not (a - step <= x_new <= b + step):
                break
            if abs(x_new - x) < 1e-15 * max(1.0, abs(x)):
                x = x_new
                break
            x = x_new
        if lo <= x <= hi and p(x) <= v_best:
            x_best, v_best = x, p(x)

    for endpoint in (lo, hi):
        v = p(endpoint)
        if v < v_best:
            x_best, v_best = endpoint, v
    return x_best, v_best


def ck(k: int) -> tuple[float, float]:
    """(c_k, minimizer): minimum of P_k over [1, sqrt(5)]."""
    pk = pk_polynomial(k)
    argmin, value = minimize_on_interval(pk, 1.0, SQRT5, derivative=pk.derivative())
    return value, argmin


def delta_k(k: int) -> float:
    """Largest delta <= sqrt(5)-1 with P_k >= 2 on [1, 1+delta].

    P_k(1) = 4 makes the window non-empty; the first crossing of P_k = 2 is
    located by scan plus bisection to 1e-12 in t.
    """
    pk = pk_polynomial(k)
    step = (SQRT5 - 1.0) / (SCAN_SAMPLES - 1)
    prev_t, prev_v = 1.0, pk(1.0) - 2.0
    if prev_v < 0:
        raise InvalidInputError(f"P_{k}(1) < 2; recursion is broken")
    for i in range(1, SCAN_SAMPLES):
        t = 1.0 + i * step if i < SCAN_SAMPLES - 1 else SQRT5
        v = pk(t) - 2.0
        if v < 0:
            lo, hi = prev_t, t
            while hi - lo > BISECT_TOL:
                mid = 0.5 * (lo + hi)
                if pk(mid) - 2.0 < 0:
                    hi = mid
                else:
                    lo = mid
            return 0.5 * (lo + hi) - 1.0
        prev_t, prev_v = t, v
    return SQRT5 - 1.0


def threshold_Nk(k: int) -> BalancedThreshold:
    """Stability threshold for K_{m,m+k}: stable for all m > N_k.

    N_k = 0 encodes "stable for every m >= 1" and is returned whenever
    c_k > 1, where the window construction is never needed.
    """
    c, t_min = ck(k)
    d = delta_k(k)
    if c > 1.0:
        n = 0
    else:
        n = math.ceil(math.log(1.0 / c) / (2.0 * math.log(1.0 + d)))
    return BalancedThreshold(k=k, c_k=c, minimizer_t=t_min, delta_k=d, N_k=n)
