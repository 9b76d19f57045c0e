"""Instability thresholds for unbalanced complete bipartite graphs K_{m, l*m}.

For a rational ratio l = p/q > 1 in lowest terms, every valid m is a multiple
of q, and with r = m/q the trinomial for K_{m, l*m} is g(y^r) where

    g(z) = z^p + z^q - 1.

The product of the root moduli of g is 1 (Vieta) while g has a real root in
(0, 1), so some root t has |t| > 1.  Pick the dominant one (max modulus, then
max real part, then positive imaginary part) and write t = s*e^(i*theta).
The r-th roots of t are roots of the original trinomial, and the family
member closest to the positive real axis has real part s^(1/r)*cos(theta'/r)
with theta' = theta folded into [0, pi].  That value exceeds 1 — i.e. the
graph is NOT stable — for every r > U(s, theta'), where

    delta(s, theta') = min(1/2, arctan(ln(s)/theta') / theta'),
    U(s, theta')     = ceil(1 / delta(s, theta'))        (0 when theta' = 0),
    N(l)             = q * U(s, theta').

N(l) bounds the onset from above but is not claimed tight; the witness scan
reports the first m actually observed unstable, using the full root set
rather than just the dominant family.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BipstabError, InvalidInputError, InvariantViolationError
from .graphs import TrinomialSpec
from .roots import RootSet, SolverConfig, trinomial_roots
from .stability import DEFAULT_STABILITY_TOL, StabilityReport, classify_bipartite, _error_report

MODULUS_TIE_TOL = 1e-10
THETA_ZERO_TOL = 1e-12


@dataclass(frozen=True)
class Ratio:
    """Part-size ratio p/q > 1 in lowest terms."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or self.p <= self.q:
            raise InvalidInputError("ratio must satisfy p > q >= 1")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidInputError("ratio must be in lowest terms; use make_ratio")

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass(frozen=True)
class DominantRoot:
    """Selected root of z^p + z^q - 1 with polar data s = |t|, theta = arg t."""

    t: complex
    s: float
    theta: float  # normalized to [0, 2*pi)


@dataclass(frozen=True)
class RatioThreshold:
    ratio: Ratio
    dominant: DominantRoot
    theta_eff: float  # theta folded into [0, pi]
    delta: float      # window width delta(s, theta_eff), in (0, 1/2]
    U: int
    N_ell: int


def make_ratio(p: int, q: int) -> Ratio:
    """Reduce p/q to lowest terms; rejects ratios <= 1."""
    if q < 1 or p <= q:
        raise InvalidInputError(f"ratio {p}/{q} must exceed 1 (p > q >= 1)")
    g = math.gcd(p, q)
    return Ratio(p=p // g, q=q // g)


def dominant_root(r: Ratio, cfg: SolverConfig | None = None) -> DominantRoot:
    """Root of z^p + z^q - 1 of maximal modulus, ties broken by largest real
    part and then by positive imaginary part; its modulus must exceed 1."""
    cfg = cfg or SolverConfig()
    rs = trinomial_roots(TrinomialSpec(n=r.p, m=r.q), cfg)
    candidates = list(rs.roots)
    s_max = max(abs(z) for z in candidates)
    tied = [z for z in candidates if s_max - abs(z) <= MODULUS_TIE_TOL]
    re_max = max(z.real for z in tied)
    tied = [z for z in tied if re_max - z.real <= MODULUS_TIE_TOL]
    if len(tied) > 1:
        tied = [z for z in tied if z.imag > 0]
    if len(tied) != 1:
        raise InvariantViolationError(
            f"tie-break selected {len(tied)} roots for ratio {r.p}/{r.q}"
        )
    t = tied[0]
    s = abs(t)
    if s <= 1.0:
        raise InvariantViolationError(
            f"dominant root modulus {s} <= 1 for ratio {r.p}/{r.q}; "
            "contradicts the Vieta argument"
        )
    theta = cmath.phase(t)
    if theta < 0:
        theta += 2.0 * math.pi
    return DominantRoot(t=t, s=s, theta=theta)


def delta_s_theta(s: float, theta_eff: float) -> float:
    """Window width delta(s, theta) for theta folded into [0, pi].

    At theta = 0 the dominant root is real positive and s^(1/r) > 1 for every
    r, so the caller must short-circuit to U = 0; the returned 1/2 is the
    window's conventional value in that branch.
    """
    if s <= 1.0:
        raise InvalidInputError("requires modulus s > 1")
    if not (-THETA_ZERO_TOL <= theta_eff <= math.pi + THETA_ZERO_TOL):
        raise InvalidInputError("theta_eff must lie in [0, pi]")
    if theta_eff <= THETA_ZERO_TOL:
        return 0.5
    return min(0.5, math.atan(math.log(s) / theta_eff) / theta_eff)


def threshold_Nell(r: Ratio, cfg: SolverConfig | None = None) -> RatioThreshold:
    """Instability threshold: K_{m, (p/q)*m} is unstable for every valid m > N_ell."""
    dom = dominant_root(r, cfg)
    theta_eff = dom.theta if dom.theta <= math.pi else 2.0 * math.pi - dom.theta
    delta = delta_s_theta(dom.s, theta_eff)
    if theta_eff <= THETA_ZERO_TOL:
        u = 0
    else:
        u = math.ceil(1.0 / delta)
    return RatioThreshold(
        ratio=r,
        dominant=dom,
        theta_eff=theta_eff,
        delta=delta,
        U=u,
        N_ell=r.q * u,
    )


def closed_form_max_re(r: Ratio, dominant: DominantRoot, m: int) -> float:
    """Real part of the extremal member of the dominant root family for
    K_{m, (p/q)*m}: s^(q/m) * cos(theta_eff * q/m).  Requires q | m."""
    if m < r.q or m % r.q != 0:
        raise InvalidInputError(f"m = {m} must be a positive multiple of q = {r.q}")
    rr = m // r.q
    theta_eff = dominant.theta if dominant.theta <= math.pi else 2.0 * math.pi - dominant.theta
    return dominant.s ** (1.0 / rr) * math.cos(theta_eff / rr)


def witness_scan(r: Ratio, m_max: int, cfg: SolverConfig | None = None,
                 tol: float = DEFAULT_STABILITY_TOL) -> list[tuple[int, StabilityReport]]:
    """Classify K_{m, (p/q)*m} for every multiple m = q, 2q, ..., <= m_max.

    Uses the full root scan, not the dominant-family closed form, so a
    non-dominant family crossing first would still be caught.  Per-m solver
    failures are recorded in the report; the scan continues.
    """
    if m_max < r.q:
        raise InvalidInputError(f"m_max must be at least q = {r.q}")
    cfg = cfg or SolverConfig()
    out = []
    for m in range(r.q, m_max + 1, r.q):
        n = r.p * (m // r.q)
        try:
            report = classify_bipartite(m, n, cfg, tol)
        except BipstabError as exc:
            report = _error_report(m, n, tol, str(exc))
        out.append((m, report))
    return out


def instability_witness(r: Ratio, m_max: int, cfg: SolverConfig | None = None,
                        tol: float = DEFAULT_STABILITY_TOL):
    """(m_star, report) for the smallest unstable multiple, or (None, None)."""
    for m, report in witness_scan(r, m_max, cfg, tol):
        if report.verdict == "unstable":
            return m, report
    return None, None
