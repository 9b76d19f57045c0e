"""Complex root finding: simultaneous (Aberth-Ehrlich) iteration plus the
structured trinomial path.

The structured path exploits two facts about y^n + y^m - 1:

* n == m: the polynomial is 2*y^m - 1, whose roots form an explicit ring of
  radius (1/2)^(1/m);
* n != m: with r = gcd(n, m) the substitution z = y^r reduces the problem to
  z^p + z^q - 1 of degree p = n/r, and every root y is an r-th root of a
  reduced root z.

Only the reduced polynomial is ever iterated on; its degree is independent of
the common factor r, which is what makes large sweeps over (m, n) cheap.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import mpmath
import numpy as np

from .cpoly import (
    EXTENDED_PREC_BITS,
    DensePolynomial,
    evaluate_trinomial,
    evaluate_trinomial_with_derivative,
    evaluate_with_derivative,
)
from .errors import ConvergenceError, InvalidInputError
from .graphs import TrinomialSpec

EXTENDED_SUGGESTION_DEGREE = 500


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the simultaneous root iteration.

    seed_layout is the fixed angular offset (radians) of the initial ring of
    iterates; it only breaks rotational symmetry and makes runs reproducible.
    """

    max_iterations: int = 200
    residual_tol: float = 1e-10
    precision: str = "standard"
    seed_layout: float = 0.4

    def __post_init__(self):
        if self.max_iterations < 1:
            raise InvalidInputError("max_iterations must be >= 1")
        if self.residual_tol <= 0:
            raise InvalidInputError("residual_tol must be positive")
        if self.precision not in ("standard", "extended"):
            raise InvalidInputError("precision must be 'standard' or 'extended'")


@dataclass(frozen=True)
class RootSet:
    """All roots of one polynomial, with per-root residuals |p(root)|.

    Roots are sorted by (real, imaginary) so identical solves produce
    identical output byte-for-byte.
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    solver: str  # dense_iteration | explicit_ring | gcd_reduction
    iterations_used: int

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def max_residual(self) -> float:
        return max(self.residuals)

    @property
    def max_real_part(self) -> float:
        return max(r.real for r in self.roots)

    def conjugation_defect(self) -> float:
        """Max distance from any root's conjugate to the nearest root.

        Near zero for polynomials with real coefficients.
        """
        arr = np.asarray(self.roots, dtype=np.complex128)
        return float(max(np.abs(arr - c).min() for c in np.conj(arr)))


@dataclass(frozen=True)
class ReducedForm:
    """y^n + y^m - 1 rewritten as g(y^r) with g(z) = z^p_red + z^q_red - 1."""

    r: int
    p_red: int
    q_red: int

    def __post_init__(self):
        if math.gcd(self.p_red, self.q_red) != 1:
            raise InvalidInputError("reduced exponents must be coprime")


def _sorted_rootset(roots, residuals, solver: str, iterations: int) -> RootSet:
    order = sorted(range(len(roots)), key=lambda i: (roots[i].real, roots[i].imag))
    return RootSet(
        roots=tuple(complex(roots[i]) for i in order),
        residuals=tuple(float(residuals[i]) for i in order),
        solver=solver,
        iterations_used=iterations,
    )


def _aberth(eval_pd, degree: int, init: np.ndarray, cfg: SolverConfig, tol_abs: float):
    """Simultaneous iteration; returns (roots, residuals, iterations_used).

    Converged points are frozen but still repel the others.  Raises
    ConvergenceError (carrying the best iterate) if the residual target is
    not met within cfg.max_iterations plus a short Newton polish.
    """
    z = init.astype(np.complex128)
    converged = np.zeros(degree, dtype=bool)
    iterations = 0
    for _ in range(cfg.max_iterations):
        iterations += 1
        p, dp = eval_pd(z)
        resid = np.abs(p)
        converged |= resid <= tol_abs
        if converged.all():
            break
        w = p / np.where(dp == 0, 1e-300, dp)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        repulse = (1.0 / diff).sum(axis=1)
        denom = 1.0 - w * repulse
        step = w / np.where(np.abs(denom) < 1e-300, 1.0, denom)
        bad = ~np.isfinite(step)
        if bad.any():
            step = np.where(bad, 0.5 * z, step)  # pull overflowing iterates inward
        z = np.where(converged, z, z - step)

    # Newton polish: tightens every root a little and costs next to nothing.
    for _ in range(3):
        p, dp = eval_pd(z)
        delta = p / np.where(dp == 0, 1e-300, dp)
        znew = z - delta
        ok = np.isfinite(znew)
        pnew, _ = eval_pd(np.where(ok, znew, z))
        improve = ok & (np.abs(pnew) <= np.abs(p))
        z = np.where(improve, znew, z)

    p, _ = eval_pd(z)
    resid = np.abs(p)
    if not (resid <= tol_abs).all():
        raise ConvergenceError(
            f"root iteration stalled: max residual {resid.max():.3e} > {tol_abs:.3e} "
            f"after {iterations} iterations",
            best_roots=tuple(z.tolist()),
            best_residuals=tuple(resid.tolist()),
            iterations=iterations,
        )
    return z, resid, iterations


def _initial_ring(degree: int, radius: float, offset: float) -> np.ndarray:
    angles = 2.0 * np.pi * np.arange(degree) / degree + offset
    return radius * np.exp(1j * angles)


def _polish_extended_dense(coeffs, roots):
    """mpmath Newton polish of each root at 128-bit working precision."""
    out_roots, out_resid = [], []
    with mpmath.workprec(EXTENDED_PREC_BITS):
        cs = [mpmath.mpc(c) for c in coeffs]
        dcs = [i * c for i, c in enumerate(cs)][1:]
        for z in roots:
            zm = mpmath.mpc(z)
            for _ in range(3):
                v = mpmath.polyval(cs[::-1], zm)
                d = mpmath.polyval(dcs[::-1], zm)
                if d == 0:
                    break
                zm = zm - v / d
            out_roots.append(complex(zm))
            out_resid.append(float(abs(mpmath.polyval(cs[::-1], zm))))
    return out_roots, out_resid


def _polish_extended_trinomial(t: TrinomialSpec, roots):
    out_roots, out_resid = [], []
    with mpmath.workprec(EXTENDED_PREC_BITS):
        for z in roots:
            zm = mpmath.mpc(z)
            for _ in range(3):
                if t.is_balanced:
                    v = 2 * zm ** t.m - 1
                    d = 2 * t.m * zm ** (t.m - 1)
                else:
                    v = zm ** t.n + zm ** t.m - 1
                    d = t.n * zm ** (t.n - 1) + t.m * zm ** (t.m - 1)
                if d == 0:
                    break
                zm = zm - v / d
            if t.is_balanced:
                res = abs(2 * zm ** t.m - 1)
            else:
                res = abs(zm ** t.n + zm ** t.m - 1)
            out_roots.append(complex(zm))
            out_resid.append(float(res))
    return out_roots, out_resid


def all_roots_dense(p: DensePolynomial, cfg: SolverConfig | None = None) -> RootSet:
    """All roots of a dense polynomial by Aberth-Ehrlich iteration.

    Initial iterates sit on the circle whose radius is the Cauchy bound
    1 + max |a_i / a_n|, rotated by cfg.seed_layout.  The residual target is
    cfg.residual_tol relative to the largest coefficient modulus.
    """
    cfg = cfg or SolverConfig()
    n = p.degree
    if n < 1:
        raise InvalidInputError("polynomial must have degree >= 1")
    lead = abs(p.coefficients[-1])
    if lead <= 1e-300:
        raise InvalidInputError("leading coefficient too small")
    if n > EXTENDED_SUGGESTION_DEGREE and cfg.precision == "standard":
        warnings.warn(
            f"degree {n} > {EXTENDED_SUGGESTION_DEGREE}: extended precision recommended",
            RuntimeWarning,
        )
    coeffs = np.asarray(p.coefficients, dtype=np.complex128)
    scale = float(np.abs(coeffs).max())
    tol_abs = cfg.residual_tol * scale
    cauchy = 1.0 + float(np.abs(coeffs[:-1]).max()) / lead if n >= 1 else 1.0
    init = _initial_ring(n, cauchy, cfg.seed_layout)

    def eval_pd(z):
        return evaluate_with_derivative(p, z)

    roots, resid, iterations = _aberth(eval_pd, n, init, cfg, tol_abs)
    roots, resid = list(roots), list(resid)
    if cfg.precision == "extended":
        roots, resid = _polish_extended_dense(p.coefficients, roots)
    return _sorted_rootset(roots, resid, "dense_iteration", iterations)


def reduce_trinomial(t: TrinomialSpec) -> ReducedForm:
    """Divide the exponent gcd out of y^n + y^m - 1."""
    r = math.gcd(t.n, t.m)
    return ReducedForm(r=r, p_red=t.n // r, q_red=t.m // r)


def _balanced_ring(t: TrinomialSpec, cfg: SolverConfig) -> RootSet:
    n = t.n
    radius = 2.0 ** (-1.0 / n)
    angles = 2.0 * np.pi * np.arange(n) / n
    roots = radius * np.exp(1j * angles)
    residuals = np.abs(evaluate_trinomial(t, roots))
    roots, residuals = list(roots), list(residuals)
    if cfg.precision == "extended":
        roots, residuals = _polish_extended_trinomial(t, roots)
    return _sorted_rootset(roots, residuals, "explicit_ring", 0)


def trinomial_roots(t: TrinomialSpec, cfg: SolverConfig | None = None) -> RootSet:
    """All roots of y^n + y^m - 1 via the structured path.

    Balanced trinomials get the explicit ring; otherwise the gcd-reduced
    polynomial z^p + z^q - 1 is iterated on and each reduced root is expanded
    into its r-th roots, followed by a sparse Newton polish against the
    original trinomial.
    """
    cfg = cfg or SolverConfig()
    if t.is_balanced:
        return _balanced_ring(t, cfg)
    red = reduce_trinomial(t)
    p, q, r = red.p_red, red.q_red, red.r
    reduced_spec = TrinomialSpec(n=p, m=q)
    tol_abs = cfg.residual_tol  # coefficient scale is 1

    def eval_pd(z):
        return evaluate_trinomial_with_derivative(reduced_spec, z)

    init = _initial_ring(p, 2.0, cfg.seed_layout)  # Cauchy bound of z^p + z^q - 1
    reduced, _, iterations = _aberth(eval_pd, p, init, cfg, tol_abs)

    if r == 1:
        roots = reduced
    else:
        s = np.abs(reduced)
        theta = np.angle(reduced)
        k = np.arange(r)
        # outer expansion: every reduced root contributes r evenly-spaced r-th roots
        moduli = s[:, None] ** (1.0 / r)
        args = (theta[:, None] + 2.0 * np.pi * k[None, :]) / r
        roots = (moduli * np.exp(1j * args)).ravel()

    # sparse Newton against the full trinomial until every residual clears
    for _ in range(8):
        v, d = evaluate_trinomial_with_derivative(t, roots)
        resid = np.abs(v)
        if (resid <= tol_abs).all():
            break
        step = v / np.where(d == 0, 1e-300, d)
        roots = np.where(resid <= tol_abs, roots, roots - step)
    v = evaluate_trinomial(t, roots)
    resid = np.abs(v)
    if not (resid <= tol_abs).all():
        raise ConvergenceError(
            f"trinomial root expansion failed to polish: max residual {resid.max():.3e}",
            best_roots=tuple(roots.tolist()),
            best_residuals=tuple(resid.tolist()),
            iterations=iterations,
        )
    roots, resid = list(roots), list(resid)
    if cfg.precision == "extended":
        roots, resid = _polish_extended_trinomial(t, roots)
    solver = "gcd_reduction" if r > 1 else "dense_iteration"
    return _sorted_rootset(roots, resid, solver, iterations)


def shift_roots_to_x(roots_in_y: RootSet) -> RootSet:
    """Map each root through x = y - 1 (residual metadata is carried over)."""
    return RootSet(
        roots=tuple(z - 1 for z in roots_in_y.roots),
        residuals=roots_in_y.residuals,
        solver=roots_in_y.solver,
        iterations_used=roots_in_y.iterations_used,
    )


def match_multisets(a, b) -> float:
    """Greedy nearest-neighbor pairing distance between two root multisets.

    Returns the largest pairing distance; raises if the sizes differ.
    Adequate for well-separated roots, which is all the tests need.
    """
    if len(a) != len(b):
        raise InvalidInputError("root multisets differ in size")
    remaining = [complex(x) for x in b]
    worst = 0.0
    for z in sorted((complex(x) for x in a), key=lambda c: (c.real, c.imag)):
        dists = [abs(z - w) for w in remaining]
        j = dists.index(min(dists))
        worst = max(worst, dists[j])
        remaining.pop(j)
    return worst


def modulus_product(rs: RootSet) -> float:
    """Product of root moduli (the Vieta check value for z^p + z^q - 1)."""
    return float(np.prod(np.abs(np.asarray(rs.roots, dtype=np.complex128))))
