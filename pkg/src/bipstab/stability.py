"""Hurwitz (quasi-)stability classification of independence roots.

A graph is stable when every root of its independence polynomial lies in the
closed left half-plane Re(x) <= 0.  Numerically the boundary cannot be
certified, so the verdict is three-way with a symmetric tolerance band:

    stable         max Re(x) < -tol
    unstable       max Re(x) > +tol
    indeterminate  otherwise

The margin is -max Re(x): positive margin means stable with room to spare.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BipstabError, InvalidInputError
from .graphs import phi_trinomial
from .roots import RootSet, SolverConfig, shift_roots_to_x, trinomial_roots

DEFAULT_STABILITY_TOL = 1e-9


@dataclass(frozen=True)
class StabilityReport:
    graph_label: str
    verdict: str  # stable | unstable | indeterminate
    max_real_part_x: float
    max_real_part_y: float
    witness_root: complex | None
    margin: float
    tolerance: float
    error: str | None = None

    @property
    def is_stable(self) -> bool:
        return self.verdict == "stable"


def classify_rootset(roots_x, tol: float = DEFAULT_STABILITY_TOL,
                     graph_label: str = "rootset") -> StabilityReport:
    """Classify a root multiset given in x-coordinates."""
    if isinstance(roots_x, RootSet):
        points = roots_x.roots
    else:
        points = tuple(complex(z) for z in roots_x)
    if not points:
        raise InvalidInputError("empty root set")
    if tol <= 0:
        raise InvalidInputError("tolerance must be positive")
    top = max(points, key=lambda z: (z.real, z.imag))
    max_re = top.real
    if max_re < -tol:
        verdict = "stable"
    elif max_re > tol:
        verdict = "unstable"
    else:
        verdict = "indeterminate"
    return StabilityReport(
        graph_label=graph_label,
        verdict=verdict,
        max_real_part_x=max_re,
        max_real_part_y=max_re + 1.0,
        witness_root=top if verdict == "unstable" else None,
        margin=-max_re,
        tolerance=tol,
    )


def classify_bipartite(m: int, n: int, cfg: SolverConfig | None = None,
                       tol: float = DEFAULT_STABILITY_TOL) -> StabilityReport:
    """Stability of K_{m,n}: solve the shifted trinomial and inspect max Re."""
    cfg = cfg or SolverConfig()
    spec = phi_trinomial(m, n)
    roots_y = trinomial_roots(spec, cfg)
    roots_x = shift_roots_to_x(roots_y)
    return classify_rootset(roots_x, tol, graph_label=f"K_{{{m},{n}}}")


def _error_report(m: int, n: int, tol: float, message: str) -> StabilityReport:
    return StabilityReport(
        graph_label=f"K_{{{m},{n}}}",
        verdict="indeterminate",
        max_real_part_x=math.nan,
        max_real_part_y=math.nan,
        witness_root=None,
        margin=math.nan,
        tolerance=tol,
        error=message,
    )


def _grid_cell(job) -> StabilityReport:
    m, n, cfg, tol = job
    try:
        return classify_bipartite(m, n, cfg, tol)
    except BipstabError as exc:
        return _error_report(m, n, tol, str(exc))


def stability_grid(m_max: int, n_max: int, cfg: SolverConfig | None = None,
                   tol: float = DEFAULT_STABILITY_TOL,
                   threads: int | None = None) -> list[StabilityReport]:
    """One report per cell (m, n) with m <= m_max and m <= n <= n_max.

    Ordering is (m asc, n asc) regardless of how the cells were scheduled.
    Per-cell solver failures are recorded in the cell, never raised.
    """
    if m_max < 1 or n_max < 1:
        raise InvalidInputError("grid bounds must be >= 1")
    cfg = cfg or SolverConfig()
    jobs = [(m, n, cfg, tol) for m in range(1, m_max + 1) for n in range(m, n_max + 1)]
    if threads is None or threads <= 1:
        return [_grid_cell(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_grid_cell, jobs, chunksize=32))
