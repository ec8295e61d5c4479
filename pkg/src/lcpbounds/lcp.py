"""Small-scale LCP machinery: residual, enumeration solver, P-matrix test,
and error certificates.

LCP(M, q) asks for ``x >= 0`` with ``w = Mx + q >= 0`` and ``x . w = 0``.
The solver enumerates complementary bases, which is exhaustive at desk scale
and doubles as a uniqueness checker.  Certificates compare the true error
``||x - x*||_inf`` against ``bound * ||min(x, Mx+q)||_inf``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    InapplicableBound,
    NoSolution,
)
from .linalg import as_matrix, as_vector, inf_norm, lu_det, lu_solve, _lu
from .nekrasov import BoundReport

# Componentwise slack accepted when testing x >= 0 and Mx + q >= 0.
FEASIBILITY_TOL = 1e-10

_SOLVER_MAX_N = 15
_P_TEST_MAX_N = 12


@dataclass(frozen=True)
class LcpInstance:
    """An LCP(M, q) instance; dimensions are validated on construction."""

    m: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.m)
        q = as_vector(self.q)
        if q.shape[0] != m.shape[0]:
            raise DimensionMismatch(
                f"q has length {q.shape[0]}, matrix is {m.shape[0]}x{m.shape[0]}"
            )
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "q", q)

    @property
    def n(self) -> int:
        return self.m.shape[0]


@dataclass(frozen=True)
class LcpSolution:
    """A solution x* with w* = Mx* + q, the 0-based basic index set, and the
    complementarity gap |x* . w*|."""

    x_star: np.ndarray
    w_star: np.ndarray
    basis: tuple[int, ...]
    complementarity_gap: float


@dataclass(frozen=True)
class ErrorCertificate:
    """One trial point checked against a bound: ``holds`` iff
    ``true_error <= bound_value * residual_norm + 1e-9``."""

    trial_x: np.ndarray
    residual_norm: float
    true_error: float
    bound_value: float
    holds: bool


def residual(inst: LcpInstance, x) -> np.ndarray:
    """Natural residual ``min(x, Mx + q)``; zero exactly at solutions."""
    xx = as_vector(x)
    if xx.shape[0] != inst.n:
        raise DimensionMismatch(f"x has length {xx.shape[0]}, expected {inst.n}")
    return np.minimum(xx, inst.m @ xx + inst.q)


def _basis_solution(inst: LcpInstance, alpha: tuple[int, ...]):
    """Solve the complementary system for basis ``alpha``; None when the
    principal submatrix is singular or the result is infeasible."""
    n = inst.n
    x = np.zeros(n)
    if alpha:
        idx = list(alpha)
        factors = _lu(inst.m[np.ix_(idx, idx)])
        if factors.singular_flag:
            return None
        x[idx] = lu_solve(factors, -inst.q[idx])
        if np.any(x[idx] < -FEASIBILITY_TOL):
            return None
    w = inst.m @ x + inst.q
    if np.any(w < -FEASIBILITY_TOL):
        return None
    return x, w


def _enumerate_bases(n: int):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def solve_lcp(inst: LcpInstance) -> LcpSolution:
    """First feasible complementary basis in (cardinality, lexicographic) order.

    For P-matrix inputs the feasible basis is unique, so the ordering only
    matters for degenerate or non-P instances.
    """
    if inst.n > _SOLVER_MAX_N:
        raise DimensionTooLarge(f"basis enumeration is limited to n <= {_SOLVER_MAX_N}")
    for alpha in _enumerate_bases(inst.n):
        result = _basis_solution(inst, alpha)
        if result is not None:
            x, w = result
            return LcpSolution(
                x_star=x,
                w_star=w,
                basis=alpha,
                complementarity_gap=float(abs(x @ w)),
            )
    raise NoSolution("no feasible complementary basis")


def feasible_bases(inst: LcpInstance) -> list[tuple[int, ...]]:
    """All feasible complementary bases; length 1 for non-degenerate P-matrices."""
    if inst.n > _SOLVER_MAX_N:
        raise DimensionTooLarge(f"basis enumeration is limited to n <= {_SOLVER_MAX_N}")
    return [alpha for alpha in _enumerate_bases(inst.n) if _basis_solution(inst, alpha) is not None]


def is_p_matrix(m) -> bool:
    """True iff every principal minor is positive (beyond a scale-aware tolerance)."""
    mm = as_matrix(m)
    n = mm.shape[0]
    if n > _P_TEST_MAX_N:
        raise DimensionTooLarge(f"principal-minor enumeration is limited to n <= {_P_TEST_MAX_N}")
    scale = max(1.0, float(np.max(np.abs(mm))))
    for size in range(1, n + 1):
        threshold = 1e-12 * scale**size
        for alpha in combinations(range(n), size):
            idx = list(alpha)
            minor = lu_det(_lu(mm[np.ix_(idx, idx)]))
            if minor <= threshold:
                return False
    return True


def certify_error_bound(inst: LcpInstance, x, bound: BoundReport) -> ErrorCertificate:
    """Check the error bound at one trial point against the enumerated solution."""
    if not bound.applicable or bound.value is None:
        raise InapplicableBound(f"bound {bound.theorem.value} is not applicable: {bound.reason}")
    xx = as_vector(x)
    solution = solve_lcp(inst)
    residual_norm = inf_norm(residual(inst, xx))
    true_error = inf_norm(xx - solution.x_star)
    return ErrorCertificate(
        trial_x=xx,
        residual_norm=residual_norm,
        true_error=true_error,
        bound_value=bound.value,
        holds=bool(true_error <= bound.value * residual_norm + 1e-9),
    )


def trial_points(x_star, count: int, seed: int) -> np.ndarray:
    """Seeded trial points, uniform in [0, 3(1 + ||x*||_inf)] per coordinate."""
    xs = as_vector(x_star)
    rng = np.random.default_rng(seed)
    high = 3.0 * (1.0 + inf_norm(xs))
    return rng.uniform(0.0, high, size=(count, xs.shape[0]))
