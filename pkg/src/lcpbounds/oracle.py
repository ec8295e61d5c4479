"""Brute-force lower bound on the worst-case inverse norm, plus a sampling
harness for the scaling inequalities the bounds rest on.

The certified quantity is ``max over d in [0,1]^n`` of
``||(I - D + D M)^{-1}||_inf``.  The oracle evaluates every vertex of the
cube and a seeded batch of interior points; sampling can only undershoot, so
``max_observed`` is a lower bound on the true maximum and any certified upper
bound must dominate it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DimensionTooLarge, DomainError, PreconditionFailed
from .linalg import _inverse, as_matrix, inf_norm, inverse
from .nekrasov import _positive_diagonal, _scaled, is_nekrasov, scaled_matrix

_ORACLE_MAX_N = 20


@dataclass(frozen=True)
class OracleEstimate:
    """Best observed norm and where it occurred.  ``max_observed`` never
    exceeds the true maximum; equality is not claimed."""

    max_observed: float
    argmax_d: np.ndarray
    vertex_count: int
    interior_samples: int
    seed: int


@dataclass(frozen=True)
class LemmaViolation:
    """A single failed inequality: which check, the 1-based row, the scaling
    vector, and the two sides as evaluated."""

    check: str
    row: int
    d: np.ndarray
    lhs: float
    rhs: float


@dataclass(frozen=True)
class LemmaSuiteReport:
    trials: int
    violations: list[LemmaViolation]

    @property
    def clean(self) -> bool:
        return not self.violations


def norm_at_d(m, d) -> float:
    """``||(I - D + D M)^{-1}||_inf`` at one scaling vector."""
    return inf_norm(inverse(scaled_matrix(m, d)))


def oracle_max_norm(m, interior_samples: int = 10000, seed: int = 42) -> OracleEstimate:
    """Maximum observed norm over all cube vertices plus seeded interior points.

    Deterministic for a fixed seed: the interior batch comes from a
    counter-based generator and ties keep the earliest point evaluated
    (vertices in binary order, then samples in batch order).
    """
    mm = as_matrix(m)
    n = mm.shape[0]
    if n > _ORACLE_MAX_N:
        raise DimensionTooLarge(f"vertex enumeration is limited to n <= {_ORACLE_MAX_N}")
    if interior_samples < 0:
        raise DomainError("interior_samples must be nonnegative")
    best = -np.inf
    best_d = np.zeros(n)
    for bits in product((0.0, 1.0), repeat=n):
        d = np.array(bits)
        value = inf_norm(_inverse(_scaled(mm, d)))
        if value > best:
            best, best_d = value, d
    if interior_samples:
        rng = np.random.Generator(np.random.Philox(key=seed))
        for d in rng.random((interior_samples, n)):
            value = inf_norm(_inverse(_scaled(mm, d)))
            if value > best:
                best, best_d = value, d
    return OracleEstimate(
        max_observed=float(best),
        argmax_d=best_d,
        vertex_count=2**n,
        interior_samples=interior_samples,
        seed=seed,
    )


def lemma_property_suite(m, trials: int = 1000, seed: int = 0) -> LemmaSuiteReport:
    """Sampled check of the scaling inequalities behind the bounds.

    For each scaling vector d (all-ones first, then ``trials`` uniform draws)
    and ``Mt = I - D + D M`` this verifies, with 1e-12 slack:

      * ``h_i(Mt)/mt_ii <= h_i(M)/m_ii`` and ``Mt`` stays Nekrasov,
      * ``z_i(Mt) <= eta_i(M)``,
      * ``z_i(Mt)/mt_ii <= eta_i(M)/min{m_ii, 1}``.

    Requires a Nekrasov ``M`` with positive diagonal; any violation reported
    here indicates an implementation bug, not an unlucky sample.
    """
    mm = as_matrix(m)
    profile = is_nekrasov(mm)
    if not profile.is_nekrasov or not _positive_diagonal(mm):
        raise PreconditionFailed("requires a Nekrasov matrix with positive diagonal")
    n = mm.shape[0]
    diag = np.diag(mm)
    h_ratio = profile.h / diag
    eta_ref = profile.eta / np.minimum(diag, 1.0)
    slack = 1e-12
    rng = np.random.default_rng(seed)
    scalings = np.vstack([np.ones((1, n)), rng.random((trials, n))])
    violations: list[LemmaViolation] = []

    def record(check: str, d: np.ndarray, lhs: np.ndarray, rhs: np.ndarray):
        for i in np.nonzero(lhs > rhs + slack)[0]:
            violations.append(
                LemmaViolation(check=check, row=int(i) + 1, d=d.copy(),
                               lhs=float(lhs[i]), rhs=float(rhs[i]))
            )

    for d in scalings:
        mt = _scaled(mm, d)
        mt_profile = is_nekrasov(mt)
        mt_diag = np.diag(mt)
        record("h_ratio", d, mt_profile.h / mt_diag, h_ratio)
        record("z_vs_eta", d, mt_profile.z, profile.eta)
        record("z_ratio", d, mt_profile.z / mt_diag, eta_ref)
        if not mt_profile.is_nekrasov:
            row = int(np.argmin(mt_profile.margins)) + 1
            violations.append(
                LemmaViolation(check="nekrasov", row=row, d=d.copy(),
                               lhs=float(mt_profile.h[row - 1]),
                               rhs=float(abs(mt_diag[row - 1])))
            )
    return LemmaSuiteReport(trials=scalings.shape[0], violations=violations)
