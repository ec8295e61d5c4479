"""B-Nekrasov recognition via the B+ splitting, matrix-class diagnostics,
and the two B-Nekrasov bounds on the worst-case inverse norm.

Any square ``M`` splits as ``M = B+ + C`` where ``r_i = max{0, m_ij : j != i}``,
``C`` is the rank-1 nonnegative matrix with constant rows ``r_i``, and
``B+ = M - C`` is a Z-matrix.  ``M`` is a B-Nekrasov matrix when this ``B+``
is Nekrasov with positive diagonal; the class sits inside the P-matrices, so
LCP(M, q) is uniquely solvable and the bounds here feed its error certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lcp
from .errors import DimensionTooSmall, SingularMatrix, ZeroDiagonal
from .linalg import as_matrix, comparison_matrix, inverse
from .nekrasov import (
    STRICT_RTOL,
    BoundReport,
    Theorem,
    _epsilon_inside,
    _not_applicable,
    _positive_diagonal,
    is_nekrasov,
)

# Entrywise tolerance for the inverse-nonnegativity H-matrix test.
_H_INVERSE_TOL = -1e-10

# Principal-minor P-matrix test is only run up to this dimension.
_P_TEST_MAX_N = 12


@dataclass(frozen=True)
class BPlusSplit:
    """The splitting ``M = b_plus + c`` with ``c[i, :] = r_plus[i]``."""

    b_plus: np.ndarray
    c: np.ndarray
    r_plus: np.ndarray


@dataclass(frozen=True)
class ClassificationReport:
    """Membership flags for the matrix classes relevant to the bounds.

    ``is_p_matrix`` is ``None`` when the principal-minor test was skipped
    (dimension above the enumeration limit).
    """

    is_sdd: bool
    is_z_matrix: bool
    is_nekrasov: bool
    is_b_matrix: bool
    is_b_nekrasov: bool
    is_h_matrix: bool
    is_p_matrix: bool | None
    notes: str = ""


def bplus_decompose(m) -> BPlusSplit:
    """Split ``M`` into its Z-part ``B+`` and the rank-1 remainder ``C``."""
    mm = as_matrix(m)
    n = mm.shape[0]
    if n < 2:
        raise DimensionTooSmall("the splitting needs at least one off-diagonal entry per row")
    masked = mm.copy()
    np.fill_diagonal(masked, -np.inf)
    r_plus = np.maximum(masked.max(axis=1), 0.0)
    b_plus = mm - r_plus[:, None]
    c = np.tile(r_plus[:, None], (1, n))
    return BPlusSplit(b_plus=b_plus, c=c, r_plus=r_plus)


def _b_nekrasov_flag(mm: np.ndarray) -> bool:
    if mm.shape[0] < 2:
        return False
    b_plus = bplus_decompose(mm).b_plus
    return is_nekrasov(b_plus).is_nekrasov and _positive_diagonal(b_plus)


def _sdd(mm: np.ndarray) -> bool:
    abs_m = np.abs(mm)
    diag = np.diag(abs_m)
    off = abs_m.sum(axis=1) - diag
    return bool(np.all(diag - off > STRICT_RTOL * np.maximum(1.0, diag)))


def _classify(mm: np.ndarray, with_p_test: bool) -> ClassificationReport:
    n = mm.shape[0]
    notes: list[str] = []
    off_mask = ~np.eye(n, dtype=bool)
    z_flag = bool(np.all(mm[off_mask] <= 0.0))
    nek_flag = is_nekrasov(mm).is_nekrasov
    if n >= 2:
        b_plus = bplus_decompose(mm).b_plus
        b_flag = _sdd(b_plus) and _positive_diagonal(b_plus)
        bnek_flag = is_nekrasov(b_plus).is_nekrasov and _positive_diagonal(b_plus)
    else:
        b_flag = bnek_flag = False
        notes.append("B-class tests need n >= 2")
    try:
        h_flag = bool(np.all(inverse(comparison_matrix(mm)) >= _H_INVERSE_TOL))
    except SingularMatrix:
        h_flag = False
        notes.append("comparison matrix is singular")
    p_flag: bool | None
    if not with_p_test:
        p_flag = None
        notes.append("P-matrix test skipped")
    elif n > _P_TEST_MAX_N:
        p_flag = None
        notes.append(f"P-matrix test skipped: n > {_P_TEST_MAX_N}")
    else:
        p_flag = lcp.is_p_matrix(mm)
    return ClassificationReport(
        is_sdd=_sdd(mm),
        is_z_matrix=z_flag,
        is_nekrasov=nek_flag,
        is_b_matrix=b_flag,
        is_b_nekrasov=bnek_flag,
        is_h_matrix=h_flag,
        is_p_matrix=p_flag,
        notes="; ".join(notes),
    )


def is_b_nekrasov(m) -> ClassificationReport:
    """Classification with the (expensive) P-matrix test skipped."""
    return _classify(as_matrix(m), with_p_test=False)


def classify(m) -> ClassificationReport:
    """Full diagnostics, including the principal-minor P-matrix test for small n."""
    return _classify(as_matrix(m), with_p_test=True)


def epsilon_interval_upper(m) -> float:
    """Upper endpoint ``1 - h_n(B+)/b_nn`` of the parameterized B-bound's interval."""
    split = bplus_decompose(m)
    profile = is_nekrasov(split.b_plus)
    b_nn = split.b_plus[-1, -1]
    if abs(b_nn) <= 1e-300:
        raise ZeroDiagonal(split.b_plus.shape[0])
    return float(1.0 - profile.h[-1] / b_nn)


def gp_bnekrasov_bound(m, epsilon: float) -> BoundReport:
    """Parameterized B-Nekrasov bound on the worst-case inverse norm.

    Needs, for every row i < n, some k > i with ``m_ik`` strictly below
    ``r_i`` (ties fail), and the column-scaled ``Bbar = B+ W`` must come out
    a strictly diagonally dominant Z-matrix.  With row slacks
    ``beta_i = bbar_ii - sum_{j != i} |bbar_ij|`` and ``delta = min beta_i/w_i``
    the bound is ``(n-1) max w / (min{delta, 1} min w)``.
    """
    mm = as_matrix(m)
    n = mm.shape[0]
    theorem = Theorem.GP_BNEKRASOV
    if n == 1:
        return _not_applicable(theorem, "DimensionTooSmall")
    if not _b_nekrasov_flag(mm):
        return _not_applicable(theorem, "NotBNekrasov")
    split = bplus_decompose(mm)
    for i in range(n - 1):
        tol = STRICT_RTOL * max(1.0, split.r_plus[i])
        if not np.any(mm[i, i + 1 :] < split.r_plus[i] - tol):
            return _not_applicable(theorem, f"NoStrictEntry({i + 1})")
    profile = is_nekrasov(split.b_plus)
    b_diag = np.diag(split.b_plus)
    upper = 1.0 - profile.h[-1] / b_diag[-1]
    if not _epsilon_inside(epsilon, upper):
        return _not_applicable(theorem, "EpsilonOutOfRange")
    w = profile.h / b_diag
    w[-1] += epsilon
    for i in range(n):
        if w[i] <= STRICT_RTOL:
            return _not_applicable(theorem, f"WZero({i + 1})")
    bbar = split.b_plus * w[None, :]
    abs_bbar = np.abs(bbar)
    bbar_diag = np.diag(bbar)
    beta = bbar_diag - (abs_bbar.sum(axis=1) - np.abs(bbar_diag))
    off_mask = ~np.eye(n, dtype=bool)
    sdd_z = bool(
        np.all(bbar[off_mask] <= 0.0)
        and np.all(beta > STRICT_RTOL * np.maximum(1.0, np.abs(bbar_diag)))
    )
    if not sdd_z:
        return _not_applicable(theorem, "BbarNotSDDZ")
    delta = beta / w
    delta_min = float(np.min(delta))
    value = float((n - 1) * w.max() / (min(delta_min, 1.0) * w.min()))
    return BoundReport(
        theorem=theorem,
        applicable=True,
        value=value,
        epsilon=epsilon,
        intermediates={"w": w, "beta": beta, "delta": delta, "h": profile.h},
    )


def new_bnekrasov_bound(m) -> BoundReport:
    """Parameter-free B-Nekrasov bound:
    ``max_i (n-1) eta_i(B+) / min{b_ii - h_i(B+), 1}``."""
    mm = as_matrix(m)
    n = mm.shape[0]
    theorem = Theorem.NEW_BNEKRASOV
    if n == 1:
        return _not_applicable(theorem, "DimensionTooSmall")
    if not _b_nekrasov_flag(mm):
        return _not_applicable(theorem, "NotBNekrasov")
    profile = is_nekrasov(bplus_decompose(mm).b_plus)
    value = float((n - 1) * np.max(profile.eta / np.minimum(profile.margins, 1.0)))
    return BoundReport(
        theorem=theorem,
        applicable=True,
        value=value,
        intermediates={"h": profile.h, "eta": profile.eta, "margins": profile.margins},
    )
