"""Numerical experiments tying finite sections to the closed forms.

Finite truncation spectra, Hausdorff-distance convergence records, outlier
stabilization filtering, the numeric spectral-radius estimator with the
special-point exclusion rule, and the Bell-CHSH bound stress suite.
"""

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .forms import PairFamily, build_dense_pair, build_sum_truncation, commutator
from .theory import (
    LimitSet,
    RhoReport,
    TwoAngleParams,
    bell_chsh_rho,
    outlier_solve_eq4,
    rho_from_lambda,
    select_lambda0,
    two_angle_essential,
)
from .tridiag import DenseSymmetricMatrix, SpectrumSample, dense_sym_eigenvalues, tridiag_eigenvalues

OUTLIER_MARGIN = 0.02
OUTLIER_ORDER_STEP = 200


@dataclass(frozen=True)
class SweepRow:
    theta: float
    eigenvalues: SpectrumSample
    detected_outliers: List[float]
    rho_numeric: float
    rho_closed: Optional[float] = None


@dataclass(frozen=True)
class ConvergenceRecord:
    n: int
    hausdorff_to_limit: float


def _as_intervals(obj):
    """Normalize a LimitSet or SpectrumSample to a sorted interval list."""
    if isinstance(obj, SpectrumSample):
        return [(float(v), float(v)) for v in obj.values]
    if isinstance(obj, LimitSet):
        ivs = list(obj.intervals) + [(p, p) for p in obj.points]
        return sorted(ivs)
    raise TypeError(f"unsupported operand {type(obj).__name__}")


def _point_to_intervals(x, ivs):
    return min(
        0.0 if lo <= x <= hi else min(abs(x - lo), abs(x - hi)) for lo, hi in ivs
    )


def _directed(a_ivs, b_ivs):
    # sup over a of dist(., b): attained at interval endpoints of a or at
    # midpoints of b's coverage gaps that fall inside an interval of a
    candidates = []
    for lo, hi in a_ivs:
        candidates.extend((lo, hi))
        for (_, h1), (l2, _) in zip(b_ivs, b_ivs[1:]):
            mid = 0.5 * (h1 + l2)
            if lo <= mid <= hi:
                candidates.append(mid)
    return max(_point_to_intervals(x, b_ivs) for x in candidates)


def hausdorff_distance(a, b):
    """Hausdorff distance between two closed sets on the real line."""
    a_ivs, b_ivs = _as_intervals(a), _as_intervals(b)
    if not a_ivs or not b_ivs:
        raise ValueError("both sets must be nonempty")
    return max(_directed(a_ivs, b_ivs), _directed(b_ivs, a_ivs))


def detect_outliers(s, ess, margin, s_next):
    """Stabilized eigenvalues outside the essential set.

    Keeps eigenvalues of ``s`` lying farther than ``margin`` from the
    essential set that move by less than margin/10 against their nearest
    neighbor in the larger-order sample; everything else is a truncation
    artifact drifting at O(1/n).
    """
    if margin <= 0:
        raise ValueError("margin must be positive")
    if s_next.order <= s.order:
        raise ValueError("s_next must come from a strictly larger order")
    nxt = s_next.values
    out = []
    for v in s.values:
        if ess.distance(v) <= margin:
            continue
        j = int(np.argmin(np.abs(nxt - v)))
        if abs(nxt[j] - v) < margin / 10.0:
            if not out or abs(v - out[-1]) > 1e-9:
                out.append(float(v))
    return out


def family_params(f):
    """Two-angle constants of the family's limiting (tail) angles."""
    return TwoAngleParams.from_angles(f.omega.tail, f.theta.tail)


def rho_numeric(f, n, exclusion=None, margin=OUTLIER_MARGIN, tol=None):
    """Spectral-radius estimate from finite sections of the family.

    The essential band comes from the tail angles analytically; isolated
    points are the stabilized exterior eigenvalues of truncations at orders
    n and n+200.  Points within 1e-6 of ``exclusion`` are removed before
    the selection step.
    """
    if n < 4 or n % 2 != 0:
        raise ValueError("truncation order must be even and >= 4")
    ess = two_angle_essential(family_params(f))
    s1 = tridiag_eigenvalues(build_sum_truncation(f, n), tol=tol)
    s2 = tridiag_eigenvalues(build_sum_truncation(f, n + OUTLIER_ORDER_STEP), tol=tol)
    outliers = detect_outliers(s1, ess, margin, s2)
    lam = LimitSet(intervals=ess.intervals, points=tuple(outliers))
    if exclusion is not None:
        lam = lam.without_point(exclusion, 1e-6)
    lam0 = select_lambda0(lam)
    rho = rho_from_lambda(lam0)
    return RhoReport(rho, rho, lam0, "finite-section")


def rho_commutator_direct(p):
    """Direct spectral radius of the commutator of a finite pair.

    The commutator is skew-symmetric, hence normal; its spectral radius is
    the square root of the largest eigenvalue of minus its square.
    """
    c = commutator(p)
    m = DenseSymmetricMatrix(-(c @ c))
    top = dense_sym_eigenvalues(m).values[-1]
    return math.sqrt(max(0.0, top))


def convergence_study(f, orders, limit):
    """Hausdorff distance of each truncation spectrum to the limit set."""
    if list(orders) != sorted(set(orders)):
        raise ValueError("orders must be strictly increasing")
    records = []
    for n in orders:
        sample = tridiag_eigenvalues(build_sum_truncation(f, n))
        records.append(ConvergenceRecord(n=n, hausdorff_to_limit=hausdorff_distance(sample, limit)))
    return records


class Lcg:
    """Deterministic 64-bit linear-congruential generator.

    x <- 6364136223846793005 * x + 1442695040888963407 (mod 2^64); doubles
    are the top 53 bits mapped to [0, 1).  Used instead of library RNGs so
    the stress suite is reproducible byte-for-byte across platforms.
    """

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = (int(seed) ^ 0x9E3779B97F4A7C15) & self.MASK

    def next_float(self):
        self.state = (self.MULT * self.state + self.INC) & self.MASK
        return (self.state >> 11) / float(1 << 53)

    def angle(self):
        return 0.05 + self.next_float() * (math.pi - 0.1)


def _random_pair(rng, blocks=3):
    from .forms import AngleSpec

    omega = AngleSpec(tuple(rng.angle() for _ in range(blocks)), rng.angle())
    theta = AngleSpec(tuple(rng.angle() for _ in range(max(1, blocks - 1))), rng.angle())
    return build_dense_pair(PairFamily(omega, theta), blocks)


def tsirelson_suite(seed, trials):
    """Max Bell-CHSH spectral radius over random finite involution pairs."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = Lcg(seed)
    best = 0.0
    for _ in range(trials):
        r1 = rho_commutator_direct(_random_pair(rng))
        r2 = rho_commutator_direct(_random_pair(rng))
        best = max(best, bell_chsh_rho(min(2.0, r1), min(2.0, r2)))
    return best


def lambda_max_outlier(omega, theta):
    """Largest isolated point of the one-head family, or None."""
    sols = outlier_solve_eq4(omega, theta)
    return max((r.lam for r in sols), default=None)


def solve_lambda_max_crossing(omega=math.pi / 2, lo=2.36, hi=2.60, tol=1e-9):
    """Angle where the outlier curve meets 2|cos theta| (one-head family)."""

    def gap(theta):
        lam = lambda_max_outlier(omega, theta)
        if lam is None:
            raise ValueError(f"no isolated point at theta={theta}")
        return lam - 2.0 * abs(math.cos(theta))

    f_lo = gap(lo)
    f_hi = gap(hi)
    if f_lo * f_hi > 0:
        raise ValueError("crossing not bracketed")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = gap(mid)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def sweep_rows(f_for_theta, thetas, n, rho_closed_for_theta=None, exclusion_for_theta=None):
    """Evaluate one SweepRow per grid angle (pure per-point computation)."""
    rows = []
    for theta in thetas:
        fam = f_for_theta(theta)
        sample = tridiag_eigenvalues(build_sum_truncation(fam, n))
        ess = two_angle_essential(family_params(fam))
        s_next = tridiag_eigenvalues(build_sum_truncation(fam, n + OUTLIER_ORDER_STEP))
        outliers = detect_outliers(sample, ess, OUTLIER_MARGIN, s_next)
        exclusion = exclusion_for_theta(theta) if exclusion_for_theta else None
        report = rho_numeric(fam, n, exclusion=exclusion)
        closed = rho_closed_for_theta(theta) if rho_closed_for_theta else None
        rows.append(
            SweepRow(
                theta=theta,
                eigenvalues=sample,
                detected_outliers=outliers,
                rho_numeric=report.rho,
                rho_closed=closed,
            )
        )
    return rows
