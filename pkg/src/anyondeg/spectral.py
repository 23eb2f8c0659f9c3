"""Growth rate of the walk counts, computed three independent ways.

The asymptotic growth factor (the total quantum dimension) is

  * the closed trig form sin(pi*N/(N+k)) / sin(pi/(N+k)) with N = 3,
  * the dominant eigenvalue of the lattice adjacency matrix,
  * the reciprocal of the smallest positive root of the system
    determinant.

This is the only module that touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .lattice import adjacency, build_lattice
from .poly import IntPoly


class NonConvergenceError(RuntimeError):
    pass


class NoRootError(RuntimeError):
    pass


def lambda_trig(k: int, N: int = 3) -> float:
    """Closed-form growth factor sin(pi*N/(N+k)) / sin(pi/(N+k))."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if k < 1:
        raise ValueError(f"level k must be >= 1, got {k}")
    return math.sin(math.pi * N / (N + k)) / math.sin(math.pi / (N + k))


def lambda_perron(k: int, tol: float = 1e-12, max_iter: int = 100_000) -> float:
    """Dominant adjacency eigenvalue by power iteration.

    Every cycle length is a multiple of 3, so the raw spectrum carries a
    period-3 phase; iterating the cubed matrix collapses it and plain
    power iteration converges.  The cube root of its dominant eigenvalue
    is returned.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    mat = adjacency(build_lattice(k)).astype(np.float64)
    cubed = mat @ mat @ mat
    vec = np.ones(mat.shape[0])
    vec /= np.linalg.norm(vec)
    mu_prev = math.inf
    for _ in range(max_iter):
        nxt = cubed @ vec
        mu = float(vec @ nxt)
        vec = nxt / np.linalg.norm(nxt)
        if abs(mu - mu_prev) < tol:
            return mu ** (1.0 / 3.0)
        mu_prev = mu
    raise NonConvergenceError(
        f"power iteration did not converge in {max_iter} steps (k={k})")


def smallest_positive_root(p: IntPoly, tol: float = 1e-12,
                           search_limit: float = 1.5,
                           grid: int = 1024) -> float:
    """Smallest positive real root by exact sign bracketing plus bisection.

    Signs are evaluated with integer arithmetic at rational points, so a
    bracket is never produced by rounding error.  Requires p(0) > 0.
    """
    if p.sign_at(0, 1) <= 0:
        raise ValueError("polynomial must be positive at 0")
    steps = int(math.ceil(search_limit * grid))
    lo_num = 0
    for m in range(1, steps + 1):
        s = p.sign_at(m, grid)
        if s == 0:
            return m / grid
        if s < 0:
            lo_num, hi_num, den = m - 1, m, grid
            break
        lo_num = m
    else:
        raise NoRootError(
            f"no sign change in (0, {search_limit}] at grid step 1/{grid}")
    while (hi_num - lo_num) / den > tol:
        mid = lo_num + hi_num
        lo_num, hi_num, den = 2 * lo_num, 2 * hi_num, 2 * den
        s = p.sign_at(mid, den)
        if s == 0:
            return mid / den
        if s < 0:
            hi_num = mid
        else:
            lo_num = mid
    return (lo_num + hi_num) / (2 * den)


@dataclass(frozen=True)
class SpectralReport:
    k: int
    lambda_trig: float
    lambda_perron: float
    rho_root: float
    lambda_from_root: float
    agreement_gap: float
    rho_scaled: float  # rho * k^(2/3), diagnostic for the k^(-2/3) law

    def to_dict(self) -> dict:
        return asdict(self)


def spectral_report(k: int, tol: float = 1e-12) -> SpectralReport:
    """All three growth-factor routes plus their maximum pairwise gap."""
    from .genfunc import system_det

    trig = lambda_trig(k)
    perron = lambda_perron(k, tol=tol)
    rho = smallest_positive_root(system_det(k), tol=tol)
    from_root = 1.0 / rho
    values = (trig, perron, from_root)
    gap = max(abs(a - b) for a in values for b in values)
    return SpectralReport(
        k=k,
        lambda_trig=trig,
        lambda_perron=perron,
        rho_root=rho,
        lambda_from_root=from_root,
        agreement_gap=gap,
        rho_scaled=rho * k ** (2.0 / 3.0),
    )


def growth_rate_estimate(k: int, n: int) -> float:
    """f(n)^(1/n) at the origin, from the exact count (log-domain)."""
    from .pathcount import degeneracy

    n3 = n - n % 3  # origin counts vanish off multiples of 3
    count = degeneracy(k, n3)
    if count <= 0:
        raise ValueError(f"no walks of length {n3} at level {k}")
    return 2.0 ** (_log2_bigint(count) / n3)


def _log2_bigint(value: int) -> float:
    # math.log2 handles ints beyond float range since 3.11, but stay portable
    bits = value.bit_length() - 53
    if bits <= 0:
        return math.log2(value)
    return bits + math.log2(value >> bits)
