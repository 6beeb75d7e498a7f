"""Volume scores, the nearest-neighbor test statistic, and its limits.

The statistic aggregates, over all sample points, powers of the volumes of
the balls spanned by the J nearest neighbor distances, rescaled by the
sample size and weighted by the null density:

    T = sum_i xi(X_i) * f0(X_i)^alpha,
    xi(x) = sum_{k<=J} (v_m * n * d_k(x)^m)^alpha,

where d_k(x) is the k-th nearest neighbor distance of x within the sample.
Under the null, T/n converges to sum_{k<=J} Gamma(k+alpha)/Gamma(k); under
a fixed alternative density f the limit picks up the factor
integral f0^alpha f^(1-alpha), the alpha-entropy between f0 and f.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.special import gammaln

from . import geometry
from .geometry import SampleSet, Space

CIRCLE_QUAD_NODES = 4096
SPHERE_QUAD_NODES = (256, 512)
SQUARE_QUAD_NODES = 128


@dataclass(frozen=True)
class ScoreParams:
    """Power alpha and neighbor count J of the volume score.

    alpha = 1 is accepted here because the limit formulas below remain
    well defined; the test statistic itself rejects it (the limit becomes
    distribution-free and the test loses all power).
    """

    alpha: float
    J: int

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.J < 1:
            raise ValueError(f"J must be a positive integer, got {self.J}")


@dataclass(frozen=True)
class StatisticResult:
    T: float
    T_over_n: float
    per_point_scores: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True)
class LimitValue:
    """Almost-sure limit of T/n: gamma_sum * entropy_integral."""

    gamma_sum: float
    entropy_integral: float
    product: float


def score_profile(dists: np.ndarray, n: int, space: Space, alpha: float, j: int) -> np.ndarray:
    """Per-point volume scores from a (..., >=J) neighbor-distance array.

    Shared by the single-sample statistic and the batched Monte Carlo
    engine; keeping one code path makes their outputs bit-identical.
    """
    z = space.unit_ball_volume * n * dists[..., :j] ** space.intrinsic_dim
    return (z ** alpha).sum(axis=-1)


def rescaled_score(point_index: int, neighbors: np.ndarray, n: int,
                   params: ScoreParams, space: Space) -> float:
    """Volume score of one point given its neighbor distances."""
    row = np.asarray(neighbors, dtype=float)
    if row.ndim == 2:
        row = row[point_index]
    if row.shape[-1] < params.J:
        raise ValueError(
            f"need at least J={params.J} neighbor distances, got {row.shape[-1]}"
        )
    return float(score_profile(row, n, space, params.alpha, params.J))


def statistic(sample: SampleSet, params: ScoreParams) -> StatisticResult:
    """The nearest-neighbor goodness-of-fit statistic T.

    Requires alpha != 1 and n > J. Uses the accelerated neighbor search,
    which is oracle-checked against the brute-force one in the test suite.
    """
    if params.alpha == 1.0:
        raise ValueError("alpha must differ from 1: the test statistic is "
                         "distribution-free at alpha = 1")
    if sample.n <= params.J:
        raise ValueError(f"need n > J, got n={sample.n}, J={params.J}")
    dists = geometry.knn_fast(sample, params.J)
    xi = score_profile(dists, sample.n, sample.space, params.alpha, params.J)
    weights = np.full(sample.n, sample.space.null_density ** params.alpha)
    t = float((xi * weights).sum(axis=-1))
    return StatisticResult(T=t, T_over_n=t / sample.n,
                           per_point_scores=xi, weights=weights)


def weighted_measure(sample: SampleSet, params: ScoreParams,
                     h: Callable[[np.ndarray], float]) -> float:
    """<mu, h> = sum_i xi(X_i) h(X_i) for a bounded function h.

    With h = f0^alpha this equals ``statistic(...).T`` exactly.
    """
    if params.alpha == 1.0:
        raise ValueError("alpha must differ from 1")
    if sample.n <= params.J:
        raise ValueError(f"need n > J, got n={sample.n}, J={params.J}")
    dists = geometry.knn_fast(sample, params.J)
    xi = score_profile(dists, sample.n, sample.space, params.alpha, params.J)
    hv = np.asarray([float(h(p)) for p in sample.points], dtype=float)
    return float((xi * hv).sum(axis=-1))


def null_limit_mean(alpha: float, j: int) -> float:
    """sum_{k=1}^{J} Gamma(k + alpha) / Gamma(k).

    Evaluated through log-gamma so that large alpha * J does not overflow
    intermediate Gamma values.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if j < 1:
        raise ValueError(f"J must be a positive integer, got {j}")
    k = np.arange(1, j + 1, dtype=float)
    return float(np.exp(gammaln(k + alpha) - gammaln(k)).sum())


# ---------------------------------------------------------------------------
# Quadrature over the three spaces.  Node counts are fixed so the computed
# entropy values can serve as frozen regression baselines.

@lru_cache(maxsize=4)
def _circle_nodes(n: int = CIRCLE_QUAD_NODES):
    theta = (np.arange(n) + 0.5) * (2.0 * np.pi / n)
    pts = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    w = np.full(n, 1.0 / n)
    return pts, w


@lru_cache(maxsize=4)
def _sphere_nodes(nu: int = SPHERE_QUAD_NODES[0], nphi: int = SPHERE_QUAD_NODES[1]):
    u, wu = np.polynomial.legendre.leggauss(nu)  # u = cos(polar angle)
    phi = (np.arange(nphi) + 0.5) * (2.0 * np.pi / nphi)
    s = np.sqrt(1.0 - u * u)
    x = s[:, None] * np.cos(phi)[None, :]
    y = s[:, None] * np.sin(phi)[None, :]
    z = np.broadcast_to(u[:, None], x.shape)
    pts = np.stack([x.ravel(), y.ravel(), z.ravel()], axis=1)
    w = np.broadcast_to((wu / 2.0)[:, None], x.shape).ravel() / nphi
    return pts, w


@lru_cache(maxsize=4)
def _square_nodes(k: int = SQUARE_QUAD_NODES):
    x, wx = np.polynomial.legendre.leggauss(k)
    x = (x + 1.0) / 2.0
    wx = wx / 2.0
    xx, yy = np.meshgrid(x, x, indexing="ij")
    pts = np.stack([xx.ravel(), yy.ravel()], axis=1)
    w = np.outer(wx, wx).ravel()
    return pts, w


def quadrature_nodes(space: Space) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the fixed product rule on ``space``.

    Weights sum to one, i.e. they integrate against the uniform probability
    measure on the space.
    """
    if space.kind == "circle":
        return _circle_nodes()
    if space.kind == "sphere":
        return _sphere_nodes()
    if space.kind == "torus-square":
        return _square_nodes()
    raise ValueError(f"no quadrature rule for space {space.kind!r}")


def _eval_on_nodes(fn: Callable, nodes: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(fn(nodes), dtype=float)
        if vals.shape == (nodes.shape[0],):
            return vals
    except Exception:
        pass
    return np.asarray([float(fn(p)) for p in nodes], dtype=float)


def alpha_entropy(space: Space, params: ScoreParams,
                  density_ratio: Callable) -> float:
    """integral of f0^alpha f^(1-alpha) over the space.

    ``density_ratio`` maps a point (or an (N, d) block of points) to
    f(x)/f0(x). Because f0 is constant on all built-in spaces, the integral
    reduces to the uniform-measure average of ratio^(1-alpha). Equals 1
    exactly when f = f0; below 1 for alpha in (0,1) and above 1 for
    alpha > 1 whenever f differs from f0.
    """
    nodes, w = quadrature_nodes(space)
    vals = _eval_on_nodes(density_ratio, nodes)
    if np.any(vals < 0):
        raise ValueError("density ratio must be nonnegative")
    return float((w * vals ** (1.0 - params.alpha)).sum())


def lln_limit(space: Space, params: ScoreParams,
              density_ratio: Callable) -> LimitValue:
    """Limit of T/n under the alternative described by ``density_ratio``."""
    gamma_sum = null_limit_mean(params.alpha, params.J)
    entropy = alpha_entropy(space, params, density_ratio)
    return LimitValue(gamma_sum=gamma_sum, entropy_integral=entropy,
                      product=gamma_sum * entropy)
