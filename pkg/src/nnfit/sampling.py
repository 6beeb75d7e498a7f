"""Seeded generation of null and alternative samples on the three spaces.

Every sampler draws from a counter-based Philox stream keyed by
(master_seed, stream_id), so a replication's output depends only on its
stream, never on scheduling or worker count.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np
from scipy.special import ive

from . import geometry, scores
from .geometry import CIRCLE, SPHERE, TORUS_SQUARE, SampleSet, Space

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RngStream:
    """Deterministic random stream addressed by (master_seed, stream_id)."""

    master_seed: int
    stream_id: int

    def generator(self) -> np.random.Generator:
        key = np.array([self.master_seed & _MASK64, self.stream_id & _MASK64],
                       dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class UniformNull:
    """The null model: uniform distribution on the space."""


@dataclass(frozen=True)
class VonMisesFisher:
    """Unimodal directional distribution exp(kappa * mu'x) on S^1 or S^2."""

    mu: tuple[float, ...] = (1.0, 0.0)
    kappa: float = 0.5

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")
        mu = np.asarray(self.mu, dtype=float)
        if mu.shape[0] not in (2, 3):
            raise ValueError("mu must have 2 or 3 components")
        if abs(np.linalg.norm(mu) - 1.0) > 1e-9:
            raise ValueError("mu must be a unit vector")

    @property
    def dim(self) -> int:
        return len(self.mu)


@dataclass(frozen=True)
class BimodalVonMisesFisher:
    """Equal-weight mixture of two antipodal von Mises-Fisher modes on S^1,
    mean directions (1, 0) and (-1, 0), common concentration kappa."""

    kappa: float = 1.0

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")


@dataclass(frozen=True)
class Kent:
    """Kent distribution exp(kappa*mu'x + beta*x'(t1 t1' - t2 t2')x) on S^2."""

    kappa: float = 0.25
    beta: float = 2.0
    mu: tuple[float, float, float] = (1.0, 0.0, 0.0)
    tau1: tuple[float, float, float] = (0.0, 1.0, 0.0)
    tau2: tuple[float, float, float] = (0.0, 0.0, 1.0)

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")
        if self.beta < 0:
            raise ValueError("beta must be nonnegative")
        vecs = [np.asarray(v, dtype=float) for v in (self.mu, self.tau1, self.tau2)]
        for v in vecs:
            if abs(np.linalg.norm(v) - 1.0) > 1e-9:
                raise ValueError("mu, tau1, tau2 must be unit vectors")
        for i in range(3):
            for k in range(i + 1, 3):
                if abs(float(vecs[i] @ vecs[k])) > 1e-9:
                    raise ValueError("mu, tau1, tau2 must be mutually orthogonal")


@dataclass(frozen=True)
class Contamination:
    """Uniform background plus two isotropic normal point sources on the
    unit square; draws landing outside the square are discarded and the
    whole mixture draw (component included) is repeated."""

    eps1: float = 0.135
    eps2: float = 0.24
    center1: tuple[float, float] = (0.25, 0.25)
    center2: tuple[float, float] = (0.7, 0.7)
    sigma1: float = 0.09
    sigma2: float = 0.12

    def __post_init__(self):
        if min(self.eps1, self.eps2) < 0 or self.eps1 + self.eps2 >= 1:
            raise ValueError("mixture weights must satisfy 0 <= eps1+eps2 < 1")
        if min(self.sigma1, self.sigma2) <= 0:
            raise ValueError("sigmas must be positive")


@dataclass(frozen=True)
class Clustering:
    """Points drawn uniformly in small discs around discarded uniform
    centers; a point falling outside the square is replaced by a fresh
    uniform draw on the square (non-i.i.d. model)."""

    n_centers: int = 10
    radius: float = 0.05

    def __post_init__(self):
        if self.n_centers < 1:
            raise ValueError("need at least one cluster center")
        if self.radius <= 0:
            raise ValueError("radius must be positive")


AlternativeSpec = Union[UniformNull, VonMisesFisher, BimodalVonMisesFisher,
                        Kent, Contamination, Clustering]

# canonical short labels used in CSV output and on the command line
ALTERNATIVE_LABELS = {
    UniformNull: "uniform",
    VonMisesFisher: "vmf",
    BimodalVonMisesFisher: "bimodal-vmf",
    Kent: "kent",
    Contamination: "con",
    Clustering: "clu",
}


def alternative_label(spec: AlternativeSpec) -> str:
    return ALTERNATIVE_LABELS[type(spec)]


def _check_compat(space: Space, spec: AlternativeSpec) -> None:
    kind = space.kind
    if isinstance(spec, UniformNull):
        return
    if isinstance(spec, (Contamination, Clustering)) and kind == "torus-square":
        return
    if isinstance(spec, VonMisesFisher) and kind in ("circle", "sphere"):
        if spec.dim == space.ambient_dim:
            return
        raise ValueError(f"vMF mu has {spec.dim} components but {kind} "
                         f"points have {space.ambient_dim}")
    if isinstance(spec, BimodalVonMisesFisher) and kind == "circle":
        return
    if isinstance(spec, Kent) and kind == "sphere":
        return
    raise ValueError(f"alternative {alternative_label(spec)} is not defined "
                     f"on space {kind!r}")


# ---------------------------------------------------------------------------
# samplers

def _uniform_points(space: Space, n: int, rng: np.random.Generator) -> np.ndarray:
    if space.kind == "torus-square":
        return rng.random((n, 2))
    if space.kind == "circle":
        theta = rng.random(n) * (2.0 * np.pi)
        return np.stack([np.cos(theta), np.sin(theta)], axis=1)
    z = 2.0 * rng.random(n) - 1.0
    phi = rng.random(n) * (2.0 * np.pi)
    s = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    return np.stack([s * np.cos(phi), s * np.sin(phi), z], axis=1)


def _vmf_angles(kappa: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """Angles around the mean direction, via rejection from a wrapped
    Cauchy envelope (Best-Fisher scheme)."""
    a = 1.0 + math.sqrt(1.0 + 4.0 * kappa * kappa)
    b = (a - math.sqrt(2.0 * a)) / (2.0 * kappa)
    r = (1.0 + b * b) / (2.0 * b)
    out = np.empty(n)
    filled = 0
    while filled < n:
        m = n - filled
        u1, u2, u3 = rng.random((3, m))
        z = np.cos(np.pi * u1)
        f = (1.0 + r * z) / (r + z)
        c = kappa * (r - f)
        accept = (c * (2.0 - c) - u2 > 0.0)
        accept |= np.log(np.maximum(c, 1e-300) / u2) + 1.0 - c >= 0.0
        theta = np.sign(u3 - 0.5) * np.arccos(np.clip(f, -1.0, 1.0))
        good = theta[accept]
        take = min(m, good.shape[0])
        out[filled:filled + take] = good[:take]
        filled += take
    return out


def _vmf_circle(mu: np.ndarray, kappa: float, n: int,
                rng: np.random.Generator) -> np.ndarray:
    base = math.atan2(mu[1], mu[0])
    theta = base + _vmf_angles(kappa, n, rng)
    return np.stack([np.cos(theta), np.sin(theta)], axis=1)


def _orthonormal_frame(mu: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(mu)))] = 1.0
    e1 = np.cross(mu, axis)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(mu, e1)
    return e1, e2


def _vmf_sphere(mu: np.ndarray, kappa: float, n: int,
                rng: np.random.Generator) -> np.ndarray:
    # exact inverse transform for the cosine component, no rejection
    u = rng.random(n)
    w = 1.0 + np.log(u + (1.0 - u) * math.exp(-2.0 * kappa)) / kappa
    w = np.clip(w, -1.0, 1.0)
    phi = rng.random(n) * (2.0 * np.pi)
    e1, e2 = _orthonormal_frame(mu)
    s = np.sqrt(np.maximum(0.0, 1.0 - w * w))
    pts = (s * np.cos(phi))[:, None] * e1 + (s * np.sin(phi))[:, None] * e2 \
        + w[:, None] * mu
    return pts


def _bimodal_vmf(kappa: float, n: int, rng: np.random.Generator) -> np.ndarray:
    flip = rng.random(n) < 0.5
    base = np.where(flip, math.pi, 0.0)
    theta = base + _vmf_angles(kappa, n, rng)
    return np.stack([np.cos(theta), np.sin(theta)], axis=1)


def _kent(spec: Kent, n: int, rng: np.random.Generator) -> np.ndarray:
    # rejection from the vMF(kappa) envelope; acceptance exp(beta*(q(x)-1))
    mu = np.asarray(spec.mu)
    t1 = np.asarray(spec.tau1)
    t2 = np.asarray(spec.tau2)
    out = np.empty((n, 3))
    filled = 0
    while filled < n:
        m = n - filled
        cand = _vmf_sphere(mu, spec.kappa, m, rng)
        q = (cand @ t1) ** 2 - (cand @ t2) ** 2
        accept = rng.random(m) < np.exp(spec.beta * (q - 1.0))
        good = cand[accept]
        take = min(m, good.shape[0])
        out[filled:filled + take] = good[:take]
        filled += take
    return out


def _contamination(spec: Contamination, n: int,
                   rng: np.random.Generator) -> np.ndarray:
    w0 = 1.0 - spec.eps1 - spec.eps2
    c1 = np.asarray(spec.center1)
    c2 = np.asarray(spec.center2)
    out = np.empty((n, 2))
    filled = 0
    while filled < n:
        m = n - filled
        comp = rng.random(m)
        unif = rng.random((m, 2))
        norm = rng.standard_normal((m, 2))
        pts = np.where((comp < w0)[:, None], unif,
                       np.where((comp < w0 + spec.eps1)[:, None],
                                c1 + spec.sigma1 * norm,
                                c2 + spec.sigma2 * norm))
        ok = np.all((pts >= 0.0) & (pts <= 1.0), axis=1)
        good = pts[ok]
        take = min(m, good.shape[0])
        out[filled:filled + take] = good[:take]
        filled += take
    return out


def _clustering(spec: Clustering, n: int, rng: np.random.Generator) -> np.ndarray:
    centers = rng.random((spec.n_centers, 2))
    counts = np.full(spec.n_centers, n // spec.n_centers)
    counts[: n % spec.n_centers] += 1  # spread any remainder
    center_of = np.repeat(np.arange(spec.n_centers), counts)
    u = rng.random((n, 2))
    rad = spec.radius * np.sqrt(u[:, 0])
    ang = 2.0 * np.pi * u[:, 1]
    pts = centers[center_of] + np.stack([rad * np.cos(ang), rad * np.sin(ang)], axis=1)
    outside = ~np.all((pts >= 0.0) & (pts <= 1.0), axis=1)
    k = int(outside.sum())
    if k:
        pts[outside] = rng.random((k, 2))  # small uniform noise effect
    return pts


def sample(space: Space, spec: AlternativeSpec, n: int, stream: RngStream) -> SampleSet:
    """Draw n points on ``space`` from the model ``spec``."""
    if n < 2:
        raise ValueError("need n >= 2")
    _check_compat(space, spec)
    rng = stream.generator()
    if isinstance(spec, UniformNull):
        pts = _uniform_points(space, n, rng)
    elif isinstance(spec, VonMisesFisher):
        mu = np.asarray(spec.mu, dtype=float)
        if spec.dim == 2:
            pts = _vmf_circle(mu, spec.kappa, n, rng)
        else:
            pts = _vmf_sphere(mu, spec.kappa, n, rng)
    elif isinstance(spec, BimodalVonMisesFisher):
        pts = _bimodal_vmf(spec.kappa, n, rng)
    elif isinstance(spec, Kent):
        pts = _kent(spec, n, rng)
    elif isinstance(spec, Contamination):
        pts = _contamination(spec, n, rng)
    elif isinstance(spec, Clustering):
        pts = _clustering(spec, n, rng)
    else:  # pragma: no cover
        raise TypeError(f"unknown alternative spec {spec!r}")
    if space.kind in ("circle", "sphere"):
        # renormalize against accumulated rounding; draws are unit up to ~1e-16
        pts = pts / np.sqrt((pts * pts).sum(axis=1))[:, None]
    return SampleSet(space, pts)


# ---------------------------------------------------------------------------
# densities (with respect to the uniform distribution on the space)

def _vmf_log_const(d: int, kappa: float) -> float:
    # log of (kappa/2)^(d/2-1) / (Gamma(d/2) I_{d/2-1}(kappa)); ive = I*exp(-k)
    nu = d / 2.0 - 1.0
    return ((d / 2.0 - 1.0) * math.log(kappa / 2.0)
            - math.lgamma(d / 2.0)
            - (math.log(float(ive(nu, kappa))) + kappa))


@lru_cache(maxsize=32)
def _kent_log_const(spec: Kent) -> float:
    nodes, w = scores.quadrature_nodes(SPHERE)
    mu = np.asarray(spec.mu)
    t1 = np.asarray(spec.tau1)
    t2 = np.asarray(spec.tau2)
    expo = spec.kappa * (nodes @ mu) + spec.beta * ((nodes @ t1) ** 2 - (nodes @ t2) ** 2)
    return float(np.log((w * np.exp(expo)).sum()))


def density(space: Space, spec: AlternativeSpec, x) -> np.ndarray | float:
    """Density of ``spec`` at x relative to the uniform distribution.

    Supports the uniform, von Mises-Fisher, bimodal von Mises-Fisher and
    Kent models. The contamination and clustering models carry no tractable
    (i.i.d.) density and are rejected.
    """
    _check_compat(space, spec)
    pts = np.asarray(x, dtype=float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    geometry.check_membership(space, pts)
    if isinstance(spec, UniformNull):
        vals = np.ones(pts.shape[0])
    elif isinstance(spec, VonMisesFisher):
        mu = np.asarray(spec.mu, dtype=float)
        logc = _vmf_log_const(spec.dim, spec.kappa)
        vals = np.exp(logc + spec.kappa * (pts @ mu))
    elif isinstance(spec, BimodalVonMisesFisher):
        logc = _vmf_log_const(2, spec.kappa)
        vals = 0.5 * (np.exp(logc + spec.kappa * pts[:, 0])
                      + np.exp(logc - spec.kappa * pts[:, 0]))
    elif isinstance(spec, Kent):
        mu = np.asarray(spec.mu)
        t1 = np.asarray(spec.tau1)
        t2 = np.asarray(spec.tau2)
        expo = (spec.kappa * (pts @ mu)
                + spec.beta * ((pts @ t1) ** 2 - (pts @ t2) ** 2))
        vals = np.exp(expo - _kent_log_const(spec))
    else:
        raise ValueError(f"no tractable density for the "
                         f"{alternative_label(spec)} model")
    return float(vals[0]) if single else vals


def density_ratio(space: Space, spec: AlternativeSpec):
    """f/f0 as a callable suitable for the entropy quadrature."""
    return lambda x: density(space, spec, x)
