"""The canonical complexified cone in C^n and its projective geometry.

Members are vectors x with Re(x_i conj(x_j)) >= 0 for every coordinate
pair. The module provides the membership tests, the angular aperture, the
canonical decomposition over the nonnegative orthant, the projective
gauges alpha and beta together with the metric they induce, the cone
pre-order with a sampled counterpart, a real-orthant oracle for the
metric, and a random member sampler built on the decomposition.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core2x2 import DEFAULT_TOL, Complex2x2, Phi, phi

__all__ = [
    "as_vector",
    "member_closed",
    "member_open",
    "aperture",
    "ConeDecomposition",
    "canonical_decompose",
    "beta",
    "alpha",
    "DistanceResult",
    "distance",
    "preorder_geq",
    "preorder_sample_check",
    "hilbert_distance",
    "random_member",
]


def as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=complex)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("expected a nonempty 1-D vector")
    if not np.all(np.isfinite(v.real) & np.isfinite(v.imag)):
        raise ValueError("vector entries must be finite")
    return v


def _norm2(v: np.ndarray) -> float:
    return float(np.vdot(v, v).real)


def _gram_min(v: np.ndarray) -> float:
    # smallest Re(v_i conj(v_j)); the diagonal contributes |v_i|^2 >= 0
    return float(np.outer(v, v.conj()).real.min())


def member_closed(x, tol: float = DEFAULT_TOL) -> bool:
    """True iff Re(x_i conj(x_j)) >= -tol * ||x||^2 for all coordinate pairs."""
    v = as_vector(x)
    return _gram_min(v) >= -tol * _norm2(v)


def member_open(x, tol: float = DEFAULT_TOL) -> bool:
    """Strict membership: every Re(x_i conj(x_j)) > tol * ||x||^2, so no zero entries."""
    v = as_vector(x)
    s = _norm2(v)
    return s > 0.0 and _gram_min(v) > tol * s


def aperture(zs) -> float:
    """Width of the smallest closed angular sector containing the given numbers.

    Empty input gives 0; a zero entry has no argument and is a domain error.
    """
    zs = [complex(z) for z in zs]
    if not zs:
        return 0.0
    if any(z == 0 for z in zs):
        raise ValueError("aperture needs nonzero entries")
    args = sorted(cmath.phase(z) for z in zs)
    gaps = [b - a for a, b in zip(args, args[1:])]
    gaps.append(args[0] + 2.0 * math.pi - args[-1])
    return 2.0 * math.pi - max(gaps)


def _sector_midpoint(args: list[float]) -> float:
    # bisector of the smallest sector containing the given arguments: the
    # sector is the complement of the largest angular gap
    args = sorted(args)
    if len(args) == 1:
        return args[0]
    gaps = [b - a for a, b in zip(args, args[1:])]
    wrap = args[0] + 2.0 * math.pi - args[-1]
    j = max(range(len(gaps)), key=gaps.__getitem__) if gaps else 0
    if not gaps or wrap >= gaps[j]:
        return 0.5 * (args[0] + args[-1])
    width = 2.0 * math.pi - gaps[j]
    return args[j + 1] + 0.5 * width


@dataclass
class ConeDecomposition:
    """x = (lam / 2) ((1 + i) u1 + (1 - i) u2) with u1, u2 in the nonnegative orthant."""

    lam: complex
    u1: np.ndarray
    u2: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return 0.5 * self.lam * ((1.0 + 1.0j) * self.u1 + (1.0 - 1.0j) * self.u2)


def canonical_decompose(x, tol: float = DEFAULT_TOL) -> ConeDecomposition:
    """Split a nonzero member into a unit phase and two orthant vectors.

    lam = e^{i alpha} with alpha the angular midpoint of the nonzero entries;
    u1 = Re(x / lam) + Im(x / lam) and u2 = Re(x / lam) - Im(x / lam), both
    entrywise nonnegative for members. Non-members and 0 are domain errors.
    """
    v = as_vector(x)
    if not member_closed(v, tol):
        raise ValueError("not a member of the closed cone")
    n2 = _norm2(v)
    if n2 == 0.0:
        raise ValueError("cannot decompose the zero vector")
    args = [cmath.phase(z) for z in v if z != 0]
    lam = cmath.exp(1j * _sector_midpoint(args))
    y = v / lam
    u1 = y.real + y.imag
    u2 = y.real - y.imag
    floor = -tol * math.sqrt(n2)
    if u1.min() < floor or u2.min() < floor:
        raise ValueError("decomposition left the orthant; input is outside tolerance of the cone")
    return ConeDecomposition(lam, np.maximum(u1, 0.0), np.maximum(u2, 0.0))


def _pair(x: np.ndarray, y: np.ndarray, p: int, q: int) -> Complex2x2:
    return Complex2x2(complex(x[p]), complex(x[q]), complex(y[p]), complex(y[q]))


def _validated_pair(x, y, tol: float):
    vx = as_vector(x)
    vy = as_vector(y)
    if vx.shape != vy.shape:
        raise ValueError("vectors must have the same length")
    for name, v in (("x", vx), ("y", vy)):
        if _norm2(v) == 0.0:
            raise ValueError(f"{name} must be nonzero")
        if not member_closed(v, tol):
            raise ValueError(f"{name} is not a member of the closed cone")
    return vx, vy


def beta(x, y, tol: float = DEFAULT_TOL) -> float:
    """Least t with x <= t y in the cone order: sup of Phi over coordinate pairs.

    The pair (p, q) contributes Phi([[x_p, x_q], [y_p, y_q]]); the diagonal
    pair p = q contributes |x_p / y_p|. The value +inf is a valid result,
    meaning no finite multiple of y dominates x.
    """
    vx, vy = _validated_pair(x, y, tol)
    best = 0.0
    n = vx.size
    for p in range(n):
        for q in range(p, n):
            val = Phi(_pair(vx, vy, p, q), tol)
            if val > best:
                best = val
            if math.isinf(best):
                return best
    return best


def alpha(x, y, tol: float = DEFAULT_TOL) -> float:
    """Greatest t with t y <= x: inf of phi over coordinate pairs. Dual to beta."""
    vx, vy = _validated_pair(x, y, tol)
    best = math.inf
    n = vx.size
    for p in range(n):
        for q in range(p, n):
            val = phi(_pair(vx, vy, p, q), tol)
            if val < best:
                best = val
            if best == 0.0:
                return best
    return best


@dataclass(frozen=True)
class DistanceResult:
    beta_xy: float
    beta_yx: float
    distance: float


def distance(x, y, tol: float = DEFAULT_TOL) -> DistanceResult:
    """Projective metric d(x, y) = log(beta(x, y) beta(y, x)).

    Zero exactly on complex-projectively equal members; +inf when either
    gauge is infinite (boundary members with mismatched supports).
    """
    bxy = beta(x, y, tol)
    byx = beta(y, x, tol)
    if math.isinf(bxy) or math.isinf(byx):
        d = math.inf
    else:
        d = max(0.0, math.log(bxy * byx))
    return DistanceResult(bxy, byx, d)


def preorder_geq(x, y, tol: float = DEFAULT_TOL) -> bool:
    """True iff x dominates y in the cone pre-order, i.e. beta(y, x) <= 1 + tol."""
    return beta(y, x, tol) <= 1.0 + tol


def preorder_sample_check(
    x, y, n_alpha: int = 360, radius: float = 0.999, tol: float = DEFAULT_TOL
) -> bool:
    """Sampled counterpart of preorder_geq.

    Checks x - a y is a nonzero member of the closed cone for n_alpha values
    of a on the circle |a| = radius < 1. Domination guarantees this for every
    |a| < 1, so a True from preorder_geq must never meet a False here.
    """
    vx, vy = _validated_pair(x, y, tol)
    if not (0.0 <= radius < 1.0):
        raise ValueError("radius must lie in [0, 1)")
    if n_alpha < 1:
        raise ValueError("need at least one sample")
    for k in range(n_alpha):
        a = radius * cmath.exp(2j * math.pi * k / n_alpha)
        z = vx - a * vy
        if _norm2(z) == 0.0 or not member_closed(z, tol):
            return False
    return True


def hilbert_distance(x, y) -> float:
    """Classical orthant metric log(max_i x_i/y_i / min_i x_i/y_i) for positive real vectors.

    Oracle for distance() on real positive pairs; the two agree to roundoff.
    """
    vx = np.asarray(x)
    vy = np.asarray(y)
    out = []
    for v in (vx, vy):
        if np.iscomplexobj(v):
            if np.any(v.imag != 0.0):
                raise ValueError("entries must be real")
            v = v.real
        v = np.asarray(v, dtype=float)
        if v.ndim != 1 or v.size == 0 or not np.all(np.isfinite(v)):
            raise ValueError("expected a nonempty finite 1-D vector")
        if np.any(v <= 0.0):
            raise ValueError("entries must be positive")
        out.append(v)
    vx, vy = out
    if vx.shape != vy.shape:
        raise ValueError("vectors must have the same length")
    ratios = vx / vy
    return float(np.log(ratios.max() / ratios.min()))


def random_member(rng: np.random.Generator, n: int, interior: bool = False) -> np.ndarray:
    """Random member of the closed cone, via a random decomposition.

    Draws orthant parts u1, u2 and a uniform phase, then reassembles
    (lam / 2)((1 + i) u1 + (1 - i) u2), which ranges over the whole cone.
    With interior=True the parts stay away from 0 so the member is strict.
    """
    lo = 0.1 if interior else 0.0
    while True:
        u1 = rng.uniform(lo, 1.0, n)
        u2 = rng.uniform(lo, 1.0, n)
        lam = cmath.exp(2j * math.pi * rng.random())
        v = 0.5 * lam * ((1.0 + 1.0j) * u1 + (1.0 - 1.0j) * u2)
        if _norm2(v) > 1e-12:
            return v
