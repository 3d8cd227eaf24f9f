"""Variational bounds on the leading eigenvalue modulus.

Every nonzero cone member x sandwiches |lambda_1| between
alpha(Ax, x) and beta(Ax, x), evaluated blockwise through the pair
matrices [[(Ax)_p, (Ax)_q], [x_p, x_q]]. Two closed-form specializations
(the best basis vector and the all-ones vector) give cheap lower bounds,
and running the bounds along the power orbit tightens the sandwich at the
certified rate.
"""

import math
from dataclasses import dataclass

import numpy as np

from .certify import ContractionCertificate, as_matrix
from .cone import as_vector, member_closed
from .core2x2 import DEFAULT_TOL, Complex2x2, Phi, phi

__all__ = [
    "VariationalBounds",
    "bounds_at",
    "basis_lower_bound",
    "ones_lower_bound",
    "refine_bounds",
]


@dataclass
class VariationalBounds:
    """lower <= |lambda_1| <= upper, with the extremal coordinate pairs and the test vector."""

    lower: float
    upper: float
    argmin: tuple[int, int] | None
    argmax: tuple[int, int] | None
    test_vector: np.ndarray


def _square(A) -> np.ndarray:
    M = as_matrix(A)
    if M.shape[0] != M.shape[1]:
        raise ValueError("bounds need a square matrix")
    return M


def bounds_at(A, x, tol: float = DEFAULT_TOL, use_transpose: bool = False) -> VariationalBounds:
    """Sandwich at one test vector: lower = inf phi, upper = sup Phi over pairs.

    x must be a nonzero member of the closed cone and A must map it back into
    the cone (any matrix with a closed or strict certificate does). The upper
    bound may be +inf on boundary test vectors; +inf never tightens the min,
    so the lower bound stays finite.
    """
    M = _square(A)
    if use_transpose:
        M = M.T
    v = as_vector(x)
    if v.size != M.shape[0]:
        raise ValueError("test vector length must match the matrix")
    if float(np.vdot(v, v).real) == 0.0:
        raise ValueError("test vector must be nonzero")
    if not member_closed(v, tol):
        raise ValueError("test vector is not a member of the closed cone")
    y = M @ v
    if float(np.vdot(y, y).real) != 0.0 and not member_closed(y, tol):
        raise ValueError("matrix does not map the test vector into the cone")
    lower = math.inf
    upper = 0.0
    argmin = None
    argmax = None
    n = v.size
    for p in range(n):
        for q in range(p, n):
            pair = Complex2x2(complex(y[p]), complex(y[q]), complex(v[p]), complex(v[q]))
            lo = phi(pair, tol)
            if lo < lower:
                lower, argmin = lo, (p, q)
            hi = Phi(pair, tol)
            if hi > upper:
                upper, argmax = hi, (p, q)
    if math.isinf(lower):
        lower = 0.0  # only possible when A x = 0 on the support of x
        argmin = None
    return VariationalBounds(lower, upper, argmin, argmax, v)


def basis_lower_bound(A, use_transpose: bool = False) -> float:
    """Best standard-basis lower bound: max_i min_j Re(A[j,i] conj(A[i,i])) / |A[j,i]|.

    Terms with A[j,i] = 0 are +inf and drop out of the min; an all-zero
    column contributes 0. Equals max_i bounds_at(A, e_i).lower.
    """
    M = _square(A)
    if use_transpose:
        M = M.T
    n = M.shape[0]
    best = 0.0
    for i in range(n):
        col_min = math.inf
        aii = complex(M[i, i])
        for j in range(n):
            aji = complex(M[j, i])
            if aji == 0:
                continue
            val = (aji * aii.conjugate()).real / abs(aji)
            if val < col_min:
                col_min = val
        if math.isinf(col_min):
            col_min = 0.0  # zero column: A e_i = 0
        if col_min > best:
            best = col_min
    return best


def ones_lower_bound(A, use_transpose: bool = False) -> float:
    """Lower bound at the all-ones vector, via the pair infimum on the row sums."""
    M = _square(A)
    if use_transpose:
        M = M.T
    return bounds_at(M, np.ones(M.shape[0], dtype=complex)).lower


def refine_bounds(A, cert: ContractionCertificate, iters: int,
                  tol: float = DEFAULT_TOL, gap_rtol: float | None = None) -> list[VariationalBounds]:
    """Bounds along the power orbit x_0 = ones, x_{k+1} = A x_k / (A x_k)[0].

    Returns the bounds at x_0 .. x_iters. The sandwich gap contracts at the
    certified rate. With gap_rtol set, iteration stops early once
    upper - lower <= gap_rtol * lower.
    """
    if not cert.strict:
        raise ValueError("refinement needs a strict certificate")
    if iters < 0:
        raise ValueError("iteration count must be nonnegative")
    M = _square(A)
    x = np.ones(M.shape[0], dtype=complex)
    out = []
    for k in range(iters + 1):
        b = bounds_at(M, x, tol)
        out.append(b)
        if (
            gap_rtol is not None
            and b.lower > 0.0
            and math.isfinite(b.upper)
            and b.upper - b.lower <= gap_rtol * b.lower
        ):
            break
        if k < iters:
            y = M @ x
            y0 = complex(y[0])
            if y0 == 0:
                raise RuntimeError("normalization functional vanished on the orbit")
            x = y / y0
    return out
