"""Contraction certificates for complex matrices acting on the cone.

An n x m matrix A maps the closed cone of C^m into the closed cone of C^n
exactly when every functional block

    T(i, j; p, q) = [[A[i, p], A[j, p]], [A[i, q], A[j, q]]],   i < j, p < q

lies in the closed 2x2 class. Strict membership of every block yields a
quantitative certificate: the block supremum theta, the componentwise
supremum of the contraction numbers, the simple rate eta1(theta), a
refined rate from the full quadruple, and a diameter bound for the image.
"""

import math
from dataclasses import dataclass

import numpy as np

from .cone import as_vector, distance, member_closed
from .core2x2 import (
    DEFAULT_TOL,
    Complex2x2,
    DeltaQuadruple,
    deltas,
    diameter_bound,
    eta1,
    in_gamma_closed,
    in_gamma_open,
    refined_rate,
    theta2,
)

__all__ = [
    "BlockWitness",
    "ContractionCertificate",
    "submatrix_T",
    "certify_matrix",
    "product_gap_bound",
    "contraction_witness_test",
]


def as_matrix(A) -> np.ndarray:
    M = np.asarray(A, dtype=complex)
    if M.ndim != 2 or M.size == 0:
        raise ValueError("expected a nonempty 2-D matrix")
    if not np.all(np.isfinite(M.real) & np.isfinite(M.imag)):
        raise ValueError("matrix entries must be finite")
    return M


@dataclass(frozen=True)
class BlockWitness:
    """Indices and content of the block that decided the certificate."""

    i: int
    j: int
    p: int
    q: int
    block: Complex2x2


@dataclass(frozen=True)
class ContractionCertificate:
    """Outcome of the block enumeration.

    classification is 'strict', 'closed', or 'fail'. theta is the block
    supremum of the contraction ratio (None when some block leaves it
    undefined). delta_sup holds the componentwise suprema of the contraction
    numbers, always reported for diagnostics. The rate fields eta_simple,
    eta_refined and diam_bound are populated only for class 'strict'; a
    non-strict certificate carries no rate. witness points at the first
    failing block (fail), the first non-strict block (closed), or the
    theta-extremal block (strict). exhaustive is False for sampled triage,
    which is evidence, not a certificate.
    """

    classification: str
    theta: float | None
    delta_sup: DeltaQuadruple
    eta_simple: float | None
    eta_refined: float | None
    diam_bound: float | None
    witness: BlockWitness | None
    exhaustive: bool = True

    @property
    def strict(self) -> bool:
        return self.classification == "strict"


def submatrix_T(A, i: int, j: int, p: int, q: int) -> Complex2x2:
    """Functional block [[A[i,p], A[j,p]], [A[i,q], A[j,q]]] for i < j, p < q."""
    M = as_matrix(A)
    n, m = M.shape
    if not (0 <= i < j < n and 0 <= p < q < m):
        raise ValueError("need row indices 0 <= i < j < rows and column indices 0 <= p < q < cols")
    return Complex2x2(complex(M[i, p]), complex(M[j, p]), complex(M[i, q]), complex(M[j, q]))


def certify_matrix(A, tol: float = DEFAULT_TOL, sample: int | None = None, rng=None) -> ContractionCertificate:
    """Classify all functional blocks of A and assemble the certificate.

    Needs at least 2 rows and 2 columns. A failing block decides the class
    immediately but the theta and delta suprema are still accumulated over
    the full enumeration for diagnostics. Blocks with zero determinant and
    nonpositive denominator are rank-degenerate and contribute theta 0;
    a nonzero determinant over a nonpositive denominator leaves theta
    undefined. With sample=k, k blocks are drawn at random instead of
    enumerating everything, and the result is marked non-exhaustive.
    """
    M = as_matrix(A)
    n, m = M.shape
    if n < 2 or m < 2:
        raise ValueError("certification needs at least 2 rows and 2 columns")
    quads = [(i, j, p, q) for i in range(n) for j in range(i + 1, n)
             for p in range(m) for q in range(p + 1, m)]
    exhaustive = True
    if sample is not None:
        if sample < 1:
            raise ValueError("sample size must be positive")
        if rng is None:
            rng = np.random.default_rng(0)
        take = min(int(sample), len(quads))
        exhaustive = take == len(quads)
        sel = rng.choice(len(quads), size=take, replace=False)
        quads = [quads[int(k)] for k in np.sort(sel)]

    all_open = True
    all_closed = True
    first_not_open = None
    first_not_closed = None
    theta_sup = 0.0
    theta_defined = True
    extremal = None
    dsup = DeltaQuadruple(0.0, 0.0, 0.0, 0.0)

    for (i, j, p, q) in quads:
        T = Complex2x2(complex(M[i, p]), complex(M[j, p]), complex(M[i, q]), complex(M[j, q]))
        if not in_gamma_open(T, tol):
            if all_open:
                first_not_open = BlockWitness(i, j, p, q, T)
            all_open = False
            if not in_gamma_closed(T, tol):
                if all_closed:
                    first_not_closed = BlockWitness(i, j, p, q, T)
                all_closed = False
        th = theta2(T)
        if th is None:
            if abs(T.det) <= tol * T.frob2():
                th = 0.0  # rank-degenerate block, maps everything to one point
            else:
                theta_defined = False
        if th is not None and (extremal is None or th > theta_sup):
            theta_sup = th
            extremal = BlockWitness(i, j, p, q, T)
        dsup = dsup.sup(deltas(T.transpose()))

    if all_open:
        classification = "strict"
        witness = extremal
    elif all_closed:
        classification = "closed"
        witness = first_not_open
    else:
        classification = "fail"
        witness = first_not_closed

    theta = theta_sup if theta_defined else None
    if classification == "strict":
        eta_simple = eta1(theta)
        eta_refined = refined_rate(dsup)
        diam = diameter_bound(dsup)
    else:
        eta_simple = eta_refined = diam = None
    return ContractionCertificate(
        classification, theta, dsup, eta_simple, eta_refined, diam, witness,
        exhaustive=exhaustive,
    )


def product_gap_bound(certs) -> float:
    """Spectral-gap bound for a product of factors: the product of refined rates.

    Every factor must carry a strict certificate; the bound applies to the
    factors composed in any order.
    """
    certs = list(certs)
    if not certs:
        raise ValueError("need at least one certificate")
    out = 1.0
    for c in certs:
        if not c.strict:
            raise ValueError("every factor must carry a strict certificate")
        out *= c.eta_refined
    return out


def contraction_witness_test(A, x, y, cert: ContractionCertificate, tol: float = 1e-9) -> float:
    """Check the certified Lipschitz bound on one concrete pair.

    Returns d(Ax, Ay). Raises RuntimeError if Ax or Ay leaves the cone or if
    d(Ax, Ay) > eta_refined * d(x, y) + tol, either of which would refute the
    certificate numerically.
    """
    if not cert.strict:
        raise ValueError("witness test needs a strict certificate")
    M = as_matrix(A)
    ax = M @ as_vector(x)
    ay = M @ as_vector(y)
    for name, v in (("Ax", ax), ("Ay", ay)):
        if float(np.vdot(v, v).real) == 0.0 or not member_closed(v):
            raise RuntimeError(f"{name} left the cone, contradicting the certificate")
    dxy = distance(x, y).distance
    daxy = distance(ax, ay).distance
    if daxy > cert.eta_refined * dxy + tol:
        raise RuntimeError(
            f"contraction bound violated: d(Ax, Ay) = {daxy} > "
            f"{cert.eta_refined} * {dxy} + {tol}"
        )
    return daxy
