"""Eigenvalue sandwich from test vectors, tightened along the power orbit."""

import numpy as np

from conegap import basis_lower_bound, bounds_at, certify_matrix, ones_lower_bound, refine_bounds

A = np.array([[2, 1 + 1j], [1 - 1j, 2]])


def main() -> None:
    cert = certify_matrix(A)
    print(f"theta {cert.theta:.6f}, eta_refined {cert.eta_refined:.6f}")
    print(f"basis lower bound {basis_lower_bound(A):.6f}")
    print(f"ones  lower bound {ones_lower_bound(A):.6f}")

    b = bounds_at(A, [1.0, 1.0])
    print(f"at ones: {b.lower:.6f} <= |lambda_1| <= {b.upper:.6f}")

    print("refining along the power orbit:")
    for k, b in enumerate(refine_bounds(A, cert, 10)):
        print(f"  k={k:2d}  [{b.lower:.12f}, {b.upper:.12f}]  width {b.upper - b.lower:.3e}")


if __name__ == "__main__":
    main()
