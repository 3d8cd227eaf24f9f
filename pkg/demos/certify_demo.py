"""Classify a few matrices and print their contraction certificates."""

import numpy as np

from conegap import certify_matrix

CASES = {
    "symmetric [[2,1],[1,2]]": np.array([[2.0, 1.0], [1.0, 2.0]]),
    "identity": np.eye(2),
    "sign flip [[1,1],[1,-1]]": np.array([[1.0, 1.0], [1.0, -1.0]]),
    "complex perturbation": np.array([[2, 1 + 0.2j], [1 - 0.1j, 2]]),
    "global phase (all entries negative)": -np.ones((3, 3)),
}


def main() -> None:
    for name, M in CASES.items():
        cert = certify_matrix(M)
        print(f"{name}: {cert.classification}")
        if cert.theta is not None:
            print(f"  theta        {cert.theta:.6f}")
        if cert.strict:
            print(f"  eta_simple   {cert.eta_simple:.6f}")
            print(f"  eta_refined  {cert.eta_refined:.6f}")
            print(f"  diam_bound   {cert.diam_bound:.6f}")
        if cert.witness is not None:
            w = cert.witness
            print(f"  witness block rows ({w.i},{w.j}) cols ({w.p},{w.q})")
        print()


if __name__ == "__main__":
    main()
