"""Projective distance, order relations, and the contraction property in action."""

import numpy as np

from conegap import certify_matrix, distance, preorder_geq, random_member


def main() -> None:
    x = np.array([1.0, 1.0, 1.0])
    y = np.array([1.0, 2.0, 4.0])
    res = distance(x, y)
    print(f"d(ones, (1,2,4)) = {res.distance:.12f}  (log 4 = {np.log(4):.12f})")
    print(f"beta(x,y) {res.beta_xy:.6f}, beta(y,x) {res.beta_yx:.6f}")

    # scaling by any nonzero complex number moves nothing
    print(f"after phase scaling: {distance(x, (2 + 1j) * y).distance:.12f}")

    print(f"x >= 0.5 x: {preorder_geq(x, 0.5 * x)}")
    print(f"0.5 x >= x: {preorder_geq(0.5 * x, x)}")

    A = np.array([[2.0, 1.0, 0.5], [1.0, 2.0, 1.0], [0.5, 1.0, 2.0]])
    cert = certify_matrix(A)
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(200):
        u = random_member(rng, 3)
        v = random_member(rng, 3)
        d0 = distance(u, v).distance
        d1 = distance(A @ u, A @ v).distance
        if d0 > 0:
            worst = max(worst, d1 / d0)
    print(f"observed contraction factor {worst:.6f} <= eta_refined {cert.eta_refined:.6f}")


if __name__ == "__main__":
    main()
