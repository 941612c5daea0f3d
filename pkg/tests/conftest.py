"""Shared test helpers: independent oracles and random-input generators."""
import numpy as np

# Independent Pauli definitions so oracle code shares nothing with the package.
PAULI = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def trace_oracle_t(mat):
    """Brute-force correlation matrix T[m][n] = Tr(rho sigma_n (x) sigma_m)."""
    t = np.zeros((3, 3))
    for m in range(3):
        for n in range(3):
            op = np.kron(PAULI[n], PAULI[m])
            acc = 0.0
            for i in range(4):
                for j in range(4):
                    acc += (mat[i, j] * op[j, i]).real
            t[m, n] = acc
    return t


def trace_oracle_corr(mat, a_vec, b_vec):
    """Brute-force <(a.sigma)(b.sigma)> by explicit 4x4 trace."""
    op_a = sum(a_vec[i] * PAULI[i] for i in range(3))
    op_b = sum(b_vec[i] * PAULI[i] for i in range(3))
    return np.trace(mat @ np.kron(op_a, op_b)).real


def random_axis(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_orthonormal_pair(rng):
    b = random_axis(rng)
    w = rng.standard_normal(3)
    w -= (w @ b) * b
    w /= np.linalg.norm(w)
    return b, w


def axis_at_overlap(rng, b, mu):
    """A unit axis b' with (1 + b.b')/2 == mu, random within that cone."""
    w = rng.standard_normal(3)
    w -= (w @ b) * b
    w /= np.linalg.norm(w)
    cos_angle = 2.0 * mu - 1.0
    return cos_angle * b + np.sqrt(1.0 - cos_angle**2) * w


def rho_from_bloch(r, s, t):
    """Inverse Bloch decomposition: 4x4 matrix from (r, s, T)."""
    eye = np.eye(2, dtype=complex)
    mat = np.kron(eye, eye).astype(complex)
    for i in range(3):
        mat += r[i] * np.kron(PAULI[i], eye)
        mat += s[i] * np.kron(eye, PAULI[i])
    for m in range(3):
        for n in range(3):
            mat += t[m, n] * np.kron(PAULI[n], PAULI[m])
    return mat / 4.0


def ray_oracle_semi_axes(coeffs, center, n=100_000):
    """Semi-axes of an implicit conic by shooting rays from its center.

    Independent of both the closed-form axis formula and the parametric
    form: for each direction, the positive root of the restriction of the
    conic to the ray gives the boundary distance.
    """
    a, b, c, d, f, g = coeffs
    xc, yc = center
    t = np.linspace(0.0, np.pi, n, endpoint=False)  # conic is centro-symmetric
    ct, st = np.cos(t), np.sin(t)
    qa = a * ct**2 + 2 * b * ct * st + c * st**2
    qb = 2 * ((a * xc + b * yc + d) * ct + (b * xc + c * yc + f) * st)
    qc = a * xc**2 + 2 * b * xc * yc + c * yc**2 + 2 * d * xc + 2 * f * yc + g
    rho = (-qb + np.sqrt(qb**2 - 4 * qa * qc)) / (2 * qa)
    return rho.max(), rho.min()
