"""Discretized action form on broken loops and its exact spectrum.

The action of a broken loop with MN nodes q_0, ..., q_{MN-1} (cyclic
indexing) under the time-(A/M) oscillator flow is the quadratic form

    Omega(A) = sum_l S_{A/M}(q_l, q_{l+1}),

a circulant: with phi = 2A/M the matrix has cot(phi) on the diagonal,
-1/(2 sin phi) on the two cyclic off-diagonals, and zeros elsewhere; the
n-dimensional version is this matrix tensored with the n x n identity.
Roots of unity diagonalize it:

    lambda_l = cot(phi) - csc(phi) cos(2 pi l / MN),   l = 0..MN-1,

with lambda_l = lambda_{MN-l} and eigenvectors the real and imaginary
parts of (1, w^l, w^{2l}, ...), w = exp(2 pi i / MN).

Substituting -A = T pi / (N c) for an exact rational capacity c = pi R^2
makes the positivity threshold exact: lambda_l > 0 iff l < T/c for
l >= 1, so the positive-pair count is ceil(T/c) - 1, computed in
rational arithmetic.  A self-contained Jacobi eigensolver serves as the
oracle for the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import NoConvergence, SingularAngle
from .primes import is_prime

#: Jacobi sweep limit and relative off-diagonal convergence threshold
SWEEP_LIMIT = 100
OFF_DIAGONAL_TOL = 1e-12


@dataclass
class CirculantActionForm:
    """Parameters (n, N, M, A) of the discretized action form.

    n is dim E, N an odd prime > 3, M a positive integer with MN odd,
    and A < 0 the flow parameter with |2A/M| < pi/2.  M defaults to N.
    A = 0 is constructible but rejected with SingularAngle by every
    operation that needs the endpoint chart.
    """

    n: int
    N: int
    M: int | None = None
    A: float = -0.1

    def __post_init__(self):
        if self.M is None:
            self.M = self.N
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.N <= 3 or not is_prime(self.N):
            raise ValueError("N must be an odd prime > 3")
        if self.M < 1:
            raise ValueError("M must be a positive integer")
        if (self.M * self.N) % 2 == 0:
            raise ValueError("M*N must be odd")
        self.A = float(self.A)
        if self.A > 0:
            raise ValueError("flow parameter A must be nonpositive")
        if abs(2.0 * self.A / self.M) >= math.pi / 2.0:
            raise ValueError("|2A/M| must be below pi/2")

    @property
    def size(self) -> int:
        return self.M * self.N

    @property
    def phi(self) -> float:
        return 2.0 * self.A / self.M


class SpectralSummary(NamedTuple):
    eigenvalues: np.ndarray
    positive_index: int
    sphere_dim: int
    weights: list[int]


class DimensionData(NamedTuple):
    D_lemma: int
    D_prop: int
    sphere_dim: int


def _check_phi(phi: float) -> float:
    s = math.sin(phi)
    if abs(s) < 1e-12:
        raise SingularAngle(f"sin(2A/M) = {s:.2e}; action form undefined")
    return s


def build_action_matrix(form: CirculantActionForm) -> np.ndarray:
    """Scalar MN x MN circulant of the action form (tensor with I_n for dim n)."""
    s = _check_phi(form.phi)
    size = form.size
    C = np.zeros((size, size))
    np.fill_diagonal(C, math.cos(form.phi) / s)
    off = -0.5 / s
    for l in range(size):
        C[l, (l + 1) % size] += off
        C[(l + 1) % size, l] += off
    return C


def full_action_matrix(form: CirculantActionForm) -> np.ndarray:
    """The n-dimensional form: scalar circulant tensored with the identity."""
    return np.kron(build_action_matrix(form), np.eye(form.n))


def analytic_eigenvalues(form: CirculantActionForm) -> np.ndarray:
    """lambda_l = cot(phi) - csc(phi) cos(2 pi l / MN) for l = 0..MN-1.

    The cosine is evaluated at min(l, MN-l) so the pairing
    lambda_l = lambda_{MN-l} holds bit-for-bit, as the parity of the
    cosine demands.
    """
    s = _check_phi(form.phi)
    l = np.arange(form.size)
    k = np.minimum(l, form.size - l)
    return math.cos(form.phi) / s - np.cos(2.0 * math.pi * k / form.size) / s


def eigenvector_component(form: CirculantActionForm, l: int) -> np.ndarray:
    """Real part of the root-of-unity eigenvector (1, w^l, w^{2l}, ...)."""
    k = np.arange(form.size)
    return np.cos(2.0 * math.pi * l * k / form.size)


def jacobi_eigensystem(matrix, sweep_limit: int = SWEEP_LIMIT) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Classic threshold scheme: the first sweeps skip entries below
    0.2 * sum|off| / n^2, later sweeps rotate everything and zero out
    entries negligible against their diagonal neighbours.  Converges
    when the off-diagonal Frobenius norm falls below 1e-12 relative to
    the input scale (or reaches exactly zero).  Self-contained on
    purpose: this is the oracle the closed-form spectrum is checked
    against.

    Returns (eigenvalues, column eigenvectors), unsorted.
    Raises NoConvergence after sweep_limit sweeps.
    """
    A = np.array(matrix, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(A, A.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.max(np.abs(A))))):
        raise ValueError("matrix must be symmetric")
    n = A.shape[0]
    V = np.eye(n)
    if n == 1:
        return np.diag(A).copy(), V
    upper = np.triu_indices(n, 1)
    off_bound = OFF_DIAGONAL_TOL * max(1.0, float(np.linalg.norm(A)))
    for sweep in range(sweep_limit):
        sm = float(np.sum(np.abs(A[upper])))
        if sm == 0.0 or math.sqrt(2.0 * float(np.sum(A[upper] ** 2))) <= off_bound:
            return np.diag(A).copy(), V
        tresh = 0.2 * sm / (n * n) if sweep < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                g = 100.0 * abs(apq)
                if sweep > 3 and abs(A[p, p]) + g == abs(A[p, p]) and abs(A[q, q]) + g == abs(A[q, q]):
                    A[p, q] = 0.0
                    A[q, p] = 0.0
                    continue
                if abs(apq) <= tresh:
                    continue
                h = A[q, q] - A[p, p]
                if abs(h) + g == abs(h):
                    t = apq / h
                else:
                    theta = 0.5 * h / apq
                    t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                new_p = c * A[p, :] - s * A[q, :]
                new_q = s * A[p, :] + c * A[q, :]
                A[p, :] = new_p
                A[q, :] = new_q
                new_p = c * A[:, p] - s * A[:, q]
                new_q = s * A[:, p] + c * A[:, q]
                A[:, p] = new_p
                A[:, q] = new_q
                A[p, q] = 0.0
                A[q, p] = 0.0
                new_p = c * V[:, p] - s * V[:, q]
                V[:, q] = s * V[:, p] + c * V[:, q]
                V[:, p] = new_p
    raise NoConvergence(f"Jacobi sweeps exhausted ({sweep_limit})")


def numeric_eigenvalues(matrix) -> np.ndarray:
    """Sorted spectrum of a symmetric matrix via the Jacobi oracle.

    Each eigenpair residual ||C v - lambda v|| is validated against
    1e-9 relative to the matrix scale.
    """
    C = np.asarray(matrix, dtype=float)
    w, V = jacobi_eigensystem(C)
    resid = np.linalg.norm(C @ V - V * w, axis=0)
    bound = 1e-9 * max(1.0, float(np.linalg.norm(C)))
    if float(np.max(resid)) > bound:
        raise NoConvergence(f"eigenpair residual {float(np.max(resid)):.2e} above {bound:.2e}")
    return np.sort(w)


def substituted_flow_parameter(N: int, T, c) -> float:
    """The flow parameter A = -T pi / (N c) probed at window width T."""
    return -math.pi * float(Fraction(T) / (N * Fraction(c)))


def positive_index(n: int, N: int, M: int, T, c) -> int:
    """Number of positive-eigenvalue pairs: ceil(T/c) - 1, exact.

    T and c are exact rationals (c is the capacity pi R^2); at the
    substituted flow parameter -A = T pi/(N c) the eigenvalue lambda_l
    is positive iff l < T/c, with strict inequality governing integer
    ratios.  The count is independent of n; each pair carries n complex
    coordinates.  Requires T/c < MN/4 so the substitution stays in the
    admissible window.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    T = Fraction(T)
    c = Fraction(c)
    if T <= 0 or c <= 0:
        raise ValueError("T and c must be positive")
    ratio = T / c
    if ratio >= Fraction(M * N, 4):
        raise ValueError("substituted flow parameter out of the admissible window")
    return math.ceil(ratio) - 1


def positive_count_from_eigenvalues(N: int, M: int, T, c, tol: float = 1e-9) -> int:
    """Brute-force positive count over l = 1..(MN-1)/2 at the substituted A.

    Floating-point oracle for positive_index; eigenvalues within tol of
    zero are not counted (the boundary eigenvalue at integer T/c).
    """
    theta = float(Fraction(T) / Fraction(c)) * 2.0 * math.pi / (M * N)
    if not 0.0 < theta < math.pi / 2.0:
        raise ValueError("substituted angle outside the admissible window")
    s = math.sin(theta)
    if abs(s) < 1e-12:
        raise SingularAngle("substituted angle is singular")
    l = np.arange(1, (M * N - 1) // 2 + 1)
    lam = (np.cos(2.0 * math.pi * l / (M * N)) - math.cos(theta)) / s
    return int(np.sum(lam > tol))


def dimension_formulas(n: int, T, c) -> DimensionData:
    """Both printed dimension conventions plus the odd-sphere dimension.

    D_lemma = 2n ceil(T/c) - n - 1 and D_prop = 2n ceil(T/c) - n + 1 are
    reported as printed; sphere_dim = 2 n I - 1 is the dimension of the
    unit sphere inside the 2 n I positive coordinates and is the
    normative value for free-action checks.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    T = Fraction(T)
    c = Fraction(c)
    if T <= 0 or c <= 0:
        raise ValueError("T and c must be positive")
    ceiling = math.ceil(T / c)
    index = ceiling - 1
    return DimensionData(2 * n * ceiling - n - 1, 2 * n * ceiling - n + 1, 2 * n * index - 1)


def cyclic_weights(n: int, index_count: int, N: int) -> list[int]:
    """Rotation weights mod N of the positive pairs: 1..I, each n times.

    Pair l rotates by the l-th power of the primitive N-th root, and the
    n coordinates of E share each pair's weight.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if index_count < 0:
        raise ValueError("index count must be >= 0")
    if N <= 3 or not is_prime(N):
        raise ValueError("N must be an odd prime > 3")
    return [l % N for l in range(1, index_count + 1) for _ in range(n)]


def spectral_summary(form: CirculantActionForm, T, c) -> SpectralSummary:
    """Eigenvalues of the given form plus the exact index data at (T, c).

    The caller is expected to have built the form at the substituted
    flow parameter so that the float spectrum and the rational index
    describe the same quadratic form.
    """
    index = positive_index(form.n, form.N, form.M, T, c)
    dims = dimension_formulas(form.n, T, c)
    return SpectralSummary(
        analytic_eigenvalues(form),
        index,
        dims.sphere_dim,
        cyclic_weights(form.n, index, form.N),
    )
