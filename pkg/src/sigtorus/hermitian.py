"""Inertia of Hermitian matrices.

Two backends: a floating-point one for complex Hermitian matrices (cyclic
complex Jacobi rotations, deterministic across platforms) and an exact one
for integer symmetric matrices (congruence elimination over rationals, no
tolerances involved).
"""

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import NonConvergence, SingularMatrix

DEFAULT_TOL = 1e-9
_SWEEP_BUDGET = 50
_OFF_TARGET = 1e-13


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self):
        return self.n_plus - self.n_minus

    @property
    def nullity(self):
        return self.n_zero

    @property
    def dim(self):
        return self.n_plus + self.n_minus + self.n_zero


class HermitianMatrix:
    """A complex Hermitian matrix; symmetrized on construction.

    Construction rejects matrices whose conjugate-transpose defect exceeds
    1e-12 in absolute value.  The 0x0 matrix is valid.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        a = np.asarray(entries, dtype=complex)
        if a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("expected a square matrix, got shape %r" % (a.shape,))
        if a.size and float(np.max(np.abs(a - a.conj().T))) > 1e-12:
            raise ValueError("matrix is not Hermitian within 1e-12")
        self.entries = (a + a.conj().T) / 2.0

    @property
    def n(self):
        return self.entries.shape[0]

    def __repr__(self):
        return "HermitianMatrix(n=%d)" % self.n


def _offdiag_norm_sq(a):
    sq = np.abs(a) ** 2
    np.fill_diagonal(sq, 0.0)
    return float(np.sum(sq))


def _rotate(a, p, q):
    """Annihilate a[p, q] by a unitary two-sided rotation."""
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    u = apq / r
    app = a[p, p].real
    aqq = a[q, q].real
    tau = (aqq - app) / (2.0 * r)
    if tau >= 0.0:
        t = 1.0 / (tau + math.hypot(1.0, tau))
    else:
        t = -1.0 / (-tau + math.hypot(1.0, tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    ubar = u.conjugate()
    colp = a[:, p].copy()
    colq = a[:, q].copy()
    a[:, p] = c * colp - (s * ubar) * colq
    a[:, q] = s * colp + (c * ubar) * colq
    rowp = a[p, :].copy()
    rowq = a[q, :].copy()
    a[p, :] = c * rowp - (s * u) * rowq
    a[q, :] = s * rowp + (c * u) * rowq

    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = complex(app - t * r, 0.0)
    a[q, q] = complex(aqq + t * r, 0.0)


def jacobi_eigenvalues(h):
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    Iterates until the off-diagonal Frobenius norm drops below 1e-13 times
    the norm of the input; raises NonConvergence if 50 sweeps do not get
    there (which does not happen for genuine Hermitian input).
    """
    if isinstance(h, HermitianMatrix):
        a = h.entries.copy()
    else:
        a = HermitianMatrix(h).entries.copy()
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        return np.zeros(n)
    target_sq = (_OFF_TARGET * norm) ** 2
    for _ in range(_SWEEP_BUDGET):
        if _offdiag_norm_sq(a) <= target_sq:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, p, q)
    else:
        if _offdiag_norm_sq(a) > target_sq:
            raise NonConvergence("Jacobi iteration did not converge in %d sweeps" % _SWEEP_BUDGET)
    return np.real(np.diagonal(a)).copy()


def inertia(h, tol=DEFAULT_TOL):
    """Counts of positive, negative, and zero eigenvalues.

    An eigenvalue counts as zero when its magnitude is at most
    ``tol * max(1, ||H||)`` (Frobenius norm).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not isinstance(h, HermitianMatrix):
        h = HermitianMatrix(h)
    if h.n == 0:
        return Inertia(0, 0, 0)
    norm = float(np.linalg.norm(h.entries))
    eigs = jacobi_eigenvalues(h)
    cut = tol * max(1.0, norm)
    plus = int(np.sum(eigs > cut))
    minus = int(np.sum(eigs < -cut))
    return Inertia(plus, minus, h.n - plus - minus)


def integer_inertia(matrix):
    """Exact inertia of a symmetric integer matrix.

    Symmetric Gaussian elimination over rationals: any nonzero diagonal
    entry serves as a pivot; when all active diagonal entries vanish, a
    nonzero off-diagonal entry gives a hyperbolic 2x2 block contributing
    (1, 1, 0).  No tolerance is involved.
    """
    rows = [[Fraction(int(x)) for x in row] for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix is not symmetric")

    s = rows
    active = list(range(n))
    plus = minus = zero = 0
    while active:
        pivot = next((i for i in active if s[i][i] != 0), None)
        if pivot is not None:
            d = s[pivot][pivot]
            if d > 0:
                plus += 1
            else:
                minus += 1
            active.remove(pivot)
            piv_row = s[pivot]
            coupling = {i: s[i][pivot] for i in active}
            for i in active:
                if coupling[i] == 0:
                    continue
                f = coupling[i] / d
                row = s[i]
                for j in active:
                    row[j] -= f * piv_row[j]
            continue

        pair = None
        for idx, i in enumerate(active):
            for j in active[idx + 1:]:
                if s[i][j] != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            zero += len(active)
            break
        i, j = pair
        b = s[i][j]
        plus += 1
        minus += 1
        active.remove(i)
        active.remove(j)
        row_i = list(s[i])
        row_j = list(s[j])
        alpha = {r: s[r][i] for r in active}
        beta = {r: s[r][j] for r in active}
        for r in active:
            fb = beta[r] / b
            fa = alpha[r] / b
            if fb == 0 and fa == 0:
                continue
            row = s[r]
            for c in active:
                row[c] -= fb * row_i[c] + fa * row_j[c]
    return Inertia(plus, minus, zero)


def conjugate_inertia_check(h, p, tol=DEFAULT_TOL):
    """Inertia of P* H P for invertible P.

    By Sylvester's law of inertia this must coincide with the inertia of H,
    which makes the function a convenient independent oracle in tests.
    """
    if not isinstance(h, HermitianMatrix):
        h = HermitianMatrix(h)
    p = np.asarray(p, dtype=complex)
    if p.shape != (h.n, h.n):
        raise ValueError("conjugating matrix has wrong shape")
    if h.n and abs(np.linalg.det(p)) <= 1e-9:
        raise SingularMatrix("conjugating matrix is numerically singular")
    m = p.conj().T @ h.entries @ p
    return inertia(HermitianMatrix((m + m.conj().T) / 2.0), tol)
