"""Hermitian Toeplitz completions as a membership test for the curve hull.

A point (x_1..x_k, y_1..y_k) is encoded into a 2k x 2k Hermitian Toeplitz
matrix with unit diagonal whose entries at odd distances 2l-1 from the
diagonal are x_l + i y_l; the k-1 entries at even distances are free.  The
point lies in the hull of the symmetric trigonometric curve exactly when
some choice of the free entries makes the matrix positive semidefinite: a
curve point at angle theta admits the rank-one completion v v*, with
v_j = exp(-i j theta), and convex combinations inherit PSD completions.

Membership is decided by alternating projections between the positive
semidefinite cone and the affine set of admissible completions.  A "member"
verdict is certified: the returned matrix satisfies the affine constraints
exactly and its smallest eigenvalue is above -tol.  Failure to converge is
reported as "not_member_likely" (the method cannot certify exclusion).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MembershipVerdict",
    "toeplitz_assemble",
    "min_eigenvalue",
    "toeplitz_membership",
]


@dataclass(frozen=True, eq=False)
class MembershipVerdict:
    """Result of the Toeplitz completion search.

    ``matrix`` is the final affine-feasible iterate; for "member" verdicts
    its smallest eigenvalue (recorded in ``smallest_eigenvalue``) certifies
    positive semidefiniteness to within the tolerance used.
    """

    status: str  # "member", "not_member_likely", or "inconclusive"
    matrix: np.ndarray
    smallest_eigenvalue: float
    iterations: int


def _first_row(point: np.ndarray, even_entries: np.ndarray) -> np.ndarray:
    k = point.size // 2
    row = np.empty(2 * k, dtype=complex)
    row[0] = 1.0
    row[1::2] = point[:k] + 1j * point[k:]
    row[2::2] = even_entries
    return row


def _from_first_row(row: np.ndarray) -> np.ndarray:
    n = row.shape[0]
    dist = np.arange(n)[None, :] - np.arange(n)[:, None]  # j - i
    vals = row[np.abs(dist)]
    return np.where(dist >= 0, vals, np.conj(vals))


def toeplitz_assemble(point, even_entries) -> np.ndarray:
    """Hermitian Toeplitz matrix for a point and a choice of free entries.

    ``point`` has length 2k; ``even_entries`` supplies the k-1 complex
    values at even distances 2, 4, ..., 2k-2 from the diagonal.
    """
    point = np.asarray(point, dtype=float)
    if point.ndim != 1 or point.size < 2 or point.size % 2 != 0:
        raise ValueError(f"point must be a flat vector of even length, got {point.shape}")
    k = point.size // 2
    even_entries = np.asarray(even_entries, dtype=complex)
    if even_entries.shape != (k - 1,):
        raise ValueError(
            f"expected {k - 1} free entries for a point of length {2 * k}, "
            f"got {even_entries.shape}"
        )
    return _from_first_row(_first_row(point, even_entries))


def min_eigenvalue(matrix) -> float:
    """Smallest eigenvalue of a Hermitian matrix (symmetrized first)."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"matrix must be square, got {matrix.shape}")
    sym = 0.5 * (matrix + matrix.conj().T)
    return float(np.linalg.eigvalsh(sym)[0])


def _affine_project(S: np.ndarray, fixed_row: np.ndarray, fixed_mask: np.ndarray) -> np.ndarray:
    """Nearest Toeplitz matrix agreeing with the fixed diagonals: free
    diagonals are averaged, fixed ones reset."""
    n = S.shape[0]
    row = np.empty(n, dtype=complex)
    for d in range(n):
        if fixed_mask[d]:
            row[d] = fixed_row[d]
        else:
            upper = np.mean(np.diagonal(S, offset=d))
            lower = np.mean(np.diagonal(S, offset=-d))
            row[d] = 0.5 * (upper + np.conj(lower))
    return _from_first_row(row)


def toeplitz_membership(k: int, point, tol: float = 1e-8,
                        max_iterations: int = 2000) -> MembershipVerdict:
    """Decide hull membership by searching for a PSD Toeplitz completion.

    Tries two deterministic starting completions (all-zero free entries,
    and the rank-one completion suggested by the phase of the first
    coordinate pair), then alternates projections between the PSD cone and
    the affine completion set.  Stalls trigger a rank-one polish that snaps
    the dominant eigenvector to the nearest single-angle completion; if
    that fails, a stall far from feasibility (smallest eigenvalue below
    -10*tol) means "not_member_likely", while a stall close to feasibility
    or exhausting the iteration budget mid-improvement is "inconclusive".
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    point = np.asarray(point, dtype=float)
    if point.shape != (2 * k,):
        raise ValueError(f"point must have shape ({2 * k},), got {point.shape}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iterations < 1:
        raise ValueError(f"max_iterations must be >= 1, got {max_iterations}")

    n = 2 * k
    fixed_mask = np.zeros(n, dtype=bool)
    fixed_mask[0] = True
    fixed_mask[1::2] = True
    fixed_row = _first_row(point, np.zeros(k - 1, dtype=complex))

    theta_hat = math.atan2(point[k], point[0])
    starts = [
        np.zeros(k - 1, dtype=complex),
        np.exp(1j * 2.0 * theta_hat * np.arange(1, k)),
    ]
    best_start, best_eig = None, -np.inf
    for even in starts:
        M = toeplitz_assemble(point, even)
        smallest = min_eigenvalue(M)
        if smallest >= -tol:
            return MembershipVerdict("member", M, smallest, 0)
        if smallest > best_eig:
            best_start, best_eig = M, smallest

    M = best_start
    best_seen = -np.inf
    stall = 0
    for iteration in range(1, max_iterations + 1):
        eigvals, eigvecs = np.linalg.eigh(M)
        if eigvals[0] >= -tol:
            return MembershipVerdict("member", M, float(eigvals[0]), iteration)
        if eigvals[0] > best_seen + 1e-13:
            best_seen = float(eigvals[0])
            stall = 0
        else:
            stall += 1
            if stall >= 60:
                polished = _rank_one_polish(point, eigvecs[:, -1], tol)
                if polished is not None:
                    return MembershipVerdict(
                        "member", polished[0], polished[1], iteration
                    )
                status = ("not_member_likely" if best_seen < -10.0 * tol
                          else "inconclusive")
                return MembershipVerdict(status, M, min_eigenvalue(M), iteration)
        psd = (eigvecs * np.clip(eigvals, 0.0, None)) @ eigvecs.conj().T
        M = _affine_project(psd, fixed_row, fixed_mask)
    # Ran out of iterations while the smallest eigenvalue was still rising:
    # too slow to certify, but no evidence of infeasibility either.
    return MembershipVerdict("inconclusive", M, min_eigenvalue(M), iteration)


def _rank_one_polish(point: np.ndarray, dominant: np.ndarray, tol: float):
    """Try the single-angle completion nearest to a dominant eigenvector."""
    k = point.size // 2
    steps = dominant[1:] * np.conj(dominant[:-1])
    if float(np.abs(steps).min()) < 1e-12:
        return None
    theta = -float(np.angle(np.mean(steps / np.abs(steps))))
    even = np.exp(1j * 2.0 * theta * np.arange(1, k))
    M = toeplitz_assemble(point, even)
    smallest = min_eigenvalue(M)
    if smallest >= -tol:
        return M, smallest
    return None
