"""Dense two-phase simplex solver with Bland's rule and dual certificates.

The solver is deliberately simple: a dense tableau, Bland's anti-cycling
pivot rule (lowest eligible index enters, ratio ties broken by lowest basis
index), and a two-phase start.  Problem sizes in this package stay small on
one side (at most a few dozen rows after dualization, thousands of columns),
which dense numpy row operations handle comfortably and deterministically.

Every optimal solve re-derives the basic solution and the row multipliers
from a fresh factorization of the final basis, then verifies primal
feasibility, dual feasibility, and the duality gap before returning; an
infeasible phase 1 yields the Farkas row combination used elsewhere to build
separating functionals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FEAS_TOL = 1e-9  # feasibility / optimality tolerance
GAP_TOL = 1e-8   # allowed duality gap on optimal results

__all__ = ["FEAS_TOL", "GAP_TOL", "LinearProgram", "LPCertificate", "lp_solve"]


@dataclass(frozen=True, eq=False)
class LinearProgram:
    """min (or max) objective @ x subject to rows of A relating to rhs.

    ``relations[i]`` is one of "<=", "=", ">=" and applies to row i.
    ``bounds`` lists per-variable (lo, hi) with None for unbounded; omitted
    bounds mean every variable is free.
    """

    objective: np.ndarray
    A: np.ndarray
    relations: tuple
    rhs: np.ndarray
    bounds: tuple | None = None
    maximize: bool = False

    def __post_init__(self):
        object.__setattr__(self, "objective", np.asarray(self.objective, dtype=float))
        object.__setattr__(self, "A", np.asarray(self.A, dtype=float))
        object.__setattr__(self, "rhs", np.asarray(self.rhs, dtype=float))
        object.__setattr__(self, "relations", tuple(self.relations))


@dataclass(frozen=True, eq=False)
class LPCertificate:
    """Outcome of a solve.

    For "optimal": ``primal`` is feasible within 1e-9 and achieves
    ``objective_value``; ``dual`` holds one multiplier per original row and
    the verified duality gap is stored in ``dual_gap``.  For "infeasible":
    ``dual`` holds a Farkas combination y of the original rows (y @ A <= 0
    componentwise on the nonnegative standard-form columns, y @ rhs > 0).
    For "unbounded" only the status is meaningful.
    """

    status: str
    primal: np.ndarray | None = None
    objective_value: float | None = None
    dual: np.ndarray | None = None
    dual_gap: float | None = None


def _pivot(tab: np.ndarray, basis: np.ndarray, row: int, col: int) -> None:
    tab[row] /= tab[row, col]
    factors = tab[:, col].copy()
    factors[row] = 0.0
    tab -= np.outer(factors, tab[row])
    basis[row] = col


def _pivot_step(tab: np.ndarray, basis: np.ndarray, n_allowed: int, tol: float,
                use_bland: bool):
    """One simplex pivot; returns "optimal", "unbounded" or "pivoted".

    Entering column: most negative reduced cost (Dantzig) normally, lowest
    eligible index (Bland) when the caller detects a degenerate stall.
    Leaving row: minimum ratio, ties broken by lowest basis index.
    """
    cost = tab[-1, :n_allowed]
    if use_bland:
        eligible = np.nonzero(cost < -tol)[0]
        if eligible.size == 0:
            return "optimal"
        col = int(eligible[0])
    else:
        col = int(np.argmin(cost))
        if cost[col] >= -tol:
            return "optimal"
    column = tab[:-1, col]
    rows = np.nonzero(column > tol)[0]
    if rows.size == 0:
        return "unbounded"
    ratios = tab[:-1, -1][rows] / column[rows]
    best = np.min(ratios)
    ties = rows[ratios <= best + 1e-12]
    if use_bland:
        row = int(ties[np.argmin(basis[ties])])
    else:
        # Among tied rows prefer the largest pivot element for stability.
        row = int(ties[np.argmax(column[ties])])
    _pivot(tab, basis, row, col)
    return "pivoted"


def _run_phase(tab: np.ndarray, basis: np.ndarray, n_allowed: int, tol: float,
               max_pivots: int, pivots: int):
    """Pivot to optimality.  Dantzig selection with a permanent-progress
    guarantee: thirty pivots without objective movement switch to Bland's
    rule (immune to cycling) until the objective moves again."""
    last_obj = tab[-1, -1]
    stalled = 0
    while True:
        step = _pivot_step(tab, basis, n_allowed, tol, use_bland=stalled >= 30)
        if step != "pivoted":
            return step, pivots
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError(f"simplex exceeded {max_pivots} pivots")
        obj = tab[-1, -1]
        if obj > last_obj + 1e-12 * max(1.0, abs(last_obj)):
            last_obj = obj
            stalled = 0
        else:
            stalled += 1


def _simplex_standard(A: np.ndarray, b: np.ndarray, c: np.ndarray,
                      tol: float = FEAS_TOL, max_pivots: int = 200_000):
    """min c @ x s.t. A x = b, x >= 0 by the two-phase tableau method.

    Returns (status, x, objective, y) where y are the row multipliers in the
    coordinates of the rows as given; on "infeasible" y is a Farkas
    certificate with y @ A <= tol componentwise and y @ b > 0.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float).copy()
    c = np.asarray(c, dtype=float)
    m, n = A.shape

    signs = np.where(b < 0.0, -1.0, 1.0)
    A_w = A * signs[:, None]
    b_w = b * signs

    # Tableau [A | I | b] plus a reduced-cost row; artificials start basic.
    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = A_w
    tab[:m, n:n + m] = np.eye(m)
    tab[:m, -1] = b_w
    basis = np.arange(n, n + m)

    # Phase 1: minimize the artificial sum.
    tab[-1, :] = -tab[:m, :].sum(axis=0)
    tab[-1, n:n + m] = 0.0
    step, pivots = _run_phase(tab, basis, n, tol, max_pivots, 0)
    if step == "unbounded":  # cannot happen: phase-1 objective >= 0
        raise RuntimeError("phase-1 reported unbounded")
    phase1 = -tab[-1, -1]
    if phase1 > tol * max(1.0, float(np.abs(b_w).sum())):
        c1_basic = (basis >= n).astype(float)
        y = c1_basic @ tab[:m, n:n + m]
        return "infeasible", None, None, y * signs

    # Drive any leftover artificials out of the basis; drop redundant rows.
    keep = np.ones(m, dtype=bool)
    for r in range(m):
        if basis[r] >= n:
            col = int(np.argmax(np.abs(tab[r, :n])))
            if abs(tab[r, col]) > tol:
                _pivot(tab, basis, r, col)
            else:
                keep[r] = False
    kept_rows = np.nonzero(keep)[0]
    m_orig = m
    if not np.all(keep):
        tab = np.vstack([tab[:m][keep], tab[-1:]])
        basis = basis[keep]
        A_w, b_w, signs = A_w[keep], b_w[keep], signs[keep]
        m = int(keep.sum())

    # Phase 2 with the real costs.
    c_basic = c[basis]
    tab[-1, :n] = c - c_basic @ tab[:m, :n]
    tab[-1, n:n + m] = -c_basic @ tab[:m, n:n + m]
    tab[-1, -1] = -c_basic @ tab[:m, -1]
    step, pivots = _run_phase(tab, basis, n, tol, max_pivots, pivots)
    if step == "unbounded":
        return "unbounded", None, None, None

    # Fresh recomputation from the final basis for accuracy; keep the
    # incrementally updated tableau values instead if the basis matrix is
    # too ill-conditioned for the fresh solve to satisfy the constraints.
    x_basic = tab[:m, -1]
    y = c[basis] @ tab[:m, n:n + m]
    B = A_w[:, basis]
    scale = max(1.0, float(np.abs(b_w).max(initial=0.0)))
    try:
        cand_x = np.linalg.solve(B, b_w)
        cand_y = np.linalg.solve(B.T, c[basis])
        tab_resid = float(np.abs(B @ x_basic - b_w).max(initial=0.0))
        fresh_resid = float(np.abs(B @ cand_x - b_w).max(initial=0.0))
        if fresh_resid <= max(tab_resid, tol * scale):
            x_basic, y = cand_x, cand_y
    except np.linalg.LinAlgError:
        pass
    x = np.zeros(n)
    x[basis] = x_basic
    np.clip(x, 0.0, None, out=x)
    y_full = np.zeros(m_orig)
    y_full[kept_rows] = y * signs
    return "optimal", x, float(c @ x), y_full


def lp_solve(lp: LinearProgram) -> LPCertificate:
    """Solve a general-form LP; deterministic for identical input.

    The problem is rewritten in standard form (shifting, flipping or
    splitting variables according to their bounds, slacks for inequality
    rows) and handed to the two-phase simplex.  Optimal results are checked
    for primal feasibility and duality gap before being returned.
    """
    c0 = lp.objective
    A0 = lp.A
    b0 = lp.rhs
    if A0.ndim != 2:
        raise ValueError("constraint matrix must be two-dimensional")
    m, n = A0.shape
    if c0.shape != (n,) or b0.shape != (m,) or len(lp.relations) != m:
        raise ValueError("inconsistent LP dimensions")
    if not (np.all(np.isfinite(A0)) and np.all(np.isfinite(b0)) and np.all(np.isfinite(c0))):
        raise ValueError("LP data must be finite")
    for rel in lp.relations:
        if rel not in ("<=", "=", ">="):
            raise ValueError(f"unknown relation {rel!r}")
    bounds = lp.bounds if lp.bounds is not None else [(None, None)] * n
    if len(bounds) != n:
        raise ValueError("bounds length must match variable count")

    c_int = -c0 if lp.maximize else c0

    # Columns of the standard form; record how to reconstruct each variable.
    cols = []       # column vectors of length m
    costs = []      # standard-form costs
    recon = []      # (var index, sign) per column; free vars get two entries
    offset = np.zeros(n)
    extra_rows = []  # (column index in standard form, upper bound) per boxed var
    for i in range(n):
        lo, hi = bounds[i]
        lo = None if lo is not None and np.isneginf(lo) else lo
        hi = None if hi is not None and np.isposinf(hi) else hi
        a_col = A0[:, i]
        if lo is None and hi is None:
            cols.append(a_col)
            costs.append(c_int[i])
            recon.append((i, 1.0))
            cols.append(-a_col)
            costs.append(-c_int[i])
            recon.append((i, -1.0))
        elif lo is not None and hi is None:
            offset[i] = lo
            cols.append(a_col)
            costs.append(c_int[i])
            recon.append((i, 1.0))
        elif lo is None and hi is not None:
            offset[i] = hi
            cols.append(-a_col)
            costs.append(-c_int[i])
            recon.append((i, -1.0))
        else:
            if hi < lo:
                raise ValueError(f"empty bound interval for variable {i}")
            offset[i] = lo
            extra_rows.append((len(cols), hi - lo))
            cols.append(a_col)
            costs.append(c_int[i])
            recon.append((i, 1.0))

    n_std = len(cols)
    n_extra = len(extra_rows)
    A_std = np.zeros((m + n_extra, n_std))
    A_std[:m, :] = np.column_stack(cols) if cols else np.zeros((m, 0))
    b_std = np.concatenate([b0 - A0 @ offset, np.zeros(n_extra)])
    c_std = np.array(costs)

    # Slack columns for inequality rows and box rows.
    slack_cols = []
    for r, rel in enumerate(lp.relations):
        if rel == "<=":
            slack_cols.append((r, 1.0))
        elif rel == ">=":
            slack_cols.append((r, -1.0))
    for e, (col_idx, width) in enumerate(extra_rows):
        row = m + e
        A_std[row, col_idx] = 1.0
        b_std[row] = width
        slack_cols.append((row, 1.0))
    if slack_cols:
        S = np.zeros((m + n_extra, len(slack_cols)))
        for j, (r, s) in enumerate(slack_cols):
            S[r, j] = s
        A_std = np.hstack([A_std, S])
        c_std = np.concatenate([c_std, np.zeros(len(slack_cols))])

    status, z, _, y = _simplex_standard(A_std, b_std, c_std)

    if status == "infeasible":
        return LPCertificate(status="infeasible", dual=y[:m])
    if status == "unbounded":
        return LPCertificate(status="unbounded")

    x = offset.copy()
    for j, (i, s) in enumerate(recon):
        x[i] += s * z[j]
    obj = float(c0 @ x)

    # Verify the certificate before handing it out.
    scale = max(1.0, float(np.max(np.abs(b0))) if m else 1.0, float(np.max(np.abs(x))) if n else 1.0)
    resid = A0 @ x - b0
    for r, rel in enumerate(lp.relations):
        ok = (
            abs(resid[r]) <= FEAS_TOL * scale
            if rel == "="
            else (resid[r] <= FEAS_TOL * scale if rel == "<=" else resid[r] >= -FEAS_TOL * scale)
        )
        if not ok:
            raise RuntimeError(f"optimal point violates row {r} by {resid[r]:.3e}")
    gap = abs(float(y @ b_std) - float(c_std @ z))
    if gap > GAP_TOL * scale:
        raise RuntimeError(f"duality gap {gap:.3e} exceeds tolerance")

    y_out = y[:m].copy()
    if lp.maximize:
        y_out = -y_out
    return LPCertificate(
        status="optimal",
        primal=x,
        objective_value=obj,
        dual=y_out,
        dual_gap=float(gap),
    )
