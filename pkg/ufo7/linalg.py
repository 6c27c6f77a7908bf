"""Exact linear algebra over Q(z) on numpy object arrays of CycNum."""
from typing import List, Optional, Tuple

import numpy as np

from ufo7.cyclotomic import ONE, ZERO


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(ZERO)
    return out


def zero_vector(n: int) -> np.ndarray:
    out = np.empty(n, dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def as_matrix(rows, cols: Optional[int] = None) -> np.ndarray:
    rows = list(rows)
    if not rows:
        return zeros(0, cols or 0)
    out = zeros(len(rows), len(rows[0]))
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # object matmul with an empty inner dimension yields python ints
    if a.shape[-1] == 0:
        if b.ndim == 1:
            return zero_vector(a.shape[0])
        return zeros(a.shape[0], b.shape[1])
    return a @ b


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def count_nonzero(a: np.ndarray) -> int:
    return sum(1 for x in a.flat if x != 0)


def rref(m: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form; pivots are taken at the lowest column index first."""
    m = m.copy()
    n_rows, n_cols = m.shape
    pivots = []
    piv_r = 0

    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row, piv_c] != 0:
                break
        else:
            continue

        if i_row != piv_r:
            m[[piv_r, i_row]] = m[[i_row, piv_r]]

        fp = m[piv_r, piv_c].inv()
        m[piv_r] = [x * fp for x in m[piv_r]]

        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r, piv_c]
            if fr == 0:
                continue
            m[r] = [x - y * fr for x, y in zip(m[r], m[piv_r])]

        pivots.append(piv_c)
        piv_r += 1

    return m[: len(pivots)], pivots


def rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(rref(m)[1])


def kernel(m: np.ndarray) -> np.ndarray:
    """Rows spanning {x : m @ x = 0}, reduced so that each row has a 1 at its own free column."""
    n_cols = m.shape[1]
    if m.shape[0] == 0:
        return identity(n_cols)

    r, pivots = rref(m)
    free = [c for c in range(n_cols) if c not in pivots]
    out = zeros(len(free), n_cols)

    for k, f in enumerate(free):
        out[k, f] = ONE
        for row, p in enumerate(pivots):
            out[k, p] = -r[row, f]

    if len(free) > 0:
        out, _ = rref(out)
    return out


def solve(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """A solution x of a @ x = b (b a vector or matrix), or None if inconsistent."""
    vector = b.ndim == 1
    if vector:
        b = b.reshape(-1, 1)

    n_rows, n_cols = a.shape
    augmented = zeros(n_rows, n_cols + b.shape[1])
    augmented[:, :n_cols] = a
    augmented[:, n_cols:] = b
    r, pivots = rref(augmented)

    if any(p >= n_cols for p in pivots):
        return None

    x = zeros(n_cols, b.shape[1])
    for row, p in enumerate(pivots):
        x[p] = r[row, n_cols:]

    return x[:, 0] if vector else x


def inverse(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"Cannot invert a matrix of shape {a.shape}.")
    x = solve(a, identity(n))
    if x is None or rank(a) < n:
        raise ZeroDivisionError("Singular matrix")
    return x


def independent_rows(rows: np.ndarray) -> List[int]:
    """Indices of rows that are independent of all earlier rows (greedy in order)."""
    kept = []
    echelon = zeros(0, rows.shape[1])
    for i in range(rows.shape[0]):
        candidate = np.vstack([echelon, rows[i : i + 1]])
        if rank(candidate) > echelon.shape[0]:
            kept.append(i)
            echelon = rref(candidate)[0]
    return kept


def in_span(basis: np.ndarray, v: np.ndarray) -> bool:
    if basis.shape[0] == 0:
        return is_zero(v)
    return solve(basis.T, v) is not None
