"""Kernel dispatch: numba when available and enabled, plain numpy otherwise.

Set ``SYMCOEF_DISABLE_NUMBA=1`` to force the numpy path.
"""
from __future__ import annotations

import os

import numpy as np

_disabled = os.environ.get("SYMCOEF_DISABLE_NUMBA", "").lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    import numba
    from numba import njit, prange

    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the bundled TBB is too old and only produces a warning
        numba.config.THREADING_LAYER = "workqueue"

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def set_threads(threads: int | None) -> None:
    if HAVE_NUMBA and threads:
        numba.set_num_threads(min(int(threads), numba.config.NUMBA_NUM_THREADS))


def _fill_columns_numpy(out, prev, rows, targets, signs, out_cols, prev_cols):
    if len(rows) == 0 or len(out_cols) == 0:
        return out
    contrib = signs[:, None] * prev[targets][:, prev_cols]
    np.add.at(out, (rows[:, None], out_cols[None, :]), contrib)
    return out


if HAVE_NUMBA:

    @njit(parallel=True, nogil=True, cache=True)
    def _fill_columns_numba(out, prev, rows, targets, signs, out_cols, prev_cols):
        # one column per task; columns are disjoint so there is no write race
        for c in prange(out_cols.shape[0]):
            oc = out_cols[c]
            pc = prev_cols[c]
            for e in range(rows.shape[0]):
                out[rows[e], oc] += signs[e] * prev[targets[e], pc]
        return out


def fill_columns(out, prev, rows, targets, signs, out_cols, prev_cols, use_numba=None):
    """Accumulate ``out[rows[e], oc] += signs[e] * prev[targets[e], pc]``.

    The sum runs over every edge ``e`` and every column pair ``(oc, pc)``
    drawn from ``zip(out_cols, prev_cols)``. Object-dtype tables
    (big-integer mode) always take the numpy path.
    """
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and HAVE_NUMBA and out.dtype == np.int64:
        return _fill_columns_numba(out, prev, rows, targets, signs, out_cols, prev_cols)
    return _fill_columns_numpy(out, prev, rows, targets, signs, out_cols, prev_cols)
