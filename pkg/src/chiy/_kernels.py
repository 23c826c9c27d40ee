"""Integer kernels behind the symmetric-function layer.

Two hot loops live here:

* ``count_01_matrices`` -- number of 0/1 matrices with prescribed row and
  column sums, i.e. the coefficient of ``m_lambda`` in ``e_mu``.
* ``eval_monomial_symmetric`` -- value of ``m_lambda`` at an integer point,
  used to check basis conversions against explicit variables.

Each has a numba ``@njit`` implementation and a vectorized numpy one. The
numba path is used when numba imports and ``CHIY_DISABLE_NUMBA`` is unset or
``0``; set ``CHIY_DISABLE_NUMBA=1`` to force numpy. Results are int64 and the
public wrappers refuse inputs whose counts could overflow.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import comb, factorial

import numpy as np

_DISABLE = os.environ.get("CHIY_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLE:
        raise ImportError("numba disabled by CHIY_DISABLE_NUMBA")
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False

# w! must fit in int64 for the 0/1 matrix counts.
MAX_KERNEL_WEIGHT = 20

_numba_opts = {"nogil": True, "cache": True, "boundscheck": False}


def _combination_masks(k: int, c: int) -> np.ndarray:
    """Rows of a (C(k, c), k) uint8 array, one per c-subset of range(k)."""
    out = np.zeros((comb(k, c), k), dtype=np.uint8)
    for r, idx in enumerate(combinations(range(k), c)):
        out[r, list(idx)] = 1
    return out


def _strides(rows: np.ndarray) -> np.ndarray:
    strides = np.ones(len(rows), dtype=np.int64)
    for i in range(1, len(rows)):
        strides[i] = strides[i - 1] * (rows[i - 1] + 1)
    return strides


# --------------------------------------------------------------------------
# 0/1 matrices with given margins
# --------------------------------------------------------------------------


def _count_01_numpy(rows: np.ndarray, cols: np.ndarray) -> int:
    k = len(rows)
    strides = _strides(rows)
    nstates = int(strides[-1] * (rows[-1] + 1))
    # state index -> remaining row sums
    idx = np.arange(nstates, dtype=np.int64)
    rem = (idx[:, None] // strides[None, :]) % (rows[None, :] + 1)
    dp = np.zeros(nstates, dtype=np.int64)
    dp[int((rows * strides).sum())] = 1
    for c in cols:
        if c > k:
            return 0
        masks = _combination_masks(k, int(c)).astype(np.int64)
        live = np.nonzero(dp)[0]
        if live.size == 0:
            return 0
        ok = np.all(rem[live][:, None, :] >= masks[None, :, :], axis=2)
        src, m = np.nonzero(ok)
        dest = live[src] - masks[m] @ strides
        new = np.zeros_like(dp)
        np.add.at(new, dest, dp[live[src]])
        dp = new
    return int(dp[0])


if HAVE_NUMBA:

    @numba.njit(**_numba_opts)
    def _count_01_numba(rows, cols, strides):  # pragma: no cover - compiled
        k = rows.shape[0]
        nstates = strides[k - 1] * (rows[k - 1] + 1)
        dp = np.zeros(nstates, dtype=np.int64)
        new = np.zeros(nstates, dtype=np.int64)
        rem = np.empty(k, dtype=np.int64)
        start = 0
        for i in range(k):
            start += rows[i] * strides[i]
        dp[start] = 1
        for ci in range(cols.shape[0]):
            c = cols[ci]
            if c > k:
                return 0
            new[:] = 0
            for s in range(nstates):
                v = dp[s]
                if v == 0:
                    continue
                t = s
                navail = 0
                for i in range(k):
                    rem[i] = t % (rows[i] + 1)
                    t //= rows[i] + 1
                    if rem[i] > 0:
                        navail += 1
                if navail < c:
                    continue
                # Gosper's hack over c-subsets of k rows
                mask = (1 << c) - 1
                limit = 1 << k
                while mask < limit:
                    dest = s
                    good = True
                    for i in range(k):
                        if (mask >> i) & 1:
                            if rem[i] == 0:
                                good = False
                                break
                            dest -= strides[i]
                    if good:
                        new[dest] += v
                    if c == 0:
                        break
                    low = mask & -mask
                    ripple = mask + low
                    mask = (((ripple ^ mask) >> 2) // low) | ripple
            dp, new = new, dp
        return dp[0]

else:
    _count_01_numba = None


def count_01_matrices(row_sums, col_sums, *, backend: str | None = None) -> int:
    """Number of 0/1 matrices with the given row and column sums.

    Equal to the coefficient of ``m_col_sums`` in ``e_row_sums``.
    """
    rows = sorted((int(r) for r in row_sums if r), reverse=True)
    cols = sorted((int(c) for c in col_sums if c), reverse=True)
    if sum(rows) != sum(cols):
        return 0
    if not rows:
        return 1
    if sum(rows) > MAX_KERNEL_WEIGHT:
        raise OverflowError(f"weight above {MAX_KERNEL_WEIGHT} overflows the int64 kernel")
    # Gale-Ryser: a matrix exists iff cols is dominated by the conjugate of rows
    conj = [sum(1 for r in rows if r > i) for i in range(rows[0])]
    a = b = 0
    for i in range(max(len(cols), len(conj))):
        a += cols[i] if i < len(cols) else 0
        b += conj[i] if i < len(conj) else 0
        if a > b:
            return 0
    # the state space is indexed by the side with the smaller product of (part + 1)
    if np.prod([r + 1 for r in rows], dtype=np.float64) > np.prod([c + 1 for c in cols], dtype=np.float64):
        rows, cols = cols, rows
    r_arr = np.asarray(rows, dtype=np.int64)
    c_arr = np.asarray(cols, dtype=np.int64)
    backend = backend or default_backend()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return int(_count_01_numba(r_arr, c_arr, _strides(r_arr)))
    if backend == "numpy":
        return _count_01_numpy(r_arr, c_arr)
    raise ValueError(f"unknown backend {backend!r}")


# --------------------------------------------------------------------------
# monomial symmetric polynomial at an integer point
# --------------------------------------------------------------------------


def _distinct_permutations(values: list[int]):
    """Distinct permutations of a multiset, lexicographic from sorted input."""
    a = sorted(values)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1 :] = reversed(a[i + 1 :])


def _eval_monomial_numpy(exps: np.ndarray, x: np.ndarray) -> int:
    perms = np.array(list(_distinct_permutations(exps.tolist())), dtype=np.int64)
    return int(np.prod(x[None, :] ** perms, axis=1).sum())


if HAVE_NUMBA:

    @numba.njit(**_numba_opts)
    def _eval_monomial_numba(exps, x):  # pragma: no cover - compiled
        n = exps.shape[0]
        a = np.sort(exps)
        total = 0
        while True:
            term = 1
            for i in range(n):
                e = a[i]
                b = x[i]
                p = 1
                for _ in range(e):
                    p *= b
                term *= p
            total += term
            i = n - 2
            while i >= 0 and a[i] >= a[i + 1]:
                i -= 1
            if i < 0:
                break
            j = n - 1
            while a[j] <= a[i]:
                j -= 1
            tmp = a[i]
            a[i] = a[j]
            a[j] = tmp
            lo = i + 1
            hi = n - 1
            while lo < hi:
                tmp = a[lo]
                a[lo] = a[hi]
                a[hi] = tmp
                lo += 1
                hi -= 1
        return total

else:
    _eval_monomial_numba = None


def eval_monomial_symmetric(parts, x, *, backend: str | None = None) -> int:
    """Evaluate ``m_parts(x_1, ..., x_N)`` exactly at an integer point ``x``."""
    x_arr = np.asarray(x, dtype=np.int64)
    n = len(x_arr)
    parts = [int(p) for p in parts]
    if len(parts) > n:
        return 0
    exps = np.zeros(n, dtype=np.int64)
    exps[: len(parts)] = parts
    # crude overflow guard: orbit size times max |term|
    mult: dict[int, int] = {}
    for e in exps.tolist():
        mult[e] = mult.get(e, 0) + 1
    orbit = factorial(n)
    for m in mult.values():
        orbit //= factorial(m)
    bound = orbit * max(1, int(np.abs(x_arr).max(initial=1))) ** int(exps.sum())
    if bound >= 2**62:
        raise OverflowError("point too large for the int64 kernel")
    backend = backend or default_backend()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return int(_eval_monomial_numba(exps, x_arr))
    if backend == "numpy":
        return _eval_monomial_numpy(exps, x_arr)
    raise ValueError(f"unknown backend {backend!r}")


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAVE_NUMBA else ("numpy",)
