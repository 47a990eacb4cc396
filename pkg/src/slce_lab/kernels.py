"""Hot inner loops, each with a numba and a pure-numpy implementation.

The active backend is chosen once at import time from ``SLCE_LAB_BACKEND``
(``numba`` or ``numpy``).  When the variable is unset numba is used if it
imports cleanly.  Both implementations stay reachable through
:data:`numpy_impl` and :data:`numba_impl` so tests and the benchmark can
compare them directly.
"""
from __future__ import annotations

import os
import warnings
from types import SimpleNamespace

import numpy as np

_PAIR_CHUNK = 4096

_SHIFT_CHUNK = 512


# --------------------------------------------------------------------------
# numpy implementations


def _diff_histogram_np(a, b, M):
    v = a.shape[0]
    t = np.arange(v)
    out = np.empty((v, M), dtype=np.int64)
    block = max(1, (1 << 22) // max(v, 1))
    for t0 in range(0, v, block):
        tau = t[t0:t0 + block]
        idx = (t[None, :] + tau[:, None]) % v
        d = (a[None, :] - b[idx]) % M
        flat = d + M * np.arange(tau.shape[0])[:, None]
        out[t0:t0 + tau.shape[0]] = np.bincount(
            flat.ravel(), minlength=tau.shape[0] * M).reshape(-1, M)
    return out


def _least_translate_np(src, dst):
    v = src.shape[0]
    x = np.arange(v)
    for g0 in range(0, v, _SHIFT_CHUNK):
        g = np.arange(g0, min(v, g0 + _SHIFT_CHUNK))
        rot = src[(x[None, :] - g[:, None]) % v]
        hit = np.flatnonzero((rot == dst[None, :]).all(axis=1))
        if hit.size:
            return int(g[hit[0]])
    return -1


def _pair_max_magnitude_np(terms, M, cos_t, sin_t, rows, cols):
    n, v = terms.shape
    z = cos_t[terms] + 1j * sin_t[terms]
    out = np.zeros(rows.shape[0])
    t = np.arange(v)
    for c0 in range(0, rows.shape[0], _PAIR_CHUNK):
        r = rows[c0:c0 + _PAIR_CHUNK]
        c = cols[c0:c0 + _PAIR_CHUNK]
        za = z[r]
        zb = np.conj(z[c])
        same = r == c
        best = np.zeros(r.shape[0])
        for tau in range(v):
            val = np.abs((za * zb[:, (t + tau) % v]).sum(axis=1))
            if tau == 0:
                val[same] = 0.0
            np.maximum(best, val, out=best)
        out[c0:c0 + _PAIR_CHUNK] = best
    return out


def _exp_table_np(mul_alpha, p, d, n):
    """Encodings of alpha**i for i < n; ``mul_alpha`` maps digit vectors."""
    weights = p ** np.arange(d, dtype=np.int64)
    digits = np.zeros((1, d), dtype=np.int64)
    digits[0, 0] = 1
    step = mul_alpha.astype(np.int64)
    while digits.shape[0] < n:
        # multiply every entry by alpha**len via the matrix of that power
        digits = np.vstack([digits, (digits @ step.T) % p])
        step = (step @ step) % p
    return (digits[:n] @ weights).astype(np.int64)


numpy_impl = SimpleNamespace(
    name="numpy",
    diff_histogram=_diff_histogram_np,
    least_translate=_least_translate_np,
    pair_max_magnitude=_pair_max_magnitude_np,
    exp_table=_exp_table_np,
)


# --------------------------------------------------------------------------
# numba implementations


def _build_numba():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        import numba as nb
    # prefer OpenMP so an outdated TBB is never probed (it warns on every load)
    nb.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

    @nb.njit(cache=True)
    def diff_histogram(a, b, M):
        v = a.shape[0]
        h = np.zeros((v, M), dtype=np.int64)
        for tau in range(v):
            for t in range(v):
                j = t + tau
                if j >= v:
                    j -= v
                h[tau, (a[t] - b[j]) % M] += 1
        return h

    @nb.njit(cache=True)
    def least_translate(src, dst):
        v = src.shape[0]
        for g in range(v):
            ok = True
            for x in range(v):
                y = x - g
                if y < 0:
                    y += v
                if src[y] != dst[x]:
                    ok = False
                    break
            if ok:
                return g
        return -1

    @nb.njit(cache=True, parallel=True)
    def pair_max_magnitude(terms, M, cos_t, sin_t, rows, cols):
        npair = rows.shape[0]
        v = terms.shape[1]
        out = np.zeros(npair)
        for k in nb.prange(npair):
            i = rows[k]
            j = cols[k]
            hist = np.zeros(M, dtype=np.int64)
            best = 0.0
            for tau in range(v):
                if i == j and tau == 0:
                    continue
                hist[:] = 0
                for t in range(v):
                    s = t + tau
                    if s >= v:
                        s -= v
                    hist[(terms[i, t] - terms[j, s]) % M] += 1
                re = 0.0
                im = 0.0
                for m in range(M):
                    re += hist[m] * cos_t[m]
                    im += hist[m] * sin_t[m]
                mag = np.sqrt(re * re + im * im)
                if mag > best:
                    best = mag
            out[k] = best
        return out

    @nb.njit(cache=True)
    def exp_table(mul_alpha, p, d, n):
        out = np.empty(n, dtype=np.int64)
        cur = np.zeros(d, dtype=np.int64)
        nxt = np.zeros(d, dtype=np.int64)
        cur[0] = 1
        for i in range(n):
            e = 0
            w = 1
            for c in range(d):
                e += cur[c] * w
                w *= p
            out[i] = e
            for r in range(d):
                acc = 0
                for c in range(d):
                    acc += mul_alpha[r, c] * cur[c]
                nxt[r] = acc % p
            cur[:] = nxt
        return out

    return SimpleNamespace(
        name="numba",
        diff_histogram=diff_histogram,
        least_translate=least_translate,
        pair_max_magnitude=pair_max_magnitude,
        exp_table=exp_table,
    )


try:
    numba_impl = _build_numba()
except ImportError:  # pragma: no cover - numba ships in the dev environment
    numba_impl = None


def _select():
    want = os.environ.get("SLCE_LAB_BACKEND", "").strip().lower()
    if want == "numpy":
        return numpy_impl
    if want == "numba":
        if numba_impl is None:
            raise ImportError("SLCE_LAB_BACKEND=numba but numba is not installed")
        return numba_impl
    if want:
        raise ValueError(f"unknown SLCE_LAB_BACKEND {want!r}")
    return numba_impl if numba_impl is not None else numpy_impl


backend = _select()


def diff_histogram(a: np.ndarray, b: np.ndarray, M: int) -> np.ndarray:
    """Counts ``h[tau, k] = #{t : a[t] - b[t + tau] = k (mod M)}``."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    return backend.diff_histogram(a, b, int(M))


def least_translate(src: np.ndarray, dst: np.ndarray) -> int:
    """Least g with ``dst[x] == src[x - g]`` for every x, or -1."""
    src = np.ascontiguousarray(src, dtype=np.int64)
    dst = np.ascontiguousarray(dst, dtype=np.int64)
    return int(backend.least_translate(src, dst))


def pair_max_magnitude(terms: np.ndarray, M: int, rows: np.ndarray,
                       cols: np.ndarray) -> np.ndarray:
    """Max over tau of the correlation magnitude for each (row, col) pair.

    A pair with ``row == col`` skips tau = 0 (off-phase autocorrelation).
    """
    terms = np.ascontiguousarray(terms, dtype=np.int64)
    ang = 2 * np.pi * np.arange(M) / M
    return backend.pair_max_magnitude(
        terms, int(M), np.cos(ang), np.sin(ang),
        np.ascontiguousarray(rows, dtype=np.int64),
        np.ascontiguousarray(cols, dtype=np.int64),
    )


def exp_table(mul_alpha: np.ndarray, p: int, d: int, n: int) -> np.ndarray:
    return backend.exp_table(np.ascontiguousarray(mul_alpha, dtype=np.int64),
                             int(p), int(d), int(n))
