"""Hot loops of the word-map engine, in two interchangeable implementations.

Words arrive as two int64 arrays (generator index, exponent) per syllable and
points as complex128 arrays of shape (n, 2, 2) with determinant 1.

``NumbaKernels`` works on unboxed 2x2 scalars under ``@njit``;
``NumpyKernels`` is the reference path built from ``np.matmul``.  Set
``REPVAR_DISABLE_NUMBA=1`` to make the numpy path the default dispatch (numba
is also skipped if it fails to import).  Both are always importable by name so
tests and ``benchmarks/bench_kernels.py`` can compare them.
"""

from __future__ import annotations

import os

import numpy as np

DISABLE_ENV = "REPVAR_DISABLE_NUMBA"

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def numba_requested() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() not in ("1", "true", "yes", "on")


# ---------------------------------------------------------------------------
# numpy reference path


def _np_adjugate(m):
    inv = np.empty_like(m)
    inv[..., 0, 0] = m[..., 1, 1]
    inv[..., 1, 1] = m[..., 0, 0]
    inv[..., 0, 1] = -m[..., 0, 1]
    inv[..., 1, 0] = -m[..., 1, 0]
    return inv


def _np_power(m, k):
    """m**k for k >= 0 by repeated squaring; works on stacks (..., 2, 2)."""
    result = np.broadcast_to(np.eye(2, dtype=np.complex128), m.shape).copy()
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def _np_eval_word(gens, exps, mats):
    inv = _np_adjugate(mats)
    out = np.eye(2, dtype=np.complex128)
    for g, e in zip(gens, exps):
        out = out @ _np_power(mats[g] if e > 0 else inv[g], abs(int(e)))
    return out


def _np_eval_batch(gens, exps, mats):
    inv = _np_adjugate(mats)
    out = np.broadcast_to(np.eye(2, dtype=np.complex128), (mats.shape[0], 2, 2)).copy()
    for g, e in zip(gens, exps):
        out = out @ _np_power(mats[:, g] if e > 0 else inv[:, g], abs(int(e)))
    return out


_SL2_BASIS = np.array([[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]],
                      dtype=np.complex128)


def _np_word_jacobian(gens, exps, mats):
    n = mats.shape[0]
    inv = _np_adjugate(mats)
    jac = np.zeros((3, 3 * n), dtype=np.complex128)
    suffix = np.eye(2, dtype=np.complex128)
    for g, e in zip(gens[::-1], exps[::-1]):
        g = int(g)
        for _ in range(abs(int(e))):
            if e > 0:
                ad = _np_adjugate(suffix) @ _SL2_BASIS @ suffix
                jac[:, 3 * g:3 * g + 3] += np.stack([ad[:, 0, 0], ad[:, 0, 1], ad[:, 1, 0]])
                suffix = mats[g] @ suffix
            else:
                suffix = inv[g] @ suffix
                ad = _np_adjugate(suffix) @ _SL2_BASIS @ suffix
                jac[:, 3 * g:3 * g + 3] -= np.stack([ad[:, 0, 0], ad[:, 0, 1], ad[:, 1, 0]])
    return suffix, jac


class NumpyKernels:
    name = "numpy"
    eval_word = staticmethod(_np_eval_word)
    eval_batch = staticmethod(_np_eval_batch)
    word_jacobian = staticmethod(_np_word_jacobian)


# ---------------------------------------------------------------------------
# numba path


if numba is not None:

    @njit(cache=True, inline="always")
    def _mul(a00, a01, a10, a11, b00, b01, b10, b11):
        return (a00 * b00 + a01 * b10, a00 * b01 + a01 * b11,
                a10 * b00 + a11 * b10, a10 * b01 + a11 * b11)

    @njit(cache=True)
    def _power(m00, m01, m10, m11, k):
        r00, r01, r10, r11 = 1.0 + 0j, 0j, 0j, 1.0 + 0j
        while k:
            if k & 1:
                r00, r01, r10, r11 = _mul(r00, r01, r10, r11, m00, m01, m10, m11)
            k >>= 1
            if k:
                m00, m01, m10, m11 = _mul(m00, m01, m10, m11, m00, m01, m10, m11)
        return r00, r01, r10, r11

    @njit(cache=True)
    def _eval_core(gens, exps, mats):
        r00, r01, r10, r11 = 1.0 + 0j, 0j, 0j, 1.0 + 0j
        for s in range(gens.shape[0]):
            g = gens[s]
            e = exps[s]
            m00, m01, m10, m11 = mats[g, 0, 0], mats[g, 0, 1], mats[g, 1, 0], mats[g, 1, 1]
            if e < 0:
                m00, m01, m10, m11 = m11, -m01, -m10, m00
                e = -e
            p00, p01, p10, p11 = _power(m00, m01, m10, m11, e)
            r00, r01, r10, r11 = _mul(r00, r01, r10, r11, p00, p01, p10, p11)
        return r00, r01, r10, r11

    @njit(cache=True)
    def _nb_eval_word(gens, exps, mats):
        out = np.empty((2, 2), dtype=np.complex128)
        out[0, 0], out[0, 1], out[1, 0], out[1, 1] = _eval_core(gens, exps, mats)
        return out

    @njit(cache=True)
    def _nb_eval_batch(gens, exps, mats):
        out = np.empty((mats.shape[0], 2, 2), dtype=np.complex128)
        for b in range(mats.shape[0]):
            out[b, 0, 0], out[b, 0, 1], out[b, 1, 0], out[b, 1, 1] = _eval_core(gens, exps, mats[b])
        return out

    @njit(cache=True, inline="always")
    def _ad_inverse(s00, s01, s10, s11, x00, x01, x10, x11):
        # S^-1 X S for det S = 1; returns the (0,0), (0,1), (1,0) entries
        t00, t01, t10, t11 = _mul(s11, -s01, -s10, s00, x00, x01, x10, x11)
        y00, y01, y10, _ = _mul(t00, t01, t10, t11, s00, s01, s10, s11)
        return y00, y01, y10

    @njit(cache=True)
    def _nb_word_jacobian(gens, exps, mats):
        n = mats.shape[0]
        jac = np.zeros((3, 3 * n), dtype=np.complex128)
        s00, s01, s10, s11 = 1.0 + 0j, 0j, 0j, 1.0 + 0j
        one = 1.0 + 0j
        zero = 0j
        for idx in range(gens.shape[0] - 1, -1, -1):
            g = gens[idx]
            e = exps[idx]
            m00, m01, m10, m11 = mats[g, 0, 0], mats[g, 0, 1], mats[g, 1, 0], mats[g, 1, 1]
            sign = 1.0
            if e < 0:
                m00, m01, m10, m11 = m11, -m01, -m10, m00
                sign = -1.0
                e = -e
            for _ in range(e):
                if sign < 0:
                    s00, s01, s10, s11 = _mul(m00, m01, m10, m11, s00, s01, s10, s11)
                h = _ad_inverse(s00, s01, s10, s11, one, zero, zero, -one)
                ee = _ad_inverse(s00, s01, s10, s11, zero, one, zero, zero)
                f = _ad_inverse(s00, s01, s10, s11, zero, zero, one, zero)
                for r in range(3):
                    jac[r, 3 * g] += sign * h[r]
                    jac[r, 3 * g + 1] += sign * ee[r]
                    jac[r, 3 * g + 2] += sign * f[r]
                if sign > 0:
                    s00, s01, s10, s11 = _mul(m00, m01, m10, m11, s00, s01, s10, s11)
        out = np.empty((2, 2), dtype=np.complex128)
        out[0, 0], out[0, 1], out[1, 0], out[1, 1] = s00, s01, s10, s11
        return out, jac

    class NumbaKernels:
        name = "numba"
        eval_word = staticmethod(_nb_eval_word)
        eval_batch = staticmethod(_nb_eval_batch)
        word_jacobian = staticmethod(_nb_word_jacobian)

else:  # pragma: no cover
    NumbaKernels = None


def select(use_numba: bool | None = None):
    """Kernel namespace for the requested path (``None``: follow the env flag)."""
    if use_numba is None:
        use_numba = numba_requested()
    if use_numba and NumbaKernels is not None:
        return NumbaKernels
    return NumpyKernels


active = select()
