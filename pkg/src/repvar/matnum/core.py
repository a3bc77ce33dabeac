"""Floating-point word maps on SL(2,C)^n.

A point of SL(2,C)^n is a complex128 array of shape (n, 2, 2).  Tangent
directions at a matrix ``m`` are left translates ``m exp(t X)`` of the
trace-zero basis H, E, F; differentials are left-trivialized at the word value
and read in the same basis, so ranks are complex ranks.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import numpy as np

from ..words import FreeWord, central_flip_factor, exponent_profile
from . import _kernels

__all__ = [
    "Witness",
    "RankReport",
    "word_arrays",
    "as_point",
    "identity_point",
    "random_sl2",
    "random_point",
    "sl2_exp",
    "eval_word",
    "word_jacobian",
    "flip_check",
    "vminus_witness",
    "newton_solve",
    "solve_word",
    "fiber_rank",
    "odd_primes",
    "abelian_embedding",
    "abelian_embedding_exact",
    "psl2_canonical",
    "DEFAULT_FD_STEP",
    "DEFAULT_RANK_TOL",
    "DEFAULT_RESIDUAL_TOL",
]

DEFAULT_FD_STEP = 1e-6
DEFAULT_RANK_TOL = 1e-8
DEFAULT_RESIDUAL_TOL = 1e-10
NEAR_FIBER_TOL = 1e-8

I2 = np.eye(2, dtype=np.complex128)
SL2_BASIS = np.array([[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]], dtype=np.complex128)


def word_arrays(w: FreeWord) -> tuple[np.ndarray, np.ndarray]:
    if not w.letters:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    arr = np.asarray(w.letters, dtype=np.int64)
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])


def as_point(mats, check: bool = True) -> np.ndarray:
    point = np.ascontiguousarray(np.asarray(mats, dtype=np.complex128))
    if point.ndim == 2:
        point = point[None]
    if point.ndim != 3 or point.shape[1:] != (2, 2):
        raise ValueError(f"expected shape (n, 2, 2), got {point.shape}")
    if check and point.shape[0]:
        dets = np.linalg.det(point)
        if np.max(np.abs(dets - 1)) > 1e-8:
            raise ValueError("point has a matrix off SL(2,C)")
    return point


def identity_point(n: int) -> np.ndarray:
    return np.ascontiguousarray(np.broadcast_to(I2, (n, 2, 2)).copy())


def _renormalize(m: np.ndarray) -> np.ndarray:
    """Rescale by det^(-1/2), principal branch."""
    return m / np.sqrt(np.linalg.det(m))[..., None, None]


def sl2_exp(x: np.ndarray) -> np.ndarray:
    """exp of trace-zero 2x2 matrices via X^2 = -det(X) I."""
    x = np.asarray(x, dtype=np.complex128)
    q = -np.linalg.det(x)
    s = np.sqrt(q)
    small = np.abs(s) < 1e-6
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(small, 1 + q / 6 + q * q / 120, np.sinh(s) / np.where(small, 1, s))
    return np.cosh(s)[..., None, None] * I2 + ratio[..., None, None] * x


def random_sl2(rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    """U exp(A): U in SU(2), A trace-zero Hermitian with entries ~ ``scale``.

    Operator norm is bounded by exp(|A|), which keeps long words well-conditioned.
    """
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    q = q / np.sqrt(np.linalg.det(q))
    a = scale * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    a = (a + a.conj().T) / 2
    a -= np.trace(a) / 2 * I2
    return q @ sl2_exp(a)


def random_point(n: int, rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    return np.ascontiguousarray(np.stack([random_sl2(rng, scale) for _ in range(n)])
                                if n else np.zeros((0, 2, 2), dtype=np.complex128))


def _check_indices(w: FreeWord, n: int):
    if w.max_index() >= n:
        raise ValueError(
            f"word uses undeclared generator index {w.max_index()} (only {n} declared)")


def eval_word(w: FreeWord, point, kernels=None) -> np.ndarray:
    """Value of ``w`` at ``point``; inverses by adjugate, empty word gives I."""
    point = as_point(point, check=False)
    _check_indices(w, point.shape[0])
    gens, exps = word_arrays(w)
    return (kernels or _kernels.active).eval_word(gens, exps, point)


def word_jacobian(w: FreeWord, point, kernels=None) -> tuple[np.ndarray, np.ndarray]:
    """Exact left-trivialized differential of the word map: (value, 3 x 3n matrix)."""
    point = as_point(point, check=False)
    _check_indices(w, point.shape[0])
    gens, exps = word_arrays(w)
    return (kernels or _kernels.active).word_jacobian(gens, exps, point)


def flip_check(w: FreeWord, point, signs: Sequence[int]) -> float:
    """Max deviation between w(signs * point) and flip_factor * w(point)."""
    point = as_point(point, check=False)
    if len(signs) != point.shape[0]:
        raise ValueError("need one sign per generator")
    factor = central_flip_factor(w, signs)
    flipped = np.asarray(signs, dtype=np.float64)[:, None, None] * point
    return float(np.max(np.abs(eval_word(w, flipped) - factor * eval_word(w, point))))


# ---------------------------------------------------------------------------
# witnesses and solving


def _hexc(z: complex) -> list[str]:
    return [float(z.real).hex(), float(z.imag).hex()]


def point_to_json(point: np.ndarray) -> list:
    return [[[_hexc(z) for z in row] for row in m] for m in point]


def point_from_json(data) -> np.ndarray:
    return np.array([[[complex(float.fromhex(a), float.fromhex(b)) for a, b in row]
                      for row in m] for m in data], dtype=np.complex128)


@dataclass
class Witness:
    """A point with w(point) = target * I, reported only after its residual is checked."""

    point: np.ndarray
    target: int
    residual: float
    method: str
    iterations: int = 0
    seed: int | None = None
    tolerance: float = DEFAULT_RESIDUAL_TOL

    def to_json(self) -> dict:
        return {
            "target": "I" if self.target == 1 else "-I",
            "method": self.method,
            "residual": float(self.residual).hex(),
            "iterations": self.iterations,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "point": point_to_json(self.point),
        }


def _residual(w: FreeWord, point: np.ndarray, target: int) -> float:
    return float(np.max(np.abs(eval_word(w, point) - target * I2)))


QUAT_I = np.array([[1j, 0], [0, -1j]], dtype=np.complex128)
QUAT_J = np.array([[0, 1], [-1, 0]], dtype=np.complex128)


def _constructive_witness(w: FreeWord, n: int, tol: float) -> Witness | None:
    sums = exponent_profile(w, n).sums
    # even nonzero exponent sum s on x_i: x_i -> m with m^s = -I, all others -> I
    for i, s in enumerate(sums):
        if s and s % 2 == 0:
            phase = np.exp(1j * np.pi / abs(s))
            point = identity_point(n)
            point[i] = np.diag([phase, 1 / phase])
            res = _residual(w, point, -1)
            if res <= min(tol, 1e-12):
                return Witness(point, -1, res, "even-sum-root", tolerance=tol)
    # anticommuting trace-zero pair on two generators, all others -> I
    used = sorted({i for i, _ in w.letters})
    for a, b in permutations(used, 2):
        point = identity_point(n)
        point[a], point[b] = QUAT_I, QUAT_J
        res = _residual(w, point, -1)
        if res <= tol:
            return Witness(point, -1, res, "anticommuting-pair", tolerance=tol)
    return None


def newton_solve(w: FreeWord, n: int, target: int, seed, max_iter: int = 60,
                 tol: float = DEFAULT_RESIDUAL_TOL, max_step: float = 0.5) -> Witness | None:
    """Gauss-Newton for w(m) = target * I from the starting point ``seed``.

    Each step solves the linearized system in left-translated trace-zero
    coordinates (minimum-norm least squares), moves m_i -> m_i (I + Y_i), and
    retracts by det^(-1/2).  Returns None when it does not converge, when the
    linear system is singular, or when a step leaves the principal branch.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if target not in (1, -1):
        raise ValueError("target must be +1 or -1")
    _check_indices(w, n)
    point = as_point(seed).copy()
    if point.shape[0] != n:
        raise ValueError(f"seed has {point.shape[0]} matrices, expected {n}")
    for it in range(max_iter + 1):
        value, jac = word_jacobian(w, point)
        m = target * value
        r = m - I2
        res = float(np.max(np.abs(r)))
        if res < tol:
            final = _residual(w, point, target)
            if final < tol:
                return Witness(point, target, final, "newton", iterations=it, tolerance=tol)
        if it == max_iter:
            break
        # d(M) = M Y with Y = sum_k J[k] . delta in the H, E, F basis
        basis = (m @ SL2_BASIS).reshape(3, 4).T
        system = basis @ jac
        if not np.all(np.isfinite(system)) or np.max(np.abs(system)) < 1e-14:
            return None
        # rank may drop on the solution set itself (e.g. x^2 = -I); cut small modes
        delta = np.linalg.lstsq(system, -r.reshape(4), rcond=1e-10)[0]
        step = np.max(np.abs(delta))
        if step > max_step:
            delta *= max_step / step
        ys = np.einsum("gk,kab->gab", delta.reshape(n, 3), SL2_BASIS)
        moved = point @ (I2 + ys)
        dets = np.linalg.det(moved)
        if np.any(dets.real <= 0) or not np.all(np.isfinite(dets)):
            return None
        point = np.ascontiguousarray(_renormalize(moved))
    return None


def solve_word(w: FreeWord, n: int, target: int, seed: int = 0, restarts: int = 20,
               max_iter: int = 60, tol: float = DEFAULT_RESIDUAL_TOL,
               scale: float = 0.5) -> Witness | None:
    """Newton from ``restarts`` random starting points drawn from ``seed``."""
    _check_indices(w, n)
    rng = np.random.default_rng(seed)
    for attempt in range(restarts):
        wit = newton_solve(w, n, target, random_point(n, rng, scale), max_iter, tol)
        if wit is not None:
            wit.seed = seed
            wit.method = f"newton(restart={attempt})"
            return wit
    return None


def vminus_witness(w: FreeWord, n: int, search: bool = True, seed: int = 0,
                   restarts: int = 20, tol: float = DEFAULT_RESIDUAL_TOL) -> Witness | None:
    """A point of V_-1 = {m : w(m) = -I}, or None.

    Constructive routes first (a root of -I on an even-sum generator; an
    anticommuting pair on two generators), then numerical search if allowed.
    """
    _check_indices(w, n)
    if w.is_trivial():
        return None
    wit = _constructive_witness(w, n, tol)
    if wit is None and search:
        wit = solve_word(w, n, -1, seed=seed, restarts=restarts, tol=tol)
    return wit


# ---------------------------------------------------------------------------
# local dimension


@dataclass
class RankReport:
    singular_values: list[float]
    rank: int
    fiber_dim_estimate: int
    residual: float
    fd_step: float = DEFAULT_FD_STEP
    rank_tol: float = DEFAULT_RANK_TOL
    degenerate: bool = False
    seed: int | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "singular_values": [float(s).hex() for s in self.singular_values],
            "rank": self.rank,
            "fiber_dim_estimate": self.fiber_dim_estimate,
            "residual": float(self.residual).hex(),
            "fd_step": self.fd_step,
            "rank_tol": self.rank_tol,
            "degenerate": self.degenerate,
            "seed": self.seed,
        }


def fd_jacobian(w: FreeWord, point, fd_step: float = DEFAULT_FD_STEP) -> tuple[np.ndarray, np.ndarray]:
    """Central-difference left-trivialized differential, shape (3, 3n)."""
    point = as_point(point, check=False)
    n = point.shape[0]
    value = eval_word(w, point)
    value_inv = np.array([[value[1, 1], -value[0, 1]], [-value[1, 0], value[0, 0]]])
    plus = sl2_exp(fd_step * SL2_BASIS)
    minus = sl2_exp(-fd_step * SL2_BASIS)
    jac = np.zeros((3, 3 * n), dtype=np.complex128)
    for g in range(n):
        for k in range(3):
            p_plus = point.copy()
            p_plus[g] = point[g] @ plus[k]
            p_minus = point.copy()
            p_minus[g] = point[g] @ minus[k]
            d = (eval_word(w, p_plus) - eval_word(w, p_minus)) / (2 * fd_step)
            y = value_inv @ d
            jac[:, 3 * g + k] = (y[0, 0], y[0, 1], y[1, 0])
    return value, jac


def fiber_rank(w: FreeWord, point, fd_step: float = DEFAULT_FD_STEP,
               rank_tol: float = DEFAULT_RANK_TOL, near_tol: float = NEAR_FIBER_TOL,
               seed: int | None = None) -> RankReport:
    """Local dimension estimate of the fiber of w over +-I through ``point``."""
    point = as_point(point)
    n = point.shape[0]
    value, jac = fd_jacobian(w, point, fd_step)
    residual = min(float(np.max(np.abs(value - I2))), float(np.max(np.abs(value + I2))))
    if residual >= near_tol:
        raise ValueError(f"point is not near a fiber over +-I (residual {residual:.3g})")
    sv = np.linalg.svd(jac, compute_uv=False)
    smax = float(sv[0]) if len(sv) else 0.0
    degenerate = smax < 1e-12
    if degenerate:
        warnings.warn("degenerate differential: largest singular value below 1e-12",
                      RuntimeWarning, stacklevel=2)
        rank = 0
    else:
        rank = int(np.sum(sv > rank_tol * smax))
    return RankReport([float(s) for s in sv], rank, 3 * n - rank, residual,
                      fd_step, rank_tol, degenerate, seed)


# ---------------------------------------------------------------------------
# explicit constructions


def odd_primes(n: int) -> list[int]:
    out: list[int] = []
    k = 3
    while len(out) < n:
        if all(k % p for p in out if p * p <= k):
            out.append(k)
        k += 2
    return out


def abelian_embedding_exact(n: int) -> list[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
    """diag(p, 1/p) over the first ``n`` odd primes, as exact rationals."""
    return [((Fraction(p), Fraction(0)), (Fraction(0), Fraction(1, p))) for p in odd_primes(n)]


def abelian_embedding(n: int) -> np.ndarray:
    """Floating-point images of Z^n -> SL(2,C): pairwise commuting, distinct diagonals.

    ``p * (1/p)`` is not exactly 1.0 in binary floating point for every prime
    (103 is the first); use :func:`abelian_embedding_exact` for exact determinants.
    """
    if n == 0:
        return np.zeros((0, 2, 2), dtype=np.complex128)
    return np.array([[[p, 0], [0, 1 / p]] for p in odd_primes(n)], dtype=np.complex128)


def psl2_canonical(m, tol: float = 1e-9) -> np.ndarray:
    """Representative of {m, -m}: first entry (row-major) with modulus > tol has
    positive real part, or zero real part and positive imaginary part."""
    m = np.asarray(m, dtype=np.complex128)
    flat = m.reshape(-1)
    for z in flat:
        if abs(z) > tol:
            if abs(z.real) > tol * 1e-3:
                return m.copy() if z.real > 0 else -m
            return m.copy() if z.imag > 0 else -m
    raise ValueError("zero matrix has no PSL(2,C) class")
