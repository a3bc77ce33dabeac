"""Profiles of representation varieties and the closed-form counting results.

A :class:`Profile` ``(N_d, ..., N_0)`` counts irreducible components of each
dimension.  It is always stored trimmed, so ``counts[0] >= 1`` except for the
distinguished empty-variety profile.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "AlgebraicGroup",
    "SL2",
    "PSL2",
    "Profile",
    "trim",
    "same_profile",
    "convolve",
    "free_group_profile",
    "cyclic_profile_sl2",
    "cyclic_profile_psl2",
    "cyclic_profile",
    "free_product_cyclic_profile_psl2",
    "torus_n4_psl2",
    "torus_n4_sl2",
    "pinched_dimension_psl2",
    "deficiency_lower_bound",
    "profile_below_bound",
    "profile_sequence",
]


class AlgebraicGroup(enum.Enum):
    SL2C = "SL2C"
    PSL2C = "PSL2C"

    @property
    def dim(self) -> int:
        return 3

    @property
    def center_order(self) -> int:
        return 2 if self is AlgebraicGroup.SL2C else 1

    @property
    def label(self) -> str:
        return "SL(2,C)" if self is AlgebraicGroup.SL2C else "PSL(2,C)"

    @classmethod
    def parse(cls, text: str) -> "AlgebraicGroup":
        key = text.strip().lower().replace("(", "").replace(")", "").replace(",", "")
        table = {"sl2": cls.SL2C, "sl2c": cls.SL2C, "psl2": cls.PSL2C, "psl2c": cls.PSL2C}
        try:
            return table[key]
        except KeyError:
            raise ValueError(f"unknown algebraic group {text!r}") from None


SL2 = AlgebraicGroup.SL2C
PSL2 = AlgebraicGroup.PSL2C


@dataclass(frozen=True)
class Profile:
    """Component counts ``counts[k] = N_{dim-k}``, read left to right as (N_d, ..., N_0)."""

    dim: int
    counts: tuple[int, ...]
    empty: bool = False

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if self.empty:
            if self.dim != 0 or counts != (0,):
                raise ValueError("the empty profile is dim 0 with counts (0,)")
            return
        if self.dim < 0 or len(counts) != self.dim + 1:
            raise ValueError(f"need {self.dim + 1} counts for dimension {self.dim}")
        if any(c < 0 for c in counts):
            raise ValueError("component counts must be nonnegative")
        if counts[0] < 1:
            raise ValueError("leading count must be >= 1; build with Profile.from_counts")

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "Profile":
        """Build from a dense sequence (N_n, ..., N_0), discarding leading zeros."""
        counts = [int(c) for c in counts]
        while counts and counts[0] == 0:
            counts.pop(0)
        if not counts:
            return cls.empty_variety()
        return cls(len(counts) - 1, tuple(counts))

    @classmethod
    def from_dims(cls, dims: Iterable[int]) -> "Profile":
        """Profile of a variety whose components have the given dimensions."""
        dims = list(dims)
        if not dims:
            return cls.empty_variety()
        top = max(dims)
        counts = [0] * (top + 1)
        for d in dims:
            counts[top - d] += 1
        return cls(top, tuple(counts))

    @classmethod
    def empty_variety(cls) -> "Profile":
        return cls(0, (0,), empty=True)

    @classmethod
    def point(cls) -> "Profile":
        return cls(0, (1,))

    def N(self, k: int) -> int:
        """Number of components of dimension exactly ``k``."""
        if self.empty or k < 0 or k > self.dim:
            return 0
        return self.counts[self.dim - k]

    def padded(self, n: int) -> tuple[int, ...]:
        """The dense tuple (N_n, ..., N_0) at ambient value ``n >= dim``."""
        if n < self.dim:
            raise ValueError(f"cannot express a dimension-{self.dim} profile at {n}")
        return (0,) * (n - self.dim) + self.counts

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_component_dim(self) -> int | None:
        nonzero = [self.dim - k for k, c in enumerate(self.counts) if c]
        return min(nonzero) if nonzero else None

    def to_json(self) -> dict:
        out = {"dim": self.dim, "counts": list(self.counts)}
        if self.empty:
            out["empty"] = True
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Profile":
        if data.get("empty"):
            return cls.empty_variety()
        p = cls(int(data["dim"]), tuple(data["counts"]))
        return p

    def __str__(self):
        if self.empty:
            return "empty"
        return "(" + ",".join(map(str, self.counts)) + f")_{self.dim}"


def trim(p: Profile, n: int) -> Profile:
    """Express ``p`` at ambient value ``n`` and discard the zeros left of the leading entry."""
    if n < p.dim:
        raise ValueError(f"n={n} is below the profile dimension {p.dim}")
    if p.empty:
        return p
    return Profile.from_counts(p.padded(n))


def same_profile(p: Profile, q: Profile) -> bool:
    return p.empty == q.empty and p.dim == q.dim and trim(p, p.dim).counts == trim(q, q.dim).counts


def convolve(p: Profile, q: Profile) -> Profile:
    """Profile of a product variety: N_k = sum over i + j = k of N_i(p) N_j(q).

    Components of a product are exactly products of components, so the top
    entry is ``N_{d1}(p) * N_{d2}(q)`` and lower entries convolve.
    """
    if p.empty or q.empty:
        raise ValueError("convolution of an empty profile")
    d = p.dim + q.dim
    out = [0] * (d + 1)
    for a, x in enumerate(p.counts):
        if x:
            for b, y in enumerate(q.counts):
                out[a + b] += x * y
    return Profile(d, tuple(out))


def free_group_profile(n: int) -> Profile:
    """R_A(F_n) = A^n: one component of dimension 3n."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    return Profile.from_dims([3 * n])


def _check_order(n: int):
    if n <= 0:
        raise ValueError(f"cyclic order must be positive, got {n}")


def cyclic_profile_sl2(n: int) -> Profile:
    _check_order(n)
    if n == 1:
        return Profile.point()
    if n % 2 == 0:
        return Profile.from_counts(((n - 2) // 2, 0, 2))
    return Profile.from_counts(((n - 1) // 2, 0, 1))


def cyclic_profile_psl2(n: int) -> Profile:
    _check_order(n)
    if n == 1:
        return Profile.point()
    if n % 2 == 0:
        return Profile.from_counts((n // 2, 0, 1))
    return Profile.from_counts(((n - 1) // 2, 0, 1))


def cyclic_profile(n: int, group: AlgebraicGroup) -> Profile:
    return cyclic_profile_sl2(n) if group is SL2 else cyclic_profile_psl2(n)


def free_product_cyclic_profile_psl2(m: int, n: int) -> Profile:
    """Closed form for R_PSL2(Z_m * Z_n), by the parities of ``m`` and ``n``."""
    if m < 2 or n < 2:
        raise ValueError("free factor orders must be >= 2")
    if m % 2 == 0 and n % 2 == 0:
        top, mid = m * n // 4, (m + n) // 2
    elif m % 2 == 1 and n % 2 == 0:
        top, mid = n * (m - 1) // 4, (m + n - 1) // 2
    elif m % 2 == 0 and n % 2 == 1:
        top, mid = m * (n - 1) // 4, (m + n - 1) // 2
    else:
        top, mid = (m - 1) * (n - 1) // 4, (m + n - 2) // 2
    return Profile(4, (top, 0, mid, 0, 1))


def _check_torus(p: int, t: int):
    if p < 2 or t < 2:
        raise ValueError("torus knot exponents must be >= 2")


def torus_n4_psl2(p: int, t: int) -> int:
    """Number of 4-dimensional components of R_PSL2(<x, y ; x^p = y^t>)."""
    _check_torus(p, t)
    if p % 2 and t % 2:
        return (p - 1) * (t - 1) // 4
    if p % 2 == 0 and t % 2:
        return p * (t - 1) // 4
    if p % 2 and t % 2 == 0:
        return t * (p - 1) // 4
    return p * t // 4


def torus_n4_sl2(p: int, t: int) -> int:
    """Number of 4-dimensional components of R_SL2(<x, y ; x^p = y^t>)."""
    _check_torus(p, t)
    if p % 2 == 0 and t % 2 == 0:
        return ((p - 2) * (t - 2) + p * t) // 4
    return (p - 1) * (t - 1) // 2


def pinched_dimension_psl2(n: int, p: int, dim_g_prime: int) -> tuple[int, bool]:
    """Dimension and reducibility of R_PSL2(<X, y ; W(X) = y^p>) with |X| = n.

    ``dim_g_prime`` is the dimension of R_PSL2(<X ; W = 1>); it must lie in
    [3(n-1), 3n) since W is nontrivial.
    """
    if n < 1:
        raise ValueError("need at least one generator in X")
    if p < 2:
        raise ValueError("root exponent p must be >= 2")
    if not 3 * (n - 1) <= dim_g_prime < 3 * n:
        raise ValueError(
            f"dim R(G') = {dim_g_prime} outside the admissible band [{3 * (n - 1)}, {3 * n})")
    dim = max(3 * n, dim_g_prime + 2)
    return dim, dim_g_prime + 2 >= 3 * n


def deficiency_lower_bound(n_gens: int, n_rels: int, group: AlgebraicGroup = SL2) -> int:
    """Lower bound on the dimension of every component, for deficiency >= 0."""
    d = n_gens - n_rels
    if d < 0:
        raise ValueError(f"negative deficiency {d}")
    return group.dim * d


def profile_below_bound(p: Profile, bound: int) -> bool:
    """True iff ``p`` has a component of dimension below ``bound``."""
    low = p.min_component_dim
    return low is not None and low < bound


def profile_sequence(profiles: Sequence[Profile]) -> Profile:
    """Convolve a sequence of profiles (product of varieties); empty product is a point."""
    out = Profile.point()
    for p in profiles:
        out = convolve(out, p)
    return out
