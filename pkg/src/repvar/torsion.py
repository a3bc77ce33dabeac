"""Brute-force enumeration of conjugacy classes of solutions to x^n = +-I.

Every solution of x^n = +-I in SL(2,C) is diagonalizable.  A non-central one
is conjugate to ``diag(e^{p pi i/n}, e^{-p pi i/n})`` with ``0 < p < 2n``,
``p != n``; it solves x^n = I when p is even and x^n = -I when p is odd.
Classes are tracked by the integer ``p`` only, so all counting is exact.

Identifications, applied by union-find over exponents:

* SL(2,C) conjugacy swaps the eigenvalues: ``p ~ 2n - p``;
* in PSL(2,C), ``diag(p, -p) = -diag(p - n, n - p)`` adds ``p ~ |p - n|``.

Central solutions are the points +-I (exponents 0 and n); they merge to one
point in PSL(2,C).  Non-central classes are 2-dimensional, central ones are
points.  This module deliberately does not import the closed forms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .profiles import PSL2, SL2, AlgebraicGroup, Profile

__all__ = [
    "ClassKind",
    "ClassDescriptor",
    "enumerate_sl2",
    "enumerate_psl2",
    "enumerate_classes",
    "profile_from_classes",
    "two_dim_count",
    "format_classes",
]


class ClassKind(enum.Enum):
    CENTRAL = "CentralPoint"
    TWO_DIM = "TwoDimClass"


@dataclass(frozen=True)
class ClassDescriptor:
    group: AlgebraicGroup
    n: int
    kind: ClassKind
    exponent: int
    """Eigenvalue exponent p; 0 for +I and n for -I on central points."""

    @property
    def dim(self) -> int:
        return 2 if self.kind is ClassKind.TWO_DIM else 0

    @property
    def central_value(self) -> int | None:
        """+1 for I, -1 for -I, None for non-central classes."""
        if self.kind is not ClassKind.CENTRAL:
            return None
        return 1 if self.exponent == 0 else -1

    def sort_key(self):
        return (self.group.value, self.n, self.kind is ClassKind.TWO_DIM, self.exponent)


class _UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller exponent becomes the canonical representative
            lo, hi = min(ra, rb), max(ra, rb)
            self.parent[hi] = lo

    def roots(self) -> list[int]:
        return sorted({self.find(x) for x in self.parent})


def _check(n: int):
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"order must be a positive integer, got {n!r}")


def _noncentral_exponents(n: int, target: int | None) -> list[int]:
    exps = [p for p in range(1, 2 * n) if p != n]
    if target == 1:
        return [p for p in exps if p % 2 == 0]
    if target == -1:
        return [p for p in exps if p % 2 == 1]
    return exps


def enumerate_sl2(n: int, target: int = 1) -> list[ClassDescriptor]:
    """Conjugacy classes of {m in SL(2,C) : m^n = target*I}, target in {+1, -1}."""
    _check(n)
    if target not in (1, -1):
        raise ValueError("target must be +1 (I) or -1 (-I)")
    out: list[ClassDescriptor] = []
    # (+-I)^n = target
    if target == 1:
        out.append(ClassDescriptor(SL2, n, ClassKind.CENTRAL, 0))
        if n % 2 == 0:
            out.append(ClassDescriptor(SL2, n, ClassKind.CENTRAL, n))
    elif n % 2 == 1:
        out.append(ClassDescriptor(SL2, n, ClassKind.CENTRAL, n))
    exps = _noncentral_exponents(n, target)
    uf = _UnionFind(exps)
    for p in exps:
        uf.union(p, 2 * n - p)
    out.extend(ClassDescriptor(SL2, n, ClassKind.TWO_DIM, p) for p in uf.roots())
    return sorted(out, key=ClassDescriptor.sort_key)


def enumerate_psl2(n: int) -> list[ClassDescriptor]:
    """Conjugacy classes of {[m] in PSL(2,C) : [m]^n = 1}, projected from m^n = +-I."""
    _check(n)
    lifted = enumerate_sl2(n, 1) + enumerate_sl2(n, -1)
    exps = [c.exponent for c in lifted if c.kind is ClassKind.TWO_DIM]
    uf = _UnionFind(_noncentral_exponents(n, None))
    for p in uf.parent:
        uf.union(p, 2 * n - p)
        uf.union(p, abs(p - n))
    reps = sorted({uf.find(p) for p in exps})
    out = [ClassDescriptor(PSL2, n, ClassKind.CENTRAL, 0)]
    out.extend(ClassDescriptor(PSL2, n, ClassKind.TWO_DIM, p) for p in reps)
    return out


def enumerate_classes(n: int, group: AlgebraicGroup) -> list[ClassDescriptor]:
    """All classes of R_A(Z_n): solutions of x^n = 1 in ``group``."""
    return enumerate_sl2(n, 1) if group is SL2 else enumerate_psl2(n)


def profile_from_classes(classes: Iterable[ClassDescriptor]) -> Profile:
    return Profile.from_dims(c.dim for c in classes)


def two_dim_count(n: int, target: int = 1, group: AlgebraicGroup = SL2) -> int:
    """Number of 2-dimensional classes of x^n = target*I (``target`` ignored for PSL2)."""
    classes = enumerate_sl2(n, target) if group is SL2 else enumerate_psl2(n)
    return sum(1 for c in classes if c.kind is ClassKind.TWO_DIM)


def format_classes(classes: Iterable[ClassDescriptor]) -> str:
    """One line per class: ``group n kind exponent dim``."""
    return "\n".join(f"{c.group.value} {c.n} {c.kind.value} {c.exponent} {c.dim}"
                     for c in classes)
