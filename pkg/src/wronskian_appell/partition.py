"""Integer partitions, Young's lattice and rim hooks.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers. Zero parts are stripped on construction, so ``Partition([2, 1, 0])``
and ``Partition([2, 1])`` are the same object for hashing and equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in partition: {parts}")
        parts = [p for p in parts if p]
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> Partition:
        # caller guarantees positive, weakly decreasing parts
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read ``"5,3,2"``; the empty string and ``"0"`` give the empty partition."""
        text = text.strip()
        if text in ("", "0", "[]", "()"):
            return cls()
        try:
            return cls(int(t) for t in text.strip("[]()").split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}: {exc}") from None

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part lookup, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def contains(self, other: Partition) -> bool:
        """True when the diagram of ``other`` sits inside this one."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


@dataclass(frozen=True, order=True)
class RimHook:
    outer: Partition
    inner: Partition
    size: int
    height: int

    @property
    def sign(self) -> int:
        return -1 if self.height % 2 else 1


EMPTY = Partition()


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for row in lam if row >= j) for j in range(1, lam[0] + 1))


def covers_down(lam: Partition) -> list[Partition]:
    """Partitions obtained by removing one corner cell, sorted."""
    out = []
    for i, row in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if row > below:
            parts = list(lam)
            parts[i] -= 1
            out.append(Partition(parts))
    return sorted(out, reverse=True)


def covers_up(lam: Partition) -> list[Partition]:
    """Partitions obtained by adding one cell, sorted."""
    out = []
    for i in range(len(lam) + 1):
        above = lam[i - 1] if i > 0 else None
        row = lam[i] if i < len(lam) else 0
        if above is None or row < above:
            parts = list(lam) + [0]
            parts[i] += 1
            out.append(Partition(parts))
    return sorted(out, reverse=True)


def hook_length(lam: Partition, i: int, j: int) -> int:
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell not in diagram: ({i}, {j}) for {lam!r}")
    return lam[i - 1] - j + conjugate(lam).part(j) - i + 1


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.cells()]


def hook_product(lam: Partition) -> int:
    return prod(hook_lengths(lam))


def degree_vector(lam: Partition) -> tuple[int, ...]:
    """``(λ_r, λ_{r-1} + 1, ..., λ_1 + r - 1)`` for a partition of length r."""
    r = len(lam)
    return tuple(lam[r - i] + i - 1 for i in range(1, r + 1))


def vandermonde(ns: Iterable[int]) -> int:
    ns = list(ns)
    return prod(ns[j] - ns[i] for i in range(len(ns)) for j in range(i + 1, len(ns)))


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    return factorial(lam.size()) // hook_product(lam)


@cache
def skew_syt_count(lam: Partition, mu: Partition = EMPTY) -> int:
    """Number of saturated chains from ``mu`` up to ``lam`` in Young's lattice."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return 0
    if lam == mu:
        return 1
    return sum(skew_syt_count(nu, mu) for nu in covers_down(lam) if nu.contains(mu))


def _rim_hook_at(lam: Partition, conj: Partition, i: int, j: int) -> RimHook:
    # Hook whose highest row is i and leftmost column is j; it ends in row conj_j.
    bottom = conj[j - 1]
    parts = list(lam)
    for k in range(i, bottom):
        parts[k - 1] = lam[k] - 1
    parts[bottom - 1] = j - 1
    inner = Partition(parts)
    return RimHook(lam, inner, lam.size() - inner.size(), bottom - i)


def rim_hooks_down(lam: Partition, k: int) -> list[RimHook]:
    """All rim hooks ``lam/mu`` of size k, one per cell of hook length k."""
    conj = conjugate(lam)
    hooks = [
        _rim_hook_at(lam, conj, i, j)
        for i, j in lam.cells()
        if lam[i - 1] - j + conj[j - 1] - i + 1 == k
    ]
    return sorted(hooks, key=lambda h: h.inner, reverse=True)


def _beta_set(lam: Partition, length: int) -> list[int]:
    return [lam.part(i) + length - i for i in range(1, length + 1)]


def _from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return Partition(b - (n - i) for i, b in enumerate(beta, start=1))


def rim_hooks_up(lam: Partition, k: int, cap: int | None = None) -> list[RimHook]:
    """All rim hooks ``gamma/lam`` of size k.

    Works on a beta set with ``len(lam) + k`` beads: adding a rim hook of size k
    moves one bead k steps up into an empty slot, and the height is the number of
    beads jumped over. ``cap`` is accepted for API symmetry and never truncates.
    """
    if k < 1:
        raise ValueError("rim hook size must be positive")
    beta = _beta_set(lam, len(lam) + k)
    occupied = set(beta)
    hooks = []
    for b in beta:
        if b + k in occupied:
            continue
        height = sum(1 for c in beta if b < c < b + k)
        gamma = _from_beta([c for c in beta if c != b] + [b + k])
        hooks.append(RimHook(gamma, lam, k, height))
    return sorted(hooks, key=lambda h: h.outer, reverse=True)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions_of(m)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """Every mu with mu <= lam in Young's lattice (including the empty one and lam)."""

    def gen(i: int, bound: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        for v in range(min(bound, lam[i]), -1, -1):
            if v == 0:
                yield ()
                continue
            for rest in gen(i + 1, v):
                yield (v,) + rest

    for parts in gen(0, lam[0] if lam else 0):
        yield Partition(parts)
