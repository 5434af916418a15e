"""Partition and composition enumerators used by the coefficient formulas.

All enumeration orders are deterministic: partitions are produced as
non-decreasing part tuples in lexicographic order, compositions by length and
then lexicographically.  Tests count them against an independent dynamic
program, so the generators here stay simple and recursive.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator


def partitions(n: int, parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-decreasing tuples; optionally exactly ``parts`` parts."""
    assert n >= 0
    if parts is None:
        yield from _parts_any(n, 1)
    else:
        yield from _parts_exact(n, parts, 1)


def _parts_any(n: int, lo: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(lo, n + 1):
        for rest in _parts_any(n - first, first):
            yield (first,) + rest


def _parts_exact(n: int, m: int, lo: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(lo, n // m + 1):
        for rest in _parts_exact(n - first, m - 1, first):
            yield (first,) + rest


def compositions(n: int, parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive ints summing to n, by length then lexicographic."""
    assert n >= 0
    if n == 0:
        if parts in (None, 0):
            yield ()
        return
    lengths = range(1, n + 1) if parts is None else (parts,)
    for m in lengths:
        yield from _comps_exact(n, m)


def _comps_exact(n: int, m: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        if n == 0:
            yield ()
        return
    if m == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - m + 2):
        for rest in _comps_exact(n - first, m - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class OddPartition:
    """A partition of n into odd parts, stored by multiplicity.

    ``mults[i]`` is the multiplicity of the part 2i+1.  The derived statistics
    q (number of parts) and k (= sum of m_i*(i+1) = (n+q)/2) are the ones the
    coefficient formulas consume.
    """

    mults: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(m * (2 * i + 1) for i, m in enumerate(self.mults))

    @property
    def q(self) -> int:
        return sum(self.mults)

    @property
    def k(self) -> int:
        return sum(m * (i + 1) for i, m in enumerate(self.mults))

    def parts(self) -> tuple[int, ...]:
        out: list[int] = []
        for i, m in enumerate(self.mults):
            out.extend([2 * i + 1] * m)
        return tuple(out)


def odd_partitions(n: int, parts: int | None = None) -> Iterator[OddPartition]:
    """Partitions of n into odd parts, optionally into exactly ``parts`` parts.

    Multiplicity tuples always have length 1 + (n-1)//2 for n >= 1 so that
    index i always addresses the part 2i+1.
    """
    assert n >= 0
    if n == 0:
        if parts in (None, 0):
            yield OddPartition(())
        return
    width = (n - 1) // 2 + 1
    for tup in partitions(n, parts):
        if all(p % 2 == 1 for p in tup):
            mults = [0] * width
            for p in tup:
                mults[(p - 1) // 2] += 1
            yield OddPartition(tuple(mults))


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
