"""Vertex sets as machine-word bit masks.

A vertex set over V = {0, ..., n-1} (n <= 64) is a plain int whose bit i
records membership of vertex i.  Everything downstream (neighborhood rows,
dominating sets, cut sets, component masks) uses this representation, so the
helpers here are deliberately tiny and allocation-free.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_indices(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    """All k-subsets of ``mask``, in increasing bit-mask value order.

    Gosper's hack walks same-popcount integers in ascending order; each
    candidate pattern over popcount(mask) positions is re-expanded onto the
    actual bit positions of ``mask``.
    """
    positions = to_indices(mask)
    m = len(positions)
    if k < 0 or k > m:
        return
    if k == 0:
        yield 0
        return
    pattern = (1 << k) - 1
    limit = 1 << m
    while pattern < limit:
        sub = 0
        p = pattern
        while p:
            low = p & -p
            sub |= 1 << positions[low.bit_length() - 1]
            p ^= low
        yield sub
        # snoob: next integer with the same popcount
        c = pattern & -pattern
        r = pattern + c
        pattern = (((r ^ pattern) >> 2) // c) | r
