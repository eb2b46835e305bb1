"""Structure-preserving maps: complementation, block reversal, the descent-cut
correspondence between marked permutations and ordered partitions, and the
block readings that tie partition statistics to permutation statistics."""
from __future__ import annotations

from typing import Sequence

from .combinat import Blocks, MarkedPermutation, as_blocks, descents
from .stats import stat


class LengthMismatch(ValueError):
    """Word length does not match the number of descents."""


def complement(pi) -> Blocks:
    """Replace each letter i by n+1-i, keeping the block order."""
    blocks = as_blocks(pi)
    n = sum(len(b) for b in blocks)
    return tuple(tuple(sorted(n + 1 - x for x in b)) for b in blocks)


def reverse_blocks(pi) -> Blocks:
    """Reverse the order of the blocks."""
    return tuple(reversed(as_blocks(pi)))


def descent_blocks(p: Sequence[int]) -> Blocks:
    """The maximal contiguous decreasing runs of p, as an ordered partition."""
    return cut(p, (0,) * len(descents(p)))


def cut(p: Sequence[int], w: Sequence[int]) -> Blocks:
    """Cut p at every non-descent and at every descent marked with a 1 in w.

    w marks the descents of p in left-to-right order; its length must equal
    the number of descents. A permutation with i descent blocks and a word
    with j ones yields an ordered partition with i+j blocks.
    """
    p = tuple(p)
    des = descents(p)
    w = tuple(w)
    if len(w) != len(des):
        raise LengthMismatch(
            f"word length {len(w)} != number of descents {len(des)}"
        )
    if any(b not in (0, 1) for b in w):
        raise ValueError("word must be over {0,1}")
    marked = {pos for pos, bit in zip(des, w) if bit}
    desset = set(des)
    blocks: list[tuple[int, ...]] = []
    start = 0
    for pos in range(1, len(p) + 1):
        if pos == len(p) or pos not in desset or pos in marked:
            blocks.append(tuple(sorted(p[start:pos])))
            start = pos
    return tuple(blocks)


def uncut(pi) -> MarkedPermutation:
    """The inverse reading: write each block decreasingly, concatenate, and
    mark exactly those descents that fall on block boundaries."""
    blocks = as_blocks(pi)
    p = tuple(x for b in blocks for x in reversed(b))
    boundaries = set()
    pos = 0
    for b in blocks[:-1]:
        pos += len(b)
        boundaries.add(pos)
    word = tuple(1 if d in boundaries else 0 for d in descents(p))
    return MarkedPermutation(p, word)


def blocks_to_perm_decreasing(pi) -> tuple[int, ...]:
    """Concatenate the blocks, each written in decreasing order."""
    blocks = as_blocks(pi)
    return tuple(x for b in blocks for x in reversed(b))


def reverse_cut_mil(p: Sequence[int]) -> Blocks:
    """Reverse p and cut at each non-descent; the result's block-index weight
    statistic equals maj of the original permutation."""
    return descent_blocks(tuple(reversed(tuple(p))))


def perm_mak(p: Sequence[int]) -> int:
    """mak of a permutation: non-closer sum + straddling-block count of its
    descent-block partition."""
    db = descent_blocks(p)
    return stat(db, "ncl") + stat(db, "rsb")
