"""Deterministic generators, counters and text formats for the combinatorial objects.

Permutations are tuples of 1..n in one-line notation. Partitions are tuples of
blocks; each block is an ascending tuple of letters. Set partitions (unordered)
are ordered-partition tuples in standard order, i.e. blocks sorted by their
least element. Generators are plain generator functions: calling them again
restarts the stream, and every stream has a fixed deterministic order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

Blocks = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrderedSetPartition:
    """Disjoint nonempty blocks covering {1..n}, in a significant order."""

    blocks: Blocks

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> OrderedSetPartition:
        normalized = tuple(tuple(sorted(b)) for b in blocks)
        validate_blocks(normalized)
        return cls(normalized)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @cached_property
    def openers(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)

    @cached_property
    def closers(self) -> tuple[int, ...]:
        return tuple(b[-1] for b in self.blocks)

    @cached_property
    def block_of(self) -> dict[int, int]:
        """letter -> 1-based index of its block."""
        out: dict[int, int] = {}
        for j, b in enumerate(self.blocks, 1):
            for x in b:
                out[x] = j
        return out

    def opener(self, j: int) -> int:
        return self.blocks[j - 1][0]

    def closer(self, j: int) -> int:
        return self.blocks[j - 1][-1]

    @property
    def is_standard(self) -> bool:
        ops = self.openers
        return all(ops[i] < ops[i + 1] for i in range(len(ops) - 1))

    def standardized(self) -> SetPartition:
        """Forget the block order: sort blocks by opener."""
        return SetPartition(tuple(sorted(self.blocks, key=lambda b: b[0])))

    def __str__(self) -> str:
        return format_partition(self.blocks)


@dataclass(frozen=True)
class SetPartition(OrderedSetPartition):
    """An unordered partition, always written in standard order."""

    def __post_init__(self):
        if not self.is_standard:
            raise ValueError("SetPartition blocks must be in standard order")


@dataclass(frozen=True)
class MarkedPermutation:
    """A permutation together with a binary word marking a subset of its descents."""

    perm: tuple[int, ...]
    word: tuple[int, ...]

    def __post_init__(self):
        d = len(descents(self.perm))
        if len(self.word) != d:
            raise ValueError(f"word length {len(self.word)} != number of descents {d}")
        if any(b not in (0, 1) for b in self.word):
            raise ValueError("word must be over {0,1}")


def validate_blocks(blocks: Blocks, n: int | None = None) -> None:
    """Check disjoint nonempty ascending blocks covering {1..n}."""
    seen: set[int] = set()
    for b in blocks:
        if not b:
            raise ValueError("empty block")
        if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
            raise ValueError("block letters must be strictly ascending")
        for x in b:
            if x in seen:
                raise ValueError(f"letter {x} appears twice")
            seen.add(x)
    total = sum(len(b) for b in blocks)
    if n is None:
        n = total
    if total != n or (seen and (min(seen) != 1 or max(seen) != n)):
        raise ValueError(f"blocks must cover 1..{n} exactly")


def as_blocks(pi) -> Blocks:
    """Accept an OrderedSetPartition or a raw block sequence."""
    if isinstance(pi, OrderedSetPartition):
        return pi.blocks
    return tuple(tuple(b) for b in pi)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def descents(p: Sequence[int]) -> tuple[int, ...]:
    """1-based descent positions of a one-line permutation."""
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def gen_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def gen_permutations_by_des(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Permutations of 1..n with exactly d descents, lexicographic."""
    return (p for p in gen_permutations(n) if len(descents(p)) == d)


# ---------------------------------------------------------------------------
# set partitions via restricted growth functions
# ---------------------------------------------------------------------------


def gen_rgfs(n: int, k: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Restricted growth functions of length n using exactly the values 0..k-1,
    lexicographic, optionally restricted to a fixed prefix.

    An RGF satisfies a_1 = 0 and a_{i+1} <= 1 + max(a_1..a_i).
    """
    if k < 0 or n < 0:
        return
    if n == 0:
        if k == 0 and not prefix:
            yield ()
        return
    if k == 0 or k > n:
        return
    prefix = tuple(prefix)
    if len(prefix) > n:
        return
    mx = -1
    for i, v in enumerate(prefix):
        if v > mx + 1 or v > k - 1 or (i == 0 and v != 0):
            return
        mx = max(mx, v)

    word = list(prefix) + [0] * (n - len(prefix))

    def rec(i: int, mx: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if mx == k - 1:
                yield tuple(word)
            return
        # still need (k-1-mx) unused values in the remaining (n-i) slots
        hi = min(mx + 1, k - 1)
        for v in range(hi + 1):
            nmx = mx if v <= mx else v
            if (k - 1 - nmx) <= (n - i - 1):
                word[i] = v
                yield from rec(i + 1, nmx)

    yield from rec(len(prefix), mx)


def rgf_to_blocks(rgf: Sequence[int], k: int) -> Blocks:
    blocks: list[list[int]] = [[] for _ in range(k)]
    for i, v in enumerate(rgf, 1):
        blocks[v].append(i)
    return tuple(tuple(b) for b in blocks)


def rgf_prefixes(n: int, k: int, m: int) -> list[tuple[int, ...]]:
    """All length-m prefixes of valid RGFs for (n, k); used to shard sweeps."""
    m = max(0, min(m, n))
    if m == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def rec(word: list[int], mx: int) -> None:
        i = len(word)
        if i == m:
            # feasible iff the remaining slots can still introduce the missing values
            if (k - 1 - mx) <= (n - m):
                t = tuple(word)
                if t not in seen:
                    seen.add(t)
                    out.append(t)
            return
        hi = min(mx + 1, k - 1)
        for v in range(hi + 1):
            word.append(v)
            rec(word, max(mx, v))
            word.pop()

    if k >= 1 and k <= n:
        rec([], -1)
    return out


def gen_set_partitions(n: int, k: int, prefix: Sequence[int] = ()) -> Iterator[Blocks]:
    """Partitions of {1..n} into k blocks, standard order, RGF-lexicographic."""
    for rgf in gen_rgfs(n, k, prefix):
        yield rgf_to_blocks(rgf, k)


def gen_ordered_partitions(n: int, k: int) -> Iterator[Blocks]:
    """Ordered partitions of {1..n} with k blocks: each set partition in RGF
    order, its block arrangements in lexicographic order of the index permutation."""
    if n == 0 and k == 0:
        yield ()
        return
    for blocks in gen_set_partitions(n, k):
        for arrangement in itertools.permutations(blocks):
            yield arrangement


# ---------------------------------------------------------------------------
# binary words
# ---------------------------------------------------------------------------


def gen_binary_words(length: int, ones: int) -> Iterator[tuple[int, ...]]:
    """Binary words of a given length and popcount, lexicographic."""
    if ones < 0 or ones > length:
        return
    word = [0] * length

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == length:
            yield tuple(word)
            return
        slots = length - i
        if remaining < slots:  # can still place a 0
            word[i] = 0
            yield from rec(i + 1, remaining)
        if remaining > 0:
            word[i] = 1
            yield from rec(i + 1, remaining - 1)

    yield from rec(0, ones)


def word_inversions(w: Sequence[int]) -> int:
    """Number of (1, 0) pairs in order: inv on binary words."""
    inv = 0
    ones = 0
    for b in w:
        if b:
            ones += 1
        else:
            inv += ones
    return inv


# ---------------------------------------------------------------------------
# counters
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind."""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


@lru_cache(maxsize=None)
def eulerian(n: int, d: int) -> int:
    """Number of permutations of 1..n with d descents."""
    if n == 0:
        return 1 if d == 0 else 0
    if d < 0 or d >= n:
        return 0
    return (d + 1) * eulerian(n - 1, d) + (n - d) * eulerian(n - 1, d - 1)


def fubini(n: int) -> int:
    """Total number of ordered partitions of {1..n}."""
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1)) if n else 1


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def format_partition(blocks, compact: bool = False) -> str:
    """Canonical text: blocks joined by "/", letters comma-separated ascending.

    The compact digit form ("14-238-5-67") is only valid for n <= 9.
    """
    blocks = as_blocks(blocks)
    if compact:
        n = sum(len(b) for b in blocks)
        if n > 9:
            raise ValueError("compact partition form requires n <= 9")
        return "-".join("".join(str(x) for x in b) for b in blocks)
    return "/".join(",".join(str(x) for x in b) for b in blocks)


def parse_partition(text: str) -> OrderedSetPartition:
    """Parse either the canonical "1,4/2,3,8/5/6,7" or compact "14-238-5-67" form."""
    text = text.strip()
    if not text:
        raise ValueError("empty partition text")
    if "/" in text or "," in text:
        blocks = []
        for part in text.split("/"):
            if not part:
                raise ValueError("empty block in partition text")
            try:
                blocks.append(tuple(sorted(int(x) for x in part.split(","))))
            except ValueError as exc:
                raise ValueError(f"bad partition block {part!r}") from exc
    else:
        if not all(ch.isdigit() or ch == "-" for ch in text):
            raise ValueError(f"bad partition text {text!r}")
        blocks = []
        for part in text.split("-"):
            if not part:
                raise ValueError("empty block in partition text")
            letters = [int(ch) for ch in part]
            if 0 in letters:
                raise ValueError("compact partition form uses digits 1..9")
            blocks.append(tuple(sorted(letters)))
    return OrderedSetPartition.from_blocks(blocks)


def format_permutation(p: Sequence[int], compact: bool = False) -> str:
    if compact:
        if len(p) > 9:
            raise ValueError("compact permutation form requires n <= 9")
        return "".join(str(x) for x in p)
    return ",".join(str(x) for x in p)


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse "5,1,7,4,2,6,8,3" or the compact digit form "51742683" (n <= 9)."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if "," in text:
        try:
            word = tuple(int(x) for x in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad permutation text {text!r}") from exc
    else:
        if not text.isdigit():
            raise ValueError(f"bad permutation text {text!r}")
        word = tuple(int(ch) for ch in text)
        if 0 in word:
            raise ValueError("compact permutation form uses digits 1..9")
    if not is_permutation(word):
        raise ValueError(f"{text!r} is not a permutation of 1..{len(word)}")
    return word


def parse_binary_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text == "":
        return ()
    if not all(ch in "01" for ch in text):
        raise ValueError(f"bad binary word {text!r}")
    return tuple(int(ch) for ch in text)
