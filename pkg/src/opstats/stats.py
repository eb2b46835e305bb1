"""Statistics on permutations and (ordered) set partitions.

Letter-level coordinate statistics classify, for each letter i, the openers
and closers of the other blocks by side (left/right of i's block) and size
(smaller/bigger than i); rsb/lsb count whole blocks straddling i. Everything
else here is assembled from those sums plus block-order statistics (block
descents and block inversions under the dominance order: B > B' iff the least
letter of B exceeds the greatest letter of B').

All functions are pure; nothing mutates or reorders its argument.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .combinat import Blocks, as_blocks, descents

COORDINATE_NAMES = ("ros", "rob", "rcs", "rcb", "los", "lob", "lcs", "lcb", "rsb", "lsb")

# Every ordered-partition statistic the distribution sweeps track.
OP_STAT_NAMES = COORDINATE_NAMES + (
    "mil",
    "bmaj",
    "binv",
    "cbmaj",
    "cbinv",
    "bmajmil",
    "ROS",
    "RCB",
    "LOS",
    "LCB",
    "mak",
    "makp",
    "lmak",
    "lmakp",
    "mak+bmaj",
    "makp+bmaj",
    "lmak+bmaj",
    "lmakp+bmaj",
    "mak+binv",
    "makp+binv",
    "lmak+binv",
    "lmakp+binv",
    "cmajLSB",
    "cinvLSB",
    "ncl_rsb_bmaj",
    "ncl_rsb_binv",
)

PERM_STAT_NAMES = ("des", "maj", "inv")


@dataclass(frozen=True)
class CoordinateProfile:
    """Per-letter values of the ten coordinate statistics.

    Rows are indexed by letter value: row("ros")[i-1] is ros_i. The table rows
    printed in examples list letters in their order of appearance; use
    appearance_row for that.
    """

    blocks: Blocks
    ros: tuple[int, ...]
    rob: tuple[int, ...]
    rcs: tuple[int, ...]
    rcb: tuple[int, ...]
    los: tuple[int, ...]
    lob: tuple[int, ...]
    lcs: tuple[int, ...]
    lcb: tuple[int, ...]
    rsb: tuple[int, ...]
    lsb: tuple[int, ...]

    def row(self, name: str) -> tuple[int, ...]:
        if name not in COORDINATE_NAMES:
            raise ValueError(f"unknown coordinate statistic {name!r}")
        return getattr(self, name)

    def appearance_row(self, name: str) -> tuple[int, ...]:
        row = self.row(name)
        return tuple(row[i - 1] for b in self.blocks for i in b)

    def total(self, name: str) -> int:
        return sum(self.row(name))


def coordinate_profile(pi) -> CoordinateProfile:
    """Compute all ten coordinate rows in one pass per letter over block summaries."""
    blocks = as_blocks(pi)
    k = len(blocks)
    n = sum(len(b) for b in blocks)
    openers = [b[0] for b in blocks]
    closers = [b[-1] for b in blocks]
    rows = {name: [0] * n for name in COORDINATE_NAMES}
    r_ros, r_rob, r_rcs, r_rcb = rows["ros"], rows["rob"], rows["rcs"], rows["rcb"]
    r_los, r_lob, r_lcs, r_lcb = rows["los"], rows["lob"], rows["lcs"], rows["lcb"]
    r_rsb, r_lsb = rows["rsb"], rows["lsb"]
    for bi in range(k):
        for i in blocks[bi]:
            ros = rob = rcs = rcb = rsb = 0
            los = lob = lcs = lcb = lsb = 0
            for m in range(k):
                if m == bi:
                    continue
                o, c = openers[m], closers[m]
                if m > bi:
                    if o < i:
                        ros += 1
                        if c > i:
                            rsb += 1
                    else:
                        rob += 1
                    if c < i:
                        rcs += 1
                    else:
                        rcb += 1
                else:
                    if o < i:
                        los += 1
                        if c > i:
                            lsb += 1
                    else:
                        lob += 1
                    if c < i:
                        lcs += 1
                    else:
                        lcb += 1
            idx = i - 1
            r_ros[idx], r_rob[idx], r_rcs[idx], r_rcb[idx], r_rsb[idx] = ros, rob, rcs, rcb, rsb
            r_los[idx], r_lob[idx], r_lcs[idx], r_lcb[idx], r_lsb[idx] = los, lob, lcs, lcb, lsb
    return CoordinateProfile(blocks, **{name: tuple(vals) for name, vals in rows.items()})


def _aggregates(blocks: Blocks) -> dict[str, int]:
    """Totals of the ten coordinate statistics, per-letter loop."""
    k = len(blocks)
    openers = [b[0] for b in blocks]
    closers = [b[-1] for b in blocks]
    ros = rob = rcs = rcb = rsb = los = lob = lcs = lcb = lsb = 0
    for bi in range(k):
        for i in blocks[bi]:
            for m in range(k):
                if m == bi:
                    continue
                o, c = openers[m], closers[m]
                if m > bi:
                    if o < i:
                        ros += 1
                        if c > i:
                            rsb += 1
                    else:
                        rob += 1
                    if c < i:
                        rcs += 1
                    else:
                        rcb += 1
                else:
                    if o < i:
                        los += 1
                        if c > i:
                            lsb += 1
                    else:
                        lob += 1
                    if c < i:
                        lcs += 1
                    else:
                        lcb += 1
    return {
        "ros": ros, "rob": rob, "rcs": rcs, "rcb": rcb, "rsb": rsb,
        "los": los, "lob": lob, "lcs": lcs, "lcb": lcb, "lsb": lsb,
    }


def block_descents(blocks) -> tuple[int, ...]:
    """Positions i (1-based) with B_i > B_{i+1} in the block dominance order."""
    blocks = as_blocks(blocks)
    return tuple(
        i for i in range(1, len(blocks)) if blocks[i - 1][0] > blocks[i][-1]
    )


def all_op_stats(pi) -> dict[str, int]:
    """Every named ordered-partition statistic of a single partition."""
    blocks = as_blocks(pi)
    n = sum(len(b) for b in blocks)
    k = len(blocks)
    agg = _aggregates(blocks)
    ck2 = comb(k, 2)
    closer_sum = sum(b[-1] for b in blocks)
    ncl = n * (n + 1) // 2 - closer_sum
    bmaj = sum(block_descents(blocks))
    binv = sum(
        1
        for a in range(k)
        for b in range(a + 1, k)
        if blocks[a][0] > blocks[b][-1]
    )
    mil = sum(j * len(b) for j, b in enumerate(blocks))
    out = dict(agg)
    out["mil"] = mil
    out["bmaj"] = bmaj
    out["binv"] = binv
    out["cbmaj"] = ck2 - bmaj
    out["cbinv"] = ck2 - binv
    out["bmajmil"] = bmaj + mil
    out["ROS"] = agg["ros"] + ck2
    out["RCB"] = agg["rcb"] + ck2
    out["LOS"] = agg["los"] + ck2
    out["LCB"] = agg["lcb"] + ck2
    mak = k * n - closer_sum + agg["rsb"]
    out["mak"] = mak
    out["makp"] = agg["lob"] + agg["rcb"]
    out["lmak"] = n * (k - 1) - (agg["los"] + agg["rcs"])
    out["lmakp"] = n * (k - 1) - (agg["lcb"] + agg["rob"])
    for base in ("mak", "makp", "lmak", "lmakp"):
        out[f"{base}+bmaj"] = out[base] + bmaj
        out[f"{base}+binv"] = out[base] + binv
    out["cmajLSB"] = agg["lsb"] + out["cbmaj"] + ck2
    out["cinvLSB"] = agg["lsb"] + out["cbinv"] + ck2
    out["ncl"] = ncl
    out["ncl_rsb_bmaj"] = ncl + agg["rsb"] + bmaj
    out["ncl_rsb_binv"] = ncl + agg["rsb"] + binv
    return out


def stat(pi, name: str, *, d0_counts_all: bool = True) -> int:
    """Evaluate a named partition statistic; composites may be written "a+b"."""
    blocks = as_blocks(pi)
    if name.startswith("mak_d="):
        try:
            d = int(name[len("mak_d="):])
        except ValueError as exc:
            raise ValueError(f"bad mak_d statistic name {name!r}") from exc
        return mak_d(blocks, d, d0_counts_all=d0_counts_all)
    table = all_op_stats(blocks)
    if name in table:
        return table[name]
    if "+" in name:
        total = 0
        for part in name.split("+"):
            if part not in table:
                raise ValueError(f"unknown statistic {part!r}")
            total += table[part]
        return total
    raise ValueError(f"unknown statistic {name!r}")


def mak_d(pi, d: int, *, d0_counts_all: bool = True) -> int:
    """The closer-indexed family interpolating to mak at d = k.

    Defined on standard-ordered partitions: value = mak + k - d - #{a in B_j :
    j > d, a > closer(d)}. The threshold closer(0) does not exist; with
    d0_counts_all the d = 0 set is taken to be all letters (threshold
    vacuously true), otherwise empty.
    """
    blocks = as_blocks(pi)
    k = len(blocks)
    n = sum(len(b) for b in blocks)
    if not 0 <= d <= k:
        raise ValueError(f"d must be in 0..{k}, got {d}")
    openers = [b[0] for b in blocks]
    if any(openers[i] >= openers[i + 1] for i in range(k - 1)):
        raise ValueError("mak_d requires a standard-ordered partition")
    base = k * n - sum(b[-1] for b in blocks) + _aggregates(blocks)["rsb"]
    if d == 0:
        count = n if d0_counts_all else 0
    else:
        threshold = blocks[d - 1][-1]
        count = sum(1 for j in range(d, k) for a in blocks[j] if a > threshold)
    return base + k - d - count


# ---------------------------------------------------------------------------
# permutation statistics
# ---------------------------------------------------------------------------


def perm_stat(p: Sequence[int], name: str) -> int:
    if name == "des":
        return len(descents(p))
    if name == "maj":
        return sum(descents(p))
    if name == "inv":
        return sum(
            1
            for i in range(len(p))
            for j in range(i + 1, len(p))
            if p[i] > p[j]
        )
    raise ValueError(f"unknown permutation statistic {name!r}")


def maj_by_right_descents(p: Sequence[int]) -> int:
    """maj computed by giving each letter the number of descents at or after
    its position; equals perm_stat(p, "maj")."""
    total = 0
    running = 0
    for i in range(len(p) - 1, 0, -1):
        if p[i - 1] > p[i]:
            running += 1
        total += running
    return total
