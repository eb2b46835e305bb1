"""Exact distribution sweeps over enumerated families.

The ordered-partition sweep is the hot path: OP(10,k) holds ~10^8 objects, so
every named statistic is accumulated for all block arrangements of one set
partition at a time. Pairwise block summaries are computed once per set
partition; stepping through the arrangements by adjacent transpositions
(Johnson-Trotter order) then updates each aggregate in O(1) per step instead
of recomputing letter-level counts.

A deliberately naive sweep (one statistic evaluation per object via the stats
module) is kept alongside as the cross-check oracle for the fast path.
"""
from __future__ import annotations

import multiprocessing
import threading
from bisect import bisect_left
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator, Sequence

from ..combinat import (
    Blocks,
    gen_ordered_partitions,
    gen_set_partitions,
    rgf_prefixes,
    stirling2,
)
from ..qpoly import LaurentPoly
from .. import stats as _stats

OP_PANEL_NAMES = _stats.OP_STAT_NAMES

# Unordered-partition panel: plain statistics plus the mak_d family. The two
# d=0 conventions only differ at d=0; ":none" marks the empty-set convention.
P_BASE_NAMES = _stats.OP_STAT_NAMES


@dataclass(frozen=True)
class Distribution:
    """An exact generating polynomial of one statistic over one family."""

    n: int
    k: int
    stat: str
    poly: LaurentPoly
    family: str = "op"

    def size(self) -> int:
        return self.poly.coefficient_sum()


def family_size(n: int, k: int, family: str) -> int:
    if family == "op":
        return factorial(k) * stirling2(n, k)
    if family == "p":
        return stirling2(n, k)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Johnson-Trotter: all orderings by adjacent swaps
# ---------------------------------------------------------------------------


def sjt_swaps(k: int) -> Iterator[int]:
    """Yield positions a so that successively swapping (a, a+1) visits all k!
    orderings, starting from the identity."""
    if k < 2:
        return
    perm = list(range(k))
    pos = list(range(k))
    dirs = [-1] * k
    while True:
        mv = -1
        for v in range(k - 1, -1, -1):
            j = pos[v] + dirs[v]
            if 0 <= j < k and perm[j] < v:
                mv = v
                break
        if mv < 0:
            return
        a = pos[mv] + dirs[mv] if dirs[mv] < 0 else pos[mv]
        u, w = perm[a], perm[a + 1]
        perm[a], perm[a + 1] = w, u
        pos[u], pos[w] = a + 1, a
        for v in range(mv + 1, k):
            dirs[v] = -dirs[v]
        yield a


# ---------------------------------------------------------------------------
# fast panel sweep
# ---------------------------------------------------------------------------


def _value_bound(n: int, k: int) -> int:
    # Safe upper bound on every tracked statistic (mak <= 2nk, plus C(k,2)-ish
    # block terms and the C(k,2) shifts).
    return 3 * n * k + k * k + 8


def _accumulate_orderings(blocks: Blocks, arrays: dict[str, list[int]], n: int, k: int) -> None:
    """Add every block arrangement of one set partition into the counters."""
    sizes = [len(b) for b in blocks]
    op = [b[0] for b in blocks]
    cl = [b[-1] for b in blocks]
    closer_sum = sum(cl)
    ck2 = comb(k, 2)
    ncl = n * (n + 1) // 2 - closer_sum
    nk = n * k
    nk1 = n * (k - 1)

    # so[x][y]: letters of block x above block y's opener; sc: above its closer.
    so = [[0] * k for _ in range(k)]
    bo = [[0] * k for _ in range(k)]
    sc = [[0] * k for _ in range(k)]
    bc = [[0] * k for _ in range(k)]
    sb = [[0] * k for _ in range(k)]
    gt = [[0] * k for _ in range(k)]
    for x in range(k):
        bx = blocks[x]
        sx = sizes[x]
        sox, box_, scx, bcx, sbx, gtx = so[x], bo[x], sc[x], bc[x], sb[x], gt[x]
        for y in range(k):
            if x == y:
                continue
            s_o = sx - bisect_left(bx, op[y])
            s_c = sx - bisect_left(bx, cl[y])
            sox[y] = s_o
            box_[y] = sx - s_o
            scx[y] = s_c
            bcx[y] = sx - s_c
            sbx[y] = s_o - s_c
            gtx[y] = 1 if op[x] > cl[y] else 0

    order = list(range(k))
    ros = rob = rcs = rcb = rsb = 0
    los = lob = lcs = lcb = lsb = 0
    binv = 0
    for a in range(k):
        for b in range(a + 1, k):
            ros += so[a][b]
            rob += bo[a][b]
            rcs += sc[a][b]
            rcb += bc[a][b]
            rsb += sb[a][b]
            los += so[b][a]
            lob += bo[b][a]
            lcs += sc[b][a]
            lcb += bc[b][a]
            lsb += sb[b][a]
            binv += gt[a][b]
    bmaj = 0
    for j in range(1, k):
        if gt[order[j - 1]][order[j]]:
            bmaj += j
    mil = 0
    for j in range(k):
        mil += j * sizes[order[j]]

    a_ros, a_rob, a_rcs, a_rcb = arrays["ros"], arrays["rob"], arrays["rcs"], arrays["rcb"]
    a_los, a_lob, a_lcs, a_lcb = arrays["los"], arrays["lob"], arrays["lcs"], arrays["lcb"]
    a_rsb, a_lsb = arrays["rsb"], arrays["lsb"]
    a_mil, a_bmaj, a_binv = arrays["mil"], arrays["bmaj"], arrays["binv"]
    a_cbmaj, a_cbinv, a_bmm = arrays["cbmaj"], arrays["cbinv"], arrays["bmajmil"]
    a_ROS, a_RCB, a_LOS, a_LCB = arrays["ROS"], arrays["RCB"], arrays["LOS"], arrays["LCB"]
    a_mak, a_makp, a_lmak, a_lmakp = arrays["mak"], arrays["makp"], arrays["lmak"], arrays["lmakp"]
    a_mb, a_mpb, a_lmb, a_lmpb = (
        arrays["mak+bmaj"], arrays["makp+bmaj"], arrays["lmak+bmaj"], arrays["lmakp+bmaj"],
    )
    a_mi, a_mpi, a_lmi, a_lmpi = (
        arrays["mak+binv"], arrays["makp+binv"], arrays["lmak+binv"], arrays["lmakp+binv"],
    )
    a_cmaj, a_cinv = arrays["cmajLSB"], arrays["cinvLSB"]
    a_nrb, a_nri = arrays["ncl_rsb_bmaj"], arrays["ncl_rsb_binv"]

    def bump(ros, rob, rcs, rcb, rsb, los, lob, lcs, lcb, lsb, binv, bmaj, mil):
        a_ros[ros] += 1
        a_rob[rob] += 1
        a_rcs[rcs] += 1
        a_rcb[rcb] += 1
        a_rsb[rsb] += 1
        a_los[los] += 1
        a_lob[lob] += 1
        a_lcs[lcs] += 1
        a_lcb[lcb] += 1
        a_lsb[lsb] += 1
        a_mil[mil] += 1
        a_bmaj[bmaj] += 1
        a_binv[binv] += 1
        cbmaj = ck2 - bmaj
        cbinv = ck2 - binv
        a_cbmaj[cbmaj] += 1
        a_cbinv[cbinv] += 1
        a_bmm[bmaj + mil] += 1
        a_ROS[ros + ck2] += 1
        a_RCB[rcb + ck2] += 1
        a_LOS[los + ck2] += 1
        a_LCB[lcb + ck2] += 1
        mak = nk - closer_sum + rsb
        makp = lob + rcb
        lmak = nk1 - los - rcs
        lmakp = nk1 - lcb - rob
        a_mak[mak] += 1
        a_makp[makp] += 1
        a_lmak[lmak] += 1
        a_lmakp[lmakp] += 1
        a_mb[mak + bmaj] += 1
        a_mpb[makp + bmaj] += 1
        a_lmb[lmak + bmaj] += 1
        a_lmpb[lmakp + bmaj] += 1
        a_mi[mak + binv] += 1
        a_mpi[makp + binv] += 1
        a_lmi[lmak + binv] += 1
        a_lmpi[lmakp + binv] += 1
        lsb_ck2 = lsb + ck2
        a_cmaj[lsb_ck2 + cbmaj] += 1
        a_cinv[lsb_ck2 + cbinv] += 1
        nr = ncl + rsb
        a_nrb[nr + bmaj] += 1
        a_nri[nr + binv] += 1

    bump(ros, rob, rcs, rcb, rsb, los, lob, lcs, lcb, lsb, binv, bmaj, mil)
    for a in sjt_swaps(k):
        X = order[a]
        Y = order[a + 1]
        if a >= 1 and gt[order[a - 1]][X]:
            bmaj -= a
        if gt[X][Y]:
            bmaj -= a + 1
        if a + 2 < k and gt[Y][order[a + 2]]:
            bmaj -= a + 2
        d = so[Y][X] - so[X][Y]
        ros += d
        los -= d
        d = bo[Y][X] - bo[X][Y]
        rob += d
        lob -= d
        d = sc[Y][X] - sc[X][Y]
        rcs += d
        lcs -= d
        d = bc[Y][X] - bc[X][Y]
        rcb += d
        lcb -= d
        d = sb[Y][X] - sb[X][Y]
        rsb += d
        lsb -= d
        binv += gt[Y][X] - gt[X][Y]
        mil += sizes[X] - sizes[Y]
        order[a] = Y
        order[a + 1] = X
        if a >= 1 and gt[order[a - 1]][Y]:
            bmaj += a
        if gt[Y][X]:
            bmaj += a + 1
        if a + 2 < k and gt[X][order[a + 2]]:
            bmaj += a + 2
        bump(ros, rob, rcs, rcb, rsb, los, lob, lcs, lcb, lsb, binv, bmaj, mil)


def _op_panel_counts(n: int, k: int, prefix: Sequence[int] = ()) -> dict[str, dict[int, int]]:
    """Counters for every panel statistic over the (sub)family of OP(n,k)
    whose set partition's growth word starts with prefix."""
    bound = _value_bound(n, k)
    arrays = {name: [0] * (bound + 1) for name in OP_PANEL_NAMES}
    if n == 0 and k == 0 and not prefix:
        for name in OP_PANEL_NAMES:
            arrays[name][0] += 1
    else:
        for blocks in gen_set_partitions(n, k, prefix):
            _accumulate_orderings(blocks, arrays, n, k)
    return {
        name: {v: c for v, c in enumerate(counts) if c}
        for name, counts in arrays.items()
    }


def _op_panel_counts_task(args: tuple[int, int, list[tuple[int, ...]]]) -> dict[str, dict[int, int]]:
    n, k, prefixes = args
    merged: dict[str, dict[int, int]] = {name: {} for name in OP_PANEL_NAMES}
    for prefix in prefixes:
        part = _op_panel_counts(n, k, prefix)
        for name, counts in part.items():
            tgt = merged[name]
            for v, c in counts.items():
                tgt[v] = tgt.get(v, 0) + c
    return merged


def _compute_op_panel(n: int, k: int, threads: int = 1) -> dict[str, LaurentPoly]:
    threads = max(1, threads)
    if threads == 1 or n < 6 or k < 2:
        counts = _op_panel_counts(n, k)
    else:
        m = 2
        prefixes = rgf_prefixes(n, k, m)
        while len(prefixes) < 4 * threads and m < n:
            m += 1
            prefixes = rgf_prefixes(n, k, m)
        if not prefixes:
            return _compute_op_panel(n, k, threads=1)
        chunks: list[list[tuple[int, ...]]] = [[] for _ in range(min(threads, len(prefixes)))]
        for i, p in enumerate(prefixes):
            chunks[i % len(chunks)].append(p)
        with multiprocessing.Pool(len(chunks)) as pool:
            partials = pool.map(_op_panel_counts_task, [(n, k, ch) for ch in chunks])
        counts = {name: {} for name in OP_PANEL_NAMES}
        for part in partials:
            for name, cs in part.items():
                tgt = counts[name]
                for v, c in cs.items():
                    tgt[v] = tgt.get(v, 0) + c
    polys = {name: LaurentPoly.from_counts(c) for name, c in counts.items()}
    expected = family_size(n, k, "op")
    for name, poly in polys.items():
        if poly.coefficient_sum() != expected:
            raise RuntimeError(
                f"panel sweep dropped objects: {name} on OP({n},{k}) "
                f"sums to {poly.coefficient_sum()}, expected {expected}"
            )
    return polys


_op_cache: dict[tuple[int, int], dict[str, LaurentPoly]] = {}
_p_cache: dict[tuple[int, int], dict[str, LaurentPoly]] = {}
_cache_lock = threading.Lock()


def op_stat_panel(n: int, k: int, threads: int = 1) -> dict[str, LaurentPoly]:
    """All panel statistics' distributions over OP(n,k); memoized."""
    with _cache_lock:
        hit = _op_cache.get((n, k))
    if hit is not None:
        return hit
    panel = _compute_op_panel(n, k, threads)
    with _cache_lock:
        _op_cache[(n, k)] = panel
    return panel


def op_stat_panel_naive(n: int, k: int) -> dict[str, LaurentPoly]:
    """Oracle sweep: evaluates each statistic per object via the stats module."""
    counts: dict[str, dict[int, int]] = {name: {} for name in OP_PANEL_NAMES}
    for blocks in gen_ordered_partitions(n, k):
        values = _stats.all_op_stats(blocks)
        for name in OP_PANEL_NAMES:
            v = values[name]
            c = counts[name]
            c[v] = c.get(v, 0) + 1
    return {name: LaurentPoly.from_counts(c) for name, c in counts.items()}


def p_stat_panel(n: int, k: int) -> dict[str, LaurentPoly]:
    """Panel over unordered partitions (standard order), including the mak_d
    family; keys "mak_d=<d>" use the count-all d=0 convention and
    "mak_d=0:none" the count-nothing one."""
    with _cache_lock:
        hit = _p_cache.get((n, k))
    if hit is not None:
        return hit
    names = list(P_BASE_NAMES) + [f"mak_d={d}" for d in range(k + 1)] + ["mak_d=0:none"]
    counts: dict[str, dict[int, int]] = {name: {} for name in names}
    for blocks in gen_set_partitions(n, k):
        values = _stats.all_op_stats(blocks)
        for d in range(k + 1):
            values[f"mak_d={d}"] = _stats.mak_d(blocks, d)
        values["mak_d=0:none"] = _stats.mak_d(blocks, 0, d0_counts_all=False)
        for name in names:
            v = values[name]
            c = counts[name]
            c[v] = c.get(v, 0) + 1
    panel = {name: LaurentPoly.from_counts(c) for name, c in counts.items()}
    with _cache_lock:
        _p_cache[(n, k)] = panel
    return panel


def distribution_op(n: int, k: int, stat: str, threads: int = 1) -> Distribution:
    """Exact sum of q^stat over OP(n,k)."""
    if stat in OP_PANEL_NAMES:
        poly = op_stat_panel(n, k, threads)[stat]
    else:
        c: dict[int, int] = {}
        for blocks in gen_ordered_partitions(n, k):
            v = _stats.stat(blocks, stat)
            c[v] = c.get(v, 0) + 1
        poly = LaurentPoly.from_counts(c)
    dist = Distribution(n, k, stat, poly, "op")
    if dist.size() != family_size(n, k, "op"):
        raise RuntimeError(f"distribution size mismatch for {stat} on OP({n},{k})")
    return dist


def distribution_p(n: int, k: int, stat: str) -> Distribution:
    """Exact sum of q^stat over P(n,k) (standard-ordered partitions)."""
    panel = p_stat_panel(n, k)
    if stat in panel:
        poly = panel[stat]
    else:
        c: dict[int, int] = {}
        for blocks in gen_set_partitions(n, k):
            v = _stats.stat(blocks, stat)
            c[v] = c.get(v, 0) + 1
        poly = LaurentPoly.from_counts(c)
    dist = Distribution(n, k, stat, poly, "p")
    if dist.size() != family_size(n, k, "p"):
        raise RuntimeError(f"distribution size mismatch for {stat} on P({n},{k})")
    return dist


def clear_caches() -> None:
    with _cache_lock:
        _op_cache.clear()
        _p_cache.clear()
