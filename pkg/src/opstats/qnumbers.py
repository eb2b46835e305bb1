"""q-Stirling numbers (recurrence and alternating-sum definitions), q-Eulerian
polynomials by enumeration, and their duality/shift identities."""
from __future__ import annotations

import functools
from math import comb

from .combinat import gen_permutations
from .qpoly import LaurentPoly, exact_div, q_binom, q_fact, q_int


@functools.lru_cache(maxsize=None)
def q_stirling_rec(n: int, k: int) -> LaurentPoly:
    """S_q[n,k] from the recurrence
    S_q[n,k] = q^(k-1) S_q[n-1,k-1] + [k] S_q[n-1,k], S_q[0,0] = 1,
    and zero whenever k < 0 or k > n."""
    if k < 0 or k > n:
        return LaurentPoly.zero()
    if n == 0:
        return LaurentPoly.one()
    return q_stirling_rec(n - 1, k - 1).shift(k - 1) + q_int(k) * q_stirling_rec(n - 1, k)


def q_stirling_def(n: int, k: int) -> LaurentPoly:
    """S_q[n,k] from the alternating sum
    [k]! S_q[n,k] = sum_i (-1)^i qbinom(k,i) q^C(i,2) [k-i]^n,
    extracted by exact division. Divisibility failure means a bug."""
    if not 0 <= k <= n:
        raise ValueError("q_stirling_def requires 0 <= k <= n")
    total = LaurentPoly.zero()
    for i in range(k + 1):
        term = q_binom(k, i).shift(comb(i, 2)) * q_int(k - i) ** n
        total = total + (-term if i % 2 else term)
    return exact_div(total, q_fact(k))


def q_stirling_tilde(n: int, k: int) -> LaurentPoly:
    """The unshifted variant: S_q[n,k] = q^C(k,2) * S~_q[n,k]."""
    if not 0 <= k <= n:
        raise ValueError("q_stirling_tilde requires 0 <= k <= n")
    return q_stirling_rec(n, k).shift(-comb(k, 2))


@functools.lru_cache(maxsize=None)
def _q_eulerian_table(n: int) -> tuple[LaurentPoly, ...]:
    """A_q(n, d) for d = 0..n-1, by a single sweep over S_n.

    Enumeration is the ground truth here; no closed form is trusted.
    """
    counts: list[dict[int, int]] = [dict() for _ in range(max(n, 1))]
    for p in gen_permutations(n):
        d = 0
        m = 0
        for i in range(1, n):
            if p[i - 1] > p[i]:
                d += 1
                m += i
        c = counts[d]
        c[m] = c.get(m, 0) + 1
    return tuple(LaurentPoly(c) for c in counts)


def q_eulerian(n: int, k: int) -> LaurentPoly:
    """Major-index generating polynomial over permutations of n with exactly
    k descents; zero for k outside 0..n-1."""
    if n < 1:
        raise ValueError("q_eulerian requires n >= 1")
    if k < 0 or k >= n:
        return LaurentPoly.zero()
    return _q_eulerian_table(n)[k]


def check_aq_duality(n: int) -> bool:
    """Exact check of A_q(n, i-1) = q^(ni - C(n+1,2)) A_q(n, n-i) for 1 <= i <= n."""
    if n < 1:
        raise ValueError("check_aq_duality requires n >= 1")
    return all(
        q_eulerian(n, i - 1)
        == q_eulerian(n, n - i).shift(n * i - comb(n + 1, 2))
        for i in range(1, n + 1)
    )


def clear_caches() -> None:
    q_stirling_rec.cache_clear()
    _q_eulerian_table.cache_clear()
