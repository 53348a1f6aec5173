"""Bound calculators for f(k) and f(m,k), and the upper-bound table.

f(k) is the least order of a single S_k tournament; f(m,k) the least order
over S_k sets of m tournaments.  Everything here evaluates closed formulas
or a small dynamic program over the known f(k) base values; no searching.
All deciding comparisons run in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, inf, lgamma, log

# Best known upper bounds for f(k).  k <= 3 are proven exact; k = 4, 5, 6
# are the smallest known quadratic-residue witnesses (orders 67, 331, 1163)
# and are upper bounds only.
F_BASE = {0: 1, 1: 3, 2: 7, 3: 19, 4: 67, 5: 331, 6: 1163}
F_BASE_EXACT_MAX = 3


class BaseTableExhaustedError(LookupError):
    """The formula needs f(k) beyond the known base table."""


class KOutOfRangeError(ValueError):
    """Closed-form bound evaluated outside its stated k range."""


def f_base(k: int) -> int:
    """Known upper bound for f(k); exact for k <= 3."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k not in F_BASE:
        raise BaseTableExhaustedError(f"no known f({k}) value (table stops at k=6)")
    return F_BASE[k]


def erdos_lower(k: int) -> int:
    """Probabilistic-method lower bound f(k) >= 2^(k+1) - 1."""
    if k < 1:
        raise KOutOfRangeError("erdos_lower needs k >= 1")
    return 2 ** (k + 1) - 1


def szekeres_lower(k: int) -> int:
    """Sharper lower bound f(k) >= (k+2) 2^(k-1) - 1, valid for k > 2."""
    if k <= 2:
        raise KOutOfRangeError("szekeres_lower needs k > 2")
    return (k + 2) * 2 ** (k - 1) - 1


def _counting_lt1(k: int, n: int) -> bool:
    """Exact test of 2^k C(n,k) (1 - 2^-k)^(n-k) < 1, as an integer comparison."""
    return 2**k * comb(n, k) * (2**k - 1) ** (n - k) < 2 ** (k * (n - k))


def _log2_counting(k: int, n: int) -> float:
    lc = (lgamma(n + 1) - lgamma(k + 1) - lgamma(n - k + 1)) / log(2)
    return k + lc + (n - k) * (log(2**k - 1) / log(2) - k)


def erdos_upper(k: int) -> int:
    """Smallest n with 2^k C(n,k) (1 - 2^-k)^(n-k) < 1; an upper bound for f(k).

    The expectation rises to a single peak near n = k 2^k and then decays,
    and it starts at 2^k >= 2 for n = k, so the sub-1 region is a final
    segment.  A float log-estimate brackets the crossing; every deciding
    comparison is exact integer arithmetic.
    """
    if k < 1:
        raise KOutOfRangeError("erdos_upper needs k >= 1")
    if k <= 6:
        n = k
        while not _counting_lt1(k, n):
            n += 1
        return n
    lo = hi = k * 2**k
    while _log2_counting(k, hi) >= 0:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _log2_counting(k, mid) < 0:
            hi = mid
        else:
            lo = mid
    n = hi
    while n > k and _counting_lt1(k, n - 1):
        n -= 1
    while not _counting_lt1(k, n):
        n += 1
    return n


def closed_form_upper(m: int, k: int) -> int:
    """Upper bound b f(a) + (m-b) f(a-1) where k+1 = am + b with 1 <= b <= m.

    Splitting the k+1 budget as evenly as possible over m blocks gives b
    blocks of an S_a tournament and m-b of an S_(a-1) one.  Defined for
    m <= k+1; zero-weight terms are never evaluated.
    """
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    if m > k + 1:
        raise KOutOfRangeError(f"closed form needs m <= k+1 (got m={m}, k={k})")
    a = k // m
    b = k % m + 1
    total = b * f_base(a)
    if m > b:
        total += (m - b) * f_base(a - 1)
    return total


@lru_cache(maxsize=None)
def _best(m: int, k: int) -> tuple[float, str]:
    """DP over binary splits; returns (bound, provenance), inf when unknown."""
    if m >= k + 1:
        return k + 1, "trivial k+1"
    if m == 1:
        if k in F_BASE:
            return F_BASE[k], "base f(k)"
        return inf, "exhausted"
    best, prov = _best(m - 1, k)
    if best < inf:
        prov = "padding"
    for m1 in range(1, m):
        for k1 in range(k):
            v = _best(m1, k1)[0] + _best(m - m1, k - 1 - k1)[0]
            if v < best:
                best, prov = v, "split-DP"
    return best, prov


@dataclass(frozen=True)
class BoundsTableEntry:
    """One cell of the upper-bound grid for f(m,k)."""

    m: int
    k: int
    upper: int
    provenance: str
    redundant: bool = False
    exact: bool = False


def split_dp_upper(m: int, k: int) -> BoundsTableEntry:
    """Best bound from the binary-split recursion f(m,k) <= f(m1,k1) + f(m2,k2).

    Splits range over m1+m2 = m and k1+k2 = k-1, grounded in the known f(k)
    table, f(m,k) = k+1 for m >= k+1, and monotone improvement in m.
    Splits that would need unknown f(k) values simply never win.
    """
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    v, prov = _best(m, k)
    if v is inf:
        raise BaseTableExhaustedError(f"no finite bound for f({m},{k}) from the known table")
    return BoundsTableEntry(m, k, int(v), prov)


def coarse_upper(m: int, k: int) -> int:
    """Coarser bound m f(ceil((k-m+1)/m)); weaker but single-term."""
    if m < 1:
        raise ValueError("need m >= 1")
    if k < m - 1:
        raise KOutOfRangeError(f"coarse bound needs k >= m-1 (got m={m}, k={k})")
    a = -((m - 1 - k) // m)  # ceil((k-m+1)/m)
    return m * f_base(a)


# (m, k) cells proven exact by exhaustive search; the m=1 entries are the
# classically known f(1) = 1 .. f(3) = 19.
EXACT_CELLS = {
    (1, 0), (1, 1), (1, 2), (1, 3),
    (2, 1), (2, 2), (2, 3), (2, 4),
    (3, 2), (3, 3), (3, 4), (3, 5),
    (4, 3), (4, 4), (4, 5),
    (5, 4), (5, 5), (5, 6),
}


def bounds_table(m_max: int, k_max: int) -> list[BoundsTableEntry]:
    """Upper-bound grid for 1 <= m <= m_max, 0 <= k <= k_max.

    Each populated cell is the minimum over the split DP, the closed form,
    and the trivial k+1 bound.  Cells with m > k+1 are redundant (the k+1
    value already settles them) and are flagged as such; cells the base
    table cannot reach (m = 1, k > 6) are omitted.
    """
    entries = []
    for m in range(1, m_max + 1):
        for k in range(k_max + 1):
            if m > k + 1:
                entries.append(
                    BoundsTableEntry(m, k, k + 1, "trivial k+1", redundant=True)
                )
                continue
            candidates: list[tuple[int, str]] = []
            if m >= k + 1:
                candidates.append((k + 1, "trivial k+1"))
            if m == 1 and k in F_BASE:
                candidates.append((F_BASE[k], "base f(k)"))
            try:
                candidates.append((closed_form_upper(m, k), "closed-form"))
            except BaseTableExhaustedError:
                pass
            v, prov = _best(m, k)
            if v < inf:
                candidates.append((int(v), prov))
            if not candidates:
                continue
            upper = min(c[0] for c in candidates)
            provenance = next(p for u, p in candidates if u == upper)
            entries.append(
                BoundsTableEntry(m, k, upper, provenance, exact=(m, k) in EXACT_CELLS)
            )
    return entries
