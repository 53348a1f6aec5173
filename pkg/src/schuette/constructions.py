"""Explicit constructions: padding, rotational sets, and the block combine.

Each construction pins down only the edges that carry the domination
property; the rest are "free" and get oriented by a FillPolicy.  The
property survives any fill, which the test suite checks with seeded
random fills.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .tournament import Tournament, TournamentSet


class TargetTooSmallError(ValueError):
    """pad_set asked for fewer members than the set already has."""


@dataclass(frozen=True)
class FillPolicy:
    """Orientation rule for edges a construction leaves free.

    kind "low" points every free pair from the lower to the higher label,
    which keeps outputs reproducible by default.  kind "random" draws from
    a generator seeded once per construction call, so the same policy
    always yields the same set.
    """

    kind: str = "low"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("low", "random"):
            raise ValueError(f"unknown fill kind {self.kind!r}")
        if self.kind == "random" and self.seed is None:
            raise ValueError("random fill needs a seed")

    @classmethod
    def low_beats_high(cls) -> "FillPolicy":
        return cls("low")

    @classmethod
    def seeded(cls, seed: int) -> "FillPolicy":
        return cls("random", seed)

    def orient_fn(self) -> Callable[[int, int], bool]:
        """Fresh per-call decision function: True means "first beats second"."""
        if self.kind == "low":
            return lambda i, j: i < j
        rng = random.Random(self.seed)
        return lambda i, j: rng.random() < 0.5


def _arbitrary_tournament(n: int, orient: Callable[[int, int], bool]) -> Tournament:
    out = [0] * n
    for i, j in combinations(range(n), 2):
        if orient(i, j):
            out[i] |= 1 << j
        else:
            out[j] |= 1 << i
    return Tournament(n, tuple(out))


def pad_set(tau: TournamentSet, m_target: int, fill: FillPolicy = FillPolicy()) -> TournamentSet:
    """Append arbitrary tournaments until the set has m_target members.

    Padding never destroys S_k: the original members still dominate.
    """
    if m_target < tau.m:
        raise TargetTooSmallError(f"target {m_target} below current size {tau.m}")
    if m_target == tau.m:
        return tau
    orient = fill.orient_fn()
    members = list(tau.tournaments)
    for _ in range(m_target - tau.m):
        members.append(_arbitrary_tournament(tau.n, orient))
    return TournamentSet(tuple(members))


def rotational_set(k: int, fill: FillPolicy = FillPolicy()) -> TournamentSet:
    """(k+1)-set on k+1 vertices where vertex i beats everyone in member i.

    Every k-subset misses exactly one vertex i, and i dominates it in
    member i, so the set is S_k at the smallest possible order k+1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = k + 1
    orient = fill.orient_fn()
    members = []
    for i in range(n):
        out = [0] * n
        out[i] = ((1 << n) - 1) & ~(1 << i)
        for a, b in combinations(range(n), 2):
            if a == i or b == i:
                continue
            if orient(a, b):
                out[a] |= 1 << b
            else:
                out[b] |= 1 << a
        members.append(Tournament(n, tuple(out)))
    return TournamentSet(tuple(members))


def combine(
    tau1: TournamentSet, tau2: TournamentSet, fill: FillPolicy = FillPolicy()
) -> TournamentSet:
    """Block construction joining an S_k1 set and an S_k2 set into an S_(k1+k2+1) set.

    tau1 keeps labels 0..n1-1 and tau2 shifts up to n1..n1+n2-1.  The first
    m1 members copy tau1 on the low block and point every low vertex at
    every high vertex; the last m2 members copy tau2 on the high block and
    point every high vertex at every low vertex.  The leftover within-block
    edges (high-block edges of the first m1 members, low-block edges of the
    last m2) follow the fill policy.

    Any subset of size k1+k2+1 meets one block in at most its k budget, and
    the dominator found there also beats the whole other block.
    """
    n1, n2 = tau1.n, tau2.n
    n = n1 + n2
    low_mask = (1 << n1) - 1
    high_mask = ((1 << n) - 1) ^ low_mask
    orient = fill.orient_fn()
    members = []
    for t in tau1.tournaments:
        out = [0] * n
        for i in range(n1):
            out[i] = t.out[i] | high_mask
        for a, b in combinations(range(n1, n), 2):
            if orient(a, b):
                out[a] |= 1 << b
            else:
                out[b] |= 1 << a
        members.append(Tournament(n, tuple(out)))
    for t in tau2.tournaments:
        out = [0] * n
        for i in range(n2):
            out[n1 + i] = (t.out[i] << n1) | low_mask
        for a, b in combinations(range(n1), 2):
            if orient(a, b):
                out[a] |= 1 << b
            else:
                out[b] |= 1 << a
        members.append(Tournament(n, tuple(out)))
    return TournamentSet(tuple(members))
