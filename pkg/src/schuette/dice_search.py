"""Bounded search for dice sets realizing target tournaments.

Depth-first assignment of one canonical die at a time (faces sorted, drawn
with repetition from the allowed values), pruning as soon as a completed
pair disagrees with any target edge at any roll count.  The pruning is
exact, so an exhausted space genuinely contains no solution.  Every hit is
re-verified through the dice engine before being returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .dice import Die, DiceSet, realized_set, win_odds
from .tournament import Tournament, TournamentSet


@dataclass(frozen=True)
class SearchSpace:
    """Candidate dice: faces_per_die values drawn from 0..max_face.

    allowed_faces, when given, restricts the face values to a subset of
    that range.  max_nodes / max_seconds cap the search; exceeding either
    yields an "unknown" outcome instead of an answer.
    """

    faces_per_die: int
    max_face: int
    allowed_faces: tuple[int, ...] | None = None
    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self) -> None:
        if self.faces_per_die < 1:
            raise ValueError("need at least one face per die")
        if self.max_face < 0:
            raise ValueError("max_face must be nonnegative")
        if self.allowed_faces is not None:
            object.__setattr__(
                self, "allowed_faces", tuple(sorted(set(self.allowed_faces)))
            )
            for f in self.allowed_faces:
                if not 0 <= f <= self.max_face:
                    raise ValueError(f"allowed face {f} outside 0..{self.max_face}")

    def values(self) -> tuple[int, ...]:
        if self.allowed_faces is not None:
            return self.allowed_faces
        return tuple(range(self.max_face + 1))


@dataclass(frozen=True)
class DiceSearchResult:
    """status "found" (dice set attached), "exhausted", or "unknown"."""

    status: str
    dice: DiceSet | None
    nodes: int
    elapsed: float


@lru_cache(maxsize=65536)
def _beats(fa: tuple[int, ...], fb: tuple[int, ...], r: int) -> bool:
    """True iff faces fa beat faces fb strictly more than half the time at r rolls."""
    return win_odds(Die("a", fa), Die("b", fb), r).win > Fraction(1, 2)


def _pair_ok(fa: tuple[int, ...], fb: tuple[int, ...], targets: TournamentSet,
             i: int, j: int) -> bool:
    for r in range(1, targets.m + 1):
        want = targets[r - 1].beats(i, j)
        if want != _beats(fa, fb, r):
            return False
        if not want and not _beats(fb, fa, r):
            return False  # tie or sub-half either way: no strict winner
    return True


def search_multiroll(targets: TournamentSet, space: SearchSpace) -> DiceSearchResult:
    """Find dice whose realized tournaments at rolls 1..m equal the targets.

    Returns "found" with a verified set, "exhausted" when the whole
    canonical space was ruled out, or "unknown" on budget exhaustion.
    """
    n = targets.n
    start = time.monotonic()
    candidates = tuple(
        combinations_with_replacement(space.values(), space.faces_per_die)
    )
    chosen: list[tuple[int, ...]] = []
    nodes = 0
    out_of_budget = False

    def dfs() -> bool:
        nonlocal nodes, out_of_budget
        depth = len(chosen)
        if depth == n:
            return True
        for cand in candidates:
            nodes += 1
            if space.max_nodes is not None and nodes > space.max_nodes:
                out_of_budget = True
                return False
            if nodes % 256 == 0 and space.max_seconds is not None:
                if time.monotonic() - start > space.max_seconds:
                    out_of_budget = True
                    return False
            if all(
                _pair_ok(chosen[d], cand, targets, d, depth) for d in range(depth)
            ):
                chosen.append(cand)
                if dfs():
                    return True
                chosen.pop()
                if out_of_budget:
                    return False
        return False

    hit = dfs()
    elapsed = time.monotonic() - start
    if hit:
        ds = DiceSet("found", tuple(Die(f"D{i + 1}", f) for i, f in enumerate(chosen)))
        realized = realized_set(ds, targets.m)
        if tuple(realized) != tuple(targets):
            raise RuntimeError("search hit failed independent verification")
        return DiceSearchResult("found", ds, nodes, elapsed)
    if out_of_budget:
        return DiceSearchResult("unknown", None, nodes, elapsed)
    return DiceSearchResult("exhausted", None, nodes, elapsed)


def search_realization(target: Tournament, space: SearchSpace) -> DiceSearchResult:
    """Find dice realizing a single tournament at one roll."""
    return search_multiroll(TournamentSet((target,)), space)
