"""Exact multi-roll dice odds, realized tournaments, and the game advisor.

Everything a decision rests on is exact: sum distributions are integer
outcome counts, odds are rationals with arbitrary-precision numerators.
Floats appear only when formatting for display.  A die "beats" another at
r rolls when the probability its r-roll sum is strictly higher exceeds
one half.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .tournament import Tournament, TournamentSet

MAX_ROLLS = 64

HALF = Fraction(1, 2)


class TiedPairError(ValueError):
    """Two dice are exactly even at some roll count."""

    def __init__(self, i: int, j: int, r: int):
        super().__init__(f"dice {i} and {j} are exactly even at {r} roll(s)")
        self.i, self.j, self.r = i, j, r


class MarginViolationError(ValueError):
    """Neither die clears the required winning margin at some roll count."""

    def __init__(self, i: int, j: int, r: int, win: Fraction):
        super().__init__(
            f"dice {i} and {j}: best winning probability {win} at {r} roll(s) "
            f"is inside the margin"
        )
        self.i, self.j, self.r = i, j, r
        self.win = win


class UnknownLabelError(KeyError):
    """A die label is not in the set."""


class NoDominatingChoiceError(ValueError):
    """No (die, rolls) choice beats every opponent; carries the odds matrix."""

    def __init__(self, opponents: Sequence[str], matrix: list[tuple[int, str, tuple["WinOdds", ...]]]):
        super().__init__(
            f"no die beats every one of {list(opponents)} at any examined roll count"
        )
        self.opponents = tuple(opponents)
        self.matrix = matrix


@dataclass(frozen=True)
class Die:
    """Labeled die with uniform faces; faces stored sorted as canonical form."""

    label: str
    faces: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.faces:
            raise ValueError(f"die {self.label!r} has no faces")
        if not all(isinstance(f, int) for f in self.faces):
            raise ValueError(f"die {self.label!r} has non-integer faces")
        object.__setattr__(self, "faces", tuple(sorted(self.faces)))


@dataclass(frozen=True)
class DiceSet:
    """Named, ordered collection of dice with distinct labels."""

    name: str
    dice: tuple[Die, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dice", tuple(self.dice))
        labels = [d.label for d in self.dice]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate die labels in {self.name!r}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(d.label for d in self.dice)

    def __len__(self) -> int:
        return len(self.dice)

    def __getitem__(self, idx: int) -> Die:
        return self.dice[idx]

    def index_of(self, label: str) -> int:
        for i, d in enumerate(self.dice):
            if d.label == label:
                return i
        raise UnknownLabelError(f"no die labeled {label!r} in {self.name!r}")


@dataclass(frozen=True)
class SumDistribution:
    """Exact outcome counts of the sum of r independent rolls."""

    r: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@lru_cache(maxsize=4096)
def _sum_counts(faces: tuple[int, ...], r: int) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for f in faces:
        counts[f] = counts.get(f, 0) + 1
    for _ in range(r - 1):
        nxt: dict[int, int] = {}
        for s, c in counts.items():
            for f in faces:
                nxt[s + f] = nxt.get(s + f, 0) + c
        counts = nxt
    return tuple(sorted(counts.items()))


def sum_distribution(d: Die, r: int) -> SumDistribution:
    """r-fold convolution of the face multiset, as exact integer counts."""
    if not 1 <= r <= MAX_ROLLS:
        raise ValueError(f"roll count {r} outside 1..{MAX_ROLLS}")
    return SumDistribution(r, dict(_sum_counts(d.faces, r)))


@dataclass(frozen=True)
class WinOdds:
    """Exact (win, tie, loss) probabilities for one ordered die pair."""

    win: Fraction
    tie: Fraction
    loss: Fraction

    def __post_init__(self) -> None:
        if self.win + self.tie + self.loss != 1:
            raise ValueError("win + tie + loss must be exactly 1")

    def flipped(self) -> "WinOdds":
        return WinOdds(self.loss, self.tie, self.win)


def win_odds(a: Die, b: Die, r: int) -> WinOdds:
    """Exact P(a's r-roll sum > b's), P(=), P(<)."""
    ca = _sum_counts(a.faces, r)
    cb = _sum_counts(b.faces, r)
    if not 1 <= r <= MAX_ROLLS:
        raise ValueError(f"roll count {r} outside 1..{MAX_ROLLS}")
    total = len(a.faces) ** r * len(b.faces) ** r
    win = tie = 0
    # cb is sorted; sweep a's sums against a running prefix of b's counts
    bi = 0
    below = 0
    for sa, na in ca:
        while bi < len(cb) and cb[bi][0] < sa:
            below += cb[bi][1]
            bi += 1
        win += na * below
        if bi < len(cb) and cb[bi][0] == sa:
            tie += na * cb[bi][1]
    return WinOdds(
        Fraction(win, total), Fraction(tie, total), Fraction(total - win - tie, total)
    )


def tournament_at(ds: DiceSet, r: int, margin: Fraction | int = 0) -> Tournament:
    """Tournament on the dice: edge i -> j iff i beats j at r rolls.

    Winning means strictly clearing 1/2 + margin; an exactly even pair or
    a pair inside the margin raises rather than guessing an orientation.
    """
    margin = Fraction(margin)
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    n = len(ds)
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            odds = win_odds(ds[i], ds[j], r)
            if odds.win > HALF + margin:
                out[i] |= 1 << j
            elif odds.loss > HALF + margin:
                out[j] |= 1 << i
            elif odds.win == odds.loss:
                raise TiedPairError(i, j, r)
            else:
                raise MarginViolationError(i, j, r, max(odds.win, odds.loss))
    return Tournament(n, tuple(out))


def realized_set(ds: DiceSet, m: int, margin: Fraction | int = 0) -> TournamentSet:
    """The tournaments realized at 1..m rolls, as a tournament set."""
    if m < 1:
        raise ValueError("need m >= 1")
    return TournamentSet(tuple(tournament_at(ds, r, margin) for r in range(1, m + 1)))


@dataclass(frozen=True)
class WinDigraph:
    """Strict expected-win relation among the dice at one roll count.

    Unlike a tournament this may leave pairs unresolved: neither die's
    winning probability clears 1/2 plus the margin.  Domination claims
    over these digraphs use only the strict arrows, so they stay valid
    no matter how an unresolved pair would have been forced.
    """

    r: int
    n: int
    out: tuple[int, ...]
    unresolved: tuple[tuple[int, int], ...]

    @property
    def complete(self) -> bool:
        return not self.unresolved

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j) for i in range(self.n) for j in range(self.n) if self.out[i] >> j & 1
        ]

    def out_degree(self, i: int) -> int:
        return self.out[i].bit_count()

    def to_tournament(self) -> Tournament:
        if not self.complete:
            i, j = self.unresolved[0]
            raise ValueError(f"pair ({i}, {j}) unresolved at {self.r} roll(s)")
        return Tournament(self.n, self.out)


def win_digraph(ds: DiceSet, r: int, margin: Fraction | int = 0) -> WinDigraph:
    """Strict-win digraph at r rolls; unresolved pairs recorded, never raised."""
    margin = Fraction(margin)
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    n = len(ds)
    out = [0] * n
    unresolved = []
    for i in range(n):
        for j in range(i + 1, n):
            odds = win_odds(ds[i], ds[j], r)
            if odds.win > HALF + margin:
                out[i] |= 1 << j
            elif odds.loss > HALF + margin:
                out[j] |= 1 << i
            else:
                unresolved.append((i, j))
    return WinDigraph(r, n, tuple(out), tuple(unresolved))


def realized_relations(ds: DiceSet, m: int, margin: Fraction | int = 0) -> tuple[WinDigraph, ...]:
    """Strict-win digraphs at 1..m rolls."""
    if m < 1:
        raise ValueError("need m >= 1")
    return tuple(win_digraph(ds, r, margin) for r in range(1, m + 1))


def relations_are_sk(relations: Sequence[WinDigraph], k: int) -> bool:
    """Set-level S_k over strict-win digraphs: arrows only, no guessed edges.

    Same conventions as the tournament predicate: k = 0 needs a nonempty
    vertex set, k >= n fails.  When every digraph is complete this agrees
    with is_sk on the corresponding tournament set.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not relations:
        raise ValueError("need at least one digraph")
    n = relations[0].n
    if any(g.n != n for g in relations):
        raise ValueError("all digraphs must share one vertex set")
    if k == 0:
        return n >= 1
    if k >= n:
        return False
    masks = [om for g in relations for om in g.out]
    for combo in combinations(range(n), k):
        u = 0
        for v in combo:
            u |= 1 << v
        if not any(om & u == u for om in masks):
            return False
    return True


@dataclass(frozen=True)
class Advice:
    """Recommended die and roll count, with exact odds per opponent."""

    label: str
    rolls: int
    odds: tuple[WinOdds, ...]


def advise(ds: DiceSet, opponents: Sequence[str], m: int) -> Advice:
    """Smallest (rolls, die index) beating every opponent with probability > 1/2.

    Fewest rolls first, then lowest die index.  Opponent dice can never
    recommend themselves (a die is at best even against itself).  When the
    set lacks a dominating choice entirely, the error carries the full
    odds matrix for inspection.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if len(set(opponents)) != len(opponents):
        raise ValueError("opponent labels must be distinct")
    if len(opponents) > len(ds) - 1:
        raise ValueError("too many opponents for this set")
    opp_dice = [ds[ds.index_of(label)] for label in opponents]
    matrix: list[tuple[int, str, tuple[WinOdds, ...]]] = []
    for r in range(1, m + 1):
        for die in ds.dice:
            odds = tuple(win_odds(die, opp, r) for opp in opp_dice)
            matrix.append((r, die.label, odds))
            if all(o.win > HALF for o in odds):
                return Advice(die.label, r, odds)
    raise NoDominatingChoiceError(opponents, matrix)


@dataclass(frozen=True)
class SimTally:
    """Empirical outcome counts of repeated seeded roll-offs."""

    wins: int
    ties: int
    losses: int

    @property
    def trials(self) -> int:
        return self.wins + self.ties + self.losses


def simulate(a: Die, b: Die, r: int, trials: int, seed: int) -> SimTally:
    """Reproducible pseudo-random roll-off tally for die a against die b."""
    if trials < 1:
        raise ValueError("need at least one trial")
    if not 1 <= r <= MAX_ROLLS:
        raise ValueError(f"roll count {r} outside 1..{MAX_ROLLS}")
    rng = random.Random(seed)
    fa, fb = a.faces, b.faces
    wins = ties = losses = 0
    for _ in range(trials):
        sa = sum(rng.choice(fa) for _ in range(r))
        sb = sum(rng.choice(fb) for _ in range(r))
        if sa > sb:
            wins += 1
        elif sa == sb:
            ties += 1
        else:
            losses += 1
    return SimTally(wins, ties, losses)


def jeffries_five() -> DiceSet:
    """The canonical five-dice fixture: die r is expected to win at r rolls."""
    faces = [(10, 10, 10), (0, 0, 30), (7, 7, 19), (9, 9, 14), (3, 3, 26)]
    return DiceSet(
        "jeffries-five",
        tuple(Die(f"D{i + 1}", f) for i, f in enumerate(faces)),
    )


def min_edge_win(ds: DiceSet, m: int) -> Fraction:
    """Smallest winning probability over every strict arrow at 1..m rolls."""
    best: Fraction | None = None
    for g in realized_relations(ds, m):
        for i, j in g.edges():
            w = win_odds(ds[i], ds[j], g.r).win
            if best is None or w < best:
                best = w
    if best is None:
        raise ValueError("no strict arrows at any examined roll count")
    return best
