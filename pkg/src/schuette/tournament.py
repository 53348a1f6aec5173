"""Tournaments, tournament sets, and the dominating-vertex property S_k.

A tournament on n vertices is an orientation of the complete graph K_n.
Vertices are labeled 0..n-1 and adjacency is stored as one out-neighbor
bitmask per vertex, so a domination test is a single mask comparison.

A set of m tournaments on a shared vertex set is S_k when every k-subset
of vertices has, in at least one member tournament, a vertex directed at
all of its elements.  The single-tournament property is the m=1 case.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class SelfEdgeError(ValueError):
    """An edge (i, i) was supplied."""


class DuplicatePairError(ValueError):
    """Some unordered pair was oriented more than once."""


class MissingPairError(ValueError):
    """Some unordered pair has no orientation."""


class VertexOutOfRangeError(ValueError):
    """A vertex label lies outside 0..n-1."""


class VertexInSubsetError(ValueError):
    """Domination query placed the candidate vertex inside the subset."""


class NotPrimeError(ValueError):
    """Quadratic-residue construction needs a prime modulus."""


class BadResidueClassError(ValueError):
    """Quadratic-residue construction needs p = 3 (mod 4) for antisymmetry."""


def subset_mask(vertices: Iterable[int], n: int) -> int:
    """Pack vertex labels into a bitmask, checking the 0..n-1 range."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{n - 1}")
        mask |= 1 << v
    return mask


def mask_vertices(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into sorted vertex labels."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Tournament:
    """Complete antisymmetric digraph; out[i] is the bitmask of vertices i beats."""

    n: int
    out: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.out) != self.n:
            raise ValueError("need exactly one out-mask per vertex")
        full = (1 << self.n) - 1
        for i, mask in enumerate(self.out):
            if mask & ~full:
                raise VertexOutOfRangeError(f"out[{i}] has bits outside 0..{self.n - 1}")
            if mask >> i & 1:
                raise SelfEdgeError(f"vertex {i} beats itself")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                fwd = self.out[i] >> j & 1
                bwd = self.out[j] >> i & 1
                if fwd and bwd:
                    raise DuplicatePairError(f"pair ({i}, {j}) oriented both ways")
                if not fwd and not bwd:
                    raise MissingPairError(f"pair ({i}, {j}) has no orientation")

    @classmethod
    def from_edges(cls, n: int, beats: Iterable[tuple[int, int]]) -> "Tournament":
        """Build from explicit (winner, loser) pairs, one per unordered pair."""
        out = [0] * n
        seen: set[tuple[int, int]] = set()
        for i, j in beats:
            if not (0 <= i < n and 0 <= j < n):
                raise VertexOutOfRangeError(f"edge ({i}, {j}) not in 0..{n - 1}")
            if i == j:
                raise SelfEdgeError(f"self-edge ({i}, {i})")
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise DuplicatePairError(f"pair {key} oriented more than once")
            seen.add(key)
            out[i] |= 1 << j
        if len(seen) != n * (n - 1) // 2:
            i, j = next(p for p in combinations(range(n), 2) if p not in seen)
            raise MissingPairError(f"pair ({i}, {j}) has no orientation")
        return cls(n, tuple(out))

    def beats(self, i: int, j: int) -> bool:
        """True iff the edge between i and j points from i to j."""
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise VertexOutOfRangeError(f"({i}, {j}) not in 0..{self.n - 1}")
        return bool(self.out[i] >> j & 1)

    def out_degree(self, i: int) -> int:
        return self.out[i].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """All directed edges (winner, loser), winner-major order."""
        for i in range(self.n):
            for j in mask_vertices(self.out[i]):
                yield (i, j)


@dataclass(frozen=True)
class TournamentSet:
    """Ordered list of labeled tournaments on one shared vertex set."""

    tournaments: tuple[Tournament, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tournaments", tuple(self.tournaments))
        if not self.tournaments:
            raise ValueError("a tournament set needs at least one member")
        n = self.tournaments[0].n
        if any(t.n != n for t in self.tournaments):
            raise ValueError("all members must share one vertex set")

    @property
    def n(self) -> int:
        return self.tournaments[0].n

    @property
    def m(self) -> int:
        return len(self.tournaments)

    def __len__(self) -> int:
        return len(self.tournaments)

    def __iter__(self) -> Iterator[Tournament]:
        return iter(self.tournaments)

    def __getitem__(self, idx: int) -> Tournament:
        return self.tournaments[idx]


def dominates(t: Tournament, v: int, subset: Iterable[int]) -> bool:
    """True iff v is directed at every vertex of the subset (vacuously at none)."""
    mask = subset_mask(subset, t.n)
    if not 0 <= v < t.n:
        raise VertexOutOfRangeError(f"vertex {v} not in 0..{t.n - 1}")
    if mask >> v & 1:
        raise VertexInSubsetError(f"vertex {v} is inside the subset")
    return t.out[v] & mask == mask


def find_dominator(tau: TournamentSet, subset: Iterable[int]) -> tuple[int, int] | None:
    """Lexicographically least (member index, vertex) dominating the subset, if any.

    Vertices inside the subset never qualify: they lack a self-edge.
    """
    mask = subset_mask(subset, tau.n)
    for ti, t in enumerate(tau.tournaments):
        for v, om in enumerate(t.out):
            if om & mask == mask:
                return (ti, v)
    return None


def is_sk(tau: TournamentSet, k: int) -> bool:
    """Set-level S_k: every k-subset of vertices is dominated in some member.

    Conventions: k = 0 holds on any nonempty vertex set; k >= n fails, since
    no vertex can sit outside a candidate subset.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = tau.n
    if k == 0:
        return n >= 1
    if k >= n:
        return False
    masks = [om for t in tau.tournaments for om in t.out]
    for combo in combinations(range(n), k):
        u = 0
        for v in combo:
            u |= 1 << v
        if not any(om & u == u for om in masks):
            return False
    return True


def undominated_witness(tau: TournamentSet, k: int) -> tuple[int, ...] | None:
    """Lexicographically least k-subset with no dominator, or None.

    Subsets are enumerated as sorted tuples in lexicographic order, so the
    returned witness is reproducible.  None iff is_sk holds (for k < n).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = tau.n
    if k > n:
        raise ValueError(f"k = {k} exceeds the vertex count {n}")
    masks = [om for t in tau.tournaments for om in t.out]
    for combo in combinations(range(n), k):
        u = 0
        for v in combo:
            u |= 1 << v
        if not any(om & u == u for om in masks):
            return combo
    return None


def paley(p: int) -> Tournament:
    """Quadratic-residue tournament on a prime p = 3 (mod 4).

    Edge (i, j) present iff (j - i) mod p is a nonzero quadratic residue.
    The residue-class restriction makes -1 a non-residue, which is exactly
    what antisymmetry needs.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise NotPrimeError(f"{p} is not prime")
    if p % 4 != 3:
        raise BadResidueClassError(f"p = {p} is not 3 (mod 4); -1 would be a residue")
    residues = {x * x % p for x in range(1, p)}
    out = []
    for i in range(p):
        mask = 0
        for d in residues:
            mask |= 1 << ((i + d) % p)
        out.append(mask)
    return Tournament(p, tuple(out))
