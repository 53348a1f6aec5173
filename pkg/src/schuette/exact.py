"""Exact minimal-order computation via SAT, with an enumeration cross-check.

exists_sk_set decides one (m, k, n) instance and returns a verdict whose
SAT certificates are always decoded and re-verified against the domination
predicate before being reported.  f_exact walks n upward collecting UNSAT
attestations until the first satisfiable order.  brute_force_exists is the
independent oracle: plain enumeration of every orientation of every
member, vectorized but with no shared logic with the solver path.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .bounds import BaseTableExhaustedError, split_dp_upper
from .cnf import SymmetryOptions, VarMap, encode
from .solver import Budget, SolverConfig, SolverStats, solve
from .tournament import Tournament, TournamentSet, is_sk

BRUTE_FORCE_BIT_CAP = 22


class InconsistentEdgesError(ValueError):
    """A decoded assignment orients some pair both ways or neither."""


class CapExceededError(ValueError):
    """Brute-force enumeration asked for more than 2^22 candidates."""


def decode(model: dict[int, bool], vm: VarMap) -> TournamentSet:
    """Read the tournament set off the edge variables of an assignment."""
    members = []
    for t in range(vm.m):
        out = [0] * vm.n
        for i, j in combinations(range(vm.n), 2):
            fwd = model.get(vm.e(t, i, j))
            bwd = model.get(vm.e(t, j, i))
            if fwd is None or bwd is None:
                raise InconsistentEdgesError(f"pair ({i},{j}) of member {t} unassigned")
            if fwd == bwd:
                raise InconsistentEdgesError(
                    f"pair ({i},{j}) of member {t} oriented {'both ways' if fwd else 'neither way'}"
                )
            if fwd:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        members.append(Tournament(vm.n, tuple(out)))
    return TournamentSet(tuple(members))


@dataclass(frozen=True)
class SearchVerdict:
    """Outcome of one existence instance; SAT always carries a certificate."""

    status: str  # "SAT" | "UNSAT" | "UNKNOWN"
    m: int
    k: int
    n: int
    certificate: TournamentSet | None
    stats: SolverStats
    config_hash: str


def _config_hash(m: int, k: int, n: int, sym: SymmetryOptions, config: SolverConfig) -> str:
    text = f"m={m},k={k},n={n},fix={sym.fix_first_edge},lex={sym.lex_members},{config.describe()}"
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def exists_sk_set(
    m: int,
    k: int,
    n: int,
    sym: SymmetryOptions = SymmetryOptions(),
    budget: Budget | None = None,
    config: SolverConfig = SolverConfig(),
) -> SearchVerdict:
    """Decide whether an S_k m-set of order n exists.

    A SAT answer is decoded and re-checked with the domination predicate
    unconditionally; a failure there would mean a solver bug and raises.
    """
    f, vm = encode(m, k, n, sym)
    outcome = solve(f, budget, config)
    cert = None
    if outcome.status == "SAT":
        assert outcome.model is not None
        cert = decode(outcome.model, vm)
        if not is_sk(cert, k):
            raise RuntimeError(
                f"solver certificate for (m={m}, k={k}, n={n}) fails the S_k check"
            )
    return SearchVerdict(
        outcome.status, m, k, n, cert, outcome.stats, _config_hash(m, k, n, sym, config)
    )


@dataclass(frozen=True)
class UnsatAttestation:
    """Record that the embedded solver refuted order n (stats + config hash)."""

    n: int
    decisions: int
    conflicts: int
    elapsed: float
    config_hash: str


@dataclass
class FExactReport:
    """Result of the upward scan for the least satisfiable order."""

    m: int
    k: int
    value: int | None = None
    certificate: TournamentSet | None = None
    attestations: list[UnsatAttestation] = field(default_factory=list)
    unknown_orders: list[int] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def exact(self) -> bool:
        """True when every order below value was refuted outright."""
        return self.value is not None and not self.unknown_orders

    def bracket(self) -> tuple[int, int | None]:
        """(least unrefuted order, least known satisfiable order or None)."""
        refuted = {a.n for a in self.attestations}
        lo = self.k + 1
        while lo in refuted:
            lo += 1
        return lo, self.value


def f_exact(
    m: int,
    k: int,
    n_max: int | None = None,
    budget: Budget | None = None,
    sym: SymmetryOptions = SymmetryOptions(),
    config: SolverConfig = SolverConfig(),
) -> FExactReport:
    """Scan n = k+1, k+2, ... for the least order carrying an S_k m-set.

    Every refuted order is attested; the first SAT order is certified and
    ends the scan.  A budget exhaustion records the order as unknown and
    the scan continues upward, so the report can still bracket the value.
    Existence is monotone in the order, which makes the first SAT hit the
    minimum whenever all smaller orders were refuted.
    """
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    if n_max is None:
        try:
            n_max = split_dp_upper(m, k).upper
        except BaseTableExhaustedError:
            raise ValueError(
                f"no known upper bound for f({m},{k}); pass n_max explicitly"
            ) from None
    report = FExactReport(m=m, k=k)
    start = time.monotonic()
    for n in range(k + 1, n_max + 1):
        verdict = exists_sk_set(m, k, n, sym, budget, config)
        if verdict.status == "SAT":
            report.value = n
            report.certificate = verdict.certificate
            break
        if verdict.status == "UNSAT":
            report.attestations.append(
                UnsatAttestation(
                    n,
                    verdict.stats.decisions,
                    verdict.stats.conflicts,
                    verdict.stats.elapsed,
                    verdict.config_hash,
                )
            )
        else:
            report.unknown_orders.append(n)
    report.elapsed = time.monotonic() - start
    return report


def brute_force_exists(m: int, k: int, n: int) -> bool:
    """Exhaustive oracle: does any orientation choice give an S_k m-set?

    Enumerates all 2^(m*C(n,2)) candidate sets, capped at 2^22.  Candidates
    are filtered subset by subset with survivor compaction, entirely
    independent of the CNF encoding and solver.
    """
    if m < 1 or k < 0 or n < 0:
        raise ValueError("need m >= 1, k >= 0, n >= 0")
    bits = m * comb(n, 2)
    if bits > BRUTE_FORCE_BIT_CAP:
        raise CapExceededError(f"{bits} edge bits exceeds the {BRUTE_FORCE_BIT_CAP}-bit cap")
    if k == 0:
        return n >= 1
    if k >= n:
        return False

    pairs = list(combinations(range(n), 2))
    subs = [sum(1 << v for v in c) for c in combinations(range(n), k)]
    chunk = 1 << 20
    for base in range(0, 1 << bits, chunk):
        cand = np.arange(base, min(base + chunk, 1 << bits), dtype=np.uint32)
        out = np.zeros((m, n, cand.size), dtype=np.uint8)
        bit = 0
        for t in range(m):
            for i, j in pairs:
                fwd = ((cand >> np.uint32(bit)) & np.uint32(1)).astype(np.uint8)
                out[t, i] |= fwd << j
                out[t, j] |= (1 - fwd) << i
                bit += 1
        alive = out
        for u in subs:
            dom = np.zeros(alive.shape[2], dtype=bool)
            for t in range(m):
                for v in range(n):
                    dom |= (alive[t, v] & u) == u
            if not dom.any():
                break
            alive = alive[:, :, dom]
        else:
            if alive.shape[2]:
                return True
    return False
