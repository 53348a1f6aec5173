"""Complete CNF solver: watched-literal search with optional clause learning.

Two modes share one propagation core.  The default learns 1UIP clauses
with non-chronological backjumping, phase saving, and Luby restarts; the
plain mode is classic chronological backtracking (flip the most recent
unflipped decision).  Both are complete and deterministic for a fixed
configuration.  Binary clauses propagate through implication lists, longer
clauses through two watched literals.

Literals are handled internally as codes: variable v is 2v (positive) or
2v+1 (negative), so negation is an xor.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from heapq import heappop, heappush

from .cnf import CnfFormula


@dataclass(frozen=True)
class SolverConfig:
    """Deterministic solver knobs; describe() feeds attestation hashes."""

    learn: bool = True
    heuristic: str = "activity"  # "activity" (VSIDS-style) or "index"
    default_phase: bool = True
    restart_base: int = 256
    max_learnts: int = 4000

    def __post_init__(self) -> None:
        if self.heuristic not in ("activity", "index"):
            raise ValueError(f"unknown heuristic {self.heuristic!r}")

    def describe(self) -> str:
        return (
            f"learn={self.learn},heuristic={self.heuristic},"
            f"phase={self.default_phase},restart={self.restart_base},"
            f"maxlearnts={self.max_learnts}"
        )


@dataclass(frozen=True)
class Budget:
    """Caps that turn a run into an Unknown verdict, never a wrong one."""

    max_seconds: float | None = None
    max_decisions: int | None = None
    max_conflicts: int | None = None


@dataclass
class SolverStats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    restarts: int = 0
    learned: int = 0
    elapsed: float = 0.0


@dataclass
class SolveOutcome:
    """status is "SAT", "UNSAT", or "UNKNOWN" (budget exhausted)."""

    status: str
    model: dict[int, bool] | None
    stats: SolverStats


def _luby(i: int) -> int:
    """Luby restart sequence 1, 1, 2, 1, 1, 2, 4, ... for i = 0, 1, 2, ..."""
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i %= size
    return 1 << seq


class _Engine:
    def __init__(self, f: CnfFormula, config: SolverConfig):
        nv = f.var_count
        self.nv = nv
        self.config = config
        self.val = [0] * (2 * nv + 2)  # per literal code: 1 true, -1 false
        self.bin_imp: list[list[int]] = [[] for _ in range(2 * nv + 2)]
        self.watches: list[list[list[int]]] = [[] for _ in range(2 * nv + 2)]
        self.long_clauses: list[list[int]] = []
        self.learnt_clauses: list[list[int]] = []
        self.lbd: dict[int, int] = {}
        self.levels = [0] * (nv + 1)
        self.reasons: list[list[int] | None] = [None] * (nv + 1)
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.flipped: list[bool] = []
        self.qhead = 0
        self.root_units: list[int] = []
        self.unsat_at_root = False
        self.saved_phase = [config.default_phase] * (nv + 1)
        self.activity = [0.0] * (nv + 1)
        self.act_inc = 1.0
        self.heap: list = []
        self.seen = bytearray(nv + 1)
        self.stats = SolverStats()
        self.max_learnts = config.max_learnts
        for clause in f.clauses:
            self._add_input_clause(clause)

    # -- clause intake ------------------------------------------------

    def _add_input_clause(self, lits: list[int]) -> None:
        codes = []
        seen = set()
        for lit in lits:
            c = (lit << 1) if lit > 0 else ((-lit) << 1) | 1
            if c ^ 1 in seen:
                return  # tautology
            if c not in seen:
                seen.add(c)
                codes.append(c)
        if len(codes) == 1:
            self.root_units.append(codes[0])
        elif len(codes) == 2:
            a, b = codes
            self.bin_imp[a].append(b)  # keyed by the falsified literal
            self.bin_imp[b].append(a)
        else:
            self._attach(codes)

    def _attach(self, codes: list[int]) -> None:
        self.watches[codes[0]].append(codes)
        self.watches[codes[1]].append(codes)
        self.long_clauses.append(codes)

    # -- assignment ---------------------------------------------------

    def _assign(self, code: int, reason: list[int] | None) -> None:
        self.val[code] = 1
        self.val[code ^ 1] = -1
        v = code >> 1
        self.levels[v] = len(self.trail_lim)
        self.reasons[v] = reason
        self.trail.append(code)

    def _backtrack(self, to_level: int) -> None:
        if len(self.trail_lim) <= to_level:
            return
        limit = self.trail_lim[to_level]
        heap = self.heap
        by_index = self.config.heuristic == "index"
        for code in reversed(self.trail[limit:]):
            v = code >> 1
            self.saved_phase[v] = not (code & 1)
            self.val[code] = 0
            self.val[code ^ 1] = 0
            self.reasons[v] = None
            if by_index:
                heappush(heap, v)
            else:
                heappush(heap, (-self.activity[v], v))
        del self.trail[limit:]
        del self.trail_lim[to_level:]
        del self.flipped[to_level:]
        self.qhead = len(self.trail)

    # -- propagation --------------------------------------------------

    def _propagate(self) -> list[int] | None:
        """Exhaust pending implications; return a falsified clause or None."""
        val = self.val
        trail = self.trail
        while self.qhead < len(trail):
            code = trail[self.qhead]
            self.qhead += 1
            self.stats.propagations += 1
            fc = code ^ 1
            for w in self.bin_imp[fc]:
                vw = val[w]
                if vw < 0:
                    return [w, fc]
                if vw == 0:
                    self._assign(w, [w, fc])
            wl = self.watches[fc]
            i = j = 0
            ln = len(wl)
            while i < ln:
                cl = wl[i]
                i += 1
                if cl[0] == fc:
                    cl[0] = cl[1]
                    cl[1] = fc
                first = cl[0]
                if val[first] > 0:
                    wl[j] = cl
                    j += 1
                    continue
                moved = False
                for p in range(2, len(cl)):
                    lp = cl[p]
                    if val[lp] >= 0:
                        cl[1] = lp
                        cl[p] = fc
                        self.watches[lp].append(cl)
                        moved = True
                        break
                if moved:
                    continue
                wl[j] = cl
                j += 1
                if val[first] < 0:
                    while i < ln:
                        wl[j] = wl[i]
                        j += 1
                        i += 1
                    del wl[j:]
                    return cl
                self._assign(first, cl)
            del wl[j:]
        return None

    # -- heuristics ---------------------------------------------------

    def _init_heap(self) -> None:
        if self.config.heuristic == "index":
            self.heap = list(range(1, self.nv + 1))
        else:
            self.heap = [(0.0, v) for v in range(1, self.nv + 1)]

    def _decide(self) -> bool:
        val = self.val
        heap = self.heap
        if self.config.heuristic == "index":
            while heap:
                v = heappop(heap)
                if val[v << 1] == 0:
                    break
            else:
                return False
        else:
            while heap:
                _, v = heappop(heap)
                if val[v << 1] == 0:
                    break
            else:
                return False
        self.stats.decisions += 1
        self.trail_lim.append(len(self.trail))
        self.flipped.append(False)
        code = (v << 1) | (0 if self.saved_phase[v] else 1)
        self._assign(code, None)
        return True

    def _bump(self, v: int) -> None:
        act = self.activity[v] + self.act_inc
        self.activity[v] = act
        if act > 1e100:
            scale = 1e-100
            for u in range(1, self.nv + 1):
                self.activity[u] *= scale
            self.act_inc *= scale
            act = self.activity[v]
        if self.val[v << 1] == 0:
            heappush(self.heap, (-act, v))

    # -- learning -----------------------------------------------------

    def _analyze(self, conflict: list[int]) -> tuple[list[int], int, int]:
        """1UIP resolution; returns (learned codes, backjump level, lbd)."""
        seen = self.seen
        levels = self.levels
        cur = len(self.trail_lim)
        learned: list[int] = []
        to_clear: list[int] = []
        counter = 0
        p = -1
        idx = len(self.trail) - 1
        cl = conflict
        bump = self._bump if self.config.heuristic == "activity" else None
        while True:
            for q in cl:
                if q == p:
                    continue
                v = q >> 1
                if seen[v] or levels[v] == 0:
                    continue
                seen[v] = 1
                to_clear.append(v)
                if bump:
                    bump(v)
                if levels[v] >= cur:
                    counter += 1
                else:
                    learned.append(q)
            while not seen[self.trail[idx] >> 1]:
                idx -= 1
            p = self.trail[idx]
            v = p >> 1
            idx -= 1
            counter -= 1
            if counter == 0:
                break
            cl = self.reasons[v]  # type: ignore[assignment]
        # basic self-subsumption: a literal is redundant when its whole reason
        # already lies inside the seen set (clause plus resolved vars) or at
        # level 0, so resolving it away only shortens the clause
        filtered = []
        for q in learned:
            cl = self.reasons[q >> 1]
            if cl is not None and all(
                l >> 1 == q >> 1 or seen[l >> 1] or levels[l >> 1] == 0 for l in cl
            ):
                continue
            filtered.append(q)
        learned = filtered
        learned.insert(0, p ^ 1)
        for v in to_clear:
            seen[v] = 0
        if len(learned) == 1:
            return learned, 0, 1
        bj = max(levels[q >> 1] for q in learned[1:])
        lbd = len({levels[q >> 1] for q in learned[1:]}) + 1
        return learned, bj, lbd

    def _record(self, learned: list[int], lbd: int) -> None:
        """Attach a learned clause and assert its first literal."""
        self.stats.learned += 1
        if len(learned) == 1:
            self._assign(learned[0], None)
        elif len(learned) == 2:
            a, b = learned
            self.bin_imp[a].append(b)
            self.bin_imp[b].append(a)
            self._assign(a, learned)
        else:
            # watch the asserting literal and a deepest remaining literal
            deepest = max(range(1, len(learned)), key=lambda p: self.levels[learned[p] >> 1])
            learned[1], learned[deepest] = learned[deepest], learned[1]
            self.watches[learned[0]].append(learned)
            self.watches[learned[1]].append(learned)
            self.learnt_clauses.append(learned)
            self.lbd[id(learned)] = lbd
            self._assign(learned[0], learned)

    def _reduce_db(self) -> None:
        locked = {id(r) for r in self.reasons if r is not None}
        keep_always = [
            c for c in self.learnt_clauses
            if id(c) in locked or self.lbd.get(id(c), 99) <= 3
        ]
        rest = [
            c for c in self.learnt_clauses
            if id(c) not in locked and self.lbd.get(id(c), 99) > 3
        ]
        rest.sort(key=lambda c: (self.lbd.get(id(c), 99), len(c)))
        kept = keep_always + rest[: len(rest) // 2]
        self.learnt_clauses = kept
        kept_ids = {id(c) for c in kept}
        self.lbd = {i: l for i, l in self.lbd.items() if i in kept_ids}
        for wl in self.watches:
            wl.clear()
        for cl in self.long_clauses:
            self.watches[cl[0]].append(cl)
            self.watches[cl[1]].append(cl)
        for cl in kept:
            self.watches[cl[0]].append(cl)
            self.watches[cl[1]].append(cl)
        self.max_learnts += self.max_learnts // 2

    # -- main loops ---------------------------------------------------

    def solve(self, budget: Budget | None) -> SolveOutcome:
        budget = budget or Budget()
        start = time.monotonic()
        outcome = self._run(budget, start)
        self.stats.elapsed = time.monotonic() - start
        return SolveOutcome(outcome[0], outcome[1], self.stats)

    def _out_of_budget(self, budget: Budget, start: float) -> bool:
        if budget.max_decisions is not None and self.stats.decisions >= budget.max_decisions:
            return True
        if budget.max_conflicts is not None and self.stats.conflicts >= budget.max_conflicts:
            return True
        if budget.max_seconds is not None and time.monotonic() - start > budget.max_seconds:
            return True
        return False

    def _run(self, budget: Budget, start: float) -> tuple[str, dict[int, bool] | None]:
        self._init_heap()
        for code in self.root_units:
            if self.val[code] < 0:
                return "UNSAT", None
            if self.val[code] == 0:
                self._assign(code, None)
        if self._propagate() is not None:
            return "UNSAT", None

        learn = self.config.learn
        restart_idx = 0
        conflicts_until_restart = _luby(restart_idx) * self.config.restart_base
        check_tick = 0

        while True:
            conflict = self._propagate()
            if conflict is not None:
                self.stats.conflicts += 1
                if not self.trail_lim:
                    return "UNSAT", None
                if learn:
                    learned, bj, lbd = self._analyze(conflict)
                    self._backtrack(bj)
                    self._record(learned, lbd)
                    self.act_inc /= 0.95
                    conflicts_until_restart -= 1
                    if conflicts_until_restart <= 0:
                        restart_idx += 1
                        conflicts_until_restart = _luby(restart_idx) * self.config.restart_base
                        self.stats.restarts += 1
                        self._backtrack(0)
                    if len(self.learnt_clauses) > self.max_learnts:
                        self._reduce_db()
                else:
                    lvl = len(self.trail_lim)
                    while lvl > 0 and self.flipped[lvl - 1]:
                        lvl -= 1
                    if lvl == 0:
                        return "UNSAT", None
                    flip = self.trail[self.trail_lim[lvl - 1]] ^ 1
                    self._backtrack(lvl - 1)
                    self.trail_lim.append(len(self.trail))
                    self.flipped.append(True)
                    self._assign(flip, None)
                check_tick += 1
                if check_tick >= 256:
                    check_tick = 0
                    if self._out_of_budget(budget, start):
                        return "UNKNOWN", None
                continue
            if len(self.trail) == self.nv:
                model = {v: self.val[v << 1] > 0 for v in range(1, self.nv + 1)}
                return "SAT", model
            if self._out_of_budget(budget, start):
                return "UNKNOWN", None
            if not self._decide():
                model = {v: self.val[v << 1] > 0 for v in range(1, self.nv + 1)}
                return "SAT", model


def check_model(f: CnfFormula, model: dict[int, bool]) -> bool:
    """True iff the assignment satisfies every clause of the formula."""
    for clause in f.clauses:
        if not any(model.get(abs(lit), False) == (lit > 0) for lit in clause):
            return False
    return True


def solve(
    f: CnfFormula,
    budget: Budget | None = None,
    config: SolverConfig = SolverConfig(),
) -> SolveOutcome:
    """Decide a formula; SAT outcomes carry a model checked against every clause."""
    outcome = _Engine(f, config).solve(budget)
    if outcome.status == "SAT":
        assert outcome.model is not None
        if not check_model(f, outcome.model):
            raise RuntimeError("solver produced a non-satisfying model (solver bug)")
    return outcome
