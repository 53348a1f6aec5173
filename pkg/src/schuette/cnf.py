"""CNF encoding of "an S_k m-set on n vertices exists", plus DIMACS text.

Variables come in two banks.  Edge variables e(t,i,j) say vertex i beats
vertex j in member t; they are constrained in antisymmetric pairs.  Helper
variables d(t,A,i) say vertex i dominates the k-subset A in member t; each
implies its edges, and one covering clause per subset demands a dominator
somewhere.  The implication is one-sided on purpose: d variables occur
positively only in covering clauses, so forcing the reverse direction
would not change satisfiability.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import combinations
from math import comb


class TooSmallError(ValueError):
    """Encoding needs n >= k + 1 so a dominator can sit outside the subset."""


@dataclass
class CnfFormula:
    """Clause database over variables 1..var_count."""

    var_count: int = 0
    clauses: list[list[int]] = field(default_factory=list)

    def add(self, lits: list[int]) -> None:
        if not lits:
            raise ValueError("empty clause at construction")
        for lit in lits:
            if lit == 0 or abs(lit) > self.var_count:
                raise ValueError(f"literal {lit} outside 1..{self.var_count}")
        self.clauses.append(lits)

    def new_var(self) -> int:
        self.var_count += 1
        return self.var_count


@dataclass(frozen=True)
class SymmetryOptions:
    """Optional satisfiability-preserving clauses added by encode.

    fix_first_edge pins the 0->1 edge of the first member; lex_members
    orders the members' edge vectors non-increasingly; vertex_lex demands
    the concatenated edge vector be lexicographically no smaller than its
    image under every vertex transposition.  All are lex-leader
    constraints for one group action (vertex relabelings combined with
    member reordering), so the lex-greatest assignment in any model's
    orbit satisfies every one of them jointly.
    """

    fix_first_edge: bool = True
    lex_members: bool = True
    vertex_lex: bool = True


@dataclass(frozen=True)
class VarMap:
    """Bijective variable indexing: e bank first, then the d bank by subset."""

    m: int
    k: int
    n: int
    subsets: tuple[tuple[int, ...], ...]
    outsides: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, m: int, k: int, n: int) -> "VarMap":
        subsets = tuple(combinations(range(n), k))
        outsides = tuple(
            tuple(v for v in range(n) if v not in set(a)) for a in subsets
        )
        return cls(m, k, n, subsets, outsides)

    @property
    def e_count(self) -> int:
        return self.m * self.n * (self.n - 1)

    @property
    def d_count(self) -> int:
        return self.m * comb(self.n, self.k) * (self.n - self.k)

    @property
    def var_count(self) -> int:
        return self.e_count + self.d_count

    def e(self, t: int, i: int, j: int) -> int:
        """Variable for "i beats j in member t"."""
        col = j - 1 if j > i else j
        return 1 + (t * self.n + i) * (self.n - 1) + col

    def d(self, t: int, subset_idx: int, v: int) -> int:
        """Variable for "v dominates subset subset_idx in member t"."""
        outside = self.outsides[subset_idx]
        r = bisect_left(outside, v)
        per_subset = self.n - self.k
        return (
            self.e_count
            + 1
            + (t * len(self.subsets) + subset_idx) * per_subset
            + r
        )

    def decode_var(self, var: int) -> tuple:
        """Inverse lookup: ("e", t, i, j) or ("d", t, subset, v)."""
        if not 1 <= var <= self.var_count:
            raise ValueError(f"variable {var} outside the e/d banks")
        if var <= self.e_count:
            idx = var - 1
            col = idx % (self.n - 1)
            ti = idx // (self.n - 1)
            i = ti % self.n
            t = ti // self.n
            j = col if col < i else col + 1
            return ("e", t, i, j)
        idx = var - self.e_count - 1
        per_subset = self.n - self.k
        r = idx % per_subset
        ts = idx // per_subset
        s = ts % len(self.subsets)
        t = ts // len(self.subsets)
        return ("d", t, self.subsets[s], self.outsides[s][r])


def encode(
    m: int, k: int, n: int, sym: SymmetryOptions = SymmetryOptions()
) -> tuple[CnfFormula, VarMap]:
    """Build the existence formula for an S_k m-set of order n.

    Clause layout, in order: antisymmetric pair clauses, dominance
    implications, covering clauses, then any symmetry clauses.  The layout
    is deterministic so DIMACS output is byte-stable.
    """
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    if n <= k:
        raise TooSmallError(f"need n >= k+1 (got n={n}, k={k})")
    vm = VarMap.build(m, k, n)
    f = CnfFormula(var_count=vm.var_count)

    for t in range(m):
        for i, j in combinations(range(n), 2):
            f.add([vm.e(t, i, j), vm.e(t, j, i)])
            f.add([-vm.e(t, i, j), -vm.e(t, j, i)])

    for t in range(m):
        for s, subset in enumerate(vm.subsets):
            for i in vm.outsides[s]:
                dv = vm.d(t, s, i)
                for j in subset:
                    f.add([-dv, vm.e(t, i, j)])

    for s in range(len(vm.subsets)):
        f.add([vm.d(t, s, i) for t in range(m) for i in vm.outsides[s]])

    if sym.fix_first_edge and n >= 2:
        f.add([vm.e(0, 0, 1)])
    pairs = list(combinations(range(n), 2))
    if sym.lex_members and m >= 2 and n >= 2:
        for t in range(m - 1):
            _add_lex_ge(f, [vm.e(t, i, j) for i, j in pairs],
                        [vm.e(t + 1, i, j) for i, j in pairs])
    if sym.vertex_lex and n >= 2:
        for u, v in combinations(range(n), 2):
            sigma = list(range(n))
            sigma[u], sigma[v] = sigma[v], sigma[u]
            xs, ys = [], []
            for t in range(m):
                for i, j in pairs:
                    si, sj = sigma[i], sigma[j]
                    img = vm.e(t, si, sj) if si < sj else -vm.e(t, sj, si)
                    if img != vm.e(t, i, j):  # untouched pairs compare equal
                        xs.append(vm.e(t, i, j))
                        ys.append(img)
            if xs:
                _add_lex_ge(f, xs, ys)
    return f, vm


def _add_lex_ge(f: CnfFormula, xs: list[int], ys: list[int]) -> None:
    """Clauses forcing vector xs >= ys lexicographically (True > False).

    Fresh prefix-equality variables a_p chain the comparison: under an
    equal prefix, position p must satisfy x_p >= y_p.
    """
    length = len(xs)
    f.add([xs[0], -ys[0]])
    prev = None
    for p in range(length - 1):
        a = f.new_var()
        if prev is None:
            f.add([-xs[p], -ys[p], a])
            f.add([xs[p], ys[p], a])
        else:
            f.add([-prev, -xs[p], -ys[p], a])
            f.add([-prev, xs[p], ys[p], a])
        f.add([-a, xs[p + 1], -ys[p + 1]])
        prev = a


def to_dimacs(f: CnfFormula) -> str:
    """Standard DIMACS CNF text; byte-stable for a fixed formula."""
    lines = [f"p cnf {f.var_count} {len(f.clauses)}"]
    for clause in f.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text back into a formula."""
    var_count = None
    tokens: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            var_count = int(parts[2])
            continue
        tokens.extend(int(tok) for tok in line.split())
    if var_count is None:
        raise ValueError("missing DIMACS header")
    f = CnfFormula(var_count=var_count)
    clause: list[int] = []
    for tok in tokens:
        if tok == 0:
            if clause:
                f.add(clause)
                clause = []
        else:
            clause.append(tok)
    if clause:
        raise ValueError("trailing clause without 0 terminator")
    return f


def parse_model(text: str) -> dict[int, bool]:
    """Parse a satisfying assignment from typical SAT-solver output.

    Accepts bare literal lists or "v " model lines; comment and status
    lines are skipped.  A terminating 0 is optional.
    """
    assignment: dict[int, bool] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in ("c", "s", "p"):
            continue
        if line.startswith("v ") or line.startswith("V "):
            line = line[2:]
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                continue
            assignment[abs(lit)] = lit > 0
    return assignment
