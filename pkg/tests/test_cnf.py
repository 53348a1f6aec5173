"""CNF encoding structure, variable indexing, and DIMACS round-trips."""

from collections import Counter
from math import comb

import pytest

from schuette.cnf import (
    CnfFormula,
    SymmetryOptions,
    TooSmallError,
    VarMap,
    encode,
    parse_dimacs,
    parse_model,
    to_dimacs,
)

NO_SYM = SymmetryOptions(False, False, False)


def reference_parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Independent token-stream DIMACS reader used only as a test oracle."""
    tokens = []
    header = None
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            header = (int(parts[2]), int(parts[3]))
            continue
        tokens.extend(int(x) for x in parts)
    clauses, cur = [], []
    for tok in tokens:
        if tok == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(tok)
    assert not cur
    return header[0], clauses


def test_encode_1_1_3_counts():
    f, vm = encode(1, 1, 3, NO_SYM)
    assert vm.var_count == 12  # 6 edge vars + 6 dominator vars
    assert f.var_count == 12
    assert len(f.clauses) == 15  # 6 pair + 6 dominance + 3 covering


@pytest.mark.parametrize("m,k,n", [(1, 1, 3), (2, 2, 4), (1, 2, 5), (3, 1, 4), (2, 3, 5)])
def test_encode_counts_closed_form(m, k, n):
    f, vm = encode(m, k, n, NO_SYM)
    e_vars = m * n * (n - 1)
    d_vars = m * comb(n, k) * (n - k)
    assert vm.e_count == e_vars
    assert vm.d_count == d_vars
    assert f.var_count == e_vars + d_vars
    pair = 2 * m * comb(n, 2)
    dominance = m * comb(n, k) * (n - k) * k
    covering = comb(n, k)
    assert len(f.clauses) == pair + dominance + covering


def test_encode_too_small():
    with pytest.raises(TooSmallError):
        encode(1, 2, 2)
    with pytest.raises(ValueError):
        encode(0, 1, 3)


def test_varmap_bijection():
    vm = VarMap.build(2, 2, 4)
    seen = {}
    for t in range(2):
        for i in range(4):
            for j in range(4):
                if i != j:
                    v = vm.e(t, i, j)
                    assert v not in seen
                    seen[v] = ("e", t, i, j)
    for t in range(2):
        for s in range(len(vm.subsets)):
            for i in vm.outsides[s]:
                v = vm.d(t, s, i)
                assert v not in seen
                seen[v] = ("d", t, vm.subsets[s], i)
    assert set(seen) == set(range(1, vm.var_count + 1))
    for v, desc in seen.items():
        assert vm.decode_var(v) == desc


def test_symmetry_clauses_added():
    base, _ = encode(2, 1, 3, NO_SYM)
    fixed, _ = encode(2, 1, 3, SymmetryOptions(True, False, False))
    assert len(fixed.clauses) == len(base.clauses) + 1
    lex, _ = encode(2, 1, 3, SymmetryOptions(False, True, False))
    assert len(lex.clauses) > len(base.clauses)
    assert lex.var_count > base.var_count  # prefix-equality helpers


def test_dimacs_empty():
    assert to_dimacs(CnfFormula(0, [])) == "p cnf 0 0\n"


def test_dimacs_single_clause():
    f = CnfFormula(2)
    f.add([1, -2])
    text = to_dimacs(f)
    assert text == "p cnf 2 1\n1 -2 0\n"


def test_dimacs_round_trip_clause_multiset():
    f, _ = encode(1, 1, 3)
    text = to_dimacs(f)
    nv, clauses = reference_parse_dimacs(text)
    assert nv == f.var_count
    assert Counter(clauses) == Counter(tuple(c) for c in f.clauses)
    back = parse_dimacs(text)
    assert back.var_count == f.var_count
    assert Counter(tuple(c) for c in back.clauses) == Counter(tuple(c) for c in f.clauses)


def test_dimacs_byte_stable():
    a = to_dimacs(encode(2, 2, 4)[0])
    b = to_dimacs(encode(2, 2, 4)[0])
    assert a == b


def test_parse_model_formats():
    assert parse_model("1 -2 3 0") == {1: True, 2: False, 3: True}
    text = "c comment\ns SATISFIABLE\nv 1 -2\nv 3 0\n"
    assert parse_model(text) == {1: True, 2: False, 3: True}


def test_clause_validation():
    f = CnfFormula(2)
    with pytest.raises(ValueError):
        f.add([])
    with pytest.raises(ValueError):
        f.add([0])
    with pytest.raises(ValueError):
        f.add([3])


def test_encode_k0_single_covering():
    f, vm = encode(1, 0, 2, NO_SYM)
    # one empty subset, two candidate dominators, no dominance clauses
    assert vm.d_count == 2
    assert len(f.clauses) == 2 * 1 + 0 + 1
