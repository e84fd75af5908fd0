from fractions import Fraction

import pytest

from conftest import SMALL_CASES, ZOO_CASES, case_id, group, session
from trivsource.exactfield import CycloMatrix, mat_mul, mat_vec
from trivsource.permgroup import parse_group
from trivsource.tsring import (Session, all_idempotents, idempotent, matrix_N, matrix_N_alt,
                               matrix_Ninv, oracle_matrix, species_oracle)

# values computed by oracle_matrix (explicit Brauer quotients) and frozen
S3_MOD_3 = [[3, 3, 1, 1], [1, -1, 1, -1], [0, 0, 1, 1], [0, 0, 1, -1]]
S3_MOD_2 = [[2, 2, 3], [2, -1, 0], [0, 0, 1]]
KLEIN4_MOD_2 = [[4, 2, 2, 2, 1], [0, 2, 0, 0, 1], [0, 0, 2, 0, 1], [0, 0, 0, 2, 1], [0, 0, 0, 0, 1]]


def as_rows(M):
    return [[M[i, j] for j in range(M.cols)] for i in range(M.rows)]


@pytest.mark.parametrize("name,p", [("C2", 2), ("C3", 3), ("C5", 5), ("C7", 7)])
def test_cyclic_of_prime_order(name, p):
    S = Session(parse_group(name), p)
    assert as_rows(matrix_N(S).N) == [[p, 1], [0, 1]]
    assert as_rows(matrix_Ninv(S)) == [[Fraction(1, p), Fraction(-1, p)], [0, 1]]
    e1, eP = all_idempotents(S)
    assert e1.vector(S.C) == [Fraction(1, p), 0]
    assert eP.vector(S.C) == [Fraction(-1, p), 1]


@pytest.mark.parametrize("name,p,frozen", [("S3", 3, S3_MOD_3), ("S3", 2, S3_MOD_2), ("klein4", 2, KLEIN4_MOD_2)])
def test_frozen_tables(name, p, frozen):
    S = session(name, p)
    assert as_rows(matrix_N(S).N) == frozen
    assert as_rows(oracle_matrix(S)) == frozen


def test_s3_mod_3_labels():
    S = session("S3", 3)
    assert [b.dim for b in S.C] == [1, 1, 1, 1]
    assert [e.Q.order for e in S.E] == [1, 1, 3, 3]
    assert matrix_N(S).N.submatrix([0, 1], [0, 1]) == CycloMatrix(2, [[3, 3], [1, -1]])


def test_trivial_group():
    S = Session(parse_group("trivial"), 2)
    assert as_rows(matrix_N(S).N) == [[1]]
    assert as_rows(matrix_Ninv(S)) == [[1]]


def test_prime_not_dividing_order():
    # the Sylow subgroup is trivial; the ring is the Brauer character ring of G
    S = Session(parse_group("S3"), 5)
    assert len(S.C) == 3
    assert mat_mul(matrix_N(S).N, matrix_Ninv(S)).is_identity()


@pytest.mark.parametrize("case", ZOO_CASES, ids=case_id)
def test_index_sets(case):
    S = session(*case)
    assert len(S.C) == len(S.E)
    assert [b.P for b in S.C][0].order == 1
    assert S.C[0].phi == 0 and S.E[0].s == 0


@pytest.mark.parametrize("case", ZOO_CASES, ids=case_id)
def test_inverse(case):
    S = session(*case)
    assert mat_mul(matrix_N(S).N, matrix_Ninv(S)).is_identity()
    assert mat_mul(matrix_Ninv(S), matrix_N(S).N).is_identity()


@pytest.mark.parametrize("case", ZOO_CASES, ids=case_id)
def test_alternative_formula(case):
    S = session(*case)
    assert matrix_N_alt(S).N == matrix_N(S).N


@pytest.mark.parametrize("case", ZOO_CASES, ids=case_id)
def test_oracle(case):
    S = session(*case)
    assert oracle_matrix(S) == matrix_N(S).N


@pytest.mark.parametrize("case", SMALL_CASES, ids=case_id)
def test_first_column_is_dimension_of_projective(case):
    # N_{1,phi} is the projective cover of phi; its species at (1,[1]) is its dimension
    S = session(*case)
    t = S.local(S.psubs[0]).table
    for j, b in enumerate(S.C[:t.size]):
        assert species_oracle(S, S.E[0], b) == t.projectives[0, j]


@pytest.mark.parametrize("case", ZOO_CASES, ids=case_id)
def test_idempotents(case):
    S = session(*case)
    N = matrix_N(S).N
    Ninv = matrix_Ninv(S)
    n = len(S.E)
    total = [0] * n
    for j, exp in enumerate(all_idempotents(S)):
        vec = exp.vector(S.C)
        assert vec == Ninv.col(j)
        assert mat_vec(N, vec) == [1 if i == j else 0 for i in range(n)]
        assert idempotent(S, exp.target, frattini_only=True).vector(S.C) == vec
        total = [a + b for a, b in zip(vec, total)]
    assert mat_vec(N, total) == [1] * n


def test_idempotent_of_s3_mod_2():
    S = session("S3", 2)
    e = all_idempotents(S)
    # solves N x = (0, 0, 1) by hand against the frozen table
    assert e[2].vector(S.C) == [Fraction(-1, 2), -1, 1]


def test_session_reuses_tables():
    S = session("S4", 2)
    assert matrix_N(S) is matrix_N(S)
    assert S.local(S.psubs[0]) is S.local(S.psubs[0])
    assert group("S4") is S.G
