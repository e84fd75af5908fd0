"""Acceptance suite: eleven exact criteria over the group zoo, one printed line each.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import time

import pytest

from conftest import ZOO_CASES, session
from trivsource.exactfield import CycloMatrix, mat_mul, mat_vec
from trivsource.monomial import lin_row, monomial_pairs, species_of_induced, support_ok
from trivsource.permgroup import conjugate, frattini, normalizes, parse_group
from trivsource.pposet import fixed_subposet, mobius_g, mobius_g_upper, reduced_euler
from trivsource.tsring import (Session, all_idempotents, idempotent, matrix_N, matrix_N_alt,
                               matrix_Ninv, oracle_matrix)


def over_zoo(check):
    """Run ``check(S)`` on every zoo case; returns the first failure message or None."""
    for name, p in ZOO_CASES:
        msg = check(session(name, p))
        if msg:
            return f"{name} p={p}: {msg}"
    return None


def fixed_pairs(S):
    G = S.G
    for g in range(G.order):
        fixed = [R for R in S.all_psubs if normalizes(G, g, R)]
        for P in fixed:
            for Q in fixed:
                if P <= Q:
                    yield g, P, Q


def conj_between(S, lower, P, upper):
    return any(lower <= (R := conjugate(P, x)) and R <= upper for x in range(S.G.order))


# -- criteria --------------------------------------------------------------

def inversion(S):
    if not mat_mul(matrix_N(S).N, matrix_Ninv(S)).is_identity():
        return "N * Ninv is not the identity"


def idempotent_assembly(S):
    Ninv = matrix_Ninv(S)
    for j, e in enumerate(S.E):
        if idempotent(S, e).vector(S.C) != Ninv.col(j):
            return f"column {e.label()}"


def species_delta(S):
    N = matrix_N(S).N
    n = len(S.E)
    total = [0] * n
    for j, exp in enumerate(all_idempotents(S)):
        vec = exp.vector(S.C)
        if mat_vec(N, vec) != [1 if i == j else 0 for i in range(n)]:
            return f"species of e{exp.target.label()}"
        total = [a + b for a, b in zip(total, vec)]
    if mat_vec(N, total) != [1] * n:
        return "sum of idempotents is not the identity"


def oracle_equivalence(S):
    O, N = oracle_matrix(S), matrix_N(S).N
    for i, e in enumerate(S.E):
        for j, b in enumerate(S.C):
            if O[i, j] != N[i, j]:
                return f"{e.label()} / {b.label()}: oracle {O[i, j]} vs formula {N[i, j]}"


def variant_equality(S):
    if matrix_N_alt(S).N != matrix_N(S).N:
        return "the two formulas disagree"


def triangular_blocks(S):
    N, Ninv = matrix_N(S).N, matrix_Ninv(S)
    for i, e in enumerate(S.E):
        for j, b in enumerate(S.C):
            if N[i, j] and not S.leq_G(e.Q, b.P):
                return f"N nonzero at {e.label()} / {b.label()}"
            if Ninv[j, i] and not S.leq_G(b.P, e.Q):
                return f"Ninv nonzero at {b.label()} / {e.label()}"
    for P in S.psubs:
        t = S.local(P).table
        rows = [S.row_index[(P.bits, s)] for s in range(t.size)]
        cols = [S.col_index[(P.bits, k)] for k in range(t.size)]
        if N.submatrix(rows, cols) != t.projectives:
            return f"N block at {P.label()}"
        if Ninv.submatrix(cols, rows) != t.orthogonality_matrix():
            return f"Ninv block at {P.label()}"


def frattini_support(S):
    for exp in all_idempotents(S):
        Q = exp.target.Q
        for b in exp.support():
            if not conj_between(S, frattini(Q), b.P, Q):
                return f"coefficient at {b.label()} in e{exp.target.label()}"
    for g, P, Q in fixed_pairs(S):
        if not frattini(Q) <= P and mobius_g(P, Q, g) != 0:
            return f"mu nonzero with Frattini(Q) not in P: g={S.G.word(g)} {P.label()} < {Q.label()}"


def mobius_euler(S):
    G = S.G
    for g, P, Q in fixed_pairs(S):
        if P == Q:
            continue
        chi = reduced_euler(fixed_subposet(G, S.p, g, lower=P, upper=Q, open_lower=True, open_upper=True))
        if mobius_g(P, Q, g) != chi:
            return f"mu != reduced Euler at g={G.word(g)} {P.label()} < {Q.label()}"
        between = [R for R in S.all_psubs if P <= R <= Q and normalizes(G, g, R)]
        if sum(mobius_g(P, R, g) for R in between) or sum(mobius_g_upper(R, Q, g) for R in between):
            return f"recurrence sum nonzero at g={G.word(g)} {P.label()} < {Q.label()}"


def linearization(S):
    N = matrix_N(S).N
    for pair in monomial_pairs(S):
        row = lin_row(S, pair)
        vec = row.vector(S.C)
        if mat_vec(N, vec) != [species_of_induced(S, pair, e) for e in S.E]:
            return f"species mismatch for {pair.label()}"
        if not all(c.is_integer() for c in vec):
            return f"non-integral coefficient for {pair.label()}"
        for b, c in row.coeffs.items():
            if c and not support_ok(S, pair, b):
                return f"support violated at {b.label()} for {pair.label()}"


def micro_instances():
    from fractions import Fraction
    for name, p in [("C2", 2), ("C3", 3), ("C5", 5)]:
        S = Session(parse_group(name), p)
        if oracle_matrix(S) != CycloMatrix(1, [[p, 1], [0, 1]]) or matrix_N(S).N != oracle_matrix(S):
            return f"{name}: species table"
        e1, eP = all_idempotents(S)
        if e1.vector(S.C) != [Fraction(1, p), 0] or eP.vector(S.C) != [Fraction(-1, p), 1]:
            return f"{name}: idempotents"
    S = session("S3", 3)
    frozen = CycloMatrix(2, [[3, 3, 1, 1], [1, -1, 1, -1], [0, 0, 1, 1], [0, 0, 1, -1]])
    if oracle_matrix(S) != frozen or matrix_N(S).N != frozen:
        return "S3 p=3 table"
    if frozen.submatrix([0, 1], [0, 1]) != CycloMatrix(2, [[3, 3], [1, -1]]):
        return "S3 p=3 block"


def brauer_sanity(S):
    for P in S.psubs:
        t = S.local(P).table
        if t.size != len(t.classes):
            return f"N(P)/P at {P.label()}: count"
        if sum(chi.dim * t.projectives[0, j] for j, chi in enumerate(t.irreducibles)) != t.group.order:
            return f"N(P)/P at {P.label()}: dimension sum"


CRITERIA = [
    (1, "inversion: N * Ninv = I", lambda: over_zoo(inversion)),
    (2, "idempotent assembly equals Ninv columns", lambda: over_zoo(idempotent_assembly)),
    (3, "species delta and partition of unity", lambda: over_zoo(species_delta)),
    (4, "formula equals explicit Brauer quotient oracle", lambda: over_zoo(oracle_equivalence)),
    (5, "alternative formula equals N", lambda: over_zoo(variant_equality)),
    (6, "triangularity and diagonal blocks", lambda: over_zoo(triangular_blocks)),
    (7, "Frattini support of idempotents and mobius", lambda: over_zoo(frattini_support)),
    (8, "mobius equals reduced Euler; recurrences", lambda: over_zoo(mobius_euler)),
    (9, "linearization rows: species, integrality, support", lambda: over_zoo(linearization)),
    (10, "worked micro-instances", micro_instances),
    (11, "Brauer table sanity on every subquotient", lambda: over_zoo(brauer_sanity)),
]


@pytest.mark.parametrize("number,title,run", CRITERIA, ids=[f"criterion{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, run, capsys):
    t0 = time.time()
    failure = run()
    line = f"criterion {number:2d}: {'PASS' if failure is None else 'FAIL'}  {title}  [{time.time() - t0:.2f}s]"
    if failure:
        line += f"  -- {failure}"
    with capsys.disabled():
        print("\n" + line)
    assert failure is None, failure


if __name__ == "__main__":
    for number, title, run in CRITERIA:
        failure = run()
        print(f"criterion {number:2d}: {'PASS' if failure is None else 'FAIL'}  {title}"
              + (f"  -- {failure}" if failure else ""))
