"""Exhaustive property checks for one (G, p), shared by the CLI and the test suite.

Each check returns a :class:`PropertyResult`; a failing result carries a short
description of the first counterexample found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .exactfield import Cyclo, CycloMatrix, mat_mul, mat_vec
from .modrep import brauer_character, brauer_quotient, induce_inflate, projective_probes
from .monomial import lin_row, monomial_pairs, species_of_induced, verify_lin
from .permgroup import conjugate, frattini, normalizes
from .pposet import fixed_subposet, mobius_g, mobius_g_upper, reduced_euler
from .tsring import (Session, all_idempotents, idempotent, matrix_N, matrix_N_alt, matrix_Ninv,
                     oracle_matrix)


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _first_failure(items, pred: Callable) -> str | None:
    for item in items:
        msg = pred(item)
        if msg:
            return msg
    return None


def _result(name: str, failure: str | None) -> PropertyResult:
    return PropertyResult(name, failure is None, failure or "")


# -- Möbius functions ------------------------------------------------------

def _fixed_pairs(S: Session):
    """Every ``(g, P, Q)`` with ``P <= Q`` p-subgroups both normalized by ``g``."""
    G = S.G
    subs = S.all_psubs
    for g in range(G.order):
        fixed = [R for R in subs if normalizes(G, g, R)]
        for P in fixed:
            for Q in fixed:
                if P <= Q:
                    yield g, P, Q


def check_mobius_euler(S: Session) -> PropertyResult:
    def bad(t):
        g, P, Q = t
        if P == Q:
            return None
        chi = reduced_euler(fixed_subposet(S.G, S.p, g, lower=P, upper=Q, open_lower=True, open_upper=True))
        mu = mobius_g(P, Q, g)
        if mu != chi:
            return f"g={S.G.word(g)} P={P.label()} Q={Q.label()}: mu={mu}, chi={chi}"
    return _result("mobius equals reduced Euler characteristic of the open interval",
                   _first_failure(_fixed_pairs(S), bad))


def check_mobius_recurrences(S: Session) -> PropertyResult:
    G = S.G

    def bad(t):
        g, P, Q = t
        if P == Q:
            return None
        between = [R for R in S.all_psubs if P <= R <= Q and normalizes(G, g, R)]
        lower = sum(mobius_g(P, R, g) for R in between)
        upper = sum(mobius_g(R, Q, g) for R in between)
        if lower or upper or mobius_g_upper(P, Q, g) != mobius_g(P, Q, g):
            return f"g={G.word(g)} P={P.label()} Q={Q.label()}: sums {lower}, {upper}"
    return _result("both mobius recurrences sum to zero", _first_failure(_fixed_pairs(S), bad))


def check_mobius_frattini(S: Session) -> PropertyResult:
    def bad(t):
        g, P, Q = t
        if mobius_g(P, Q, g) and not frattini(Q) <= P:
            return f"g={S.G.word(g)} P={P.label()} Q={Q.label()}"
    return _result("nonzero mobius forces Frattini(Q) <= P", _first_failure(_fixed_pairs(S), bad))


def check_mobius_equivariance(S: Session) -> PropertyResult:
    G = S.G

    def bad(t):
        g, P, Q = t
        for h in G.gen_idx:
            if mobius_g(conjugate(P, h), conjugate(Q, h), G.conj(h, g)) != mobius_g(P, Q, g):
                return f"h={G.word(h)} g={G.word(g)} P={P.label()} Q={Q.label()}"
    return _result("mobius is conjugation equivariant", _first_failure(_fixed_pairs(S), bad))


# -- Brauer tables ---------------------------------------------------------

def check_brauer_tables(S: Session) -> PropertyResult:
    def bad(P):
        t = S.local(P).table
        H = t.group
        if t.size != len(t.classes):
            return f"N(P)/P for P={P.label()}: {t.size} irreducibles vs {len(t.classes)} p'-classes"
        total = sum(chi.dim * t.projectives[0, j] for j, chi in enumerate(t.irreducibles))
        if total != H.order:
            return f"N(P)/P for P={P.label()}: sum dim*proj(1) = {total} != {H.order}"
        if not mat_mul(t.orthogonality_matrix(), t.projectives).is_identity():
            return f"N(P)/P for P={P.label()}: orthogonality fails"
    return _result("Brauer table sanity on every N(P)/P", _first_failure(S.psubs, bad))


def check_brauer_quotient_of_induced(S: Session) -> PropertyResult:
    """``(Ind Inf X)[P]`` has the Brauer character of ``X`` for projective ``X``."""
    def bad(P):
        loc = S.local(P)
        probes, _ = projective_probes(loc.H, S.p, S.F, loc.table)
        for X in probes:
            got = brauer_character(brauer_quotient(induce_inflate(S.G, P, X), P), S.p)
            if got.values != brauer_character(X, S.p).values:
                return f"P={P.label()}"
    return _result("Brauer quotient at P of an induced projective recovers it",
                   _first_failure(S.psubs, bad))


# -- species table ---------------------------------------------------------

def check_inversion(S: Session) -> PropertyResult:
    ok = mat_mul(matrix_N(S).N, matrix_Ninv(S)).is_identity()
    return _result("species table times closed-form inverse is the identity",
                   None if ok else "product is not the identity")


def check_alt(S: Session) -> PropertyResult:
    ok = matrix_N_alt(S).N == matrix_N(S).N
    return _result("both species table formulas agree", None if ok else "entries differ")


def _matrix_diff(A: CycloMatrix, B: CycloMatrix, rows, cols) -> str | None:
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            if A[i, j] != B[i, j]:
                return f"at {r.label()} / {c.label()}: {A[i, j]} vs {B[i, j]}"
    return None


def check_oracle(S: Session) -> PropertyResult:
    diff = _matrix_diff(matrix_N(S).N, oracle_matrix(S), S.E, S.C)
    return _result("species table equals explicit Brauer quotient oracle", diff)


def check_triangularity(S: Session) -> PropertyResult:
    N, Ninv = matrix_N(S).N, matrix_Ninv(S)
    msg = None
    for i, e in enumerate(S.E):
        for j, b in enumerate(S.C):
            if N[i, j] and not S.leq_G(e.Q, b.P):
                msg = f"N nonzero at {e.label()} / {b.label()}"
            if Ninv[j, i] and not S.leq_G(b.P, e.Q):
                msg = f"inverse nonzero at {b.label()} / {e.label()}"
            if msg:
                return _result("triangular zero pattern", msg)
    return _result("triangular zero pattern", None)


def check_diagonal_blocks(S: Session) -> PropertyResult:
    N, Ninv = matrix_N(S).N, matrix_Ninv(S)
    for P in S.psubs:
        t = S.local(P).table
        rows = [S.row_index[(P.bits, s)] for s in range(t.size)]
        cols = [S.col_index[(P.bits, k)] for k in range(t.size)]
        if N.submatrix(rows, cols) != t.projectives:
            return _result("diagonal blocks", f"species block at {P.label()}")
        if Ninv.submatrix(cols, rows) != t.orthogonality_matrix():
            return _result("diagonal blocks", f"inverse block at {P.label()}")
    return _result("diagonal blocks", None)


# -- idempotents -----------------------------------------------------------

def check_idempotent_columns(S: Session) -> PropertyResult:
    Ninv = matrix_Ninv(S)

    def bad(jt):
        j, e = jt
        if idempotent(S, e).vector(S.C) != Ninv.col(j):
            return f"at {e.label()}"
        if idempotent(S, e, frattini_only=True).vector(S.C) != Ninv.col(j):
            return f"Frattini-restricted sum at {e.label()}"
    return _result("idempotent expansions equal the inverse columns",
                   _first_failure(enumerate(S.E), bad))


def check_idempotent_delta(S: Session) -> PropertyResult:
    N = matrix_N(S).N
    n = len(S.E)
    total = [Cyclo.zero(S.m)] * n
    for i, exp in enumerate(all_idempotents(S)):
        vec = exp.vector(S.C)
        total = [a + b for a, b in zip(total, vec)]
        species = mat_vec(N, vec)
        if species != [1 if k == i else 0 for k in range(n)]:
            return _result("idempotents have indicator species vectors", f"at {exp.target.label()}")
    if mat_vec(N, total) != [1] * n:
        return _result("idempotents have indicator species vectors", "sum is not the identity")
    return _result("idempotents have indicator species vectors", None)


def check_idempotent_support(S: Session) -> PropertyResult:
    G = S.G

    def bad(exp):
        Q = exp.target.Q
        F = frattini(Q)
        for b in exp.support():
            if not any(F <= (R := conjugate(b.P, x)) and R <= Q for x in range(G.order)):
                return f"{b.label()} in {exp.target.label()}"
    return _result("idempotent support between Frattini(Q) and Q",
                   _first_failure(all_idempotents(S), bad))


# -- linearization ---------------------------------------------------------

def check_linearization(S: Session) -> PropertyResult:
    for c in verify_lin(S):
        if not c.ok:
            what = [k for k, v in (("species", c.species_ok), ("integrality", c.integral),
                                   ("support", c.support)) if not v]
            return _result("linearization rows", f"{c.pair.label()}: {', '.join(what)}")
    return _result("linearization rows", None)


def check_lift_independence(S: Session) -> PropertyResult:
    """Species of induced modules do not depend on the lift of the p'-element."""
    G = S.G

    def bad(pair):
        for e in S.E:
            loc = S.local(e.Q)
            want = species_of_induced(S, pair, e)
            for a in e.cls.members:
                t = loc.qg.section[a]
                for u in e.Q.members:
                    if species_of_induced(S, pair, e, lift=G.mul[t][u]) != want:
                        return f"{pair.label()} at {e.label()}"
    return _result("induced species independent of the lift", _first_failure(monomial_pairs(S), bad))


def check_lin_identity(S: Session) -> PropertyResult:
    top = next(pr for pr in monomial_pairs(S) if pr.V.order == S.G.order and pr.is_trivial())
    vec = lin_row(S, top).vector(S.C)
    total = [Cyclo.zero(S.m)] * len(S.C)
    for exp in all_idempotents(S):
        total = [a + b for a, b in zip(total, exp.vector(S.C))]
    return _result("trivial pair at G linearizes to the sum of idempotents",
                   None if vec == total else "vectors differ")


CHECKS: list[Callable[[Session], PropertyResult]] = [
    check_mobius_euler, check_mobius_recurrences, check_mobius_frattini, check_mobius_equivariance,
    check_brauer_tables, check_brauer_quotient_of_induced,
    check_inversion, check_alt, check_oracle, check_triangularity, check_diagonal_blocks,
    check_idempotent_columns, check_idempotent_delta, check_idempotent_support,
    check_linearization, check_lift_independence, check_lin_identity,
]


def run_all(S: Session) -> list[PropertyResult]:
    return [check(S) for check in CHECKS]
