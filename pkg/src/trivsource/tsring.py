"""The trivial source ring at (G, p): canonical basis, species table and primitive idempotents.

Columns of the species table are the basis elements ``[N_{P,phi}]``, one per
conjugacy class of pairs (p-subgroup P, irreducible Brauer character phi of
``N_G(P)/P``); rows are the species ``(Q, [s])`` with ``s`` a p'-class of
``N_G(Q)/Q``. Pairs are always stored at the canonical class representative
of the subgroup. Formulas that sum over *all* pairs fold their terms back onto
that representative by conjugation.

Everything here is computed by closed combinatorial formulas from the Brauer
tables of the subquotients ``N_G(P)/P``, except :func:`oracle_matrix`, which
builds the modules explicitly and takes Brauer quotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import InternalInconsistency, SizeMismatch
from .exactfield import Cyclo, CycloMatrix
from .ffield import FField, build_field
from .modrep import (BrauerTable, brauer_quotient, brauer_table, brauer_value, induce_inflate,
                     projective_probes, solve_rational)
from .permgroup import (ConjClass, Group, QuotientGroup, Subgroup, all_p_subgroups, canonical,
                        class_lookup, conjugate, frattini, left_coset_reps, normalizer, normalizes,
                        p_subgroup_classes, pprime_classes, pprime_exponent, quotient)
from .pposet import mobius_g


@dataclass(frozen=True)
class BasisIndex:
    P: Subgroup
    phi: int
    dim: int

    def label(self) -> str:
        return f"N[{self.P.label()}, phi{self.phi} (dim {self.dim})]"


@dataclass(frozen=True)
class SpeciesIndex:
    Q: Subgroup
    s: int  # position in pprime_classes of N_G(Q)/Q
    cls: ConjClass = field(compare=False, hash=False)
    lift: int = field(default=0, compare=False, hash=False)  # element of N_G(Q) over the class representative

    def label(self) -> str:
        return f"({self.Q.label()}, [{self.Q.parent.word(self.lift)}])"


@dataclass
class Local:
    """Data attached to a canonical p-subgroup ``P``."""

    P: Subgroup
    N: Subgroup
    qg: QuotientGroup
    table: BrauerTable

    @property
    def H(self) -> Group:
        return self.qg.quotient

    @cached_property
    def lookup(self) -> dict[int, int]:
        return class_lookup(self.H, self.table.p)

    @cached_property
    def pprime_sections(self) -> list[int]:
        """A representative in ``N_G(P)`` of each p'-element of ``N_G(P)/P``."""
        return [self.qg.section[a] for a in sorted(self.lookup)]

    def class_of(self, a: int) -> int | None:
        """p'-class of ``aP`` for ``a`` in ``N_G(P)``, or None when ``aP`` is not p'."""
        return self.lookup.get(self.qg.project[a])


class Session:
    """All tables for one (G, p); everything is memoized on first use."""

    def __init__(self, G: Group, p: int, seed: int = 0):
        self.G = G
        self.p = p
        self.seed = seed
        self.m = pprime_exponent(G, p)
        self.F: FField = build_field(p, self.m)
        self.psubs: list[Subgroup] = p_subgroup_classes(G, p)
        self._local: dict[int, Local] = {}

    def __repr__(self):
        return f"Session({self.G!r}, p={self.p})"

    def zero(self) -> Cyclo:
        return Cyclo.zero(self.m)

    def local(self, P: Subgroup) -> Local:
        loc = self._local.get(P.bits)
        if loc is None:
            N = normalizer(self.G, P)
            qg = quotient(N, P)
            table = brauer_table(qg.quotient, self.p, self.F, self.seed)
            loc = Local(P, N, qg, table)
            self._local[P.bits] = loc
        return loc

    def canon(self, R: Subgroup) -> tuple[Subgroup, int]:
        """``(P0, x)`` with ``P0`` canonical and ``x P0 x^-1 = R``."""
        return canonical(self.G, R)

    @cached_property
    def all_psubs(self) -> list[Subgroup]:
        return all_p_subgroups(self.G, self.p)

    @cached_property
    def C(self) -> list[BasisIndex]:
        """One basis index per G-orbit of pairs (P, phi).

        ``N_G(P)`` acts on ``N_G(P)/P`` by inner automorphisms, which fix every
        Brauer character, so each canonical P contributes all of its phi.
        """
        out = []
        for P in self.psubs:
            t = self.local(P).table
            out.extend(BasisIndex(P, j, chi.dim) for j, chi in enumerate(t.irreducibles))
        return out

    @cached_property
    def E(self) -> list[SpeciesIndex]:
        out = []
        for Q in self.psubs:
            loc = self.local(Q)
            classes = pprime_classes(loc.H, self.p)
            out.extend(SpeciesIndex(Q, i, c, loc.qg.section[c.representative]) for i, c in enumerate(classes))
        if len(out) != len(self.C):
            raise SizeMismatch(f"|E(G)| = {len(out)} but |C(G)| = {len(self.C)}")
        return out

    @cached_property
    def col_index(self) -> dict[tuple[int, int], int]:
        return {(b.P.bits, b.phi): i for i, b in enumerate(self.C)}

    @cached_property
    def row_index(self) -> dict[tuple[int, int], int]:
        return {(e.Q.bits, e.s): i for i, e in enumerate(self.E)}

    def leq_G(self, A: Subgroup, B: Subgroup) -> bool:
        """``A <=_G B``: some conjugate of ``A`` lies in ``B``."""
        G = self.G
        return any(conjugate(A, g) <= B for g in range(G.order))

    def section_of(self, e: SpeciesIndex) -> int:
        """An element ``t`` of ``N_G(Q)`` with ``tQ`` the class representative of ``s``."""
        return self.local(e.Q).qg.section[e.cls.representative]

    def phi_value(self, P: Subgroup, j: int, a: int) -> Cyclo:
        """``phi_j(aP)`` for canonical ``P`` and ``a`` in ``N_G(P)``."""
        loc = self.local(P)
        c = loc.class_of(a)
        if c is None:
            raise InternalInconsistency("Brauer character evaluated at a non-p' element")
        return loc.table.irreducibles[j].values[c]

    def phi_hat_value(self, P: Subgroup, j: int, a: int) -> Cyclo:
        loc = self.local(P)
        c = loc.class_of(a)
        if c is None:
            raise InternalInconsistency("projective character evaluated at a non-p' element")
        return loc.table.projectives[c, j]

    def transported(self, R: Subgroup):
        """For an arbitrary p-subgroup ``R = x P0 x^-1``: ``(P0, x, x^-1)``."""
        P0, x = self.canon(R)
        return P0, x, self.G.inv[x]


# -- species table ---------------------------------------------------------

def enumerate_C(S: Session) -> list[BasisIndex]:
    return S.C


def enumerate_E(S: Session) -> list[SpeciesIndex]:
    return S.E


@dataclass
class SpeciesTable:
    rows: list[SpeciesIndex]
    cols: list[BasisIndex]
    N: CycloMatrix


def matrix_N(S: Session) -> SpeciesTable:
    """``n(Q,s; R,psi) = sum_{g : gQg^-1 <= R, gtg^-1 in N(R)} psi_hat(gtg^-1 R) / |N(R)|``."""
    cached = getattr(S, "_matrix_N", None)
    if cached is not None:
        return cached
    G = S.G
    E, C = S.E, S.C
    M = CycloMatrix.zeros(S.m, len(E), len(C))
    for i, e in enumerate(E):
        t = S.section_of(e)
        conj = [(conjugate(e.Q, g).bits, G.conj(g, t)) for g in range(G.order)]
        for j, b in enumerate(C):
            R = b.P
            loc = S.local(R)
            acc = S.zero()
            for qbits, gt in conj:
                if qbits & R.bits == qbits and gt in loc.N:
                    acc = acc + S.phi_hat_value(R, b.phi, gt)
            M[i, j] = acc / loc.N.order
    S._matrix_N = SpeciesTable(E, C, M)
    return S._matrix_N


def matrix_N_alt(S: Session) -> SpeciesTable:
    """The same table, summing over ``z`` in G and every element ``tQ`` of ``[s]``."""
    G = S.G
    E, C = S.E, S.C
    M = CycloMatrix.zeros(S.m, len(E), len(C))
    for i, e in enumerate(E):
        locQ = S.local(e.Q)
        ts = [locQ.qg.section[a] for a in sorted(e.cls.members)]
        cent = locQ.H.order // e.cls.size
        for j, b in enumerate(C):
            R = b.P
            locR = S.local(R)
            acc = S.zero()
            for z in range(G.order):
                zR = conjugate(R, z)
                if not e.Q <= zR:
                    continue
                zinv = G.inv[z]
                for t in ts:
                    if normalizes(G, t, zR):
                        acc = acc + S.phi_hat_value(R, b.phi, G.conj(zinv, t))
            M[i, j] = acc * cent / (locQ.H.order * locR.N.order)
    return SpeciesTable(E, C, M)


def matrix_Ninv(S: Session) -> CycloMatrix:
    """Inverse species table by the closed formula, rows C(G), columns E(G).

    ``n^-1(P,phi; Q,s) = sum phi(a^-1 P) mu_a(P, vQv^-1) / |N_G(P)/P|`` over
    coset representatives ``v N_G(Q)`` and p'-elements ``aP`` of ``N_G(P)/P``
    with ``P <= vQv^-1``, ``a`` normalizing ``vQv^-1`` and ``v^-1 a v Q`` in ``[s]``.
    """
    cached = getattr(S, "_matrix_Ninv", None)
    if cached is not None:
        return cached
    G = S.G
    E, C = S.E, S.C
    M = CycloMatrix.zeros(S.m, len(C), len(E))
    for jq, e in enumerate(E):
        locQ = S.local(e.Q)
        vs = left_coset_reps(G, locQ.N)
        for P in S.psubs:
            locP = S.local(P)
            nbar = locP.H.order
            sums = [S.zero() for _ in locP.table.irreducibles]
            for v in vs:
                vQ = conjugate(e.Q, v)
                if not P <= vQ:
                    continue
                vinv = G.inv[v]
                for a in locP.pprime_sections:
                    if not normalizes(G, a, vQ):
                        continue
                    if locQ.class_of(G.conj(vinv, a)) != e.s:
                        continue
                    mu = mobius_g(P, vQ, a)
                    if mu:
                        ainv = G.inv[a]
                        for k in range(len(sums)):
                            sums[k] = sums[k] + S.phi_value(P, k, ainv) * mu
            for k, val in enumerate(sums):
                M[S.col_index[(P.bits, k)], jq] = val / nbar
    S._matrix_Ninv = M
    return M


# -- idempotents -----------------------------------------------------------

@dataclass
class IdempotentExpansion:
    target: SpeciesIndex
    coeffs: dict[BasisIndex, Cyclo]

    def vector(self, C: list[BasisIndex]) -> list[Cyclo]:
        return [self.coeffs[b] for b in C]

    def support(self) -> list[BasisIndex]:
        return [b for b, c in self.coeffs.items() if c]


def idempotent(S: Session, target: SpeciesIndex, frattini_only: bool = False) -> IdempotentExpansion:
    """Primitive idempotent ``e_{Q,s}`` in the canonical basis.

    ``e = 1/|N_G(Q)| sum |P| phi(g^-1 P) mu_g(P, Q) [N_{P,phi}]`` over all
    pairs (P, phi) with ``P <= Q`` and p'-elements ``gP`` of ``N_G(P)/P`` with
    ``g`` in ``N_G(Q)`` and ``gQ`` in ``[s]``. With ``frattini_only`` the P-loop
    is cut down to ``Phi(Q) <= P``, which gives the same result.
    """
    G = S.G
    Q = target.Q
    locQ = S.local(Q)
    acc = {b: S.zero() for b in S.C}
    floor = frattini(Q) if frattini_only else None
    for P in S.all_psubs:
        if not P <= Q:
            continue
        if floor is not None and not floor <= P:
            continue
        P0, x, xinv = S.transported(P)
        loc0 = S.local(P0)
        for a0 in loc0.pprime_sections:
            g = G.conj(x, a0)
            if g not in locQ.N or locQ.class_of(g) != target.s:
                continue
            mu = mobius_g(P, Q, g)
            if not mu:
                continue
            a0inv = G.inv[a0]
            for k in range(loc0.table.size):
                b = S.C[S.col_index[(P0.bits, k)]]
                acc[b] = acc[b] + S.phi_value(P0, k, a0inv) * (P.order * mu)
    n = locQ.N.order
    return IdempotentExpansion(target, {b: v / n for b, v in acc.items()})


def all_idempotents(S: Session) -> list[IdempotentExpansion]:
    cached = getattr(S, "_idempotents", None)
    if cached is None:
        cached = [idempotent(S, e) for e in S.E]
        S._idempotents = cached
    return cached


# -- independent oracle ----------------------------------------------------

class _OracleCache:
    def __init__(self, S: Session):
        self.S = S
        self.probes: dict[int, tuple[list, list[list[int]]]] = {}
        self.values: dict[tuple[int, int], list[list[Cyclo]]] = {}

    def probe_modules(self, P: Subgroup):
        got = self.probes.get(P.bits)
        if got is None:
            S = self.S
            loc = S.local(P)
            Xs, mults = projective_probes(loc.H, S.p, S.F, loc.table)
            got = ([induce_inflate(S.G, P, X) for X in Xs], mults)
            self.probes[P.bits] = got
        return got

    def column_block(self, P: Subgroup, Q: Subgroup) -> list[list[Cyclo]]:
        """``[s][phi]`` species values of ``N_{P,phi}`` at ``Q`` from explicit Brauer quotients."""
        key = (P.bits, Q.bits)
        got = self.values.get(key)
        if got is None:
            S = self.S
            mods, mults = self.probe_modules(P)
            classes = pprime_classes(S.local(Q).H, S.p)
            ys = []
            for Nmod in mods:
                BQ = brauer_quotient(Nmod, Q)
                ys.append([brauer_value(BQ, c.representative) for c in classes])
            got = []
            for si in range(len(classes)):
                got.append(solve_rational(mults, [y[si] for y in ys], S.m))
            self.values[key] = got
        return got


def _oracle(S: Session) -> _OracleCache:
    oc = getattr(S, "_oracle_cache", None)
    if oc is None:
        oc = S._oracle_cache = _OracleCache(S)
    return oc


def species_oracle(S: Session, row: SpeciesIndex, col: BasisIndex) -> Cyclo:
    """``epsilon_{Q,s}[N_{P,phi}]`` from the constructed module, with no use of the table formulas.

    ``N_{P,phi}`` is never split off: projective modules ``X`` of ``N_G(P)/P``
    with known projective-cover multiplicities are induced and inflated, their
    Brauer quotients are taken, and the per-phi values are recovered from the
    resulting square linear system.
    """
    return _oracle(S).column_block(col.P, row.Q)[row.s][col.phi]


def oracle_matrix(S: Session) -> CycloMatrix:
    M = CycloMatrix.zeros(S.m, len(S.E), len(S.C))
    for i, e in enumerate(S.E):
        for j, b in enumerate(S.C):
            M[i, j] = species_oracle(S, e, b)
    return M
