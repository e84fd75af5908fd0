"""Monomial Burnside ring pairs (V, nu) and the linearization map into the trivial source ring.

A transitive fibred G-set is recorded as the pair (V, nu): a subgroup V and a
linear character nu of V with values in the p'-roots of unity. Its
linearization is the induced module ``Ind_V^G F_nu``; :func:`lin_row` expands
it in the canonical basis by a closed formula and :func:`species_of_induced`
evaluates its species directly from the coset action, which gives an
independent check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .exactfield import Cyclo, mat_vec
from .permgroup import Subgroup, conjugate, core_p, left_coset_reps, subgroup_classes
from .pposet import fixed_subposet, reduced_euler
from .tsring import BasisIndex, Session, SpeciesIndex, matrix_N


@dataclass(frozen=True)
class MonomialPair:
    """``nu`` maps each element of ``V`` to an exponent ``e``, meaning the value ``zeta_m^e``."""

    V: Subgroup
    nu: tuple[tuple[int, int], ...]
    m: int

    @property
    def values(self) -> dict[int, int]:
        return dict(self.nu)

    def value(self, v: int) -> Cyclo:
        return Cyclo.zeta_power(self.m, self.values[v])

    def is_trivial(self) -> bool:
        return not any(e for _, e in self.nu)

    def label(self) -> str:
        vals = self.values
        G = self.V.parent
        on_gens = ", ".join(f"{G.word(g)}->z^{vals[g]}" for g in self.V.gens)
        return f"({self.V.label()}, nu: {on_gens or 'trivial'})"


@dataclass
class LinRow:
    source: MonomialPair
    coeffs: dict[BasisIndex, Cyclo] = field(default_factory=dict)

    def vector(self, C: list[BasisIndex]) -> list[Cyclo]:
        return [self.coeffs[b] for b in C]


def linear_characters(V: Subgroup, m: int) -> list[dict[int, int]]:
    """All homomorphisms ``V -> Z/m`` (exponents of ``zeta_m``).

    Each assignment of exponents to the generators of ``V`` is propagated
    along the Cayley graph; it is kept only if every edge agrees, which is
    exactly the homomorphism condition.
    """
    G = V.parent
    gens = V.gens
    out = []
    for images in itertools.product(range(m), repeat=len(gens)):
        val = {0: 0}
        queue = [0]
        ok = True
        while queue and ok:
            x = queue.pop()
            for g, e in zip(gens, images):
                y = G.mul[x][g]
                want = (val[x] + e) % m
                if y not in val:
                    val[y] = want
                    queue.append(y)
                elif val[y] != want:
                    ok = False
                    break
        if ok:
            out.append(val)
    return out


def _conjugate_character(V: Subgroup, nu: dict[int, int], n: int) -> dict[int, int]:
    """``(n.nu)(v) = nu(n^-1 v n)`` for ``n`` normalizing ``V``."""
    G = V.parent
    ninv = G.inv[n]
    return {v: nu[G.conj(ninv, v)] for v in nu}


def monomial_pairs(S: Session) -> list[MonomialPair]:
    """Representatives of the G-classes of pairs (V, nu), V running over canonical subgroups."""
    G, m = S.G, S.m
    out = []
    for cls in subgroup_classes(G):
        V = cls[0]
        members = V.members
        norm = [n for n in range(G.order) if conjugate(V, n).bits == V.bits]
        seen: set[tuple[int, ...]] = set()
        for nu in linear_characters(V, m):
            orbit = {tuple(c[v] for v in members) for c in (_conjugate_character(V, nu, n) for n in norm)}
            rep = min(orbit)
            if rep in seen:
                continue
            seen.add(rep)
            out.append(MonomialPair(V, tuple(zip(members, rep)), m))
    return out


def lin_row(S: Session, pair: MonomialPair) -> LinRow:
    """Expansion of ``Ind_V^G F_nu`` in the canonical basis.

    ``-1/|V| sum |P| phi(g^-1 P) nu(g) chi~((P, V]^<g>)`` over p-subgroups
    ``P <= V`` and p'-elements ``gP`` of ``N_G(P)/P`` with ``g`` in ``V``, where
    the poset is the p-subgroups strictly above ``P`` and inside ``V`` that
    ``g`` normalizes.
    """
    G, V = S.G, pair.V
    nu = pair.values
    acc = {b: S.zero() for b in S.C}
    for P in S.all_psubs:
        if not P <= V:
            continue
        P0, x, _ = S.transported(P)
        loc0 = S.local(P0)
        for a0 in loc0.pprime_sections:
            g = G.conj(x, a0)
            if g not in V:
                continue
            chi = reduced_euler(fixed_subposet(G, S.p, g, lower=P, upper=V, open_lower=True))
            if not chi:
                continue
            weight = Cyclo.zeta_power(S.m, nu[g]) * (P.order * chi)
            a0inv = G.inv[a0]
            for k in range(loc0.table.size):
                b = S.C[S.col_index[(P0.bits, k)]]
                acc[b] = acc[b] + S.phi_value(P0, k, a0inv) * weight
    return LinRow(pair, {b: -v / V.order for b, v in acc.items()})


def pprime_part_of(S: Session, t: int) -> int:
    """The p'-part of ``t``: the power ``t^k`` with ``k = 1`` mod the p'-order and ``0`` mod the p-order."""
    G, p = S.G, S.p
    n = G.elem_order(t)
    pp = 1
    while n % (pp * p) == 0:
        pp *= p
    r = n // pp
    k = next(k for k in range(0, n, pp) if k % r == 1 % r)
    return G.power(t, k)


def species_of_induced(S: Session, pair: MonomialPair, row: SpeciesIndex, lift: int | None = None) -> Cyclo:
    """Species of ``Ind_V^G F_nu`` at ``(Q, s)`` by counting the cosets ``fV`` fixed by ``Q`` and the lift.

    ``lift`` may be any element of ``N_G(Q)`` mapping onto a member of the
    class ``s``; by default the p'-part of the class representative's section.
    """
    G, V = S.G, pair.V
    nu = pair.values
    s_hat = pprime_part_of(S, S.section_of(row)) if lift is None else lift
    acc = S.zero()
    for f in left_coset_reps(G, V):
        fV = conjugate(V, f)
        if row.Q <= fV and s_hat in fV:
            acc = acc + Cyclo.zeta_power(S.m, nu[G.conj(G.inv[f], s_hat)])
    return acc


def support_ok(S: Session, pair: MonomialPair, b: BasisIndex) -> bool:
    """Whether some conjugate of ``b.P`` lies between ``O_p(V)`` and ``V``."""
    G, V = S.G, pair.V
    O = core_p(V, S.p)
    return any(O <= (R := conjugate(b.P, x)) and R <= V for x in range(G.order))


@dataclass
class LinCheck:
    pair: MonomialPair
    species_ok: bool
    integral: bool
    support: bool

    @property
    def ok(self) -> bool:
        return self.species_ok and self.integral and self.support


def verify_lin(S: Session) -> list[LinCheck]:
    """Per-pair check that the expansion reproduces the directly computed species."""
    N = matrix_N(S).N
    out = []
    for pair in monomial_pairs(S):
        row = lin_row(S, pair)
        vec = row.vector(S.C)
        direct = [species_of_induced(S, pair, e) for e in S.E]
        out.append(LinCheck(
            pair,
            species_ok=mat_vec(N, vec) == direct,
            integral=all(c.is_integer() for c in vec),
            support=all(support_ok(S, pair, b) for b, c in row.coeffs.items() if c),
        ))
    return out


def lin_matrix(S: Session) -> tuple[list[MonomialPair], list[LinRow]]:
    pairs = monomial_pairs(S)
    return pairs, [lin_row(S, pr) for pr in pairs]

