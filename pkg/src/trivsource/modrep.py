"""Modules over F_q G: chopping, Brauer characters, Brauer tables, Brauer quotients.

A :class:`GModule` stores one matrix per generator of its group and acts on
column vectors. Brauer characters are lifted to Q(zeta_m) through the fixed
correspondence ``omega^j <-> zeta^j`` of the session field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import ffield as ff
from .errors import ChopBudgetExceeded, InternalInconsistency, SingularSystem
from .exactfield import Cyclo, CycloMatrix, mat_inverse
from .ffield import FField, build_field
from .permgroup import (ConjClass, Group, QuotientGroup, Subgroup, centralizer, class_lookup,
                        cyclic_subgroup, left_coset_reps, maximal_subgroups, normalizer,
                        pprime_classes, quotient)

DEFAULT_CHOP_BUDGET = 400


@dataclass(eq=False)
class GModule:
    group: Group
    field: FField
    dim: int
    action: list[list[list[int]]]  # one matrix per entry of group.gen_idx
    _mats: dict[int, list[list[int]]] | None = field(default=None, repr=False)

    def matrices(self) -> dict[int, list[list[int]]]:
        """Matrix of every group element, by breadth-first extension from the generators."""
        if self._mats is None:
            G, F = self.group, self.field
            mats = {0: ff.identity(self.dim)}
            frontier = [0]
            while frontier:
                nxt = []
                for x in frontier:
                    for g, A in zip(G.gen_idx, self.action):
                        y = G.mul[g][x]
                        if y not in mats:
                            mats[y] = ff.mat_mul(F, A, mats[x])
                            nxt.append(y)
                frontier = nxt
            self._mats = mats
        return self._mats

    def matrix_of(self, a: int) -> list[list[int]]:
        return self.matrices()[a]

    def verify_action(self) -> bool:
        """Check that the generator matrices define a homomorphism on every element."""
        G, F = self.group, self.field
        mats = self.matrices()
        if len(mats) != G.order:
            return False
        return all(ff.mat_mul(F, A, mats[x]) == mats[G.mul[g][x]]
                   for g, A in zip(G.gen_idx, self.action) for x in range(G.order))


def trivial_module(H: Group, F: FField) -> GModule:
    return GModule(H, F, 1, [[[1]] for _ in H.gen_idx])


def regular_module(H: Group, F: FField) -> GModule:
    """Left regular module: ``g . e_h = e_{gh}``."""
    n = H.order
    action = []
    for g in H.gen_idx:
        A = [[0] * n for _ in range(n)]
        for h in range(n):
            A[H.mul[g][h]][h] = 1
        action.append(A)
    return GModule(H, F, n, action)


def induce(G: Group, H: Subgroup, dim: int, rep, F: FField) -> GModule:
    """Induce from ``H <= G`` the representation ``rep: element index -> matrix``.

    Basis vectors are pairs (left coset representative r_i, inner basis vector);
    ``g r_i = r_j h`` places ``rep(h)`` in block (j, i).
    """
    reps = left_coset_reps(G, H)
    coset_of = {}
    for i, r in enumerate(reps):
        for h in H.members:
            coset_of[G.mul[r][h]] = i
    n = len(reps) * dim
    action = []
    for g in G.gen_idx:
        A = [[0] * n for _ in range(n)]
        for i, r in enumerate(reps):
            gr = G.mul[g][r]
            j = coset_of[gr]
            h = G.mul[G.inv[reps[j]]][gr]
            B = rep(h)
            for a in range(dim):
                for b in range(dim):
                    A[j * dim + a][i * dim + b] = B[a][b]
        action.append(A)
    return GModule(G, F, n, action)


def induce_inflate(G: Group, P: Subgroup, E: GModule) -> GModule:
    """``Ind_{N_G(P)}^G Inf_{N_G(P)/P}^{N_G(P)} E`` for a module ``E`` of ``N_G(P)/P``."""
    qg = quotient(normalizer(G, P), P)
    if E.group is not qg.quotient:
        raise ValueError("module is not over N_G(P)/P")
    return induce(G, qg.numerator, E.dim, lambda n: E.matrix_of(qg.project[n]), E.field)


def induce_linear(H: Group, S: Subgroup, exponent, F: FField) -> GModule:
    """Induce the 1-dim module of ``S`` on which ``s`` acts by ``omega ** exponent(s)``."""
    return induce(H, S, 1, lambda h: [[F.omega_power(exponent(h))]], F)


def submodule(M: GModule, U: ff.Echelon) -> GModule:
    F = M.field
    action = []
    for A in M.action:
        cols = [U.coords(ff.mat_vec(F, A, u)) for u in U.rows]
        action.append(ff.transpose(cols) if cols else [])
    return GModule(M.group, F, len(U), action)


def quotient_module(M: GModule, U: ff.Echelon) -> GModule:
    F = M.field
    piv = set(U.pivots)
    free = [j for j in range(M.dim) if j not in piv]
    action = []
    for A in M.action:
        cols = []
        for j in free:
            w = U.reduce([row[j] for row in A])
            cols.append([w[i] for i in free])
        action.append(ff.transpose(cols) if cols else [])
    return GModule(M.group, F, len(free), action)


# -- chopping --------------------------------------------------------------

def _random_algebra_element(M: GModule, rng: random.Random) -> list[list[int]]:
    F = M.field
    n = M.dim
    words = [ff.identity(n)]
    cur = ff.identity(n)
    for _ in range(4):
        if M.action:
            cur = ff.mat_mul(F, rng.choice(M.action), cur)
        words.append(cur)
    A = [[0] * n for _ in range(n)]
    for w in words:
        c = rng.randrange(F.q)
        if c:
            A = [F.axpy(a, c, b) for a, b in zip(A, w)]
    return A


def find_submodule(M: GModule, rng: random.Random, budget: int = DEFAULT_CHOP_BUDGET) -> ff.Echelon | None:
    """A proper nonzero submodule of ``M``, or None once ``M`` is certified irreducible.

    Certification is Norton's test with a linear factor: if ``A - lam`` has
    a one-dimensional kernel for some algebra element ``A`` and neither that
    kernel nor the kernel of the transpose spins to a proper subspace, ``M``
    is irreducible.
    """
    F, n = M.field, M.dim
    if n <= 1:
        return None
    gens = M.action
    gens_t = [ff.transpose(A) for A in gens]
    for _ in range(budget):
        A = _random_algebra_element(M, rng)
        lams = list(F.elements())
        rng.shuffle(lams)
        for lam in lams:
            B = ff.mat_sub_scalar(F, A, lam)
            null = ff.nullspace(F, B, n)
            if not null:
                continue
            for v in null[:3]:
                U = ff.spin(F, [v], gens, n)
                if len(U) < n:
                    return U
            if len(null) == 1:
                w = ff.nullspace(F, ff.transpose(B), n)[0]
                W = ff.spin(F, [w], gens_t, n)
                if len(W) < n:
                    return ff.spin(F, ff.nullspace(F, W.rows, n), gens, n)
                return None
            break
    raise ChopBudgetExceeded(f"no split or certificate after {budget} attempts")


def chop(M: GModule, seed: int = 0, p: int | None = None,
         budget: int = DEFAULT_CHOP_BUDGET) -> list[tuple[GModule, int]]:
    """Composition factors of ``M`` with multiplicities, grouped by Brauer character."""
    rng = random.Random(seed)
    p = p if p is not None else M.field.p
    found: list[GModule] = []
    stack = [M]
    while stack:
        X = stack.pop()
        if X.dim == 0:
            continue
        U = find_submodule(X, rng, budget)
        if U is None:
            found.append(X)
        else:
            stack.append(quotient_module(X, U))
            stack.append(submodule(X, U))
    groups: dict[tuple, list] = {}
    for S in found:
        key = brauer_character(S, p).values
        groups.setdefault(key, [S, 0])[1] += 1
    return [(S, k) for S, k in groups.values()]


# -- Brauer characters -----------------------------------------------------

def eigen_multiplicities(F: FField, A: list[list[int]], order: int) -> dict[int, int]:
    """For a matrix of p'-order dividing ``order``: exponent j -> dim ker(A - omega^j)."""
    n = len(A)
    step = F.m // order
    out = {}
    for i in range(order):
        j = i * step
        k = ff.nullity(F, ff.mat_sub_scalar(F, A, F.omega_power(j)), n)
        if k:
            out[j] = k
    return out


def brauer_value(M: GModule, a: int) -> Cyclo:
    """Brauer character of ``M`` at the p'-element ``a``."""
    F = M.field
    k = M.group.elem_order(a)
    if F.m % k:
        raise InternalInconsistency(f"element order {k} does not divide conductor {F.m}")
    if M.dim == 0:
        return Cyclo.zero(F.m)
    mults = eigen_multiplicities(F, M.matrix_of(a), k)
    if sum(mults.values()) != M.dim:
        raise InternalInconsistency("eigenvalue multiplicities do not sum to the dimension")
    val = Cyclo.zero(F.m)
    for j, c in mults.items():
        val = val + Cyclo.zeta_power(F.m, j) * c
    return val


@dataclass(frozen=True)
class BrauerCharacter:
    group: Group
    p: int
    values: tuple[Cyclo, ...]

    @property
    def dim(self) -> int:
        return int(self.values[0].rational_value())

    def __call__(self, a: int) -> Cyclo:
        """Value at an arbitrary p'-element (by element index)."""
        return self.values[class_lookup(self.group, self.p)[a]]


def brauer_character(M: GModule, p: int) -> BrauerCharacter:
    classes = pprime_classes(M.group, p)
    return BrauerCharacter(M.group, p, tuple(brauer_value(M, c.representative) for c in classes))


def _char_key(chi: BrauerCharacter):
    # dimension first, then values in descending lexicographic order (trivial first)
    return (chi.dim, tuple(tuple(-c for c in v.coords) for v in chi.values))


@dataclass(eq=False)
class BrauerTable:
    group: Group
    p: int
    m: int
    classes: list[ConjClass]
    irreducibles: list[BrauerCharacter]
    modules: list[GModule]
    projectives: CycloMatrix  # rows: p'-classes, cols: irreducibles; entry phi_hat(s)

    @property
    def size(self) -> int:
        return len(self.irreducibles)

    def centralizer_order(self, i: int) -> int:
        return self.group.order // self.classes[i].size

    def orthogonality_matrix(self) -> CycloMatrix:
        """Rows phi, columns [s]: ``phi(s^-1) / |C(s)|``."""
        H = self.group
        look = class_lookup(H, self.p)
        rows = []
        for chi in self.irreducibles:
            rows.append([chi.values[look[H.inv[c.representative]]] / self.centralizer_order(i)
                         for i, c in enumerate(self.classes)])
        return CycloMatrix(self.m, rows)

    def phi(self, j: int, a: int) -> Cyclo:
        return self.irreducibles[j](a)

    def phi_hat(self, j: int, a: int) -> Cyclo:
        return self.projectives[class_lookup(self.group, self.p)[a], j]


def brauer_table(H: Group | QuotientGroup, p: int, F: FField, seed: int = 0) -> BrauerTable:
    """Irreducible Brauer characters (from chopping the regular module) and projective characters."""
    if isinstance(H, QuotientGroup):
        H = H.quotient
    key = ("brauer_table", p, F.q, F.m, seed)
    cached = H._cache.get(key)
    if cached is not None:
        return cached
    classes = pprime_classes(H, p)
    factors = chop(regular_module(H, F), seed=seed, p=p)
    pairs = sorted(((brauer_character(S, p), S, k) for S, k in factors), key=lambda t: _char_key(t[0]))
    if len(pairs) != len(classes):
        raise InternalInconsistency(
            f"{len(pairs)} simple modules but {len(classes)} p'-classes")
    table = BrauerTable(H, p, F.m, classes, [t[0] for t in pairs], [t[1] for t in pairs],
                        CycloMatrix.zeros(F.m, 0, 0))
    table.projectives = mat_inverse(table.orthogonality_matrix())
    H._cache[key] = table
    return table


def hom_dim(X: GModule, S: GModule) -> int:
    """``dim Hom_{FG}(X, S)`` by solving ``A X_g = S_g A`` for every generator."""
    F = X.field
    dx, ds = X.dim, S.dim
    if not dx or not ds:
        return 0
    rows = []
    for Xg, Sg in zip(X.action, S.action):
        for i in range(ds):
            for l in range(dx):
                row = [0] * (ds * dx)
                for j in range(dx):
                    if Xg[j][l]:
                        row[i * dx + j] = F.add(row[i * dx + j], Xg[j][l])
                for k in range(ds):
                    if Sg[i][k]:
                        row[k * dx + l] = F.sub(row[k * dx + l], Sg[i][k])
                rows.append(row)
    return ff.nullity(F, rows, ds * dx)


# -- Brauer quotient -------------------------------------------------------

def fixed_space(M: GModule, P: Subgroup) -> ff.Echelon:
    F, n = M.field, M.dim
    rows = []
    for u in P.gens:
        rows.extend(ff.mat_sub_scalar(F, M.matrix_of(u), 1))
    E = ff.Echelon(F, n)
    for v in ff.nullspace(F, rows, n) if rows else ff.identity(n):
        E.add(v)
    return E


def relative_trace_image(M: GModule, R: Subgroup, P: Subgroup) -> list[list[int]]:
    """``tr_R^P(M^R)`` as a list of spanning vectors."""
    G, F = M.group, M.field
    reps = [a for a in left_coset_reps(G, R) if a in P]
    T = [[0] * M.dim for _ in range(M.dim)]
    for u in reps:
        T = ff.mat_add(F, T, M.matrix_of(u))
    return [ff.mat_vec(F, T, v) for v in fixed_space(M, R).rows]


def brauer_quotient(M: GModule, P: Subgroup) -> GModule:
    """``M[P] = M^P / sum_{R < P} tr_R^P(M^R)`` as a module for ``N_G(P)/P``.

    Only maximal ``R`` are used; transitivity of relative traces covers the rest.
    """
    G, F = M.group, M.field
    qg = quotient(normalizer(G, P), P)
    Hbar = qg.quotient
    Y = fixed_space(M, P)
    f = len(Y)
    action = []
    for q in Hbar.gen_idx:
        A = M.matrix_of(qg.section[q])
        cols = [Y.coords(ff.mat_vec(F, A, y)) for y in Y.rows]
        action.append(ff.transpose(cols) if cols else [])
    fixed_mod = GModule(Hbar, F, f, action)
    W = ff.Echelon(F, f)
    for R in maximal_subgroups(P):
        for v in relative_trace_image(M, R, P):
            W.add(Y.coords(v))
    return quotient_module(fixed_mod, W)


def species_value(M: GModule, Q: Subgroup, s: int | ConjClass) -> Cyclo:
    """Brauer character of ``M[Q]`` at the p'-element ``s`` of ``N_G(Q)/Q``."""
    if isinstance(s, ConjClass):
        s = s.representative
    return brauer_value(brauer_quotient(M, Q), s)


# -- projective modules for the species oracle -----------------------------

def projective_probes(H: Group, p: int, F: FField, table: BrauerTable) -> tuple[list[GModule], list[list[int]]]:
    """Projective modules whose projective-cover multiplicities form an invertible square system.

    Candidates are induced from cyclic p'-subgroups (hence projective); the
    multiplicity of the projective cover of ``S_phi`` in ``X`` is
    ``dim Hom(X, S_phi)`` since every simple module is absolutely irreducible.
    """
    n = table.size
    chosen: list[GModule] = []
    mults: list[list[int]] = []
    basis = []  # rows over Q, kept in echelon form for the rank test

    def independent(vec):
        v = [Fraction(x) for x in vec]
        for row, c in basis:
            if v[c]:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        basis.append(([x / v[c] for x in v], c))
        return True

    for cls in table.classes:
        s = cls.representative
        k = H.elem_order(s)
        S = cyclic_subgroup(H, s)
        power = {0: 0}
        x = 0
        for e in range(1, k):
            x = H.mul[x][s]
            power[x] = e
        for lam in range(k):
            step = F.m // k
            X = induce_linear(H, S, lambda h, lam=lam: lam * power[h] * step, F)
            vec = [hom_dim(X, Smod) for Smod in table.modules]
            if independent(vec):
                chosen.append(X)
                mults.append(vec)
                if len(chosen) == n:
                    return chosen, mults
    raise SingularSystem("projective probes do not span the projective characters")


def solve_rational(C: list[list[int]], ys: list[Cyclo], m: int) -> list[Cyclo]:
    """Solve ``C x = ys`` for a square integer matrix ``C``."""
    n = len(C)
    A = CycloMatrix(m, [[Fraction(x) for x in row] for row in C])
    try:
        Ainv = mat_inverse(A)
    except Exception as exc:  # pragma: no cover - guarded by projective_probes
        raise SingularSystem(str(exc)) from exc
    out = []
    for i in range(n):
        acc = Cyclo.zero(m)
        for j in range(n):
            if Ainv[i, j] and ys[j]:
                acc = acc + Ainv[i, j] * ys[j]
        out.append(acc)
    return out


__all__ = [
    "GModule", "BrauerCharacter", "BrauerTable", "FField", "build_field", "trivial_module",
    "regular_module", "induce", "induce_inflate", "induce_linear", "chop", "brauer_character",
    "brauer_value", "brauer_table", "brauer_quotient", "species_value", "hom_dim",
    "projective_probes", "solve_rational", "fixed_space", "submodule", "quotient_module",
    "centralizer",
]
