"""Permutation groups stored by full element enumeration.

Every group carries its sorted element list, a multiplication table over
element indices and an inverse table. Subgroups are bitsets over the parent's
element indices, so containment, intersection and canonical (minimal-bitset)
representatives are plain integer operations.

Composition convention: ``(a * b)(i) = a(b(i))``, i.e. ``b`` acts first, and
conjugation is ``^g h = g h g^-1``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import NotNormal, OrderCapExceeded, ParseError

DEFAULT_MAX_ORDER = 400


class Perm(tuple):
    """A permutation of ``{0, ..., n-1}`` given by its image array."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> "Perm":
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(range(degree))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "Perm":
        """Parse cycle notation such as ``"(0 1)(2 3)"``; points are 0-based."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+([\s,]+\d+)*)?\s*\)\s*)*", text):
            raise ParseError(f"bad cycle string: {text!r}")
        cycles = [
            [int(x) for x in re.split(r"[\s,]+", body.strip()) if x]
            for body in re.findall(r"\(([^()]*)\)", text)
        ]
        points = [x for c in cycles for x in c]
        if len(points) != len(set(points)):
            raise ParseError(f"repeated point in {text!r}")
        n = max(points, default=-1) + 1
        if degree is None:
            degree = n
        elif n > degree:
            raise ParseError(f"point {n - 1} out of range for degree {degree}")
        images = list(range(degree))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a] = b
        return cls._raw(images)

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm._raw(self[i] for i in other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Perm._raw(inv)

    def extend(self, degree: int) -> "Perm":
        return Perm._raw(tuple(self) + tuple(range(len(self), degree)))

    def shift(self, offset: int, degree: int) -> "Perm":
        images = list(range(degree))
        for i, j in enumerate(self):
            images[i + offset] = j + offset
        return Perm._raw(images)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"


class Group:
    """A finite permutation group with all elements enumerated.

    Elements are sorted lexicographically on their image arrays, so the
    identity always has index 0. ``mul[a][b]`` is the index of
    ``elements[a] * elements[b]``.
    """

    def __init__(self, generators: Sequence[Perm], degree: int,
                 max_order: int = DEFAULT_MAX_ORDER, name: str | None = None):
        gens = [Perm(g).extend(degree) if len(g) < degree else Perm(g) for g in generators]
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator {g} has degree {len(g)}, expected {degree}")
        ident = Perm.identity(degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = g * x
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > max_order:
                            raise OrderCapExceeded(
                                f"group order exceeds cap {max_order}")
            frontier = nxt
        self.degree = degree
        self.name = name
        self.max_order = max_order
        self.elements: tuple[Perm, ...] = tuple(sorted(seen))
        self.index: dict[Perm, int] = {x: i for i, x in enumerate(self.elements)}
        self.order = len(self.elements)
        self.generators: tuple[Perm, ...] = tuple(g for g in gens if g != ident)
        self.gen_idx: tuple[int, ...] = tuple(self.index[g] for g in self.generators)
        idx = self.index
        els = self.elements
        self.mul: list[list[int]] = [[idx[a * b] for b in els] for a in els]
        self.inv: list[int] = [row.index(0) for row in self.mul]
        self._cache: dict = {}

    identity = 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        label = self.name or f"<{', '.join(map(str, self.generators))}>"
        return f"Group({label}, order={self.order})"

    @property
    def all_bits(self) -> int:
        return (1 << self.order) - 1

    def elem_order(self, a: int) -> int:
        orders = self._cache.get("orders")
        if orders is None:
            orders = []
            for x in range(self.order):
                k, y = 1, x
                while y != 0:
                    y = self.mul[y][x]
                    k += 1
                orders.append(k)
            self._cache["orders"] = orders
        return orders[a]

    def power(self, a: int, k: int) -> int:
        k %= self.elem_order(a)
        out = 0
        for _ in range(k):
            out = self.mul[out][a]
        return out

    def conj(self, g: int, x: int) -> int:
        """Index of ``g x g^-1``."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def exponent(self) -> int:
        return reduce(math.lcm, (self.elem_order(a) for a in range(self.order)), 1)

    def word(self, a: int) -> str:
        return str(self.elements[a])

    def whole(self) -> "Subgroup":
        return Subgroup(self, self.all_bits, self.gen_idx)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, 1, ())


def generate(generators: Sequence[Perm], degree: int,
             max_order: int = DEFAULT_MAX_ORDER, name: str | None = None) -> Group:
    return Group(generators, degree, max_order=max_order, name=name)


def bits_of(indices: Iterable[int]) -> int:
    b = 0
    for i in indices:
        b |= 1 << i
    return b


def members_of(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: Group
    bits: int
    gens: tuple[int, ...] = field(default=())

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __contains__(self, a: int) -> bool:
        return bool(self.bits >> a & 1)

    def __le__(self, other: "Subgroup") -> bool:
        return self.bits & other.bits == self.bits

    def __lt__(self, other: "Subgroup") -> bool:
        return self.bits != other.bits and self <= other

    @property
    def order(self) -> int:
        return self.bits.bit_count()

    @property
    def members(self) -> list[int]:
        return members_of(self.bits)

    @property
    def generators(self) -> list[Perm]:
        return [self.parent.elements[i] for i in self.gens]

    def label(self) -> str:
        if not self.gens:
            return "1"
        return "<" + ", ".join(self.parent.word(i) for i in self.gens) + ">"

    def __repr__(self) -> str:
        return f"Subgroup({self.label()}, order={self.order})"


def closure(G: Group, gens: Sequence[int], start: int = 1) -> int:
    """Bitset of the subgroup generated by ``gens``.

    ``start`` must already lie inside that subgroup; it only seeds the search.
    """
    bits = start | 1
    frontier = members_of(bits)
    gens = [g for g in gens]
    mul = G.mul
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul[x][g]
                if not bits >> y & 1:
                    bits |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return bits


def subgroup_generated(G: Group, gens: Sequence[int]) -> Subgroup:
    gens = tuple(g for g in gens if g != 0)
    return Subgroup(G, closure(G, gens), gens)


def _join(G: Group, H: Subgroup, c: int) -> Subgroup:
    gens = H.gens + (c,)
    return Subgroup(G, closure(G, gens, H.bits), gens)


def subgroup_from_bits(G: Group, bits: int) -> Subgroup:
    """Rebuild a subgroup (with a small generating set) from its bitset."""
    gens: list[int] = []
    cur = 1
    for a in members_of(bits):
        if not cur >> a & 1:
            gens.append(a)
            cur = closure(G, gens)
    if cur != bits:
        raise ValueError("bitset is not a subgroup")
    return Subgroup(G, bits, tuple(gens))


def is_subgroup_bits(G: Group, bits: int) -> bool:
    if not bits & 1:
        return False
    mem = members_of(bits)
    return all(bits >> G.mul[a][b] & 1 for a in mem for b in mem)


def conjugate(H: Subgroup, g: int) -> Subgroup:
    """``^g H = g H g^-1``."""
    G = H.parent
    bits = 0
    for a in H.members:
        bits |= 1 << G.conj(g, a)
    return Subgroup(G, bits, tuple(G.conj(g, a) for a in H.gens))


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return subgroup_from_bits(A.parent, A.bits & B.bits)


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    G = A.parent
    gens = A.gens + B.gens
    return Subgroup(G, closure(G, gens, A.bits | B.bits), gens)


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    key = ("normalizer", H.bits)
    cached = G._cache.get(key)
    if cached is not None:
        return cached
    els = [g for g in range(G.order) if all(G.conj(g, a) in H for a in H.gens)]
    out = subgroup_from_bits(G, bits_of(els))
    G._cache[key] = out
    return out


def normalizes(G: Group, g: int, H: Subgroup) -> bool:
    return all(G.conj(g, a) in H for a in H.gens)


def is_normal(N: Subgroup, P: Subgroup) -> bool:
    G = N.parent
    return P <= N and all(normalizes(G, g, P) for g in N.gens)


def centralizer(H: Subgroup | Group, s: int) -> Subgroup:
    """``C_H(s)``: elements of ``H`` commuting with ``s``."""
    if isinstance(H, Group):
        H = H.whole()
    G = H.parent
    els = [a for a in H.members if G.mul[a][s] == G.mul[s][a]]
    return subgroup_from_bits(G, bits_of(els))


def cyclic_subgroup(G: Group, a: int) -> Subgroup:
    return subgroup_generated(G, (a,))


def all_subgroups(G: Group) -> list[Subgroup]:
    """Every subgroup of ``G``, found by joining cyclic subgroups until closure."""
    cached = G._cache.get("all_subgroups")
    if cached is not None:
        return cached
    cyclic: dict[int, Subgroup] = {}
    for a in range(G.order):
        C = cyclic_subgroup(G, a)
        if C.bits not in cyclic:
            cyclic[C.bits] = C
    known: dict[int, Subgroup] = dict(cyclic)
    known.setdefault(1, G.trivial())
    frontier = list(known.values())
    cyc_gens = [C.gens[0] for C in cyclic.values() if C.gens]
    while frontier:
        nxt = []
        for H in frontier:
            for c in cyc_gens:
                if c in H:
                    continue
                J = _join(G, H, c)
                if J.bits not in known:
                    known[J.bits] = J
                    nxt.append(J)
        frontier = nxt
    out = sorted(known.values(), key=lambda H: (H.order, H.bits))
    G._cache["all_subgroups"] = out
    return out


def subgroup_classes(G: Group) -> list[list[Subgroup]]:
    """All subgroups grouped into conjugacy classes, each headed by its minimal-bitset member."""
    cached = G._cache.get("subgroup_classes")
    if cached is not None:
        return cached
    by_bits = {H.bits: H for H in all_subgroups(G)}
    seen: set[int] = set()
    classes = []
    for H in all_subgroups(G):
        if H.bits in seen:
            continue
        orbit = {}
        for g in range(G.order):
            K = conjugate(H, g)
            orbit.setdefault(K.bits, by_bits[K.bits])
        seen.update(orbit)
        classes.append([orbit[b] for b in sorted(orbit)])
    classes.sort(key=lambda c: (c[0].order, c[0].bits))
    G._cache["subgroup_classes"] = classes
    return classes


def canonical(G: Group, H: Subgroup) -> tuple[Subgroup, int]:
    """Class representative ``R`` of ``H`` and the least ``x`` with ``x R x^-1 = H``."""
    table = G._cache.get("canonical")
    if table is None:
        table = {}
        for cls in subgroup_classes(G):
            rep = cls[0]
            for g in range(G.order):
                K = conjugate(rep, g)
                if K.bits not in table:
                    table[K.bits] = (rep, g)
        G._cache["canonical"] = table
    return table[H.bits]


def is_p_group_order(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def pprime_part(n: int, p: int) -> int:
    return n // p_part(n, p)


def all_p_subgroups(G: Group, p: int) -> list[Subgroup]:
    return [H for H in all_subgroups(G) if is_p_group_order(H.order, p)]


def p_subgroup_classes(G: Group, p: int) -> list[Subgroup]:
    """Canonical representatives of the classes of p-subgroups, sorted by (order, bitset)."""
    return [cls[0] for cls in subgroup_classes(G) if is_p_group_order(cls[0].order, p)]


def subgroups_of(H: Subgroup) -> list[Subgroup]:
    return [K for K in all_subgroups(H.parent) if K <= H]


def maximal_subgroups(H: Subgroup) -> list[Subgroup]:
    subs = [K for K in subgroups_of(H) if K.bits != H.bits]
    return [K for K in subs if not any(K < L for L in subs)]


def frattini(P: Subgroup) -> Subgroup:
    """Intersection of the maximal subgroups of ``P`` (trivial for ``P = 1``)."""
    G = P.parent
    maxes = maximal_subgroups(P)
    if not maxes:
        return G.trivial()
    bits = reduce(lambda a, b: a & b, (M.bits for M in maxes))
    return subgroup_from_bits(G, bits)


def core_p(V: Subgroup, p: int) -> Subgroup:
    """``O_p(V)``: the intersection of the Sylow p-subgroups of ``V``."""
    G = V.parent
    pp = p_part(V.order, p)
    sylows = [K for K in subgroups_of(V) if K.order == pp]
    bits = reduce(lambda a, b: a & b, (S.bits for S in sylows))
    return subgroup_from_bits(G, bits)


@dataclass(frozen=True)
class QuotientGroup:
    numerator: Subgroup
    kernel: Subgroup
    quotient: Group
    project: dict[int, int]
    section: tuple[int, ...]

    def lift(self, q: int) -> int:
        return self.section[q]


def quotient(N: Subgroup, P: Subgroup) -> QuotientGroup:
    """``N/P`` as the permutation action of ``N`` on the left cosets of ``P``."""
    G = N.parent
    if not is_normal(N, P):
        raise NotNormal(f"{P} is not normal in {N}")
    key = ("quotient", N.bits, P.bits)
    cached = G._cache.get(key)
    if cached is not None:
        return cached
    pmem = P.members
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for n in N.members:  # ascending, so each coset is first met at its minimal element
        if n in coset_of:
            continue
        cid = len(reps)
        reps.append(n)
        for u in pmem:
            coset_of[G.mul[n][u]] = cid
    k = len(reps)

    def action(n: int) -> Perm:
        return Perm._raw(coset_of[G.mul[n][r]] for r in reps)

    Q = Group([action(n) for n in N.gens], k, max_order=max(G.max_order, G.order))
    project = {n: Q.index[action(n)] for n in N.members}
    section = [None] * Q.order
    for n in N.members:
        q = project[n]
        if section[q] is None:
            section[q] = n
    out = QuotientGroup(N, P, Q, project, tuple(section))
    G._cache[key] = out
    return out


@dataclass(frozen=True)
class ConjClass:
    group: Group
    representative: int
    members: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)


def conjugacy_classes(H: Group) -> list[ConjClass]:
    cached = H._cache.get("classes")
    if cached is not None:
        return cached
    seen: set[int] = set()
    out = []
    for a in range(H.order):
        if a in seen:
            continue
        orbit = frozenset(H.conj(g, a) for g in range(H.order))
        seen |= orbit
        out.append(ConjClass(H, min(orbit), orbit))
    H._cache["classes"] = out
    return out


def pprime_classes(H: Group | QuotientGroup, p: int) -> list[ConjClass]:
    """Classes of elements of order prime to ``p``, identity class first."""
    if isinstance(H, QuotientGroup):
        H = H.quotient
    return [c for c in conjugacy_classes(H) if H.elem_order(c.representative) % p != 0]


def class_lookup(H: Group, p: int) -> dict[int, int]:
    """Map element index -> position in ``pprime_classes(H, p)`` (p'-elements only)."""
    key = ("class_lookup", p)
    cached = H._cache.get(key)
    if cached is None:
        cached = {}
        for i, c in enumerate(pprime_classes(H, p)):
            for a in c.members:
                cached[a] = i
        H._cache[key] = cached
    return cached


def pprime_exponent(G: Group, p: int) -> int:
    return pprime_part(G.exponent(), p)


def left_coset_reps(G: Group, H: Subgroup) -> list[int]:
    """Minimal representative of each left coset ``gH``, in ascending order."""
    seen = 0
    reps = []
    hm = H.members
    for g in range(G.order):
        if seen >> g & 1:
            continue
        reps.append(g)
        for h in hm:
            seen |= 1 << G.mul[g][h]
    return reps


# -- named constructors ----------------------------------------------------

def _cycle(points: Sequence[int], degree: int) -> Perm:
    images = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        images[a] = b
    return Perm._raw(images)


def _gens_cyclic(n: int):
    if n == 1:
        return [], 1
    return [_cycle(range(n), n)], n


def _gens_dihedral(order: int):
    if order % 2:
        raise ParseError("dihedral group order must be even")
    n = order // 2
    if n == 1:
        return _gens_cyclic(2)
    if n == 2:
        return _gens_klein4()
    rot = _cycle(range(n), n)
    ref = Perm._raw((-i) % n for i in range(n))
    return [rot, ref], n


def _gens_symmetric(n: int):
    if n <= 1:
        return [], 1
    if n == 2:
        return [_cycle([0, 1], 2)], 2
    return [_cycle([0, 1], n), _cycle(range(n), n)], n


def _gens_alternating(n: int):
    if n <= 2:
        return [], max(n, 1)
    return [_cycle([0, 1, i], n) for i in range(2, n)], n


def _gens_klein4():
    return [Perm._raw((1, 0, 3, 2)), Perm._raw((2, 3, 0, 1))], 4


def _gens_quaternion8():
    # regular action of Q8 = {±1, ±i, ±j, ±k}, encoded as index 2*unit + sign
    table = {("1", "1"): (0, "1"), ("1", "i"): (0, "i"), ("1", "j"): (0, "j"), ("1", "k"): (0, "k"),
             ("i", "1"): (0, "i"), ("i", "i"): (1, "1"), ("i", "j"): (0, "k"), ("i", "k"): (1, "j"),
             ("j", "1"): (0, "j"), ("j", "i"): (1, "k"), ("j", "j"): (1, "1"), ("j", "k"): (0, "i"),
             ("k", "1"): (0, "k"), ("k", "i"): (0, "j"), ("k", "j"): (1, "i"), ("k", "k"): (1, "1")}
    units = ["1", "i", "j", "k"]
    elems = [(s, u) for u in units for s in (0, 1)]
    pos = {e: n for n, e in enumerate(elems)}

    def left(x):
        sx, ux = x
        imgs = []
        for sy, uy in elems:
            s, u = table[(ux, uy)]
            imgs.append(pos[((sx + sy + s) % 2, u)])
        return Perm._raw(imgs)

    return [left((0, "i")), left((0, "j"))], 8


def _gens_elementary_abelian(p: int, k: int):
    return _direct([_gens_cyclic(p)] * k)


def _direct(parts):
    degree = sum(d for _, d in parts)
    gens = []
    offset = 0
    for g, d in parts:
        gens.extend(x.shift(offset, degree) for x in g)
        offset += d
    return gens, max(degree, 1)


def cyclic(n: int, **kw) -> Group:
    return generate(*_gens_cyclic(n), name=f"C{n}", **kw)


def dihedral(order: int, **kw) -> Group:
    return generate(*_gens_dihedral(order), name=f"D{order}", **kw)


def symmetric(n: int, **kw) -> Group:
    return generate(*_gens_symmetric(n), name=f"S{n}", **kw)


def alternating(n: int, **kw) -> Group:
    return generate(*_gens_alternating(n), name=f"A{n}", **kw)


def klein4(**kw) -> Group:
    return generate(*_gens_klein4(), name="V4", **kw)


def quaternion8(**kw) -> Group:
    return generate(*_gens_quaternion8(), name="Q8", **kw)


def elementary_abelian(p: int, k: int, **kw) -> Group:
    return generate(*_gens_elementary_abelian(p, k), name=f"E{p}^{k}", **kw)


def direct_product(*groups: Group, **kw) -> Group:
    parts = [(list(G.generators), G.degree) for G in groups]
    name = "x".join(G.name or "?" for G in groups)
    return generate(*_direct(parts), name=name, **kw)


_NAMED = {
    "cyclic": (_gens_cyclic, 1, "C"), "c": (_gens_cyclic, 1, "C"),
    "dihedral": (_gens_dihedral, 1, "D"), "d": (_gens_dihedral, 1, "D"),
    "symmetric": (_gens_symmetric, 1, "S"), "s": (_gens_symmetric, 1, "S"),
    "alternating": (_gens_alternating, 1, "A"), "a": (_gens_alternating, 1, "A"),
    "klein4": (_gens_klein4, 0, "V4"), "v4": (_gens_klein4, 0, "V4"),
    "quaternion8": (_gens_quaternion8, 0, "Q8"), "q8": (_gens_quaternion8, 0, "Q8"),
    "elementary_abelian": (_gens_elementary_abelian, 2, "E"), "e": (_gens_elementary_abelian, 2, "E"),
    "trivial": (lambda: ([], 1), 0, "1"), "1": (lambda: ([], 1), 0, "1"),
}


def _parse_factor(text: str):
    text = text.strip()
    key = re.sub(r"\s+", "", text).lower()
    if key in _NAMED and _NAMED[key][1] == 0:
        fn, _, short = _NAMED[key]
        return fn(), short
    m = re.fullmatch(r"([A-Za-z_]+)\s*((?:\d+\s*)*)", text)
    if m and m.group(1).lower() in _NAMED:
        fn, nargs, short = _NAMED[m.group(1).lower()]
        args = [int(a) for a in m.group(2).split()]
        if len(args) != nargs:
            raise ParseError(f"{m.group(1)} takes {nargs} integer argument(s), got {args}")
        if any(a < 1 for a in args):
            raise ParseError(f"arguments must be positive: {text!r}")
        return fn(*args), short + "".join(map(str, args))
    raise ParseError(f"unknown group factor {text!r}")


def parse_generators(text: str) -> tuple[list[Perm], int]:
    """Parse generators like ``"(0 1)(2 3), (0 2)"`` (separated by ``,`` or ``;``)."""
    depth = 0
    parts, cur = [], []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if ch in ",;" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    parts = [s.strip() for s in parts if s.strip()]
    perms = [Perm.from_cycles(s) for s in parts]
    degree = max((len(g) for g in perms), default=1) or 1
    return [g.extend(degree) for g in perms], degree


def parse_group(text: str, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Build a group from a name (``"symmetric 4"``, ``"C3xC3"``, ``"dihedral 8"``)
    or from generators in cycle notation."""
    text = text.strip()
    if not text:
        raise ParseError("empty group description")
    if text.startswith("("):
        gens, degree = parse_generators(text)
        return generate(gens, degree, max_order=max_order, name=text)
    factors = re.split(r"\s*[x×*]\s*(?=[A-Za-z(])", text)
    parts, names = [], []
    for f in factors:
        part, short = _parse_factor(f)
        parts.append(part)
        names.append(short)
    gens, degree = _direct(parts)
    return generate(gens, degree, max_order=max_order, name="x".join(names))
