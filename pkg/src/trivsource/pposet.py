"""Posets of p-subgroups normalized by an element, Möbius functions, reduced Euler characteristics."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotFixed
from .permgroup import Group, Subgroup, all_p_subgroups, all_subgroups, normalizes, closure


@dataclass(frozen=True)
class PosetSlice:
    elements: tuple[Subgroup, ...]

    def leq(self, a: Subgroup, b: Subgroup) -> bool:
        return a <= b

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, H: Subgroup) -> bool:
        return any(H.bits == K.bits for K in self.elements)


def fixed_subposet(G: Group, p: int, g: int, lower: Subgroup | None = None,
                   upper: Subgroup | None = None, open_lower: bool = False,
                   open_upper: bool = False) -> PosetSlice:
    """p-subgroups ``R`` between the bounds with ``g`` in ``N_G(R)``."""
    out = []
    for R in all_p_subgroups(G, p):
        if lower is not None:
            if not lower <= R or (open_lower and R.bits == lower.bits):
                continue
        if upper is not None:
            if not R <= upper or (open_upper and R.bits == upper.bits):
                continue
        if normalizes(G, g, R):
            out.append(R)
    return PosetSlice(tuple(out))


def mobius_g(P: Subgroup, Q: Subgroup, g: int) -> int:
    """Möbius function of the poset of p-subgroups normalized by ``g``.

    Uses the recurrence ``mu(P, Q) = -sum_{P <= R < Q} mu(P, R)`` over
    ``g``-stable ``R``. All subgroups between ``P`` and a p-group ``Q`` are
    p-groups, so the prime is implicit.
    """
    G = P.parent
    if not (normalizes(G, g, P) and normalizes(G, g, Q)):
        raise NotFixed(f"element {G.word(g)} does not normalize both bounds")
    if not P <= Q:
        return 0
    if P.bits == Q.bits:
        return 1
    memo = G._cache.setdefault("mobius", {})
    key = (g, P.bits, Q.bits)
    if key in memo:
        return memo[key]
    interval = [R for R in all_subgroups(G) if P <= R <= Q and normalizes(G, g, R)]
    mu: dict[int, int] = {}
    for R in interval:  # sorted by order, so every proper predecessor comes first
        if R.bits == P.bits:
            mu[R.bits] = 1
        else:
            mu[R.bits] = -sum(v for b, v in mu.items() if b & R.bits == b and b != R.bits)
        memo[(g, P.bits, R.bits)] = mu[R.bits]
    return mu[Q.bits]


def mobius_g_upper(P: Subgroup, Q: Subgroup, g: int) -> int:
    """Same Möbius value through the other recurrence ``mu(P, Q) = -sum_{P < R <= Q} mu(R, Q)``."""
    G = P.parent
    if not (normalizes(G, g, P) and normalizes(G, g, Q)):
        raise NotFixed(f"element {G.word(g)} does not normalize both bounds")
    if not P <= Q:
        return 0
    interval = [R for R in all_subgroups(G) if P <= R <= Q and normalizes(G, g, R)]
    mu: dict[int, int] = {}
    for R in reversed(interval):
        if R.bits == Q.bits:
            mu[R.bits] = 1
        else:
            mu[R.bits] = -sum(v for b, v in mu.items() if R.bits & b == R.bits and b != R.bits)
    return mu[P.bits]


def chain_counts(S: PosetSlice) -> list[int]:
    """``c[k]`` = number of chains with ``k`` elements (``c[0] = 1`` for the empty chain)."""
    els = sorted(S.elements, key=lambda R: (R.order, R.bits))
    # ending[i][k]: chains with k elements whose top is els[i]
    ending: list[list[int]] = []
    for i, R in enumerate(els):
        counts = [0, 1]
        for j in range(i):
            if els[j] < R:
                for k, c in enumerate(ending[j]):
                    if c:
                        while len(counts) <= k + 1:
                            counts.append(0)
                        counts[k + 1] += c
        ending.append(counts)
    total = [1]
    for counts in ending:
        for k, c in enumerate(counts):
            while len(total) <= k:
                total.append(0)
            if k:
                total[k] += c
    return total


def reduced_euler(S: PosetSlice) -> int:
    """Reduced Euler characteristic of the order complex; ``-1`` for the empty poset."""
    c = chain_counts(S)
    return -1 + sum((-1) ** (k - 1) * c[k] for k in range(1, len(c)))


def has_conical_contraction(S: PosetSlice, D: Subgroup, lower: Subgroup) -> bool:
    """Whether ``R -> R.D -> lower.D`` stays inside the slice.

    ``D`` is a normal p-subgroup (a Frattini subgroup or ``O_p``) that every
    element of the slice normalizes. A True answer certifies that the slice is
    contractible, so its reduced Euler characteristic vanishes.
    """
    G = D.parent
    if D <= lower:
        return False

    def product(R: Subgroup) -> int | None:
        bits = closure(G, R.gens + D.gens, R.bits | D.bits)
        if bits.bit_count() * (R.bits & D.bits).bit_count() != R.order * D.order:
            return None  # R.D is not a subgroup
        return bits

    bits = {R.bits for R in S}
    apex = product(lower)
    if apex is None or apex not in bits:
        return False
    for R in S:
        b = product(R)
        if b is None or b not in bits:
            return False
    return True
