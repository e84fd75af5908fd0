import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ZOO, group
from trivsource.errors import NotNormal, OrderCapExceeded, ParseError
from trivsource.permgroup import (Perm, all_p_subgroups, all_subgroups, canonical, conjugacy_classes,
                                  conjugate, core_p, cyclic_subgroup, frattini, is_normal,
                                  left_coset_reps, normalizer, p_subgroup_classes, parse_group,
                                  pprime_classes, quotient, subgroup_classes, subgroup_from_bits)


def brute_subgroups(G):
    """Every subset containing 1 and closed under multiplication."""
    found = set()
    others = range(1, G.order)
    for r in range(G.order):
        for rest in itertools.combinations(others, r):
            S = {0, *rest}
            if all(G.mul[a][b] in S for a in S for b in S):
                found.add(sum(1 << a for a in S))
    return found


@pytest.mark.parametrize("name", ["C2", "C3", "C4", "klein4", "S3", "C6", "D8", "Q8"])
def test_subgroups_match_brute_force(name):
    G = group(name)
    assert {H.bits for H in all_subgroups(G)} == brute_subgroups(G)


@pytest.mark.parametrize("name,total,classes", [
    ("S3", 6, 4), ("D8", 10, 8), ("Q8", 6, 6), ("A4", 10, 5), ("S4", 30, 11), ("C3xC3", 6, 6),
])
def test_subgroup_counts(name, total, classes):
    G = group(name)
    assert len(all_subgroups(G)) == total
    assert len(subgroup_classes(G)) == classes


@pytest.mark.parametrize("name", ZOO)
def test_class_equations(name):
    G = group(name)
    assert sum(c.size for c in conjugacy_classes(G)) == G.order
    for cls in subgroup_classes(G):
        assert len(cls) * normalizer(G, cls[0]).order == G.order


@pytest.mark.parametrize("name", ZOO)
def test_canonical_transport(name):
    G = group(name)
    for H in all_subgroups(G):
        R, x = canonical(G, H)
        assert conjugate(R, x) == H
        assert R.bits == min(conjugate(H, g).bits for g in range(G.order))


@pytest.mark.parametrize("name", ["S3", "D8", "A4", "S4", "Q8", "D10"])
def test_quotient_projection_is_homomorphism(name):
    G = group(name)
    for P in all_subgroups(G):
        N = normalizer(G, P)
        qg = quotient(N, P)
        Q = qg.quotient
        assert Q.order * P.order == N.order
        for a in N.members:
            for b in N.members:
                assert qg.project[G.mul[a][b]] == Q.mul[qg.project[a]][qg.project[b]]
        for q in range(Q.order):
            assert qg.project[qg.section[q]] == q


def test_quotient_requires_normal():
    G = group("S3")
    P = cyclic_subgroup(G, G.index[Perm.from_cycles("(1 2)").extend(3)])
    with pytest.raises(NotNormal):
        quotient(G.whole(), P)


@pytest.mark.parametrize("name,p", [("S4", 2), ("D8", 2), ("Q8", 2), ("A4", 2), ("S4", 3), ("C3xC3", 3)])
def test_frattini_and_core(name, p):
    G = group(name)
    for P in all_p_subgroups(G, p):
        assert is_normal(P, frattini(P))
    for V in all_subgroups(G):
        O = core_p(V, p)
        assert is_normal(V, O)
        assert O in all_p_subgroups(G, p)


def test_frattini_examples():
    assert frattini(group("Q8").whole()).order == 2
    assert frattini(group("klein4").whole()).order == 1
    assert frattini(group("C4").whole()).order == 2
    assert frattini(group("D8").whole()).order == 2


def test_pprime_classes_identity_first():
    G = group("S4")
    for p in (2, 3):
        cl = pprime_classes(G, p)
        assert cl[0].representative == 0
        assert all(G.elem_order(c.representative) % p for c in cl)
    assert len(pprime_classes(G, 2)) == 2
    assert len(pprime_classes(G, 3)) == 4


def test_p_subgroup_classes_sorted():
    G = group("S4")
    reps = p_subgroup_classes(G, 2)
    assert [R.order for R in reps] == sorted(R.order for R in reps)
    assert reps[0].order == 1 and reps[-1].order == 8


def test_left_coset_reps():
    G = group("S4")
    H = p_subgroup_classes(G, 2)[-1]
    reps = left_coset_reps(G, H)
    assert len(reps) == 3
    cover = 0
    for r in reps:
        cover |= sum(1 << G.mul[r][h] for h in H.members)
    assert cover == G.all_bits


@pytest.mark.parametrize("text,order", [
    ("cyclic 5", 5), ("C6", 6), ("dihedral 10", 10), ("D10", 10), ("symmetric 4", 24), ("S3", 6),
    ("alternating 4", 12), ("klein4", 4), ("Q8", 8), ("C3xC3", 9), ("C2 x S3", 12),
    ("elementary_abelian 2 3", 8), ("(0 1 2), (0 1)", 6), ("(1 2 3 4)", 4), ("trivial", 1),
])
def test_parse_group(text, order):
    assert parse_group(text).order == order


@pytest.mark.parametrize("text", ["", "(0 1", "foo 3", "cyclic", "cyclic 0", "(0 1)(x)", "D 8 8"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_group(text)


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        parse_group("symmetric 5", max_order=100)
    assert parse_group("symmetric 5", max_order=120).order == 120


def test_perm_cycles_roundtrip():
    g = Perm.from_cycles("(0 3)(1 2 4)")
    assert str(g) == "(0 3)(1 2 4)"
    assert Perm.from_cycles(str(g)) == g
    assert (g * g.inverse()) == Perm.identity(len(g))


def test_composition_convention():
    a = Perm.from_cycles("(0 1)").extend(3)
    b = Perm.from_cycles("(1 2)").extend(3)
    # (a*b)(i) = a(b(i))
    assert (a * b)[1] == a[b[1]]


perm5 = st.permutations(list(range(5))).map(Perm)


@given(perm5, perm5, perm5)
def test_perm_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Perm.identity(5)
    assert (a * b).inverse() == b.inverse() * a.inverse()


@settings(max_examples=40, deadline=None)
@given(st.lists(perm5, min_size=1, max_size=2))
def test_generated_group_closed(gens):
    from trivsource.permgroup import generate
    G = generate(gens, 5)
    assert 120 % G.order == 0
    for i in range(G.order):
        assert G.mul[i][G.inv[i]] == 0
    H = subgroup_from_bits(G, G.all_bits)
    assert H.order == G.order
