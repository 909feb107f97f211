import itertools
import math

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from augcube.aut import (
    NotNormal,
    full_aut,
    group_automorphisms_fixing_S,
    is_normal_cayley,
    paper_stabilizer_generators,
    pointwise_neighborhood_stabilizer,
    preserves_adjacency,
    translation,
    verify_semidirect,
    vertex_stabilizer,
)
from augcube.cayley import GeneratorSet, augmented_cube, augmented_generators, build_cayley, hypercube
from augcube.gf2 import GF2Matrix, parse_bitstring, unit
from augcube.perm import GroupTooLarge, Permutation, closure

from conftest import aq, stab_of


def brute_stabilizer(g):
    """Every permutation of V fixing 0 that preserves adjacency."""
    V = g.order
    edges = set(g.edges())
    out = set()
    for tail in itertools.permutations(range(1, V)):
        img = (0,) + tail
        if all(tuple(sorted((img[a], img[b]))) in edges for a, b in edges):
            out.add(Permutation(img))
    return out


def brute_fixing_S(n, S):
    """Filter over all of GL(n, 2)."""
    out = set()
    for rows in itertools.product(range(1, 1 << n), repeat=n):
        m = GF2Matrix(n, rows)
        if m.is_invertible() and {m(s) for s in S} == set(S):
            out.add(rows)
    return out


class TestTranslation:
    def test_zero_is_identity(self):
        assert translation(4, 0).is_identity()

    def test_involution(self):
        for z in range(16):
            t = translation(4, z)
            assert (t * t).is_identity()

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_automorphism_of_every_cayley_graph(self, n):
        g = aq(n)
        assert all(preserves_adjacency(g, translation(n, z)) for z in g.vertices())


class TestVertexStabilizer:
    @pytest.mark.parametrize("n,order", [(2, 6), (3, 16), (4, 8), (5, 8), (6, 8), (7, 8), (8, 8)])
    def test_orders(self, n, order):
        assert stab_of(n).order == order

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
    def test_soundness_exhaustive(self, n):
        g = aq(n)
        for p in stab_of(n).group.elements:
            assert p[0] == 0
            assert all(g.adjacent(p[u], p[w]) for u, w in g.edges())

    @pytest.mark.parametrize("n", [2, 3])
    def test_complete_against_brute_force(self, n):
        assert set(stab_of(n).group.elements) == brute_stabilizer(aq(n))

    @given(st.sets(st.integers(1, 7), min_size=1, max_size=6))
    @settings(max_examples=12, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    def test_random_cayley_graphs_n3(self, members):
        g = build_cayley(3, GeneratorSet(3, frozenset(members)))
        assert set(vertex_stabilizer(g).group.elements) == brute_stabilizer(g)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_hypercube(self, n):
        assert vertex_stabilizer(hypercube(n)).order == math.factorial(n)

    def test_cap(self):
        with pytest.raises(GroupTooLarge):
            vertex_stabilizer(augmented_cube(13))
        with pytest.raises(GroupTooLarge):
            vertex_stabilizer(augmented_cube(6), max_n=5)


class TestPointwiseStabilizer:
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_trivial_for_aq(self, n):
        assert pointwise_neighborhood_stabilizer(aq(n), stab_of(n)).order() == 1

    def test_aq3_is_not_trivial(self):
        le = pointwise_neighborhood_stabilizer(aq(3), stab_of(3))
        g = aq(3)
        filtered = [p for p in stab_of(3).group.elements if all(p[s] == s for s in g.S)]
        assert le.order() == len(filtered) == 2
        moved = [x for x in range(8) if le.elements[-1][x] != x]
        assert moved == [parse_bitstring("101"), parse_bitstring("110")]

    def test_k4(self):
        assert pointwise_neighborhood_stabilizer(aq(2)).order() == 1


class TestFullAut:
    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_order_law(self, n):
        assert full_aut(aq(n), stab=stab_of(n)).order == 2 ** (n + 3)

    @pytest.mark.parametrize("n,order", [(2, 24), (3, 128)])
    def test_small(self, n, order):
        res = full_aut(aq(n), stab=stab_of(n))
        assert res.order == order == res.group().order()

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_generators_verified_and_enumerated(self, n):
        res = full_aut(aq(n), stab=stab_of(n))
        assert res.generators_verified
        assert res.translation_part_order == 1 << n
        assert res.group().order() == res.order == (1 << n) * res.stabilizer.order


class TestFixingS:
    @pytest.mark.parametrize("n,count", [(2, 6), (3, 8), (4, 8), (5, 8), (6, 8)])
    def test_counts(self, n, count):
        ms = group_automorphisms_fixing_S(n, augmented_generators(n))
        assert len(ms) == count
        S = set(augmented_generators(n))
        assert all(m.is_invertible() and {m(s) for s in S} == S for m in ms)

    @pytest.mark.parametrize("n", [3, 4])
    def test_against_gl_n(self, n):
        S = augmented_generators(n)
        found = {m.rows for m in group_automorphisms_fixing_S(n, S)}
        assert found == brute_fixing_S(n, S)

    def test_non_spanning_set(self):
        S = GeneratorSet.parse("110,101")
        found = {m.rows for m in group_automorphisms_fixing_S(3, S)}
        assert found == brute_fixing_S(3, S)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_subgroup_of_stabilizer(self, n):
        elems = stab_of(n).group.members
        ms = group_automorphisms_fixing_S(n, augmented_generators(n))
        assert all(Permutation.from_matrix(m) in elems for m in ms)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_normality_equivalence(self, n):
        ms = group_automorphisms_fixing_S(n, augmented_generators(n))
        cert = is_normal_cayley(aq(n), stab_of(n))
        assert cert.normal == (len(ms) == stab_of(n).order)


class TestNormality:
    def test_aq3_not_normal(self):
        cert = is_normal_cayley(aq(3), stab_of(3))
        assert not cert.normal
        assert cert.counterexample is not None
        p = cert.counterexample
        assert any(p[x ^ y] != p[x] ^ p[y] for x in range(8) for y in range(8))

    @pytest.mark.parametrize("n", [2, 4, 5, 6, 7, 8])
    def test_normal(self, n):
        cert = is_normal_cayley(aq(n), stab_of(n))
        assert cert.normal and len(cert.matrices) == stab_of(n).order
        for m in cert.matrices:
            assert {m(s) for s in aq(n).S} == set(aq(n).S)


class TestStabilizerGenerators:
    def test_f1_on_s(self):
        f1, _, _ = paper_stabilizer_generators(4)
        b = lambda s: parse_bitstring(s, 4)  # noqa: E731
        assert f1(b("0011")) == b("0011") and f1(b("0111")) == b("0111")
        assert f1(b("1000")) == b("1111") and f1(b("1111")) == b("1000")

    def test_f3_last_basis_vector(self):
        _, _, f3 = paper_stabilizer_generators(4)
        assert f3(unit(4, 4)) == parse_bitstring("1111")

    def test_needs_n4(self):
        with pytest.raises(ValueError):
            paper_stabilizer_generators(3)

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_generate_stabilizer(self, n):
        mats = paper_stabilizer_generators(n)
        S = set(aq(n).S)
        for m in mats:
            assert m.is_invertible() and {m(s) for s in S} == S
        grp = closure([Permutation.from_matrix(m) for m in mats])
        assert grp.members == stab_of(n).group.members


class TestSemidirect:
    @pytest.mark.parametrize("n", [2, 4, 5, 6])
    def test_passes(self, n):
        cert = verify_semidirect(aq(n), stab_of(n))
        assert cert.passed, cert.failures
        assert [c.name for c in cert.checks] == ["translations_normal", "trivial_intersection", "order_product"]
        assert cert.evidence["stabilizer_order"] == stab_of(n).order

    def test_conjugation_spot_check(self):
        _, _, f3 = paper_stabilizer_generators(4)
        h = Permutation.from_matrix(f3)
        conj = ~h * translation(4, unit(4, 1)) * h
        assert conj == translation(4, unit(4, 3))

    def test_refuses_non_normal(self):
        with pytest.raises(NotNormal):
            verify_semidirect(aq(3), stab_of(3))
