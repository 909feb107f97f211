import itertools

import networkx as nx
import pytest

from augcube.aut import full_aut
from augcube.cayley import GeneratorSet, build_cayley, hypercube
from augcube.cliques import (
    Clique,
    aq4_named_cliques,
    aq4_named_maps,
    clique_graph_dot,
    clique_number,
    clique_orbits,
    inter_clique_edge_counts,
    is_clique,
    max_cliques,
    verify_aq4_structure,
    verify_clique_block,
)
from augcube.gf2 import parse_bitstring

from conftest import aq, aut_group_of


def C(*strings):
    return Clique(tuple(parse_bitstring(s, 4) for s in strings))


def nx_max_cliques(g):
    G = nx.Graph(list(g.edges()))
    cl = [frozenset(c) for c in nx.find_cliques(G)]
    w = max(map(len, cl))
    return {c for c in cl if len(c) == w}


class TestMaxCliques:
    def test_aq4(self):
        cl = max_cliques(aq(4))
        assert len(cl) == 12 and all(c.size == 4 for c in cl)
        assert clique_number(aq(4)) == 4

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_count_formula(self, n):
        cl = max_cliques(aq(n))
        assert len(cl) == (n - 1) * 2 ** (n - 2)
        assert {c.size for c in cl} == {4}

    def test_aq2_is_one_clique(self):
        assert max_cliques(aq(2)) == [Clique((0, 1, 2, 3))]

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_against_networkx(self, n):
        assert {frozenset(c.vertices) for c in max_cliques(aq(n))} == nx_max_cliques(aq(n))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_maximal_and_maximum(self, n):
        g = aq(n)
        cl = max_cliques(g)
        for c in cl:
            assert is_clique(g, c.vertices)
            assert not any(all(g.adjacent(v, x) for x in c) for v in g.vertices() if v not in c.vertices)
        w = cl[0].size
        # nothing of size w + 1 anywhere
        for v in g.vertices():
            nb = g.neighbors(v)
            assert not any(is_clique(g, s) for s in itertools.combinations(nb, w))

    def test_sorted_canonical(self):
        cl = max_cliques(aq(5))
        assert cl == sorted(cl)
        assert all(list(c.vertices) == sorted(c.vertices) for c in cl)

    def test_degree_cap(self):
        with pytest.raises(ValueError):
            max_cliques(aq(6), degree_cap=10)

    def test_hypercube_edges(self):
        assert len(max_cliques(hypercube(3))) == 12


class TestNamedCliques:
    def test_c7(self):
        assert aq4_named_cliques()[6] == C("0011", "1011", "0100", "1100")

    def test_c10(self):
        assert aq4_named_cliques()[9] == C("0001", "0010", "0101", "0110")

    def test_c1_and_c5(self):
        named = aq4_named_cliques()
        assert named[0] == C("0000", "0010", "0001", "0011")
        assert named[4] == C("0000", "1000", "0111", "1111")

    def test_uppers_partition(self):
        assert sorted(x for c in aq4_named_cliques()[:4] for x in c) == list(range(16))

    def test_equal_to_enumeration(self):
        assert set(aq4_named_cliques()) == set(max_cliques(aq(4)))


class TestOrbits:
    def test_aq4(self, aq4_aut):
        rep = clique_orbits(aq4_aut, aq4_named_cliques())
        assert sorted(rep.orbit_sizes()) == [4, 8]
        assert {frozenset(o) for o in rep.orbit_partition} == {frozenset(range(8)), frozenset(range(8, 12))}
        assert rep.action_image.degree == 12

    def test_aq4_faithful_on_first_eight(self, aq4_aut):
        rep = clique_orbits(aq4_aut, aq4_named_cliques()[:8])
        assert rep.faithful and rep.action_image.order() == 128

    def test_aq4_middle_not_faithful(self, aq4_aut):
        rep = clique_orbits(aq4_aut, aq4_named_cliques())
        by_size = {len(o): f for o, f in zip(rep.orbit_partition, rep.orbit_faithful)}
        assert by_size == {8: True, 4: False}

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_orbit_count(self, n):
        rep = clique_orbits(aut_group_of(n), max_cliques(aq(n)))
        assert len(rep.orbit_partition) == n // 2
        assert sum(rep.orbit_sizes()) == (n - 1) * 2 ** (n - 2)

    def test_outside_family(self, aq4_aut):
        with pytest.raises(ValueError):
            clique_orbits(aq4_aut, aq4_named_cliques()[:3])


class TestEdgeCounts:
    def test_upper_ratio(self):
        named = aq4_named_cliques()
        m = inter_clique_edge_counts(aq(4), named[:4])
        assert m[0][2] == 2 * m[0][1] == 2 * m[0][3]
        assert m[0] == [6, 4, 8, 4]
        assert all(m[i][i] == 6 for i in range(4))
        assert all(m[i][j] == m[j][i] for i in range(4) for j in range(4))

    def test_direct_enumeration(self):
        g = aq(4)
        named = aq4_named_cliques()
        a, b = named[0], named[2]
        assert inter_clique_edge_counts(g, [a, b])[0][1] == sum(1 for x in a for y in b if (x ^ y) in g.S)

    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            inter_clique_edge_counts(aq(4), aq4_named_cliques()[:5])

    def test_rows_sum_to_degree_budget(self):
        g = aq(4)
        m = inter_clique_edge_counts(g, aq4_named_cliques()[:4])
        # each clique sends 4 * (7 - 3) edges out of itself
        assert all(sum(row) - row[i] == 16 for i, row in enumerate(m))

    def test_dot(self):
        dot = clique_graph_dot(aq(4), aq4_named_cliques()[:4])
        assert '"C1" -- "C3" [label="8"]' in dot


class TestStructure:
    def test_clique_block(self, aq4_aut):
        cert = verify_clique_block(aq4_aut)
        assert cert.passed, cert.failures

    def test_named_maps_on_k(self):
        maps = aq4_named_maps()
        upper = {frozenset(c.vertices) for c in aq4_named_cliques()[:4]}
        lower = {frozenset(c.vertices) for c in aq4_named_cliques()[4:8]}
        image = lambda p, fam: {frozenset(p[x] for x in c) for c in fam}  # noqa: E731
        rho = maps["rho_0010"]
        assert all(frozenset(rho[x] for x in c) == c for c in upper)
        assert image(maps["B"], upper) == lower

    def test_aq4_structure(self, aq4_aut):
        cert = verify_aq4_structure(aq4_aut)
        assert cert.passed, cert.failures
        assert cert.evidence["N1N2_order"] == 64
        assert cert.evidence["effects"]["A"] == "(C6 C8)"
        assert cert.evidence["effects"]["A'"] == "(C2 C4)"

    def test_structure_detects_wrong_group(self):
        # automorphisms of a graph that is not AQ_4 break the certificate
        g = build_cayley(4, GeneratorSet.parse("1000,0100,0010,0001"))
        grp = full_aut(g).group()
        with pytest.raises(ValueError):
            verify_aq4_structure(grp)
