import itertools

import pytest

from augcube.aut import NotNormal, full_aut, vertex_stabilizer
from augcube.blocks import (
    block_system,
    blocks_containing_e,
    generic_blocks,
    ge_closed_subspaces,
    minimal_block,
    orbit_union_subspaces,
    verify_block_subgroup_correspondence,
)
from augcube.cayley import folded_hypercube, hypercube
from augcube.gf2 import is_subspace, parse_bitstring

from conftest import aq, aut_group_of, stab_of


def B(*strings):
    return sorted(parse_bitstring(s) for s in strings)


DELTA = B("0000", "0100")
DELTA1 = B("0000", "0100", "0011", "0111")
DELTA2 = B("0000", "0100", "0011", "0111", "1001", "1010", "1101", "1110")


def is_block(group, block):
    b = set(block)
    for g in group.elements:
        img = {g[x] for x in b}
        if img != b and img & b:
            return False
    return True


def brute_blocks(group, degree):
    """All nontrivial blocks through 0, by testing every subset (degree <= 16)."""
    out = []
    others = list(range(1, degree))
    for r in range(1, degree - 1):
        for combo in itertools.combinations(others, r):
            if is_block(group, (0,) + combo):
                out.append([0, *combo])
    return sorted(out, key=lambda b: (len(b), b))


def aut_gens(n, family="augmented"):
    s = stab_of(n, family)
    return full_aut(s.graph, stab=s).generators


class TestMinimalBlock:
    def test_hypercube_antipodal(self):
        assert minimal_block(aut_gens(4, "hypercube"), (0, 0b1111)) == [0, 15]

    def test_aq4_e2(self):
        assert minimal_block(aut_gens(4), (0, parse_bitstring("0100"))) == DELTA

    def test_aq4_e1_trivial(self):
        assert minimal_block(aut_gens(4), (0, parse_bitstring("1000"))) == list(range(16))

    def test_same_point(self):
        with pytest.raises(ValueError):
            minimal_block(aut_gens(4), (3, 3))


class TestGeClosedSubspaces:
    def test_aq4(self):
        subs = ge_closed_subspaces(stab_of(4))
        assert [sorted(s.members) for s in subs] == [DELTA, DELTA1, DELTA2]
        assert [s.dim for s in subs] == [1, 2, 3]

    def test_rejected_union(self):
        orbit_union = B("0000", "0100", "0011", "0111", "0101", "0110", "1011", "1100")
        assert not is_subspace(orbit_union)
        assert orbit_union not in [sorted(s.members) for s in ge_closed_subspaces(stab_of(4))]

    @pytest.mark.parametrize("n", [2, 4, 5, 6])
    def test_join_search_matches_union_enumeration(self, n):
        a = [s.members for s in ge_closed_subspaces(stab_of(n))]
        b = [s.members for s in orbit_union_subspaces(stab_of(n))]
        assert a == b

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_invariant_and_unions_of_orbits(self, n):
        ge = stab_of(n).group
        for s in ge_closed_subspaces(stab_of(n)):
            members = set(s.members)
            assert all({g[x] for x in members} == members for g in ge.generators)
            assert 0 < s.dim < n

    def test_requires_normal(self):
        with pytest.raises(NotNormal):
            ge_closed_subspaces(stab_of(3))


class TestBlocksContainingE:
    def test_aq4(self):
        rep = blocks_containing_e(aq(4), stab_of(4))
        assert rep.normal_path
        assert rep.blocks_containing_e == [DELTA, DELTA1, DELTA2]
        assert [b.subgroup_order for b in rep.blocks] == [16, 32, 64]
        assert all(b.verified for b in rep.blocks)
        for blk in rep.blocks_containing_e:
            assert is_block(aut_group_of(4), blk)

    def test_aq4_matches_exhaustive_subset_search(self):
        assert brute_blocks(aut_group_of(4), 16) == [DELTA, DELTA1, DELTA2]

    @pytest.mark.parametrize("n", [4, 5])
    def test_hypercube(self, n):
        rep = blocks_containing_e(hypercube(n), stab_of(n, "hypercube"))
        even = [v for v in range(1 << n) if bin(v).count("1") % 2 == 0]
        assert rep.blocks_containing_e == [[0, (1 << n) - 1], even]

    def test_k4_has_none(self):
        gens = aut_gens(2)
        assert all(minimal_block(gens, (0, v)) == [0, 1, 2, 3] for v in (1, 2, 3))
        assert blocks_containing_e(aq(2), stab_of(2)).blocks == []

    @pytest.mark.parametrize("n", [4, 5])
    def test_normal_and_generic_paths_agree(self, n):
        rep = blocks_containing_e(aq(n), stab_of(n))
        assert rep.blocks_containing_e == generic_blocks(aut_gens(n), 1 << n)

    def test_aq3_generic_path(self):
        rep = blocks_containing_e(aq(3), stab_of(3))
        assert not rep.normal_path
        assert rep.blocks_containing_e == brute_blocks(aut_group_of(3), 8)
        assert rep.blocks_containing_e == [B("000", "011"), B("000", "011", "101", "110")]

    def test_folded_hypercube_against_brute_force(self):
        g = folded_hypercube(4)
        s = vertex_stabilizer(g)
        rep = blocks_containing_e(g, s)
        assert rep.blocks_containing_e == brute_blocks(full_aut(g, stab=s).group(), 16)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_lattice_closed_under_intersection(self, n):
        sets = [frozenset(b) for b in blocks_containing_e(aq(n), stab_of(n)).blocks_containing_e]
        for a, b in itertools.combinations(sets, 2):
            assert a & b in sets or len(a & b) == 1

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_block_systems_partition(self, n):
        rep = blocks_containing_e(aq(n), stab_of(n))
        for b in rep.blocks:
            sizes = {len(c) for c in b.system}
            assert sizes == {len(b.vertices)}
            assert sorted(x for c in b.system for x in c) == list(range(1 << n))
            cosets = {tuple(sorted(x ^ z for x in b.vertices)) for z in range(1 << n)}
            assert b.system == sorted(list(c) for c in cosets)


class TestBlockSystem:
    def test_non_block(self):
        assert block_system(aut_gens(4), [0, parse_bitstring("1000")]) is None

    def test_block(self):
        assert len(block_system(aut_gens(4), DELTA)) == 8


class TestCorrespondence:
    def test_aq4(self):
        rep = blocks_containing_e(aq(4), stab_of(4))
        cert = verify_block_subgroup_correspondence(aq(4), rep, stab_of(4), include_zero=True)
        assert cert.passed, cert.failures
        assert cert.evidence["subgroup_orders"] == [8, 16, 32, 64]

    @pytest.mark.parametrize("n", [5, 6])
    def test_larger(self, n):
        rep = blocks_containing_e(aq(n), stab_of(n))
        cert = verify_block_subgroup_correspondence(aq(n), rep, stab_of(n))
        assert cert.passed, cert.failures

    def test_requires_normal(self):
        rep = blocks_containing_e(aq(3), stab_of(3))
        with pytest.raises(NotNormal):
            verify_block_subgroup_correspondence(aq(3), rep, stab_of(3))
