"""Blocks of imprimitivity containing e for Cayley graphs over Z_2^n.

Two routes: for normal graphs the blocks through e are exactly the subspaces
closed under G_e; for any transitive group they are the joins of the minimal
blocks through e, found by union-find closure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .aut import NotNormal, StabilizerResult, full_aut, translation, vertex_stabilizer
from .cayley import CayleyGraph
from .checks import Certificate
from .gf2 import Subspace, echelon, is_subspace, span, to_bitstring
from .perm import DEFAULT_GROUP_CAP, Permutation, orbits

SUBSPACE_GUARD = 1 << 20


def _close(ds: DisjointSet, pending: list[tuple[int, int]], gens: Sequence[Permutation]) -> None:
    queue = deque(pending)
    while queue:
        p, q = queue.popleft()
        for g in gens:
            x, y = g.images[p], g.images[q]
            if not ds.connected(x, y):
                ds.merge(x, y)
                queue.append((x, y))


def smallest_block_containing(gens: Sequence[Permutation], points: Iterable[int], degree: int) -> list[int]:
    pts = list(points)
    ds = DisjointSet(range(degree))
    pairs = []
    for q in pts[1:]:
        if not ds.connected(pts[0], q):
            ds.merge(pts[0], q)
            pairs.append((pts[0], q))
    _close(ds, pairs, gens)
    return sorted(ds.subset(pts[0]))


def minimal_block(gens: Sequence[Permutation], pair: tuple[int, int], degree: int | None = None) -> list[int]:
    """Smallest block of <gens> containing both points of ``pair``."""
    if degree is None:
        degree = gens[0].degree
    e, v = pair
    if e == v:
        raise ValueError("minimal_block needs two distinct points")
    return smallest_block_containing(gens, (e, v), degree)


def generic_blocks(gens: Sequence[Permutation], degree: int, e: int = 0) -> list[list[int]]:
    """All nontrivial blocks containing e: minimal blocks and all their joins."""
    found: set[tuple[int, ...]] = set()
    for v in range(degree):
        if v != e:
            found.add(tuple(minimal_block(gens, (e, v), degree)))
    frontier = set(found)
    while frontier:
        new = set()
        for a, b in combinations(sorted(found), 2):
            if a in frontier or b in frontier:
                j = tuple(smallest_block_containing(gens, set(a) | set(b), degree))
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return sorted((list(b) for b in found if 1 < len(b) < degree), key=lambda b: (len(b), b))


def block_system(gens: Sequence[Permutation], block: Iterable[int]) -> list[list[int]] | None:
    """Images of ``block`` under the group, or None if two of them overlap
    without being equal (the block axiom fails)."""
    start = frozenset(block)
    seen = {start}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for g in gens:
            c = frozenset(g.images[x] for x in b)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    covered: set[int] = set()
    for b in seen:
        if covered & b:
            return None
        covered |= b
    return sorted(sorted(b) for b in seen)


def ge_closed_subspaces(stab: StabilizerResult, n: int | None = None) -> list[Subspace]:
    """Proper nonzero subspaces mapped into themselves by every element of G_e.

    G_e is linear here, so the span of a G_e-invariant set is invariant, and
    every invariant subspace is the span of the orbits it contains. Growing
    from {0} by joining one orbit at a time therefore reaches all of them.
    """
    if not stab.is_normal:
        raise NotNormal("G_e-closed subspaces give the blocks only for normal Cayley graphs")
    n = stab.graph.n if n is None else n
    orbs = [o for o in orbits(stab.group) if o != [0]]
    zero = Subspace(n, ())
    seen = {zero.basis: zero}
    queue = deque([zero])
    while queue:
        K = queue.popleft()
        for o in orbs:
            if o[0] in K:
                continue
            J = Subspace(n, tuple(echelon(list(K.basis) + o)))
            if J.basis not in seen:
                seen[J.basis] = J
                if len(seen) > SUBSPACE_GUARD:
                    raise ValueError(f"more than {SUBSPACE_GUARD} G_e-invariant subspaces")
                queue.append(J)
    out = [K for K in seen.values() if 0 < K.dim < n]
    return sorted(out, key=lambda s: (len(s), s.members))


def orbit_union_subspaces(stab: StabilizerResult, n: int | None = None) -> list[Subspace]:
    """Same result as ge_closed_subspaces by testing every union of G_e-orbits."""
    n = stab.graph.n if n is None else n
    orbs = [o for o in orbits(stab.group) if o != [0]]
    if (1 << len(orbs)) > SUBSPACE_GUARD:
        raise ValueError(f"{len(orbs)} G_e-orbits: too many unions to enumerate")
    sizes = [len(o) for o in orbs]
    out = []
    for mask in range(1, 1 << len(orbs)):
        picked = [i for i in range(len(orbs)) if mask >> i & 1]
        size = 1 + sum(sizes[i] for i in picked)
        # a subspace has 2^k elements
        if size & (size - 1) or size == 1 << n:
            continue
        cand = [0] + [x for i in picked for x in orbs[i]]
        if is_subspace(cand):
            out.append(span(cand, n))
    return sorted(out, key=lambda s: (len(s), s.members))


@dataclass
class BlockEntry:
    vertices: list[int]
    basis: Subspace | None
    system: list[list[int]]
    subgroup_order: int
    verified: bool


@dataclass
class BlockReport:
    graph: CayleyGraph
    blocks: list[BlockEntry] = field(default_factory=list)
    normal_path: bool = True
    stabilizer_order: int = 0

    @property
    def blocks_containing_e(self) -> list[list[int]]:
        return [b.vertices for b in self.blocks]

    def to_dict(self) -> dict:
        n = self.graph.n
        bits = lambda vs: [to_bitstring(v, n) for v in vs]  # noqa: E731
        return {
            "graph": self.graph.describe(),
            "method": "ge_closed_subspaces" if self.normal_path else "minimal_block_joins",
            "stabilizer_order": self.stabilizer_order,
            "blocks": [
                {
                    "vertices": bits(b.vertices),
                    "size": len(b.vertices),
                    "dim": b.basis.dim if b.basis is not None else None,
                    "basis": b.basis.basis_strings() if b.basis is not None else None,
                    "system": [bits(c) for c in b.system],
                    "subgroup_order": b.subgroup_order,
                    "verified": b.verified,
                }
                for b in self.blocks
            ],
        }


def blocks_containing_e(g: CayleyGraph, stab: StabilizerResult | None = None,
                        cap: int = DEFAULT_GROUP_CAP) -> BlockReport:
    stab = stab or vertex_stabilizer(g, cap=cap)
    aut = full_aut(g, cap=cap, stab=stab)
    report = BlockReport(g, normal_path=stab.is_normal, stabilizer_order=stab.order)
    if stab.is_normal:
        candidates = [(list(s.members), s) for s in ge_closed_subspaces(stab)]
    else:
        candidates = [(b, span(b, g.n) if is_subspace(b) else None)
                      for b in generic_blocks(aut.generators, g.order)]
    for verts, sub in candidates:
        system = block_system(aut.generators, verts)
        report.blocks.append(BlockEntry(
            vertices=verts,
            basis=sub,
            system=system or [],
            subgroup_order=len(verts) * stab.order,
            verified=system is not None,
        ))
    return report


def verify_block_subgroup_correspondence(g: CayleyGraph, report: BlockReport,
                                         stab: StabilizerResult | None = None,
                                         include_zero: bool = False) -> Certificate:
    """For each block K: R(K) G_e is a subgroup of order |K| |G_e| whose orbit of e is K."""
    stab = stab or vertex_stabilizer(g)
    if not stab.is_normal:
        raise NotNormal("the block/subgroup correspondence is checked for normal graphs only")
    cert = Certificate("block_subgroup_correspondence")
    ge = stab.group
    blocks = [b.vertices for b in report.blocks]
    if include_zero:
        blocks = [[0]] + blocks
    orders = []
    for K in blocks:
        trans = {z: translation(g.n, z) for z in K}
        T = {trans[z] * h for z in K for h in ge.elements}
        label = f"|K|={len(K)}"
        cert.add(f"{label}: product set has |K||G_e| elements", len(T) == len(K) * ge.order(),
                 f"{len(T)} vs {len(K)}*{ge.order()}")
        # T holds the identity, so closure under right multiplication by
        # generators of <T> means T is the subgroup <T>
        basis = span(K, g.n).basis if is_subspace(K) else K
        gens = [translation(g.n, b) for b in basis] + list(ge.generators)
        cert.add(f"{label}: closed under composition", all(t * x in T for t in T for x in gens))
        cert.add(f"{label}: orbit of e is K", sorted({t[0] for t in T}) == sorted(K))
        orders.append(len(T))
    cert.evidence = {"subgroup_orders": orders}
    return cert
