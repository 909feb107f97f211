"""Automorphism groups of Cayley graphs over Z_2^n.

The vertex stabilizer G_e of e = 0 is found by exhaustive backtracking over
vertex images. Candidates are restricted to the colour classes of an
equitable refinement of the distance partition from e (every automorphism
fixing e preserves those classes) and to vertices whose adjacency to the
already-placed vertices matches. Nothing about the graph beyond its being a
Cayley graph is assumed, so neighbour assignments that extend in several
ways (a nontrivial L_e) are enumerated in full.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property

from .cayley import CayleyGraph, GeneratorSet, distance_partition
from .checks import Certificate
from .gf2 import GF2Matrix, echelon, unit
from .perm import (
    DEFAULT_GROUP_CAP,
    GroupTooLarge,
    GroupType,
    PermGroup,
    Permutation,
    closure,
    generating_subset,
    permutation_is_linear,
    recognize,
)

DEFAULT_STABILIZER_MAX_N = 12


class NotNormal(ValueError):
    pass


def translation(n: int, z: int) -> Permutation:
    if not 0 <= z < (1 << n):
        raise ValueError(f"{z} is not a vector of dimension {n}")
    return Permutation._trusted(tuple(x ^ z for x in range(1 << n)))


def preserves_adjacency(g: CayleyGraph, p: Permutation) -> bool:
    img = p.images
    S = g.S.members
    return all((img[u] ^ img[u ^ s]) in S for u in g.vertices() for s in g.gens)


def refined_colours(g: CayleyGraph) -> list[int]:
    """Equitable refinement of the distance partition from e.

    Colours are renumbered by sorted signature, never by vertex value, so
    the result is invariant under every automorphism fixing e.
    """
    dist = [-1] * g.order
    for i, layer in enumerate(distance_partition(g, 0)):
        for v in layer:
            dist[v] = i
    colour = dist
    ncol = len(set(colour))
    nbrs = [g.neighbors(v) for v in g.vertices()]
    while True:
        sigs = [(colour[v], tuple(sorted(colour[w] for w in nbrs[v]))) for v in g.vertices()]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == ncol:
            return new
        colour, ncol = new, len(table)


def _search_order(g: CayleyGraph, colour: list[int]) -> tuple[list[int], list[list[int]]]:
    """Vertex order for the backtrack: always extend by the vertex with the
    most already-ordered neighbours (ties: smaller colour class, then value).
    Returns the order and, per position, the earlier neighbours."""
    size: dict[int, int] = {}
    for c in colour:
        size[c] = size.get(c, 0) + 1
    placed = bytearray(g.order)
    count = [0] * g.order
    order: list[int] = []
    heap: list[tuple[int, int, int]] = []
    nxt_seed = 0
    while len(order) < g.order:
        if not heap:
            while placed[nxt_seed]:
                nxt_seed += 1
            heapq.heappush(heap, (0, size[colour[nxt_seed]], nxt_seed))
        negc, _, v = heapq.heappop(heap)
        if placed[v] or -negc != count[v]:
            continue
        placed[v] = 1
        order.append(v)
        for w in g.neighbors(v):
            if not placed[w]:
                count[w] += 1
                heapq.heappush(heap, (-count[w], size[colour[w]], w))
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in g.neighbors(v) if pos[w] < pos[v]] for v in order]
    return order, earlier


def _stabilizer_elements(g: CayleyGraph, cap: int) -> list[Permutation]:
    colour = refined_colours(g)
    by_colour: dict[int, list[int]] = {}
    for v in g.vertices():
        by_colour.setdefault(colour[v], []).append(v)
    order, earlier = _search_order(g, colour)
    V = g.order
    S = g.S.members
    gens = g.gens
    img = [-1] * V
    used = bytearray(V)
    found: list[Permutation] = []

    def candidates(k: int) -> list[int]:
        v = order[k]
        prev = earlier[k]
        pool = [img[prev[0]] ^ s for s in gens] if prev else by_colour[colour[v]]
        out = []
        want = len(prev)
        for c in pool:
            if used[c] or colour[c] != colour[v]:
                continue
            if any((c ^ img[w]) not in S for w in prev):
                continue
            # no extra adjacency between c and already-used vertices
            if sum(used[c ^ s] for s in gens) != want:
                continue
            out.append(c)
        out.reverse()
        return out

    # iterative depth-first search; stack[k] holds the untried candidates for order[k]
    stack: list[list[int]] = [candidates(0)]
    while stack:
        k = len(stack) - 1
        v = order[k]
        if img[v] >= 0:
            used[img[v]] = 0
            img[v] = -1
        if not stack[k]:
            stack.pop()
            continue
        c = stack[k].pop()
        img[v] = c
        used[c] = 1
        if k + 1 == V:
            found.append(Permutation._trusted(tuple(img)))
            if len(found) > cap:
                raise GroupTooLarge(f"vertex stabilizer exceeds the element cap of {cap}")
            continue
        stack.append(candidates(k + 1))
    return sorted(found)


@dataclass
class StabilizerResult:
    graph: CayleyGraph
    group: PermGroup
    linear_part: list[tuple[Permutation, GF2Matrix | None]]

    @property
    def order(self) -> int:
        return self.group.order()

    @property
    def is_normal(self) -> bool:
        return all(m is not None for _, m in self.linear_part)

    @property
    def matrices(self) -> list[GF2Matrix]:
        return [m for _, m in self.linear_part if m is not None]

    @cached_property
    def group_type(self) -> GroupType:
        return recognize(self.group)


def vertex_stabilizer(g: CayleyGraph, max_n: int = DEFAULT_STABILIZER_MAX_N,
                      cap: int = DEFAULT_GROUP_CAP) -> StabilizerResult:
    if g.n > max_n:
        raise GroupTooLarge(f"stabilizer search is capped at n <= {max_n} (got n={g.n})")
    elems = _stabilizer_elements(g, cap)
    for p in elems:
        if p.images[0] != 0 or not preserves_adjacency(g, p):
            raise AssertionError(f"search produced a non-automorphism {p.cycle_string()}")
    group = PermGroup(generating_subset(elems), degree=g.order, cap=cap, elements=elems)
    linear = [(p, permutation_is_linear(p, g.n)) for p in group.elements]
    return StabilizerResult(g, group, linear)


def pointwise_neighborhood_stabilizer(g: CayleyGraph, stab: StabilizerResult | None = None,
                                      max_n: int = DEFAULT_STABILIZER_MAX_N,
                                      cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    stab = stab or vertex_stabilizer(g, max_n, cap)
    fixing = [p for p in stab.group.elements if all(p.images[s] == s for s in g.gens)]
    return PermGroup(generating_subset(fixing), degree=g.order, cap=cap, elements=fixing)


@dataclass
class FullAutResult:
    graph: CayleyGraph
    order: int
    stabilizer: StabilizerResult
    translation_part_order: int
    generators: list[Permutation]
    generators_verified: bool
    semidirect: Certificate | None = None

    def group(self, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
        """The whole automorphism group, enumerated (subject to ``cap``)."""
        if self.order > cap:
            raise GroupTooLarge(f"|Aut| = {self.order} exceeds the element cap of {cap}")
        return closure(self.generators, cap=cap)


def full_aut(g: CayleyGraph, max_n: int = DEFAULT_STABILIZER_MAX_N, cap: int = DEFAULT_GROUP_CAP,
             stab: StabilizerResult | None = None) -> FullAutResult:
    """Aut = R(Z_2^n) G_e, generated by basis translations and stabilizer generators."""
    stab = stab or vertex_stabilizer(g, max_n, cap)
    gens = [translation(g.n, unit(g.n, i)) for i in range(1, g.n + 1)] + list(stab.group.generators)
    verified = all(preserves_adjacency(g, p) for p in gens)
    return FullAutResult(g, g.order * stab.order, stab, g.order, gens, verified)


def group_automorphisms_fixing_S(n: int, S: GeneratorSet) -> list[GF2Matrix]:
    """All invertible M over GF(2) with M(S) = S.

    A basis is taken from S where possible (its images must lie in S); when S
    does not span, the remaining basis vectors may go anywhere that keeps the
    images independent. Partial maps are extended linearly and pruned as soon
    as some element of S in the current span leaves S.
    """
    members = S.members
    basis = echelon_basis_from(list(S), n)
    span_rank = len(basis)
    extra = [unit(n, i) for i in range(1, n + 1)]
    for u in extra:
        if len(basis) == n:
            break
        if len(echelon(basis + [u])) > len(basis):
            basis.append(u)

    results: list[GF2Matrix] = []
    # images[x] for x in span of the first k basis vectors
    def extend(k: int, src: dict[int, int]) -> None:
        if k == n:
            m = GF2Matrix(n, tuple(src[unit(n, i)] for i in range(1, n + 1)))
            if {m(s) for s in members} == set(members):
                results.append(m)
            return
        b = basis[k]
        pool = sorted(members) if k < span_rank else range(1, 1 << n)
        used = set(src.values())
        for c in pool:
            if c in used:
                continue
            new = {x ^ b: y ^ c for x, y in src.items()}
            if any(x in members and y not in members for x, y in new.items()):
                continue
            if k >= span_rank and any(y in members for x, y in new.items() if x not in members):
                continue
            merged = dict(src)
            merged.update(new)
            extend(k + 1, merged)

    extend(0, {0: 0})
    return sorted(results, key=lambda m: m.rows)


def echelon_basis_from(vectors: list[int], n: int) -> list[int]:
    """Greedy maximal independent subset, keeping the original vectors."""
    out: list[int] = []
    for v in sorted(vectors):
        if len(echelon(out + [v])) > len(out):
            out.append(v)
    return out


@dataclass
class NormalityCertificate:
    normal: bool
    matrices: list[GF2Matrix] = field(default_factory=list)
    counterexample: Permutation | None = None


def is_normal_cayley(g: CayleyGraph, stab: StabilizerResult | None = None,
                     max_n: int = DEFAULT_STABILIZER_MAX_N, cap: int = DEFAULT_GROUP_CAP) -> NormalityCertificate:
    """Normal iff every automorphism fixing e is a linear map."""
    stab = stab or vertex_stabilizer(g, max_n, cap)
    for p, m in stab.linear_part:
        if m is None:
            return NormalityCertificate(False, counterexample=p)
    return NormalityCertificate(True, matrices=stab.matrices)


def paper_stabilizer_generators(n: int) -> tuple[GF2Matrix, GF2Matrix, GF2Matrix]:
    """Three linear maps generating G_e of AQ_n for n >= 4.

    f1: e_1 -> 1...1, other e_i fixed.
    f2: swaps e_{n-1} and e_n.
    f3: e_i <-> e_{n-i} for 1 <= i <= n-1, e_n -> 1...1.
    """
    if n < 4:
        raise ValueError("these generators are defined for n >= 4")
    ones = (1 << n) - 1
    e = [None] + [unit(n, i) for i in range(1, n + 1)]
    f1 = [ones] + e[2:]
    f2 = e[1:n - 1] + [e[n], e[n - 1]]
    f3 = [e[n - i] for i in range(1, n)] + [ones]
    return GF2Matrix(n, tuple(f1)), GF2Matrix(n, tuple(f2)), GF2Matrix(n, tuple(f3))


def verify_semidirect(g: CayleyGraph, stab: StabilizerResult | None = None,
                      cap: int = DEFAULT_GROUP_CAP) -> Certificate:
    """Check Aut = R(Z_2^n) x| G_e for a normal Cayley graph."""
    stab = stab or vertex_stabilizer(g, cap=cap)
    if not stab.is_normal:
        raise NotNormal(f"{g.name or 'graph'} is not a normal Cayley graph")
    cert = Certificate("semidirect")
    trans = [translation(g.n, z) for z in g.vertices()]
    bad = []
    for h in stab.group.generators:
        hinv = ~h
        for z in g.vertices():
            if hinv * trans[z] * h != trans[h[z]]:
                bad.append((h, z))
                break
    cert.add("translations_normal", not bad,
             f"conjugates of all {g.order} translations by {len(stab.group.generators)} stabilizer generators")
    hits = [p for p in stab.group.elements
            if not p.is_identity() and all(p[x] == x ^ p[0] for x in g.vertices())]
    cert.add("trivial_intersection", not hits, f"|G_e| = {stab.order}")
    aut = full_aut(g, cap=cap, stab=stab)
    whole = aut.group(cap)
    cert.add("order_product", whole.order() == g.order * stab.order,
             f"|<generators>| = {whole.order()}, |R|*|G_e| = {g.order}*{stab.order}")
    cert.evidence = {"aut_order": whole.order(), "stabilizer_order": stab.order, "translation_order": g.order}
    return cert
