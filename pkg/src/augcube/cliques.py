"""Maximum cliques of Cayley graphs over Z_2^n and their orbit structure,
with the named cliques of AQ_4 and the (D_8 x D_8) x| C_2 certificate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .aut import translation
from .cayley import CayleyGraph
from .checks import Certificate
from .gf2 import GF2Matrix, parse_bitstring
from .perm import (
    PermGroup,
    Permutation,
    action_on_sets,
    closure,
    induced_action,
    orbits,
    recognize,
)

DEFAULT_CLIQUE_DEGREE_CAP = 24


@dataclass(frozen=True, order=True)
class Clique:
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def translate(self, z: int) -> Clique:
        return Clique(tuple(v ^ z for v in self.vertices))


def is_clique(g: CayleyGraph, vs: Sequence[int]) -> bool:
    return all(g.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def _bron_kerbosch(g: CayleyGraph, nbr: list[int], out: list[int]) -> None:
    """Maximal cliques over int-bitset vertex sets, greedy pivot, low bits first."""

    def expand(R: list[int], P: int, X: int) -> None:
        if not P and not X:
            out.append(sum(1 << v for v in R))
            return
        pivot_pool = P | X
        best, pivot = -1, 0
        while pivot_pool:
            u = (pivot_pool & -pivot_pool).bit_length() - 1
            pivot_pool &= pivot_pool - 1
            c = bin(P & nbr[u]).count("1")
            if c > best:
                best, pivot = c, u
        todo = P & ~nbr[pivot]
        while todo:
            v = (todo & -todo).bit_length() - 1
            todo &= todo - 1
            expand(R + [v], P & nbr[v], X & nbr[v])
            P &= ~(1 << v)
            X |= 1 << v

    V = g.order
    for v in range(V):
        later = nbr[v] & ~((2 << v) - 1)
        earlier = nbr[v] & ((1 << v) - 1)
        expand([v], later, earlier)


def max_cliques(g: CayleyGraph, degree_cap: int = DEFAULT_CLIQUE_DEGREE_CAP) -> list[Clique]:
    """All cliques of maximum size, sorted."""
    if g.degree > degree_cap:
        raise ValueError(f"degree {g.degree} exceeds the clique search cap of {degree_cap}")
    nbr = [sum(1 << w for w in g.neighbors(v)) for v in g.vertices()]
    found: list[int] = []
    _bron_kerbosch(g, nbr, found)
    omega = max(bin(c).count("1") for c in found)
    out = set()
    for c in found:
        if bin(c).count("1") == omega:
            out.add(Clique(tuple(v for v in range(g.order) if c >> v & 1)))
    return sorted(out)


def clique_number(g: CayleyGraph) -> int:
    return max_cliques(g)[0].size


# cliques of AQ_4 through e, as translates of three 2-dimensional pieces
_AQ4_BASE = {
    "upper": ("0000", "0010", "0001", "0011"),
    "lower": ("0000", "1000", "0111", "1111"),
    "middle": ("0000", "0011", "0100", "0111"),
}
_AQ4_SHIFTS = {
    "upper": ("0000", "1000", "0100", "1100"),
    "lower": ("0000", "0001", "0011", "0010"),
    "middle": ("0000", "0001", "1000", "1001"),
}


def aq4_named_cliques() -> list[Clique]:
    """C_1..C_12 of AQ_4 in order: upper C_1-C_4, lower C_5-C_8, middle C_9-C_12."""
    out = []
    for family in ("upper", "lower", "middle"):
        base = Clique(tuple(parse_bitstring(x, 4) for x in _AQ4_BASE[family]))
        for z in _AQ4_SHIFTS[family]:
            out.append(base.translate(parse_bitstring(z, 4)))
    return out


def clique_label(i: int) -> str:
    return f"C{i + 1}"


@dataclass
class CliqueOrbitReport:
    cliques: list[Clique]
    orbit_partition: list[list[int]]
    action_image: PermGroup
    faithful: bool
    orbit_faithful: list[bool]
    kernel_order: int

    def orbit_sizes(self) -> list[int]:
        return [len(o) for o in self.orbit_partition]


def clique_orbits(aut: PermGroup, cliques: Sequence[Clique]) -> CliqueOrbitReport:
    sets = [frozenset(c.vertices) for c in cliques]
    action = induced_action(aut, sets)
    parts = orbits(action.image)
    per_orbit = []
    for part in parts:
        sub = induced_action(aut, [sets[i] for i in part])
        per_orbit.append(sub.faithful)
    return CliqueOrbitReport(list(cliques), parts, action.image, action.faithful, per_orbit, action.kernel_order)


def inter_clique_edge_counts(g: CayleyGraph, cliques: Sequence[Clique]) -> list[list[int]]:
    """Edges between clique pairs; the diagonal counts edges inside a clique."""
    k = len(cliques)
    for i in range(k):
        for j in range(i + 1, k):
            if set(cliques[i]) & set(cliques[j]):
                raise ValueError(f"cliques {i} and {j} overlap")
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        a = cliques[i].vertices
        out[i][i] = sum(g.adjacent(x, y) for p, x in enumerate(a) for y in a[p + 1:])
        for j in range(i + 1, k):
            c = sum(g.adjacent(x, y) for x in a for y in cliques[j].vertices)
            out[i][j] = out[j][i] = c
    return out


def clique_graph_dot(g: CayleyGraph, cliques: Sequence[Clique], name: str = "cliques") -> str:
    """Cliques as nodes, edges weighted by the number of graph edges between them."""
    counts = inter_clique_edge_counts(g, cliques)
    lines = [f'graph "{name}" {{']
    for i, c in enumerate(cliques):
        members = " ".join(g.label(v) for v in c)
        lines.append(f'  "{clique_label(i)}" [label="{clique_label(i)}\\n{members}"];')
    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            if counts[i][j]:
                lines.append(f'  "{clique_label(i)}" -- "{clique_label(j)}" [label="{counts[i][j]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _aq4_matrix(images: Iterable[str]) -> Permutation:
    return Permutation.from_matrix(GF2Matrix.from_images(4, list(images)))


def aq4_named_maps() -> dict[str, Permutation]:
    """Vertex permutations of AQ_4 used in the clique-action certificate."""
    v = lambda s: parse_bitstring(s, 4)  # noqa: E731
    return {
        "rho_0010": translation(4, v("0010")),
        "rho_0001": translation(4, v("0001")),
        "rho_1000": translation(4, v("1000")),
        "rho_1111": translation(4, v("1111")),
        "A": _aq4_matrix(["1000", "0100", "0001", "0010"]),
        "A'": _aq4_matrix(["1111", "0100", "0010", "0001"]),
        "B": _aq4_matrix(["0010", "0100", "1000", "1111"]),
    }


def _named_action(p: Permutation, cliques: Sequence[Clique]) -> Permutation:
    sets = [frozenset(c.vertices) for c in cliques]
    return action_on_sets(p, sets, {s: i for i, s in enumerate(sets)})


def verify_clique_block(aut: PermGroup) -> Certificate:
    """Every element of Aut(AQ_4) fixes the upper cliques setwise or swaps them with the lower ones."""
    cliques = aq4_named_cliques()
    upper = {frozenset(c.vertices) for c in cliques[:4]}
    lower = {frozenset(c.vertices) for c in cliques[4:8]}
    cert = Certificate("clique_block")
    fixers, swappers, bad = [], [], []
    for p in aut.elements:
        image = {frozenset(p[x] for x in c) for c in upper}
        if image == upper:
            fixers.append(p)
        elif image == lower:
            swappers.append(p)
        else:
            bad.append(p)
    cert.add("block_axiom", not bad, f"{len(fixers)} elements fix K, {len(swappers)} swap K and K'")
    cert.add("both_cases_realized", bool(fixers) and bool(swappers))
    lab = lambda x: format(x, "04b")  # noqa: E731
    cert.evidence = {
        "fixes_K": fixers[0].cycle_string(lab) if fixers else None,
        "swaps_K": swappers[0].cycle_string(lab) if swappers else None,
    }
    return cert


def verify_aq4_structure(aut: PermGroup) -> Certificate:
    """Constructive check of Aut(AQ_4) = (D_8 x D_8) x| C_2 through the
    faithful action on the eight upper and lower cliques."""
    cliques = aq4_named_cliques()[:8]
    maps = aq4_named_maps()
    cert = Certificate("aq4_structure")
    on = {name: _named_action(p, cliques) for name, p in maps.items()}
    members = aut.members
    cert.add("named_maps_are_automorphisms", all(p in members for p in maps.values()))

    def effect(name: str) -> str:
        return on[name].cycle_string(clique_label)

    cert.add("rho_e3_effect", effect("rho_0010") == "(C5 C8)(C6 C7)", effect("rho_0010"))
    cert.add("rho_e4_effect", effect("rho_0001") == "(C5 C6)(C7 C8)", effect("rho_0001"))
    cert.add("A_effect", effect("A") == "(C6 C8)", effect("A"))
    cert.add("rho_e1_effect", effect("rho_1000") == "(C1 C2)(C3 C4)", effect("rho_1000"))
    cert.add("rho_1111_effect", effect("rho_1111") == "(C1 C4)(C2 C3)", effect("rho_1111"))
    cert.add("A'_effect", effect("A'") == "(C2 C4)", effect("A'"))

    action = induced_action(aut, [frozenset(c.vertices) for c in cliques])
    cert.add("action_faithful", action.faithful, f"kernel order {action.kernel_order}")

    N1 = closure([on["rho_0010"], on["rho_0001"], on["A"]])
    N2 = closure([on["rho_1000"], on["rho_1111"], on["A'"]])
    t1, t2 = recognize(N1), recognize(N2)
    cert.add("N1_dihedral_8", str(t1) == "Dihedral(8)", str(t1))
    cert.add("N2_dihedral_8", str(t2) == "Dihedral(8)", str(t2))
    common = N1.members & N2.members
    cert.add("N1_N2_trivial_intersection", len(common) == 1)
    cert.add("N1_N2_commute", all(a * b == b * a for a in N1.generators for b in N2.generators))
    product = {a * b for a in N1.elements for b in N2.elements}
    cert.add("N1N2_order_64", len(product) == 64, str(len(product)))
    B = on["B"]
    Binv = ~B
    conj1 = {Binv * x * B for x in N1.elements}
    conj2 = {Binv * x * B for x in N2.elements}
    cert.add("B_swaps_N1_N2", conj1 == N2.members and conj2 == N1.members)
    cert.add("B_normalizes_N1xN2", {Binv * x * B for x in product} == product)
    whole = closure([on["rho_0010"], on["rho_0001"], on["A"], on["rho_1000"], on["rho_1111"], on["A'"], B])
    cert.add("order_128", whole.order() == 128 == aut.order(), f"|<N1,N2,B>| = {whole.order()}, |Aut| = {aut.order()}")
    cert.add("equals_clique_action_image", whole.members == action.image.members)
    cert.evidence = {
        "N1": str(t1),
        "N2": str(t2),
        "N1N2_order": len(product),
        "order": whole.order(),
        "effects": {name: effect(name) for name in on},
    }
    return cert
