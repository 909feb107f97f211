"""Assemble JSON certificates for a single graph: automorphisms, cliques, blocks.

Each builder returns a plain dict with a ``checks`` list and a top-level
``pass`` flag; ``family`` switches on the known expectations for the
augmented cube and the hypercube.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial

from .aut import (
    DEFAULT_STABILIZER_MAX_N,
    StabilizerResult,
    full_aut,
    group_automorphisms_fixing_S,
    is_normal_cayley,
    paper_stabilizer_generators,
    verify_semidirect,
    vertex_stabilizer,
)
from .blocks import blocks_containing_e, verify_block_subgroup_correspondence
from .cayley import (
    CayleyGraph,
    GeneratorSet,
    augmented_cube,
    build_cayley,
    complement,
    folded_hypercube,
    hypercube,
    induced_subgraph,
)
from .checks import Certificate
from .cliques import (
    DEFAULT_CLIQUE_DEGREE_CAP,
    Clique,
    aq4_named_cliques,
    clique_orbits,
    inter_clique_edge_counts,
    is_clique,
    max_cliques,
    verify_aq4_structure,
    verify_clique_block,
)
from .gf2 import coset_partition, is_subspace, rank, span, to_bitstring
from .perm import (
    DEFAULT_GROUP_CAP,
    RECOGNIZE_CAP,
    GroupTooLarge,
    Permutation,
    closure,
    graph_automorphisms,
    permutation_is_linear,
    recognize,
)

FAMILIES = ("augmented", "hypercube", "folded", "custom")


@dataclass(frozen=True)
class RunConfig:
    command: str = "report"
    n: int = 4
    family: str = "augmented"
    gens: str | None = None
    cap_stabilizer_n: int = DEFAULT_STABILIZER_MAX_N
    cap_group_order: int = DEFAULT_GROUP_CAP
    cap_clique_degree: int = DEFAULT_CLIQUE_DEGREE_CAP
    format: str = "text"
    out: str | None = None
    dot: str | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        for cap in (self.cap_stabilizer_n, self.cap_group_order, self.cap_clique_degree):
            if cap <= 0:
                raise ValueError("caps must be positive")
        if self.family == "custom" and not self.gens:
            raise ValueError("--gens is required for the custom family")

    def graph(self) -> CayleyGraph:
        if self.family == "augmented":
            return augmented_cube(self.n)
        if self.family == "hypercube":
            return hypercube(self.n)
        if self.family == "folded":
            return folded_hypercube(self.n)
        S = GeneratorSet.parse(self.gens, self.n)
        return build_cayley(self.n, S, "Cay(" + ",".join(S.strings()) + ")")


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def build_summary(g: CayleyGraph) -> dict:
    comps = 1 << (g.n - rank(g.S.members))
    return {
        "graph": g.describe(),
        "components": comps,
        "component_size": g.order // comps,
        "pass": True,
        "checks": [],
    }


def _bits(g: CayleyGraph, vs) -> list[str]:
    return [to_bitstring(v, g.n) for v in vs]


def _group_type(group) -> str:
    try:
        return str(recognize(group))
    except GroupTooLarge:
        return f"Unrecognized(order={group.order()})"


def _generator_json(g: CayleyGraph, p: Permutation, is_translation: bool) -> dict:
    lab = lambda x: to_bitstring(x, g.n)  # noqa: E731
    if is_translation:
        return {"kind": "translation", "by": lab(p[0])}
    m = permutation_is_linear(p, g.n)
    return {
        "kind": "stabilizer",
        "matrix": m.row_strings() if m is not None else None,
        "cycles": p.cycle_string(lab) if g.order <= 64 else None,
    }


def aut_certificate(g: CayleyGraph, family: str = "custom", cap_n: int = DEFAULT_STABILIZER_MAX_N,
                    cap: int = DEFAULT_GROUP_CAP, stab: StabilizerResult | None = None) -> dict:
    stab = stab or vertex_stabilizer(g, cap_n, cap)
    aut = full_aut(g, cap_n, cap, stab=stab)
    normal = is_normal_cayley(g, stab)
    cert = Certificate("aut")
    cert.add("generators_preserve_adjacency", aut.generators_verified)
    cert.add("order_is_2^n_times_stabilizer", aut.order == g.order * stab.order, f"{aut.order}")
    linear_maps = group_automorphisms_fixing_S(g.n, g.S)
    cert.add("normality_cross_check", normal.normal == (len(linear_maps) == stab.order),
             f"|Aut(Z_2^n,S)| = {len(linear_maps)}, |G_e| = {stab.order}")
    stab_perms = {Permutation.from_matrix(m) for m in linear_maps}
    cert.add("linear_maps_inside_stabilizer", stab_perms <= stab.group.members)
    semidirect = None
    if normal.normal and aut.order <= cap:
        semidirect = verify_semidirect(g, stab, cap)
        cert.checks.extend(semidirect.checks)
    gtype = _group_type(stab.group)
    aut_type = _group_type(aut.group(cap)) if aut.order <= RECOGNIZE_CAP else None
    n = g.n
    if family == "augmented":
        if n == 2:
            cert.add("AQ_2: |Aut| = 24", aut.order == 24)
            cert.add("AQ_2: Aut is S_4", aut_type == "Symmetric(4)", aut_type)
            cert.add("AQ_2: normal", normal.normal)
        elif n == 3:
            cert.add("AQ_3: G_e is D_8 x C_2", gtype == "DirectProduct[Dihedral(8), Cyclic(2)]", gtype)
            cert.add("AQ_3: non-normal", not normal.normal)
            cert.add("AQ_3: |Aut(Z_2^3,S)| = 8", len(linear_maps) == 8)
            squares = induced_subgraph(complement(g), range(g.order))
            sq_order = graph_automorphisms(squares).order()
            cert.add("AQ_3: |Aut| = |Aut(two squares)| = 128", aut.order == sq_order == 128, f"{aut.order}, {sq_order}")
        else:
            cert.add("AQ_n: |Aut| = 2^(n+3)", aut.order == 2 ** (n + 3), f"{aut.order}")
            cert.add("AQ_n: G_e is D_8", gtype == "Dihedral(8)", gtype)
            cert.add("AQ_n: normal", normal.normal)
            fs = paper_stabilizer_generators(n)
            gen = closure([Permutation.from_matrix(f) for f in fs], cap=cap)
            cert.add("AQ_n: f1', f2', f3' invertible and fix S",
                     all(f.is_invertible() and {f(s) for s in g.S} == set(g.S.members) for f in fs))
            cert.add("AQ_n: <f1', f2', f3'> = G_e", gen.members == stab.group.members)
    elif family == "hypercube":
        cert.add("Q_n: |G_e| = n!", stab.order == factorial(n), f"{stab.order}")
        cert.add("Q_n: normal", normal.normal)
    payload = {
        "graph": g.describe(),
        "stabilizer_order": stab.order,
        "aut_order": aut.order,
        "normal": normal.normal,
        "group_type": gtype,
        "aut_group_type": aut_type,
        "generators": [_generator_json(g, p, i < g.n) for i, p in enumerate(aut.generators)],
        "counterexample": (normal.counterexample.cycle_string(lambda x: to_bitstring(x, n))
                           if normal.counterexample is not None and g.order <= 64 else None),
        "checks": [c.to_dict() for c in cert.checks],
        "pass": cert.passed,
    }
    return payload


def clique_certificate(g: CayleyGraph, family: str = "custom", cap_n: int = DEFAULT_STABILIZER_MAX_N,
                       cap: int = DEFAULT_GROUP_CAP, degree_cap: int = DEFAULT_CLIQUE_DEGREE_CAP,
                       stab: StabilizerResult | None = None) -> tuple[dict, list]:
    stab = stab or vertex_stabilizer(g, cap_n, cap)
    aut = full_aut(g, cap_n, cap, stab=stab)
    G = aut.group(cap)
    cliques = max_cliques(g, degree_cap)
    omega = cliques[0].size
    n = g.n
    if family == "augmented" and n == 4:
        cliques = aq4_named_cliques()
    cert = Certificate("cliques")
    vset = set(g.vertices())
    maximal = all(
        is_clique(g, c.vertices) and not any(all(g.adjacent(x, v) for v in c) for x in vset - set(c))
        for c in cliques
    )
    cert.add("cliques_are_maximal", maximal)
    report = clique_orbits(G, cliques)
    cert.add("automorphisms_permute_cliques", True)
    # a coset partition by a clique that is a subspace, for the edge-count matrix
    partition = None
    for c in cliques:
        if 0 in c.vertices and is_subspace(c.vertices):
            partition = coset_partition(span(c.vertices, n))
            break
    counts = inter_clique_edge_counts(g, [Clique(tuple(p)) for p in partition]) if partition else None
    if family == "augmented" and n >= 4:
        cert.add("AQ_n: clique number 4", omega == 4)
        cert.add("AQ_n: (n-1)2^(n-2) maximum cliques", len(cliques) == (n - 1) * 2 ** (n - 2), f"{len(cliques)}")
        cert.add("AQ_n: floor(n/2) orbits", len(report.orbit_partition) == n // 2, f"{report.orbit_sizes()}")
        if n == 4:
            cert.add("AQ_4: named cliques are all maximum cliques",
                     set(aq4_named_cliques()) == set(max_cliques(g, degree_cap)))
            cert.add("AQ_4: orbits {C1..C8} and {C9..C12}",
                     report.orbit_partition == [list(range(8)), list(range(8, 12))])
            cert.add("AQ_4: faithful on C1..C8", report.orbit_faithful[0])
            upper = inter_clique_edge_counts(g, aq4_named_cliques()[:4])
            cert.add("AQ_4: count(C1,C3) = 2 count(C1,C2) = 2 count(C1,C4)",
                     upper[0][2] == 2 * upper[0][1] == 2 * upper[0][3], f"C1 row: {upper[0]}")
            for sub in (verify_clique_block(G), verify_aq4_structure(G)):
                for c in sub.checks:
                    cert.add(f"{sub.name}: {c.name}", c.passed, c.detail)
    payload = {
        "graph": g.describe(),
        "clique_number": omega,
        "count": len(cliques),
        "cliques": [_bits(g, c.vertices) for c in cliques],
        "orbits": report.orbit_partition,
        "orbit_sizes": report.orbit_sizes(),
        "faithful": report.faithful,
        "orbit_faithful": report.orbit_faithful,
        "partition": [_bits(g, p) for p in partition] if partition else None,
        "edge_counts": counts,
        "checks": [c.to_dict() for c in cert.checks],
        "pass": cert.passed,
    }
    return payload, cliques


def block_certificate(g: CayleyGraph, family: str = "custom", cap_n: int = DEFAULT_STABILIZER_MAX_N,
                      cap: int = DEFAULT_GROUP_CAP, stab: StabilizerResult | None = None) -> dict:
    stab = stab or vertex_stabilizer(g, cap_n, cap)
    report = blocks_containing_e(g, stab, cap)
    cert = Certificate("blocks")
    cert.add("block_axiom_holds", all(b.verified for b in report.blocks))
    sets = [frozenset(b.vertices) for b in report.blocks]
    closed = all((a & b) in sets or len(a & b) == 1 for a in sets for b in sets)
    cert.add("closed_under_intersection", closed)
    if stab.is_normal:
        corr = verify_block_subgroup_correspondence(g, report, stab)
        cert.checks.extend(corr.checks)
    n = g.n
    found = [sorted(b) for b in report.blocks_containing_e]
    if family == "augmented" and n == 4:
        want = [sorted(int(x, 2) for x in group) for group in (
            ("0000", "0100"),
            ("0000", "0100", "0011", "0111"),
            ("0000", "0100", "0011", "0111", "1001", "1010", "1101", "1110"),
        )]
        cert.add("AQ_4: exactly the three blocks", found == want)
        cert.add("AQ_4: subgroup orders 16, 32, 64", [b.subgroup_order for b in report.blocks] == [16, 32, 64])
    elif family == "hypercube":
        ones = (1 << n) - 1
        even = [v for v in g.vertices() if bin(v).count("1") % 2 == 0]
        cert.add("Q_n: antipodal and even-weight blocks only", found == sorted([[0, ones], even], key=len))
    payload = report.to_dict()
    payload["checks"] = [c.to_dict() for c in cert.checks]
    payload["pass"] = cert.passed
    return payload


def full_report(cfg: RunConfig) -> dict:
    g = cfg.graph()
    stab = vertex_stabilizer(g, cfg.cap_stabilizer_n, cfg.cap_group_order)
    sections = {
        "build": build_summary(g),
        "aut": aut_certificate(g, cfg.family, cfg.cap_stabilizer_n, cfg.cap_group_order, stab),
    }
    if g.degree <= cfg.cap_clique_degree:
        sections["cliques"] = clique_certificate(g, cfg.family, cfg.cap_stabilizer_n, cfg.cap_group_order,
                                                 cfg.cap_clique_degree, stab)[0]
    sections["blocks"] = block_certificate(g, cfg.family, cfg.cap_stabilizer_n, cfg.cap_group_order, stab)
    return {
        "graph": g.describe(),
        "sections": sections,
        "pass": all(s["pass"] for s in sections.values()),
    }
