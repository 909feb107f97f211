"""Batch command line: build, aut, cliques, blocks, report.

Exit status is 0 iff every check in the run passed, 1 if some check failed,
2 on bad arguments and 3 when a size cap stops the computation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import certify
from .cliques import Clique, clique_graph_dot
from .perm import GroupTooLarge

COMMANDS = ("build", "aut", "cliques", "blocks", "report")


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=certify.FAMILIES, default="augmented")
    common.add_argument("-n", type=int, required=True, help="dimension of Z_2^n")
    common.add_argument("--gens", help="comma-separated bitstrings, for --family custom")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--cap-stabilizer-n", type=int, default=certify.DEFAULT_STABILIZER_MAX_N)
    common.add_argument("--cap-group-order", type=int, default=certify.DEFAULT_GROUP_CAP)
    common.add_argument("--cap-clique-degree", type=int, default=certify.DEFAULT_CLIQUE_DEGREE_CAP)

    parser = argparse.ArgumentParser(prog="augcube", description="Certificates for Cayley graphs over Z_2^n.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("build", "cliques"):
            p.add_argument("--dot", help="also write a DOT file here")
    return parser


def config_from_args(argv: list[str] | None = None) -> certify.RunConfig:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return certify.RunConfig(
            command=args.command,
            n=args.n,
            family=args.family,
            gens=args.gens,
            cap_stabilizer_n=args.cap_stabilizer_n,
            cap_group_order=args.cap_group_order,
            cap_clique_degree=args.cap_clique_degree,
            format=args.format,
            out=args.out,
            dot=getattr(args, "dot", None),
        )
    except ValueError as exc:
        parser.error(str(exc))
        raise


def _text(payload: dict, indent: str = "") -> list[str]:
    lines = []
    graph = payload.get("graph")
    if graph and not indent:
        lines.append(f"graph {graph['name'] or 'Cay'}: n={graph['n']} |V|={graph['vertices']} "
                     f"|E|={graph['edges']} degree={graph['degree']} S={{{', '.join(graph['S'])}}}")
    for key in ("components", "component_size", "connected", "aut_order", "stabilizer_order", "group_type",
                "normal", "clique_number", "count", "orbit_sizes", "faithful", "method"):
        if key in payload:
            lines.append(f"{indent}{key}: {payload[key]}")
    if "blocks" in payload:
        for b in payload["blocks"]:
            lines.append(f"{indent}block size {b['size']}: {{{', '.join(b['vertices'])}}}")
    if "edge_counts" in payload and payload["edge_counts"] and len(payload["edge_counts"]) <= 8:
        lines.append(f"{indent}edge counts between cosets:")
        lines += [f"{indent}  " + " ".join(f"{c:2d}" for c in row) for row in payload["edge_counts"]]
    for c in payload.get("checks", []):
        mark = "PASS" if c["pass"] else "FAIL"
        detail = f"  ({c['detail']})" if c.get("detail") else ""
        lines.append(f"{indent}{mark} {c['name']}{detail}")
    for name, section in payload.get("sections", {}).items():
        lines.append(f"[{name}]")
        lines += _text(section, indent + "  ")
    if not indent:
        lines.append("overall: " + ("PASS" if payload["pass"] else "FAIL"))
    return lines


def run(cfg: certify.RunConfig) -> tuple[dict, str | None]:
    """Payload for the command plus optional DOT text."""
    g = cfg.graph()
    fam, capn, cap = cfg.family, cfg.cap_stabilizer_n, cfg.cap_group_order
    dot = None
    if cfg.command == "build":
        payload = certify.build_summary(g)
        dot = g.to_dot()
    elif cfg.command == "aut":
        payload = certify.aut_certificate(g, fam, capn, cap)
    elif cfg.command == "cliques":
        payload, cliques = certify.clique_certificate(g, fam, capn, cap, cfg.cap_clique_degree)
        partition = payload["partition"]
        if partition:
            cosets = [Clique(tuple(int(x, 2) for x in part)) for part in partition]
            dot = clique_graph_dot(g, cosets, f"{g.name} coset cliques")
    elif cfg.command == "blocks":
        payload = certify.block_certificate(g, fam, capn, cap)
    else:
        payload = certify.full_report(cfg)
    return payload, dot


def main(argv: list[str] | None = None) -> int:
    cfg = config_from_args(argv)
    try:
        payload, dot = run(cfg)
    except GroupTooLarge as exc:
        print(f"error: {exc}; raise --cap-group-order or --cap-stabilizer-n to proceed", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = certify.dumps(payload) if cfg.format == "json" else "\n".join(_text(payload)) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if cfg.dot and dot is not None:
        Path(cfg.dot).write_text(dot, encoding="utf-8")
    return 0 if payload["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
