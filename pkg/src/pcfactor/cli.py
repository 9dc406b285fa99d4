"""Command-line front end.

Every command prints either an artifact (gadgets, reductions, Kneser
graphs without ``-o``) or a JSON result ``{verdict, payload, diagnostics}``.

Exit codes: 0 yes, 3 no (refuted, with certificate where one exists),
2 usage/parse error, 4 divergence between equivalent conditions,
5 a search cap was hit, 1 a certificate failed its own replay.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import certificates as cert_mod
from .errors import Infeasible, ParseError, PcFactorError, SearchCapExceeded, TooLarge
from .formats import export_dot, graph_to_json, load_graph, parse_hypergraph, serialize_ecg
from .gadgets import build_gf, build_gfc, gadget_to_dot, gadget_to_json
from .graph import ColouredGraph, brute_f_factor, is_proper_colouring, validate
from .harness import equivalence_harness
from . import hardness

EXIT = {"yes": 0, "no": 3, "error": 2, "divergence": 4, "cap": 5, "invalid": 1}


@dataclass
class CommandResult:
    verdict: str
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT[self.verdict]

    def to_json(self) -> str:
        body = {"verdict": self.verdict, "payload": self.payload, "diagnostics": self.diagnostics}
        return json.dumps(body, sort_keys=True, indent=2)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    g, f = load_graph(_read(path))
    problems = validate(g, f)
    if problems:
        raise ParseError("; ".join(problems))
    return g, f


def _edges(F) -> list[list[str]]:
    return [list(e) for e in sorted(F)]


def _emit(text: str, out: str | None) -> CommandResult | str:
    if out is None:
        return text
    Path(out).write_text(text)
    return CommandResult("yes", {"path": out})


# --- commands ---------------------------------------------------------------------

def cmd_check(args) -> CommandResult:
    g, f = load_graph(_read(args.file))
    problems = validate(g, f)
    payload = {"vertices": len(g.vertices), "edges": len(g.edges), "colours": g.k,
               "proper": is_proper_colouring(g) if not problems else None}
    return CommandResult("error" if problems else "yes", payload, problems)


def cmd_find(args) -> CommandResult:
    g, f = _load(args.file)
    cert = cert_mod.find_pc_factor(g, f, strategy=args.strategy, max_palettes=args.max_palettes)
    result = CommandResult(cert.verdict, cert_mod.certificate_to_json(cert))
    if args.verify:
        problems = cert_mod.check_certificate(g, f, cert)
        if problems:
            return CommandResult("invalid", result.payload, problems)
        result.diagnostics.append("certificate replay: ok")
    return result


def cmd_certify(args) -> CommandResult:
    g, f = _load(args.file)
    if args.certificate:
        try:
            data = json.loads(_read(args.certificate))
            cert = cert_mod.certificate_from_json(data.get("payload", data))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"malformed certificate: {exc}") from None
        problems = cert_mod.check_certificate(g, f, cert)
        if problems:
            return CommandResult("invalid", None, problems)
        return CommandResult(cert.verdict, cert_mod.certificate_to_json(cert), ["certificate replay: ok"])
    cert = cert_mod.find_pc_factor(g, f, strategy="normalize")
    problems = cert_mod.check_certificate(g, f, cert)
    return CommandResult("invalid" if problems else cert.verdict, cert_mod.certificate_to_json(cert), problems)


def cmd_gadget(args):
    g, f = _load(args.file)
    try:
        gg = build_gf(g.plain, f) if args.plain else build_gfc(g, f)
    except Infeasible as exc:
        return CommandResult("no", {"kind": "infeasible_degree", "vertex": exc.vertex,
                                    "f": exc.f_value, "degree": exc.degree}, [str(exc)])
    if args.format == "json":
        text = json.dumps(gadget_to_json(gg), sort_keys=True, indent=2) + "\n"
    elif args.format == "dot":
        text = gadget_to_dot(gg)
    else:
        flat = ColouredGraph(gg.graph.vertices, tuple((u, v, 1) for u, v in gg.graph.edges), 1)
        kind = "plain" if args.plain else "coloured"
        text = serialize_ecg(flat, None, f"{kind} gadget; uncoloured, every edge written with colour 1")
    return _emit(text, args.output)


def cmd_tutte(args) -> CommandResult:
    g, f = _load(args.file)
    if len(g.vertices) > args.max_vertices:
        raise TooLarge(f"{len(g.vertices)} vertices exceeds cap {args.max_vertices}")
    plain = g.plain
    F = brute_f_factor(plain, f)
    try:
        c1 = cert_mod.first_c1_failure(plain, f)
        c1_holds = c1 is None
    except Infeasible:
        c1, c1_holds = None, False
    pair = cert_mod.first_deficient_pair(plain, f, args.variant)
    payload: dict[str, Any] = {
        "f_factor": _edges(F) if F is not None else None,
        "gadget_condition_holds": c1_holds,
        "deficiency_variant": args.variant,
        "deficiency_condition_holds": pair is None,
    }
    if pair is not None:
        S, T = pair
        gamma, h, _ = cert_mod.deficiency_form(plain, f, S, T, args.variant)
        payload["deficient_pair"] = {"S": sorted(S), "T": sorted(T), "gamma": gamma, "h": h}
    if c1 is not None:
        payload["gadget_witness"] = {"S": sorted(c1[0]), "T": sorted(c1[1])}
    exists = F is not None
    if not (exists == c1_holds == (pair is None)):
        return CommandResult("divergence", payload, ["oracles disagree"])
    return CommandResult("yes" if exists else "no", payload)


def cmd_reduce(args):
    h = parse_hypergraph(_read(args.file))
    if args.target == "rc":
        g = hardness.build_rc_gadget(h, args.r)
    else:
        g = hardness.build_d2c_gadget(h, args.r)
    if args.format == "json":
        text = json.dumps(graph_to_json(g), sort_keys=True, indent=2) + "\n"
    elif args.format == "dot":
        text = export_dot(g)
    else:
        text = serialize_ecg(g, {v: args.r for v in g.vertices},
                             f"{args.target} gadget, r={args.r}, from {Path(args.file).name}")
    return _emit(text, args.output)


def cmd_solve(args) -> CommandResult:
    g, f = _load(args.file)
    if args.mode == "pc":
        cert = cert_mod.find_pc_factor(g, f, strategy="normalize")
        return CommandResult(cert.verdict, cert_mod.certificate_to_json(cert))
    if args.mode == "rc":
        search = hardness.FactorSearch(g, args.r, "rc", max_nodes=args.max_nodes)
    else:
        search = hardness.FactorSearch(g, args.r, "distance", d=args.d, max_nodes=args.max_nodes)
    F = search.search()
    diagnostics = [f"search nodes: {search.stats.nodes}", f"forced edges: {search.stats.forced}"]
    if F is None:
        return CommandResult("no", None, diagnostics)
    return CommandResult("yes", {"factor": _edges(F)}, diagnostics)


def cmd_kneser(args):
    if args.canonical:
        g = hardness.canonical_colouring(args.canonical)
        if args.format == "ecg":
            text = serialize_ecg(g, {v: args.canonical for v in g.vertices},
                                 f"KG({2 * args.canonical - 1},{args.canonical - 1}), canonical colouring")
        elif args.format == "dot":
            text = export_dot(g, name="Kneser")
        else:
            text = json.dumps(graph_to_json(g), sort_keys=True, indent=2) + "\n"
    else:
        if args.n is None or args.k is None:
            raise ParseError("give --n and --k, or --canonical R")
        g = hardness.kneser(args.n, args.k)
        if args.format == "dot":
            text = export_dot(g, name="Kneser")
        else:
            text = json.dumps({"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]},
                              sort_keys=True, indent=2) + "\n"
    return _emit(text, args.output)


def cmd_equiv(args) -> CommandResult:
    if args.n < 1 or args.k < 1 or args.fmax < 0:
        raise ParseError("need --n >= 1, --k >= 1, --fmax >= 0")
    report = equivalence_harness(args.n, args.k, args.fmax, sample=args.sample, seed=args.seed)
    payload = report.to_json(args.examples)
    if report.has_divergence:
        return CommandResult("divergence", payload, ["a characterisation disagrees with matching existence"])
    return CommandResult("yes", payload)


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pcfactor", description="Properly coloured f-factors and related problems.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate an ECG/JSON graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("find", help="decide pc-f-factor existence with a certificate")
    s.add_argument("file")
    s.add_argument("--strategy", choices=("smallest", "normalize"), default="smallest")
    s.add_argument("--verify", action="store_true", help="replay the certificate")
    s.add_argument("--max-palettes", type=int, default=2_000_000)
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("certify", help="produce or replay a certificate")
    s.add_argument("file")
    s.add_argument("--certificate", help="JSON certificate to re-check")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("gadget", help="emit the gadget graph")
    s.add_argument("file")
    kind = s.add_mutually_exclusive_group()
    kind.add_argument("--coloured", action="store_true", default=True)
    kind.add_argument("--plain", action="store_true")
    s.add_argument("--format", choices=("ecg", "dot", "json"), default="ecg")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("tutte", help="uncoloured f-factor oracles")
    s.add_argument("file")
    s.add_argument("--variant", choices=("classical", "printed"), default="classical")
    s.add_argument("--max-vertices", type=int, default=10)
    s.set_defaults(func=cmd_tutte)

    s = sub.add_parser("reduce", help="build a hardness gadget from a hypergraph")
    s.add_argument("file")
    s.add_argument("--target", choices=("rc", "d2c"), required=True)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--format", choices=("ecg", "dot", "json"), default="ecg")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("solve", help="search for an rc, distance-d or pc factor")
    s.add_argument("file")
    s.add_argument("--mode", choices=("rc", "d2c", "pc"), required=True)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--max-nodes", type=int, default=2_000_000)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("kneser", help="Kneser graphs and canonical colourings")
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--canonical", type=int, metavar="R", help="canonically coloured KG(2R-1, R-1)")
    s.add_argument("--format", choices=("ecg", "dot", "json"), default="json")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_kneser)

    s = sub.add_parser("equiv", help="run the equivalence harness")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--fmax", type=int, default=2)
    s.add_argument("--sample", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--examples", type=int, default=20)
    s.set_defaults(func=cmd_equiv)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (SearchCapExceeded, TooLarge) as exc:
        result = CommandResult("cap", None, [str(exc)])
    except (ParseError, PcFactorError, ValueError) as exc:
        result = CommandResult("error", None, [str(exc)])
    if isinstance(result, str):
        sys.stdout.write(result)
        return 0
    print(result.to_json())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
