"""Command-line front end.

Exit codes: 0 = yes / success, 1 = no / invalid, 2 = refused or error.
Graphs are read and written in the plain text format of `splitkit.graphs`
(`n m` header plus edge lines); certificates in the format of
`splitkit.splitting`.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field

from . import canonical, families, graphs, oracle, reductions, shallow, splitting
from .graphs import CapExceeded, ForbiddenFamily, Graph, named_graph


class CliError(Exception):
    pass


# ---------------------------------------------------------------------------
# Family grammar:
#   induced:{K3,P3} | subgraph:{C4} | odd-cycles | odd-holes-antiholes
#   | cluster | triangle-free | bipartite | perfect | threshold | split-graph

_SHORTHANDS = {
    "cluster": lambda: ForbiddenFamily.finite([named_graph("P3")]),
    "triangle-free": lambda: ForbiddenFamily.finite([named_graph("K3")]),
    "bipartite": ForbiddenFamily.odd_cycles,
    "perfect": ForbiddenFamily.odd_holes_antiholes,
    "threshold": lambda: families.THRESHOLD_FAMILY,
    "split-graph": lambda: families.SPLIT_GRAPH_FAMILY,
}


def parse_family_spec(text: str) -> ForbiddenFamily:
    text = text.strip()
    if text in _SHORTHANDS:
        return _SHORTHANDS[text]()
    if text == "odd-cycles":
        return ForbiddenFamily.odd_cycles()
    if text == "odd-holes-antiholes":
        return ForbiddenFamily.odd_holes_antiholes()
    for mode in ("induced", "subgraph"):
        prefix = mode + ":"
        if text.startswith(prefix):
            body = text[len(prefix):].strip()
            if not (body.startswith("{") and body.endswith("}")):
                raise CliError(f"expected {{...}} after '{prefix}' in {text!r}")
            names = [t.strip() for t in body[1:-1].split(",") if t.strip()]
            if not names:
                raise CliError(f"empty family in {text!r}")
            try:
                pats = [named_graph(nm) for nm in names]
            except ValueError as exc:
                raise CliError(str(exc)) from None
            return ForbiddenFamily.finite(pats, mode=mode)
    raise CliError(f"cannot parse family spec {text!r}")


def format_family_spec(fam: ForbiddenFamily) -> str:
    if fam.kind == "odd-cycles":
        return "odd-cycles"
    if fam.kind == "odd-holes-antiholes":
        return "odd-holes-antiholes"
    return f"{fam.mode}:{{{','.join(_pattern_name(p) for p in fam.patterns)}}}"


def _pattern_name(p: Graph) -> str:
    for name in ("K0", "K1", "K2", "K3", "K4", "K5", "P2", "P3", "P4", "P5",
                 "C3", "C4", "C5", "C6", "claw", "paw", "diamond",
                 "coK2", "coK3", "coP3", "coC4", "coP4"):
        try:
            if named_graph(name) == p or canonical.are_isomorphic(named_graph(name), p):
                return name
        except ValueError:
            continue
    return f"<{p.n}v{p.m}e>"


def _small_family_names(fam: ForbiddenFamily):
    """If every pattern is on <= 3 vertices and mode is induced, the matching
    small-family name set; else None."""
    if fam.kind != "finite" or fam.mode != "induced":
        return None
    names = set()
    for p in fam.patterns:
        if p.n > 3:
            return None
        for nm in families.SMALL_NAMES:
            if canonical.are_isomorphic(families.SMALL_PATTERNS[nm], p):
                names.add(nm)
                break
        else:
            return None
    return frozenset(names)


# ---------------------------------------------------------------------------
# Reporting

@dataclass
class RunReport:
    command: str
    decision: str = ""            # yes | no | refused | error | ok | invalid
    solver: str = ""
    reason: str = ""
    certificate_path: str = ""
    wall_time: float = 0.0
    seed: int | None = None
    caps_hit: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def exit_code(self) -> int:
        return {"yes": 0, "ok": 0, "no": 1, "invalid": 1}.get(self.decision, 2)

    def emit(self, as_json: bool) -> None:
        if as_json:
            payload = {k: v for k, v in self.__dict__.items() if v or k == "decision"}
            print(json.dumps(payload, indent=2, default=str))
            return
        line = f"{self.command}: {self.decision}"
        if self.solver:
            line += f" (via {self.solver})"
        if self.reason:
            line += f" -- {self.reason}"
        print(line)
        if self.certificate_path:
            print(f"certificate written to {self.certificate_path}")


def _write_cert(seq, path, as_json=False):
    text = (splitting.certificate_to_json(seq) if as_json or str(path).endswith(".json")
            else splitting.format_certificate(seq))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# Commands

def cmd_solve(args) -> RunReport:
    rep = RunReport("solve")
    t0 = time.monotonic()
    g = graphs.read_graph(args.graph)
    fam = parse_family_spec(args.family)
    seq = None
    small = _small_family_names(fam)
    if args.mode == "shallow":
        if small == frozenset({"K3"}):
            rep.solver = "shallow-tfvs"
            seq = shallow.solve_shallow_tfvs(g, args.k)
            rep.decision = "yes" if seq is not None else "no"
        else:
            rep.solver = "oracle"
            rep.decision = _oracle_decide(rep, g, fam, args)
            seq = rep.extra.pop("seq", None)
    elif small is not None:
        verdict = families.dispatch(small, g, args.k)
        if verdict != "np-hard-case":
            rep.solver = "small-families dispatch"
            rep.decision = verdict
        else:
            rep.solver = "oracle (np-hard case delegated)"
            rep.decision = _oracle_decide(rep, g, fam, args)
            seq = rep.extra.pop("seq", None)
    elif fam.kind == "finite" and fam.mode == "induced" and (
            frozenset(canonical.canonical_form(p) for p in fam.patterns)
            == frozenset(canonical.canonical_form(p) for p in families.THRESHOLD_FAMILY.patterns)):
        rep.solver = "threshold recognition"
        rep.decision = "yes" if families.solve_threshold_vs(g, args.k) else "no"
    elif fam.kind == "finite" and fam.mode == "induced" and (
            frozenset(canonical.canonical_form(p) for p in fam.patterns)
            == frozenset(canonical.canonical_form(p) for p in families.SPLIT_GRAPH_FAMILY.patterns)):
        rep.solver = "split-graph recognition"
        rep.decision = "yes" if families.solve_split_vs(g, args.k) else "no"
    else:
        rep.solver = "oracle"
        rep.decision = _oracle_decide(rep, g, fam, args)
        seq = rep.extra.pop("seq", None)
    if args.emit_cert:
        if seq is None and rep.decision == "yes" and rep.solver != "oracle":
            # polynomial deciders are decision-only; get a witness from the oracle
            try:
                seq = oracle.solve(g, fam, args.k, mode=args.mode, cap=args.cap)
            except CapExceeded as exc:
                rep.caps_hit.append(str(exc))
        if seq is not None:
            _write_cert(seq, args.emit_cert)
            rep.certificate_path = args.emit_cert
    rep.wall_time = time.monotonic() - t0
    return rep


def _oracle_decide(rep, g, fam, args) -> str:
    try:
        seq = oracle.solve(g, fam, args.k, mode=args.mode, cap=args.cap)
    except CapExceeded as exc:
        rep.caps_hit.append(str(exc))
        rep.reason = str(exc)
        return "refused"
    if seq is not None:
        rep.extra["seq"] = seq
        return "yes"
    return "no"


def cmd_oracle(args) -> RunReport:
    rep = RunReport("oracle", solver="oracle")
    t0 = time.monotonic()
    g = graphs.read_graph(args.graph)
    fam = parse_family_spec(args.family)
    try:
        seq = oracle.solve(g, fam, args.k, mode=args.mode,
                           include_trivial=args.include_trivial, cap=args.cap)
    except CapExceeded as exc:
        rep.decision = "refused"
        rep.reason = str(exc)
        rep.caps_hit.append(str(exc))
        rep.wall_time = time.monotonic() - t0
        return rep
    rep.decision = "yes" if seq is not None else "no"
    if seq is not None:
        rep.extra["splits"] = len(seq)
        if args.emit_cert:
            _write_cert(seq, args.emit_cert)
            rep.certificate_path = args.emit_cert
    rep.wall_time = time.monotonic() - t0
    return rep


def cmd_shallow_tfvs(args) -> RunReport:
    rep = RunReport("shallow-tfvs", solver="shallow-tfvs")
    t0 = time.monotonic()
    g = graphs.read_graph(args.graph)
    seq = shallow.solve_shallow_tfvs(g, args.k)
    rep.decision = "yes" if seq is not None else "no"
    if seq is not None:
        rep.extra["splits"] = len(seq)
        if args.emit_cert:
            _write_cert(seq, args.emit_cert)
            rep.certificate_path = args.emit_cert
        if args.emit_model:
            _write_model(g, seq, args.emit_model)
    rep.wall_time = time.monotonic() - t0
    return rep


def _write_model(g, seq, path):
    """Model file: `v <id>` per split vertex; `e <u> <v> -> <head>` per edge
    variable that is true (edge {u,v} goes to the second child of <head>)."""
    lines = []
    for spec in seq.steps:
        v = seq.ancestor(spec.target)
        lines.append(f"v {v}")
        for x in sorted(spec.part2):
            u = seq.ancestor(x)
            lines.append(f"e {min(u, v)} {max(u, v)} -> {v}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_verify(args) -> RunReport:
    rep = RunReport("verify", solver="verify_certificate")
    t0 = time.monotonic()
    g = graphs.read_graph(args.graph)
    fam = parse_family_spec(args.family)
    with open(args.certificate, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        if args.certificate.endswith(".json"):
            seq = splitting.certificate_from_json(text, g)
        else:
            seq = splitting.parse_certificate(text, g)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        rep.decision = "error"
        rep.reason = f"parse: {exc}"
        rep.wall_time = time.monotonic() - t0
        return rep
    ok, why = oracle.verify_certificate(g, seq, fam, args.k, explain=True)
    rep.decision = "ok" if ok else "invalid"
    rep.reason = why
    rep.wall_time = time.monotonic() - t0
    return rep


def cmd_gen(args) -> RunReport:
    rep = RunReport("gen")
    kind = args.kind
    if kind == "cubic":
        catalog = reductions.cubic_catalog()
        if not args.params or args.params[0] not in catalog:
            raise CliError(f"cubic generator wants one of {sorted(catalog)}")
        g = catalog[args.params[0]]
        rep.solver = f"cubic:{args.params[0]}"
    elif kind == "random":
        if len(args.params) != 2:
            raise CliError("usage: gen random <n> <p> [--seed S]")
        n, p = int(args.params[0]), float(args.params[1])
        rng = random.Random(args.seed)
        es = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph(range(n), es)
        rep.seed = args.seed
        rep.solver = f"random:{n},{p}"
    else:
        size = int(args.params[0]) if args.params else None
        try:
            g = named_graph(kind, size)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        rep.solver = f"named:{kind}"
    if args.out:
        graphs.write_graph(g, args.out)
        rep.certificate_path = args.out
    else:
        sys.stdout.write(graphs.format_graph(g))
    rep.decision = "ok"
    rep.extra = {"n": g.n, "m": g.m}
    return rep


def cmd_stats(args) -> RunReport:
    rep = RunReport("stats", decision="ok")
    g = graphs.read_graph(args.graph)
    degs = sorted((g.degree(v) for v in g.vertices), reverse=True)
    rep.extra = {
        "n": g.n,
        "m": g.m,
        "degree_sequence": degs,
        "isolated": len(g.isolated_vertices()),
        "components": len(g.components()),
        "triangles": len(graphs.triangles(g)),
        "bipartite": graphs.is_bipartite(g),
    }
    if g.n <= 12:
        rep.extra["connectivity"] = graphs.connectivity(g)
    if not args.json:
        for key, val in rep.extra.items():
            print(f"{key}: {val}")
    return rep


# ---------------------------------------------------------------------------
# Reductions + their verification
#
# Each `reduce` run writes the instance graph and a JSON sidecar recording
# the reduction type and parameters; `verify-reduction` re-runs the generator
# and checks the instance file matches.

def cmd_reduce(args) -> RunReport:
    rep = RunReport(f"reduce {args.reduction}")
    g = graphs.read_graph(args.graph)
    meta = {"reduction": args.reduction, "k": args.k,
            "base": {"n": g.n, "m": g.m}}
    if args.reduction == "subdivided-vc":
        inst, budget = reductions.subdivided_vc_instance(g, args.ell, args.k)
        meta["ell"] = args.ell
    elif args.reduction == "bipartite":
        inst, budget = reductions.bipartite_reduction(g, args.k)
    elif args.reduction == "perfect":
        inst, budget = reductions.perfect_reduction(g, args.k)
    elif args.reduction == "paranp":
        pinst = reductions.paranp_reduction(g, args.k)
        inst, budget = pinst.graph, args.k
        meta["universal"] = pinst.universal
        meta["copies"] = [sorted(cp.values()) for cp in pinst.copies]
        meta["extra_triangles"] = [list(t) for t in pinst.extra_triangles]
    elif args.reduction == "constr":
        config = _named_config(args.config)
        skel = graphs.orient(g)
        s = frozenset(int(x) for x in (args.split_set or "").split(",") if x.strip())
        res = reductions.constr(skel, config, s)
        inst, budget = res.graph, args.k
        meta["config"] = args.config
        meta["split_set"] = sorted(s)
        meta["chi_vertex"] = {str(v): sorted(vs) for v, vs in res.chi_vertex.items()}
        meta["chi_arc"] = {f"{a}->{b}": sorted(vs) for (a, b), vs in res.chi_arc.items()}
    else:
        raise CliError(f"unknown reduction {args.reduction!r}")
    meta["budget"] = budget
    meta["instance"] = {"n": inst.n, "m": inst.m}
    graphs.write_graph(inst, args.out)
    with open(args.out + ".meta.json", "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2)
    rep.decision = "ok"
    rep.certificate_path = args.out
    rep.extra = {"budget": budget, "n": inst.n, "m": inst.m}
    return rep


def _named_config(name):
    table = {
        "triangle": reductions.triangle_configuration,
        "square": reductions.square_configuration,
        "pentagon": reductions.pentagon_configuration,
    }
    if name not in table:
        raise CliError(f"unknown configuration {name!r}; pick from {sorted(table)}")
    return table[name]()


def cmd_verify_reduction(args) -> RunReport:
    rep = RunReport("verify-reduction", solver="re-run and compare")
    with open(args.instance + ".meta.json", "r", encoding="utf-8") as fh:
        meta = json.load(fh)
    g = graphs.read_graph(args.graph)
    inst = graphs.read_graph(args.instance)
    kind = meta["reduction"]
    if kind == "subdivided-vc":
        expect, budget = reductions.subdivided_vc_instance(g, meta["ell"], meta["k"])
    elif kind == "bipartite":
        expect, budget = reductions.bipartite_reduction(g, meta["k"])
    elif kind == "perfect":
        expect, budget = reductions.perfect_reduction(g, meta["k"])
    elif kind == "paranp":
        expect, budget = reductions.paranp_reduction(g, meta["k"]).graph, meta["k"]
    elif kind == "constr":
        res = reductions.constr(graphs.orient(g), _named_config(meta["config"]),
                                frozenset(meta["split_set"]))
        expect, budget = res.graph, meta["k"]
    else:
        raise CliError(f"unknown reduction {kind!r} in metadata")
    # instance files are written in relabeled form, so compare the same way
    same = graphs.format_graph(expect) == graphs.format_graph(inst)
    budget_ok = budget == meta["budget"]
    rep.decision = "ok" if same and budget_ok else "invalid"
    if not same:
        rep.reason = "instance graph does not match the re-run construction"
    elif not budget_ok:
        rep.reason = "budget does not match the re-run construction"
    return rep


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="splitkit",
                                  description=__doc__,
                                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="cmd", required=True)

    def common_solver(p):
        p.add_argument("--graph", required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--mode", default="general",
                       choices=("general", "disjoint-only", "shallow"))
        p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
        p.add_argument("--emit-cert", dest="emit_cert")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve", help="route to the best applicable solver")
    common_solver(p)
    p.add_argument("--family", required=True)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("oracle", help="exact brute-force search")
    common_solver(p)
    p.add_argument("--family", required=True)
    p.add_argument("--include-trivial", action="store_true")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("shallow-tfvs", help="shallow triangle-free splitting")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit-cert", dest="emit_cert")
    p.add_argument("--emit-model", dest="emit_model")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_shallow_tfvs)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--certificate", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("reduce", help="build a hardness-reduction instance")
    p.add_argument("reduction",
                   choices=("subdivided-vc", "bipartite", "perfect", "paranp", "constr"))
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, default=1, help="subdivision rounds (subdivided-vc)")
    p.add_argument("--config", default="triangle", help="configuration name (constr)")
    p.add_argument("--split-set", dest="split_set", default="",
                   help="comma-separated skeleton vertices to pre-split (constr)")
    p.add_argument("--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("verify-reduction", help="re-run a reduction and compare")
    p.add_argument("--graph", required=True, help="the base graph")
    p.add_argument("--instance", required=True, help="instance file (sidecar .meta.json expected)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify_reduction)

    p = sub.add_parser("gen", help="write a graph file")
    p.add_argument("kind", help="named graph (K/P/C/claw/...), 'cubic', or 'random'")
    p.add_argument("params", nargs="*", help="size, catalog name, or n p")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("stats", help="basic structure report")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_stats)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.fn(args)
    except (CliError, ValueError, OSError) as exc:
        report = RunReport(args.cmd, decision="error", reason=str(exc))
    report.emit(getattr(args, "json", False))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
