"""Command-line interface.

Subcommands: build, profile, rho, alpha, transform, enumerate, rank,
verify.  Output is deterministic: floats are printed with 17 significant
digits and every collection is emitted in canonical order, so identical
invocations produce byte-identical output.

Exit codes: 0 success; 1 a verification claim failed; 2 invalid input or
flags; 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .alpha_normal import (
    build_B_O,
    build_B_P,
    build_B_Q_supernormal,
    check_normal,
    f_O,
    f_P,
    gamma,
    phi,
    psi,
    rho_from_alpha,
    solve_alpha_O,
    solve_alpha_P,
    weights_to_text,
)
from .canonical import canonical_form, canonical_id
from .enumeration import (
    RankEntry,
    VerificationReport,
    enumerate_linear_unicyclic,
    rank_by_rho,
    verify_suite,
)
from .families import FamilySpec, family
from .hypergraph import (
    hypergraph_to_json,
    load_hypergraph,
    power_base,
    save_hypergraph,
    structural_profile,
)
from .spectral import (
    ConvergenceError,
    IterationOptions,
    SpectralResult,
    spectral_radius_graph,
    spectral_radius_tensor,
)
from .transforms import EdgeMove, move_edges, relocate, yss_move

_SCALARS = {"f_P": f_P, "f_O": f_O, "gamma": gamma, "phi": phi, "psi": psi}


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _render_json(obj) -> str:
    """JSON with 17-significant-digit floats and insertion-order keys."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        parts = (f"{json.dumps(str(key))}: {_render_json(val)}" for key, val in obj.items())
        return "{" + ", ".join(parts) + "}"
    raise TypeError(f"cannot render {type(obj)!r}")


def _csv(rows: list[list[str]]) -> str:
    quoted = [
        ",".join(f'"{c}"' if ("," in c or '"' in c) else c for c in row)
        for row in rows
    ]
    return "\n".join(quoted) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _iter_options(args) -> IterationOptions:
    return IterationOptions(
        tolerance=args.tol,
        max_iterations=args.max_iter,
        shift=args.shift,
    )


def _add_iter_flags(parser, default_tol=1e-12):
    parser.add_argument("--tol", type=float, default=default_tol,
                        help="iteration tolerance (enclosure width)")
    parser.add_argument("--max-iter", type=int, default=100000, dest="max_iter")
    parser.add_argument("--shift", type=float, default=1.0)


def _jobs_from(args) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("HYPERSPEC_JOBS")
    return int(env) if env else 1


def _parse_range(text: str) -> tuple[int, int]:
    """'a..b' inclusive, or a single integer."""
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    v = int(text)
    return v, v


# --- subcommand handlers ------------------------------------------------------

def _cmd_build(args) -> int:
    spec = FamilySpec(tag=args.family, k=args.k, m=args.m, g=args.g)
    h = family(spec)
    if args.output:
        save_hypergraph(h, args.output)
    else:
        sys.stdout.write(hypergraph_to_json(h) + "\n")
    return 0


def _cmd_profile(args) -> int:
    h = load_hypergraph(args.input)
    prof = structural_profile(h)
    _emit(_render_json(prof.to_json_dict()) + "\n", args.output)
    return 0


def _match_alpha_family(h) -> tuple[str, float] | None:
    """Recognize the input as a P- or O-family member and return its exact
    alpha, or None."""
    key = canonical_form(h)
    if h.m >= 5:
        p = family(FamilySpec(tag="P", k=h.k, m=h.m))
        if canonical_form(p) == key:
            return "P", solve_alpha_P(h.m - 4)
    if h.m >= 4:
        o = family(FamilySpec(tag="O", k=h.k, m=h.m))
        if canonical_form(o) == key:
            return "O", solve_alpha_O(h.m - 4)
    return None


def _cmd_rho(args) -> int:
    h = load_hypergraph(args.input)
    opts = _iter_options(args)
    if args.method == "tensor":
        res = spectral_radius_tensor(h, opts)
    elif args.method == "alpha":
        match = _match_alpha_family(h)
        if match is None:
            raise ValueError(
                "--method alpha applies only to the P and O family shapes"
            )
        tag, alpha = match
        fn = f_P if tag == "P" else f_O
        res = SpectralResult(
            rho=rho_from_alpha(alpha, h.k),
            perron=None,
            residual=abs(fn(alpha, h.m - 4) - 1.0),
            iterations=0,
            method="alpha-normal",
        )
    else:  # power-formula
        base = power_base(h)
        if base is None:
            raise ValueError("input is not the power of a simple graph")
        gres = spectral_radius_graph(base, opts)
        res = SpectralResult(
            rho=gres.rho ** (2.0 / h.k),
            perron=None,
            residual=gres.residual,
            iterations=gres.iterations,
            method="power-formula",
        )
    _emit(_render_json(res.to_json_dict(include_perron=args.perron)) + "\n", args.output)
    return 0


def _cmd_alpha(args) -> int:
    if args.action == "eval":
        fn = _SCALARS[args.fn]
        if args.fn in ("f_P", "f_O"):
            if args.r is None:
                raise ValueError(f"{args.fn} needs --r")
            value = fn(args.alpha, args.r)
        else:
            value = fn(args.alpha)
        sys.stdout.write(_fmt(value) + "\n")
        return 0
    if args.action == "solve":
        solver = solve_alpha_P if args.family == "P" else solve_alpha_O
        sys.stdout.write(_fmt(solver(args.r, args.tol)) + "\n")
        return 0
    # emit
    if args.family == "P":
        alpha = args.alpha if args.alpha is not None else solve_alpha_P(args.m - 4)
        w = build_B_P(args.m, args.k, alpha)
    elif args.family == "O":
        alpha = args.alpha if args.alpha is not None else solve_alpha_O(args.m - 4)
        w = build_B_O(args.m, args.k, alpha)
    else:
        alpha = args.alpha if args.alpha is not None else solve_alpha_P(args.m - 4)
        w = build_B_Q_supernormal(args.m, args.k, alpha)
    report = check_normal(w, alpha)
    _emit(weights_to_text(w), args.output)
    sys.stdout.write(_render_json(report.to_json_dict()) + "\n")
    return 0


def _cmd_transform(args) -> int:
    if args.action == "move":
        h = load_hypergraph(args.input)
        moves = []
        for text in args.move:
            parts = text.split(",")
            if len(parts) != 3:
                raise ValueError(f"--move wants EDGE,SRC,DST, got {text!r}")
            moves.append(EdgeMove(edge=int(parts[0]), src=int(parts[1]), dst=int(parts[2])))
        result = move_edges(h, moves)
        if args.output:
            save_hypergraph(result.hypergraph, args.output)
        else:
            sys.stdout.write(hypergraph_to_json(result.hypergraph) + "\n")
        sys.stdout.write(
            _render_json({"vertex_map": {str(a): b for a, b in sorted(result.vertex_map.items())}}) + "\n"
        )
        return 0
    if args.action == "yss":
        h = load_hypergraph(args.input)
        out = yss_move(h, args.e, args.f)
        if args.output:
            save_hypergraph(out, args.output)
        else:
            sys.stdout.write(hypergraph_to_json(out) + "\n")
        return 0
    # relocate
    g1 = load_hypergraph(args.input)
    g2 = load_hypergraph(args.attach)
    first, second = relocate(g1, args.v1, args.v2, g2, args.u)
    sys.stdout.write(hypergraph_to_json(first) + "\n")
    sys.stdout.write(hypergraph_to_json(second) + "\n")
    if args.output:
        save_hypergraph(first, args.output)
    if args.output2:
        save_hypergraph(second, args.output2)
    return 0


def _cmd_enumerate(args) -> int:
    opts = _iter_options(args)
    pool = enumerate_linear_unicyclic(
        args.k, args.m, jobs=_jobs_from(args), allow_large=args.allow_large, cap=args.cap
    )
    lines = []
    for h in pool:
        row = {"canonical_id": canonical_id(h), "k": h.k, "n": h.n,
               "edges": [list(e) for e in h.edges]}
        if args.with_rho:
            row["rho"] = spectral_radius_tensor(h, opts).rho
        lines.append(_render_json(row))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _rank_table(entries: list[RankEntry], fmt: str) -> str:
    if fmt == "json":
        rows = [
            {"rank": e.rank, "tied": e.tied, "rho": e.rho, "canonical_id": e.canonical_id}
            for e in entries
        ]
        return _render_json(rows) + "\n"
    header = ["rank", "tied", "rho", "canonical_id"]
    rows = [[str(e.rank), "yes" if e.tied else "no", _fmt(e.rho), e.canonical_id]
            for e in entries]
    if fmt == "csv":
        return _csv([header] + rows)
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(out) + "\n"


def _cmd_rank(args) -> int:
    opts = _iter_options(args)
    pool = enumerate_linear_unicyclic(
        args.k, args.m, jobs=_jobs_from(args), allow_large=args.allow_large, cap=args.cap
    )
    entries = rank_by_rho(pool, opts)
    _emit(_rank_table(entries, args.format), args.output)
    return 0


def _verify_table(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return _render_json([r.to_json_dict() for r in reports]) + "\n"
    header = ["claim", "k", "m", "detail", "lhs", "rhs", "gap", "status"]
    rows = []
    for rep in reports:
        for inst in rep.instances:
            rows.append([
                rep.claim,
                str(inst.k),
                str(inst.m),
                inst.detail,
                "" if inst.lhs is None else _fmt(inst.lhs),
                "" if inst.rhs is None else _fmt(inst.rhs),
                "" if inst.gap is None else _fmt(inst.gap),
                inst.status,
            ])
    summary = [f"{rep.claim}: {rep.verdict}" for rep in reports]
    if fmt == "csv":
        return _csv([header] + rows)
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(row) + " |" for row in rows]
    out += ["", "Summary:"] + [f"- {s}" for s in summary]
    return "\n".join(out) + "\n"


def _cmd_verify(args) -> int:
    m_lo, m_hi = _parse_range(args.m)
    opts = _iter_options(args)
    reports = verify_suite(args.k, m_lo, m_hi, opts)
    _emit(_verify_table(reports, args.format), args.output)
    return 1 if any(r.verdict == "fail" for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperspec",
        description="Spectral radii of k-uniform hypergraphs and the ordering "
                    "of linear unicyclic families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a family hypergraph to a file")
    p.add_argument("--family", required=True,
                   choices=["Hyperstar", "CyclePower", "S", "T1", "T2", "U1", "O", "P", "Q"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser("profile", help="structural report for a hypergraph file")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=_cmd_profile)

    p = sub.add_parser("rho", help="spectral radius of a hypergraph file")
    p.add_argument("input")
    p.add_argument("--method", choices=["tensor", "alpha", "power-formula"],
                   default="tensor")
    p.add_argument("--perron", action="store_true", help="include the Perron vector")
    p.add_argument("-o", "--output", default=None)
    _add_iter_flags(p)
    p.set_defaults(handler=_cmd_rho)

    p = sub.add_parser("alpha", help="scalar functions and incidence certificates")
    asub = p.add_subparsers(dest="action", required=True)
    pe = asub.add_parser("eval", help="evaluate a scalar function")
    pe.add_argument("--fn", required=True, choices=sorted(_SCALARS))
    pe.add_argument("--alpha", type=float, required=True)
    pe.add_argument("--r", type=int, default=None)
    pe.set_defaults(handler=_cmd_alpha)
    ps = asub.add_parser("solve", help="solve f = 1 for the family's alpha")
    ps.add_argument("--family", required=True, choices=["P", "O"])
    ps.add_argument("--r", type=int, required=True)
    ps.add_argument("--tol", type=float, default=1e-13)
    ps.set_defaults(handler=_cmd_alpha)
    pm = asub.add_parser("emit", help="emit the family's weighted incidence matrix")
    pm.add_argument("--family", required=True, choices=["P", "O", "Q"])
    pm.add_argument("--m", type=int, required=True)
    pm.add_argument("--k", type=int, required=True)
    pm.add_argument("--alpha", type=float, default=None,
                    help="override the solved alpha")
    pm.add_argument("-o", "--output", default=None)
    pm.set_defaults(handler=_cmd_alpha)

    p = sub.add_parser("transform", help="apply a rewiring operation")
    tsub = p.add_subparsers(dest="action", required=True)
    tm = tsub.add_parser("move", help="re-anchor edges at one target vertex")
    tm.add_argument("input")
    tm.add_argument("--move", action="append", required=True,
                    metavar="EDGE,SRC,DST")
    tm.add_argument("-o", "--output", default=None)
    tm.set_defaults(handler=_cmd_transform)
    ty = tsub.add_parser("yss", help="pendant-pattern re-anchoring move")
    ty.add_argument("input")
    ty.add_argument("--e", type=int, required=True)
    ty.add_argument("--f", type=int, required=True)
    ty.add_argument("-o", "--output", default=None)
    ty.set_defaults(handler=_cmd_transform)
    tr = tsub.add_parser("relocate", help="identification pair for two glue points")
    tr.add_argument("input")
    tr.add_argument("attach")
    tr.add_argument("--v1", type=int, required=True)
    tr.add_argument("--v2", type=int, required=True)
    tr.add_argument("--u", type=int, required=True)
    tr.add_argument("-o", "--output", default=None)
    tr.add_argument("--output2", default=None)
    tr.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("enumerate", help="all linear unicyclic classes as JSON lines")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--allow-large", action="store_true", dest="allow_large")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--with-rho", action="store_true", dest="with_rho")
    p.add_argument("-o", "--output", default=None)
    _add_iter_flags(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("rank", help="rank enumerated classes by spectral radius")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--allow-large", action="store_true", dest="allow_large")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--format", choices=["csv", "md", "json"], default="md")
    p.add_argument("-o", "--output", default=None)
    _add_iter_flags(p)
    p.set_defaults(handler=_cmd_rank)

    p = sub.add_parser("verify", help="run the inequality suite")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", required=True, help="edge count or range a..b")
    p.add_argument("--format", choices=["csv", "md", "json"], default="md")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    _add_iter_flags(p, default_tol=1e-10)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
