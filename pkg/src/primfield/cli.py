"""Command-line front end: ``primfield <command> ...``.

Every command prints one JSON (or plain text) document.  Numbers are
rendered as decimal strings.  Exit status: 0 on success, 1 on usage or
construction errors, 2 when an identity check ends undetermined.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .avoidance import max_zero_intersection_subspace, parse_family_file
from .covering import construct_covering, lc_value, min_covering_exhaustive
from .errors import DEFAULT_LIMIT, InputError, PrimfieldError, SizeLimit
from .extension import (
    BOUNDARY_UNDETERMINED,
    construct_primitive_subspace,
    num_divisors,
    phi_oracle,
    phi_upper_bound,
    primitive_census,
    verify_identity,
)
from .fieldcore import build_tower, prime_power
from .partition import PartitionSpec, build_partition, pieces_of

SCHEMA = "primfield-lab/1"


def _envelope(command: str, args, payload: dict) -> dict:
    return {"schema": SCHEMA, "command": command, "seed": str(args.seed), "limit": str(args.limit), **payload}


def cmd_analyze(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.r, args.n, args.seed)
    report = verify_identity(tower, limit=args.limit)
    code = 2 if report.verdict == BOUNDARY_UNDETERMINED else 0
    return {"tower": tower.to_dict(), "report": report.to_dict()}, code


def cmd_construct(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.r, args.n, args.seed)
    w = construct_primitive_subspace(tower, limit=args.limit)
    return {
        "tower": tower.to_dict(),
        "witness": w.V.to_dict(),
        "trace": [[str(a) for a in x] for x in w.construction_trace],
        "dim": str(w.dim),
        "verified": w.verified,
    }, 0


def cmd_oracle(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.r, args.n, args.seed)
    return {
        "tower": tower.to_dict(),
        "phi_oracle": str(phi_oracle(tower, args.limit)),
        "phi_upper": str(phi_upper_bound(tower)),
    }, 0


def cmd_covering(args) -> tuple[dict, int]:
    cov = construct_covering(args.q, args.n, args.limit)
    payload = {"lc": str(lc_value(args.q, args.n)), "covering": cov.to_dict()}
    try:
        payload["min_covering"] = str(min_covering_exhaustive(args.q, args.n, args.limit))
    except SizeLimit as exc:
        payload["min_covering"] = None
        payload["note"] = str(exc)
    return payload, 0


def cmd_partition(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.r, args.n, args.seed)
    W = construct_primitive_subspace(tower, limit=args.limit).V
    try:
        dims = [int(d) for d in args.piece_dims.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"piece dimensions must be integers: {args.piece_dims!r}") from exc
    cert = build_partition(PartitionSpec(tower, W, pieces_of(W, dims)), args.limit)
    return {"tower": tower.to_dict(), "partition": cert.to_dict()}, 0 if cert.ok else 1


def cmd_avoid(args) -> tuple[dict, int]:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    problem = parse_family_file(text)
    res = max_zero_intersection_subspace(problem)
    return {
        "n": str(problem.n),
        "m": str(problem.m),
        "s": str(res.s),
        "T": res.T.to_dict(),
        "steps": [[str(a) for a in v] for v in res.steps],
        "candidates": [str(c) for c in res.candidates],
    }, 0


def _parse_range(text: str) -> range:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def cmd_boundary_search(args) -> tuple[dict, int]:
    p, r = prime_power(args.q)
    try:
        ns = _parse_range(args.n_range)
    except ValueError as exc:
        raise InputError(f"bad n range {args.n_range!r}") from exc
    records, code = [], 0
    for n in ns:
        if n < 2 or num_divisors(n) < args.q + 2:
            continue
        tower = build_tower(p, r, n, args.seed)
        rep = verify_identity(tower, limit=args.limit)
        rec = rep.to_dict()
        rec["d_n"] = str(num_divisors(n))
        k = phi_upper_bound(tower)
        try:
            scanned, primitive = primitive_census(tower, k, args.limit)
        except SizeLimit as exc:
            rec["census"] = {"dim": str(k), "error": str(exc)}
        else:
            rec["census"] = {
                "dim": str(k),
                "subspaces_scanned": str(scanned),
                "primitive_subspaces": str(primitive),
                "phi_equals_n_minus_psi": primitive > 0,
            }
        records.append(rec)
        if rep.verdict == BOUNDARY_UNDETERMINED:
            code = 2
    return {"q": str(args.q), "records": records}, code


def _common(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, default=0, help="seed for all random choices (default 0)")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="bound on q^n for exhaustive scans")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primfield", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        _common(sp)
        return sp

    for name, func, help_ in [
        ("analyze", cmd_analyze, "check psi + phi = n for F_{p^(rn)} over F_{p^r}"),
        ("construct", cmd_construct, "greedy primitive subspace of dimension n - psi"),
        ("oracle", cmd_oracle, "phi by exhaustive subspace search"),
    ]:
        sp = add(name, func, help_)
        sp.add_argument("p", type=int)
        sp.add_argument("r", type=int)
        sp.add_argument("n", type=int)

    sp = add("covering", cmd_covering, "minimal linear covering of F_q^n")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)

    sp = add("partition", cmd_partition, "subspace partition of F_{q^n} from a primitive subspace")
    sp.add_argument("p", type=int)
    sp.add_argument("r", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("piece_dims", help='dimensions of the pieces of W, e.g. "2" or "2,1,1"')

    sp = add("avoid", cmd_avoid, "maximal subspace meeting a family of rational subspaces trivially")
    sp.add_argument("file")

    sp = add("boundary-search", cmd_boundary_search, "probe cases with d(n) >= q + 2")
    sp.add_argument("q", type=int)
    sp.add_argument("n_range", help='"6" or "2..12"')
    return parser


def _render_text(d, prefix="") -> list[str]:
    lines = []
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            lines.extend(_render_text(v, key + "."))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            for i, item in enumerate(v):
                lines.extend(_render_text(item, f"{key}[{i}]."))
        else:
            lines.append(f"{key}: {json.dumps(v) if isinstance(v, list) else v}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.limit <= 0:
        parser.error("--limit must be positive")
    try:
        payload, code = args.func(args)
        doc = _envelope(args.command, args, payload)
    except PrimfieldError as exc:
        doc = _envelope(args.command, args, {"error": type(exc).__name__, "message": str(exc)})
        code = 1
    if args.format == "json":
        out = json.dumps(doc, indent=2) + "\n"
    else:
        out = "\n".join(_render_text(doc)) + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
