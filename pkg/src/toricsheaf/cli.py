"""Command-line front end.

Commands: validate, h0-table, cohomology-table, euler-table, hilbert-table,
bounds, hilbert-poly, monomial-sigma.  Tables are indexed by the twisting
class: rows run over q descending, columns over p ascending (varieties with
a rank-1 class group produce a single row over p).  Exit codes: 0 success,
1 validation or input failure, 2 unsupported computation, 3 internal
consistency failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import hilbert
from .cohomology import SheafCohomology
from .config import JobConfig, load_config
from .errors import ConfigError, InternalConsistencyError, UnsupportedVarietyError
from .filtration import validate as validate_sheaf
from .hilbert import format_polynomial
from .monomial import MonomialIdeal, sigma_piece_dim
from .toric import Cone, projective_space


def _parse_span(text: str) -> list[int]:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise ConfigError(f"range {text!r} must look like lo:hi") from None
    return list(range(lo, hi + 1))


def _write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _load_validated(args) -> JobConfig:
    cfg = load_config(args.config)
    problems = validate_sheaf(cfg.sheaf)
    if problems:
        raise ConfigError("invalid sheaf:\n" + "\n".join(f"  {p}" for p in problems))
    return cfg


def _class_axes(cfg: JobConfig, args) -> tuple[list[int], list[int | None]]:
    p_list = _parse_span(args.p) if args.p else []
    if cfg.variety.class_rank == 1:
        return p_list, [None]
    q_list = _parse_span(args.q) if args.q else []
    return p_list, list(reversed(q_list))


def _class_of(p: int, q: int | None) -> tuple[int, ...]:
    return (p,) if q is None else (p, q)


def _render_table(
    p_list, q_list, rows, fmt, command, extra: dict | None = None
) -> str:
    if fmt == "json":
        payload = {
            "command": command,
            "p": p_list,
            "q": [q for q in q_list if q is not None] or None,
            "values": rows,
        }
        payload.update(extra or {})
        return json.dumps(payload, indent=2) + "\n"
    lines = ["q\\p," + ",".join(str(p) for p in p_list)]
    for q, row in zip(q_list, rows):
        label = "h" if q is None else str(q)
        lines.append(label + "," + ",".join(str(v) for v in row))
    text = "\n".join(lines) + "\n"
    if extra and "in_omega" in extra:
        lines = ["in_omega", "q\\p," + ",".join(str(p) for p in p_list)]
        for q, row in zip(q_list, extra["in_omega"]):
            label = "h" if q is None else str(q)
            lines.append(label + "," + ",".join("1" if v else "0" for v in row))
        text += "\n" + "\n".join(lines) + "\n"
    return text


def _cmd_validate(args) -> int:
    cfg = load_config(args.config)
    problems = validate_sheaf(cfg.sheaf)
    if problems:
        _write_output("\n".join(problems), args.out)
        return 1
    _write_output("ok", args.out)
    return 0


def _table_command(args, cell) -> int:
    cfg = _load_validated(args)
    p_list, q_list = _class_axes(cfg, args)
    engine = SheafCohomology(cfg.sheaf)
    rows = [[cell(cfg, engine, _class_of(p, q)) for p in p_list] for q in q_list]
    _write_output(
        _render_table(p_list, q_list, rows, args.format, args.command), args.out
    )
    return 0


def _cmd_h0_table(args) -> int:
    return _table_command(args, lambda cfg, eng, c: eng.h0_twisted(c))


def _cmd_cohomology_table(args) -> int:
    def cell(cfg, eng, c):
        return eng.cech_twisted(c)[args.i]

    cfg = _load_validated(args)
    if not 0 <= args.i <= cfg.variety.dim:
        raise UnsupportedVarietyError(
            f"cohomology degree {args.i} out of range 0..{cfg.variety.dim}"
        )
    return _table_command(args, cell)


def _cmd_euler_table(args) -> int:
    return _table_command(args, lambda cfg, eng, c: eng.chi_twisted(c))


def _cmd_hilbert_table(args) -> int:
    cfg = _load_validated(args)
    p_list, q_list = _class_axes(cfg, args)
    rows = [
        [hilbert.hilbert_function(cfg.sheaf, _class_of(p, q)) for p in p_list]
        for q in q_list
    ]
    extra = {}
    if cfg.variety.is_split_bundle:
        omega = hilbert.regularity_region(cfg.sheaf)
        extra["in_omega"] = [
            [omega.contains(p, q) for p in p_list] for q in q_list
        ]
    _write_output(
        _render_table(p_list, q_list, rows, args.format, args.command, extra), args.out
    )
    return 0


def _cmd_bounds(args) -> int:
    cfg = _load_validated(args)
    lower = hilbert.lower_support_region(cfg.sheaf)
    uppers = hilbert.upper_support_regions(cfg.sheaf)
    omega = hilbert.regularity_region(cfg.sheaf)
    if args.format == "json":
        def encode(region):
            return {
                "kind": region.kind,
                "index": region.index,
                "planes": [
                    [pl.p_coeff, pl.q_coeff, pl.bound] for pl in region.planes
                ],
            }

        payload = {
            "L": encode(lower),
            "upper_components": [encode(r) for r in uppers],
            "omega": encode(omega),
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [str(lower)]
        lines += [str(r) for r in uppers]
        lines.append(str(omega))
        _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_hilbert_poly(args) -> int:
    cfg = _load_validated(args)
    poly = hilbert.hilbert_polynomial(cfg.sheaf)
    if args.format == "json":
        def key(exps):
            return (-sum(exps), tuple(-e for e in exps))

        payload = {
            "variables": ["p", "q"],
            "terms": [
                {"exponents": list(exps), "coefficient": str(poly.coeffs[exps])}
                for exps in sorted(poly.coeffs, key=key)
            ],
            "text": format_polynomial(poly, ("p", "q")),
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _write_output("P(p, q) = " + format_polynomial(poly, ("p", "q")) + "\n", args.out)
    return 0


def _cmd_monomial_sigma(args) -> int:
    try:
        generators = [
            tuple(int(x) for x in block.split(","))
            for block in args.generators.split(";")
            if block.strip()
        ]
    except ValueError:
        raise ConfigError("generators must look like '0,0,2;1,0,1;1,1,0'") from None
    ideal = MonomialIdeal(args.n, tuple(generators))
    variety = projective_space(args.n)
    if args.cone:
        try:
            indices = tuple(variety.ray_index(name.strip()) for name in args.cone.split(","))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    else:
        indices = ()
    cone = Cone(indices, variety.dim - len(indices))
    spans = [_parse_span(text) for text in args.d]
    if len(spans) == 1 and variety.dim > 1:
        spans = spans * variety.dim
    if len(spans) != variety.dim:
        raise ConfigError(f"need a character range per coordinate ({variety.dim})")
    if variety.dim == 2:
        d1_list = spans[0]
        d2_list = list(reversed(spans[1]))
        rows = [
            [sigma_piece_dim(ideal, cone, (d1, d2)) for d1 in d1_list]
            for d2 in d2_list
        ]
        if args.format == "json":
            payload = {"d1": d1_list, "d2": d2_list, "values": rows}
            _write_output(json.dumps(payload, indent=2) + "\n", args.out)
        else:
            lines = ["d2\\d1," + ",".join(str(d) for d in d1_list)]
            for d2, row in zip(d2_list, rows):
                lines.append(str(d2) + "," + ",".join(str(v) for v in row))
            _write_output("\n".join(lines) + "\n", args.out)
        return 0
    from itertools import product as iproduct

    records = [
        {"character": list(m), "value": sigma_piece_dim(ideal, cone, m)}
        for m in iproduct(*spans)
    ]
    if args.format == "json":
        _write_output(json.dumps(records, indent=2) + "\n", args.out)
    else:
        lines = [",".join(str(x) for x in rec["character"]) + f",{rec['value']}" for rec in records]
        _write_output("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricsheaf",
        description="cohomology and Hilbert data of reflexive sheaves on toric varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config(p):
        p.add_argument("--config", required=True, help="JSON job configuration")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    def add_window(p):
        p.add_argument("--p", help="p range lo:hi (use --p=lo:hi for negatives)")
        p.add_argument("--q", help="q range lo:hi")

    p = sub.add_parser("validate", help="check the filtration invariants")
    add_config(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("h0-table", help="global-section dimensions over a twist window")
    add_config(p)
    add_window(p)
    p.set_defaults(func=_cmd_h0_table)

    p = sub.add_parser("cohomology-table", help="Cech h^i over a twist window")
    add_config(p)
    add_window(p)
    p.add_argument("--i", type=int, required=True, help="cohomology degree")
    p.set_defaults(func=_cmd_cohomology_table)

    p = sub.add_parser("euler-table", help="Euler characteristics over a twist window")
    add_config(p)
    add_window(p)
    p.set_defaults(func=_cmd_euler_table)

    p = sub.add_parser("hilbert-table", help="Hilbert function by polytope counting")
    add_config(p)
    add_window(p)
    p.set_defaults(func=_cmd_hilbert_table)

    p = sub.add_parser("bounds", help="support bounds and the regularity corner")
    add_config(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("hilbert-poly", help="interpolated Hilbert polynomial")
    add_config(p)
    p.set_defaults(func=_cmd_hilbert_poly)

    p = sub.add_parser("monomial-sigma", help="0/1 cone pieces of a monomial ideal on P^n")
    p.add_argument("--n", type=int, required=True, help="projective dimension")
    p.add_argument("--generators", required=True, help="exponents like '0,0,2;1,0,1'")
    p.add_argument("--cone", default="", help="comma-separated ray names; empty = zero cone")
    p.add_argument("--d", nargs="+", required=True, help="character range(s) lo:hi")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_monomial_sigma)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnsupportedVarietyError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
