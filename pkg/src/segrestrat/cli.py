"""Command-line front end.

Every command prints one JSON envelope ``{command, inputs, result, warnings,
version}`` with sorted keys, except ``gl3 figure`` in csv/svg format, which
prints (or writes) the figure itself.

Exit codes: 0 success, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from segrestrat import __version__
from segrestrat.errors import SegreError
from segrestrat.functor import (
    KINDS,
    Isogeny,
    parabolic_image,
    pi1_pushforward,
    pi1_pushforward_alt,
    transfer_stratum,
)
from segrestrat.gl3borel import (
    Window,
    classify,
    closure_dag,
    figure_data,
    hirschowitz_ceiling,
    render,
)
from segrestrat.parabolic import (
    NumericalType,
    ParabolicType,
    degree_pushforward,
    dim_flag_variety,
    isotropy_det_char,
    parse_int_list,
    parse_parabolic,
    quotient_roots,
    roots_of,
)
from segrestrat.rootdata import GroupDescriptor, TopologicalType, moduli_dimension, parse_group
from segrestrat.segre import expand_to_torus, segre_value
from segrestrat.strata import (
    CurveContext,
    DimKind,
    Status,
    StratumRecord,
    family_of,
    hn_upper_bound,
    sigma_set,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 2, 3

# options whose values may start with '-' (negative numbers, comma lists)
_VALUE_OPTIONS = {"--degrees", "--d", "--delta", "--s", "--window", "--flag",
                  "--isotropic-flag", "--omit"}


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    out, i = [], 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _envelope(command: str, inputs: dict, result, warnings: list[str]) -> str:
    payload = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "warnings": warnings,
        "version": __version__,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _add_parabolic_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--flag", help="type A block sizes, e.g. 1,2")
    p.add_argument("--isotropic-flag", help="isotropic subspace dimensions, e.g. 2 or 1,2")
    p.add_argument("--omit", help="omitted simple roots (1-based), e.g. 1,3")
    p.add_argument("--lagrangian", type=int, default=1, choices=(1, 2),
                   help="SO(2n) Lagrangian family for an isotropic flag reaching n")


def _parabolic(group: GroupDescriptor, args) -> ParabolicType:
    return parse_parabolic(group, args.flag, args.isotropic_flag, args.omit, args.lagrangian)


def _parabolic_inputs(args) -> dict:
    return {k: getattr(args, k) for k in ("flag", "isotropic_flag", "omit", "lagrangian")
            if getattr(args, k) is not None}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="segrestrat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="dimension, center and pi1 of a group")
    p.add_argument("name")
    p.add_argument("--genus", type=int, help="also report the moduli dimension")

    p = sub.add_parser("roots", help="root system in torus coordinates")
    p.add_argument("name")

    for cmd, help_ in (("parabolic", "Levi blocks and g/p roots of a parabolic"),
                       ("isotropy", "determinant character of the isotropy representation")):
        p = sub.add_parser(cmd, help=help_)
        p.add_argument("name")
        _add_parabolic_args(p)

    p = sub.add_parser("segre", help="Segre value of one reduction with given block degrees")
    p.add_argument("name")
    _add_parabolic_args(p)
    p.add_argument("--degrees", required=True)

    for cmd, help_ in (("stratum", "one stratum record"), ("sigma", "set of nonempty strata")):
        p = sub.add_parser(cmd, help=help_)
        p.add_argument("name")
        _add_parabolic_args(p)
        p.add_argument("--delta", type=int, default=0)
        p.add_argument("--genus", type=int, required=True)
        if cmd == "stratum":
            p.add_argument("--s", type=int, required=True)

    p = sub.add_parser("transfer", help="transfer a stratum along a central isogeny")
    p.add_argument("--iso", required=True, choices=KINDS)
    p.add_argument("name", help="source group")
    p.add_argument("--m", type=int, help="order of mu_m for central-quotient")
    _add_parabolic_args(p)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    gl3 = sub.add_parser("gl3", help="Borel reductions of GL(3)-bundles")
    gsub = gl3.add_subparsers(dest="gl3_command", required=True)
    p = gsub.add_parser("classify")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--d", required=True, help="d1,d2,d3")
    p = gsub.add_parser("ceiling")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    for cmd in ("figure", "dag"):
        p = gsub.add_parser(cmd)
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--delta", type=int, required=True)
        p.add_argument("--window", required=True, help="d1min:d1max,d3min:d3max")
        if cmd == "figure":
            p.add_argument("--format", default="json", choices=("csv", "svg", "json"))
            p.add_argument("--out", help="write to this path instead of stdout")
    return parser


def _run(args) -> tuple[str, dict, object, list[str]]:
    cmd = args.command
    warnings: list[str] = []

    if cmd == "group":
        g = parse_group(args.name)
        result = g.to_json()
        if args.genus is not None:
            result["moduli_dimension"] = moduli_dimension(g, args.genus)
        return cmd, {"name": args.name, "genus": args.genus}, result, warnings

    if cmd == "roots":
        g = parse_group(args.name)
        rs = g.root_system
        result = {
            "type": rs.label,
            "count": len(rs.roots),
            "simple_roots": roots_of(rs.simple_roots),
            "positive_roots": roots_of(rs.positive_roots),
            "roots": roots_of(rs.roots),
        }
        return cmd, {"name": args.name}, result, warnings

    if cmd in ("parabolic", "isotropy", "segre"):
        g = parse_group(args.name)
        p = _parabolic(g, args)
        inputs = {"name": args.name, **_parabolic_inputs(args)}
        if cmd == "parabolic":
            result = p.to_json()
            if p.is_proper:
                result["quotient_roots"] = roots_of(quotient_roots(p))
                result["dim_G_mod_P"] = dim_flag_variety(p)
            return cmd, inputs, result, warnings
        if cmd == "isotropy":
            return cmd, inputs, {"det_iota": list(isotropy_det_char(p).exponents)}, warnings
        inputs["degrees"] = args.degrees
        nt = NumericalType(p, tuple(parse_int_list(args.degrees)))
        result = {
            "value": segre_value(nt),
            "torus_degrees": list(expand_to_torus(nt).degrees),
            "det_iota": list(isotropy_det_char(p).exponents),
            "degree_in_G": degree_pushforward(nt),
        }
        return cmd, inputs, result, warnings

    if cmd in ("stratum", "sigma"):
        g = parse_group(args.name)
        p = _parabolic(g, args)
        ctx = CurveContext(args.genus)
        inputs = {"name": args.name, "delta": args.delta, "genus": args.genus,
                  **_parabolic_inputs(args)}
        fam = family_of(g, TopologicalType.reduced(g, args.delta), p)
        if cmd == "stratum":
            inputs["s"] = args.s
            return cmd, inputs, fam.stratum(args.s, ctx).to_json(), warnings
        result = sigma_set(g, fam.delta, p, ctx).to_json()
        result["hn_upper_bound"] = hn_upper_bound(p, ctx)
        result["congruence"] = {"modulus": fam.modulus, "residue": fam.residue}
        return cmd, inputs, result, warnings

    if cmd == "transfer":
        src = parse_group(args.name)
        iso = Isogeny.of(args.iso, src, args.m)
        p = _parabolic(src, args)
        ctx = CurveContext(args.genus)
        delta = TopologicalType.reduced(src, args.delta)
        inputs = {"iso": args.iso, "name": args.name, "m": args.m, "delta": args.delta,
                  "genus": args.genus, "s": args.s, **_parabolic_inputs(args)}
        try:
            rec = family_of(src, delta, p).stratum(args.s, ctx)
        except SegreError as exc:
            warnings.append(f"source has no stratum formula ({exc}); transferring an undecided record")
            rec = StratumRecord(src, delta, p, args.s, Status.UNKNOWN, None, DimKind.UNKNOWN)
        target = transfer_stratum(iso, rec, ctx)
        pi1 = {"standard": pi1_pushforward(iso, delta).value}
        alt = pi1_pushforward_alt(iso, delta.value)
        if alt is not None:
            pi1["alternative"] = alt
            warnings.append(
                f"pi1({src.name}) taken as Z_{src.m} with delta -> (r/m)*delta; the alternative "
                f"reading Z_{src.r // src.m} with delta -> m*delta is reported for comparison"
            )
        result = {
            "target_group": iso.target.name,
            "surjective_on_moduli": iso.surjective_on_moduli,
            "source": rec.to_json(),
            "target": target.to_json(),
            "image_parabolic": parabolic_image(iso, p).label,
            "pi1": pi1,
        }
        return cmd, inputs, result, warnings

    # gl3
    ctx = CurveContext(args.genus)
    sub = args.gl3_command
    name = f"gl3 {sub}"
    inputs = {"genus": args.genus, "delta": args.delta}
    if sub == "classify":
        d = parse_int_list(args.d)
        inputs["d"] = args.d
        return name, inputs, classify(tuple(d), args.delta, ctx).to_json(), warnings
    if sub == "ceiling":
        return name, inputs, hirschowitz_ceiling(args.delta, ctx).to_json(), warnings
    window = Window.parse(args.window)
    inputs["window"] = args.window
    if sub == "dag":
        return name, inputs, [e.to_json() for e in closure_dag(args.delta, ctx, window)], warnings
    return name, inputs, figure_data(args.delta, ctx, window), warnings


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        command, inputs, result, warnings = _run(args)
        if command == "gl3 figure":
            inputs["format"] = args.format
            text = render(result, args.format) if args.format != "json" else _envelope(
                command, inputs, result.to_json(), warnings)
            if args.out:
                Path(args.out).write_text(text, encoding="utf-8")
            else:
                sys.stdout.write(text)
            return EXIT_OK
        sys.stdout.write(_envelope(command, inputs, result, warnings))
        return EXIT_OK
    except SegreError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
