"""Command-line front end.  Output schemas are described in docs/schemas.md."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import euler, mukai, svg, vanishing
from .character import (Character, NonIntegralCoordinates, discriminant, half_twist,
                        lattice_member, modify, shift, twist)
from .config import FORMATS, Config
from .presets import default_lattice, format_values, parse_character
from .stability import StabilityParams, slope
from .walls import ALWAYS, BoundOverflow, describe, search_walls, wall_between

SCHEMA_WALLS = "kuzwalls.walls/1"


class UsageError(Exception):
    pass


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _approx(q: Fraction) -> str:
    return f"{float(q):.6g}"


def _alpha_approx(a2: Fraction) -> str:
    return f"alpha = sqrt({a2}) ~ {math.sqrt(a2):.4g} (display only)"


def _vals(v: Character, beta) -> list:
    w = v.at(beta)
    return [str(x) for x in (w.rank, w.c1, w.c2) + ((w.c3,) if w.c3 is not None else ())]


# --- verbs -----------------------------------------------------------------------

def cmd_character(args, cfg, out):
    v = parse_character(args.char, cfg.presets)
    if args.modify:
        v = modify(v)
    if args.twist is not None:
        v = twist(v, args.twist)
    for _ in range(args.half_twist):
        v = half_twist(v)
    if args.shift:
        v = shift(v, args.shift)
    beta = args.beta if args.beta is not None else v.frame
    name = describe(v)
    fmt = args.format or cfg.output_format
    if fmt == "json":
        json.dump({"values": _vals(v, beta), "beta": str(beta),
                   "discriminant": str(discriminant(v)), "name": name}, out, indent=2)
        out.write("\n")
    else:
        out.write(f"{format_values(v, beta)} @ beta={beta}\n")
        out.write(f"discriminant {discriminant(v)}\n")
        if name:
            out.write(f"name {name}\n")
    return 0


def cmd_slope(args, cfg, out):
    v = parse_character(args.char, cfg.presets)
    mu = slope(v, StabilityParams(args.alpha2, args.beta))
    text = "inf" if mu == math.inf else str(mu)
    if args.approx and mu != math.inf:
        text += f"  (~ {_approx(mu)}, display only)"
    out.write(text + "\n")
    return 0


def _wall_rows(target, res, beta):
    rows = []
    for w in res.walls:
        decs = []
        for d in w.decompositions:
            ann = [f"{role}: {n}" for role, n in (("sub", describe(d.sub)), ("quotient", describe(d.quotient))) if n]
            decs.append({"sub": _vals(d.sub, beta), "quotient": _vals(d.quotient, beta), "annotations": ann})
        rows.append((w, decs))
    return rows


def cmd_walls(args, cfg, out):
    target = parse_character(args.target, cfg.presets)
    amin = args.alpha2_min if args.alpha2_min is not None else cfg.alpha_sq_min
    res = search_walls(target, args.beta, amin, default_lattice(),
                       box_limit=cfg.search_box_limit, workers=args.workers)
    fmt = args.format or cfg.output_format
    beta = args.beta
    rows = _wall_rows(target, res, beta)
    if fmt == "json":
        doc = {"schema": SCHEMA_WALLS, "target": _vals(target, beta), "beta": str(beta),
               "alpha_sq_min": str(amin), "box_size": res.box_size, "walls": [],
               "proportional": [{"sub": _vals(d.sub, beta), "quotient": _vals(d.quotient, beta)}
                                for d in res.proportional]}
        for w, decs in rows:
            entry = {"alpha_sq": str(w.alpha_sq), "decompositions": decs}
            if args.approx:
                entry["approx"] = _alpha_approx(w.alpha_sq)
            doc["walls"].append(entry)
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(["alpha_sq", "sub_rank", "sub_c1", "sub_c2", "quot_rank", "quot_c1", "quot_c2", "annotations"])
        for w, decs in rows:
            for d in decs:
                wr.writerow([str(w.alpha_sq), *d["sub"], *d["quotient"], "; ".join(d["annotations"])])
    else:
        out.write(f"target {format_values(target, beta)} at beta={beta}, alpha^2 >= {amin}\n")
        for w, decs in rows:
            line = f"wall alpha^2 = {w.alpha_sq}"
            if args.approx:
                line += f"   [{_alpha_approx(w.alpha_sq)}]"
            out.write(line + "\n")
            for d in decs:
                s = "(" + ", ".join(d["sub"]) + ")"
                q = "(" + ", ".join(d["quotient"]) + ")"
                ann = f"   {'; '.join(d['annotations'])}" if d["annotations"] else ""
                out.write(f"  {s} + {q}{ann}\n")
        for d in res.proportional:
            out.write(f"proportional {format_values(d.sub, beta)} + {format_values(d.quotient, beta)}\n")
    return 0


def cmd_wall_between(args, cfg, out):
    v = parse_character(args.char, cfg.presets)
    w = parse_character(args.other, cfg.presets)
    a2 = wall_between(v, w, args.beta)
    if a2 is None:
        out.write("none\n")
    elif a2 == ALWAYS:
        out.write("always\n")
    else:
        out.write(f"{a2}" + (f"   [{_alpha_approx(a2)}]" if args.approx else "") + "\n")
    return 0


def cmd_lattice_check(args, cfg, out):
    v = parse_character(args.char, cfg.presets)
    out.write(("true" if lattice_member(v, default_lattice()) else "false") + "\n")
    return 0


def cmd_mukai(args, cfg, out):
    v = mukai.MukaiVector.parse(args.vector)
    picks = [k for k in ("dim", "char", "delta") if getattr(args, k)] or ["dim", "char", "delta"]
    for k in picks:
        if k == "dim":
            val = str(mukai.moduli_dim(v))
        elif k == "char":
            val = format_values(mukai.to_character(v), -1)
        else:
            val = str(mukai.delta_on_lattice(v))
        out.write(val + "\n" if len(picks) == 1 else f"{k} {val}\n")
    return 0


def cmd_chi(args, cfg, out):
    v = parse_character(args.char, cfg.presets)
    if v.c3 is None:
        raise UsageError("chi needs a full character rk,c1,c2,c3")
    out.write(f"{euler.chi_p3(v.at(0))}\n")
    return 0


def cmd_scan(args, cfg, out):
    target = parse_character(args.target, cfg.presets)
    amin = args.alpha2_min if args.alpha2_min is not None else cfg.alpha_sq_min
    res = search_walls(target, args.beta, amin, default_lattice(), box_limit=cfg.search_box_limit)
    Path(args.out).write_text(svg.render(target, res.walls, args.beta))
    out.write(f"wrote {args.out} ({len(res.walls)} walls)\n")
    return 0


def cmd_scenario(args, cfg, out):
    if args.action == "list":
        for p in vanishing.bundled_scenarios():
            out.write(f"{p}\n")
        return 0
    if not args.file:
        raise UsageError("scenario run needs a file")
    sc = vanishing.Scenario.load(args.file)
    table = vanishing.run_scenario(sc)
    out.write(vanishing.report(table) + "\n")
    problems = vanishing.check_expectations(table)
    for p in problems:
        out.write(f"UNMET: {p}\n")
    if args.query:
        src, tgt, j = args.query.split(",")
        state, tr = vanishing.query(table, src, tgt, int(j))
        out.write(f"query Hom({src}, {tgt}[{j}]) = {state.value}\n")
        for line in tr:
            out.write(f"  {line}\n")
    return 0 if not problems else 1


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kuzwalls", description="walls of tilt stability on (P^3, B_0)")
    p.add_argument("--config", help="YAML config file")
    sub = p.add_subparsers(dest="verb", required=True)

    def fmt_flags(sp):
        g = sp.add_mutually_exclusive_group()
        for f in FORMATS:
            g.add_argument(f"--{f}", dest="format", action="store_const", const=f)
        sp.set_defaults(format=None)

    c = sub.add_parser("character", help="values, twists and discriminant of a character")
    c.add_argument("--char", required=True)
    c.add_argument("--beta", type=_frac, help="frame to print in")
    c.add_argument("--twist", type=_frac)
    c.add_argument("--half-twist", type=int, default=0, metavar="N")
    c.add_argument("--shift", type=int, default=0)
    c.add_argument("--modify", action="store_true", help="apply the (1 - 11/32 l) modification")
    fmt_flags(c)
    c.set_defaults(func=cmd_character)

    s = sub.add_parser("slope", help="mu_{alpha,beta}")
    s.add_argument("--char", required=True)
    s.add_argument("--alpha2", type=_frac, required=True)
    s.add_argument("--beta", type=_frac, required=True)
    s.add_argument("--approx", action="store_true")
    s.set_defaults(func=cmd_slope)

    w = sub.add_parser("walls", help="numerical walls for a target")
    w.add_argument("--target", required=True)
    w.add_argument("--beta", type=_frac, default=Fraction(-1))
    w.add_argument("--alpha2-min", type=_frac)
    w.add_argument("--workers", type=int)
    w.add_argument("--approx", action="store_true")
    fmt_flags(w)
    w.set_defaults(func=cmd_walls)

    wb = sub.add_parser("wall-between", help="alpha^2 where two characters have equal slope")
    wb.add_argument("--char", required=True)
    wb.add_argument("--other", required=True)
    wb.add_argument("--beta", type=_frac, default=Fraction(-1))
    wb.add_argument("--approx", action="store_true")
    wb.set_defaults(func=cmd_wall_between)

    lc = sub.add_parser("lattice-check", help="membership in the default lattice")
    lc.add_argument("--char", required=True)
    lc.set_defaults(func=cmd_lattice_check)

    m = sub.add_parser("mukai", help="Mukai vector a*lambda1 + b*lambda2")
    m.add_argument("--vector", required=True, help="a,b")
    m.add_argument("--dim", action="store_true")
    m.add_argument("--char", action="store_true")
    m.add_argument("--delta", action="store_true")
    m.set_defaults(func=cmd_mukai)

    ch = sub.add_parser("chi", help="chi(O, F) on P^3 from a full character")
    ch.add_argument("--char", required=True)
    ch.set_defaults(func=cmd_chi)

    sc = sub.add_parser("scan", help="write the (ch1/rk, ch2/rk) cartoon as SVG")
    sc.add_argument("--target", required=True)
    sc.add_argument("--out", required=True)
    sc.add_argument("--beta", type=_frac, default=Fraction(-1))
    sc.add_argument("--alpha2-min", type=_frac)
    sc.set_defaults(func=cmd_scan)

    sn = sub.add_parser("scenario", help="run a vanishing scenario")
    sn.add_argument("action", choices=["run", "list"])
    sn.add_argument("file", nargs="?")
    sn.add_argument("--query", help="src,tgt,shift")
    sn.set_defaults(func=cmd_scenario)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = Config.load(args.config) if args.config else Config()
        return args.func(args, cfg, out)
    except UsageError as exc:
        print(f"kuzwalls: {exc}", file=sys.stderr)
        return 2
    except (ValueError, NonIntegralCoordinates, BoundOverflow, KeyError,
            vanishing.ScenarioError, OSError) as exc:
        print(f"kuzwalls: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def run(argv) -> tuple:
    """(exit status, stdout text); used by tests."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()
