"""Command-line front end.

    sphmoduli analyze FILE [--format json|text] [--assume-saturated] [--check-g-saturated]
    sphmoduli sigma-g --group SPEC [--format json|text]
    sphmoduli check-saturation FILE

``FILE`` may be ``-`` for standard input.  Exit codes: 0 success,
1 internal error, 2 invalid input, 3 monoid not saturated.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from typing import Optional, Sequence, TextIO

from . import document, rootsys
from .cones import saturation_witness
from .errors import InternalError, SaturationError, ValidationError
from .moduli import ModuliReport, analyze, indecomposables
from .rootsys import GroupSpec
from .spherical import enumerate_sigma_G
from .zlinalg import LatticeBasis

EXIT_OK, EXIT_INTERNAL, EXIT_VALIDATION, EXIT_SATURATION = 0, 1, 2, 3

log = logging.getLogger("sphmoduli")


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc


def _set(items) -> str:
    return "{" + ", ".join(items) + "}"


def _table(rows: Sequence[Sequence[str]], indent: str = "  ") -> list[str]:
    if not rows:
        return []
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return [indent + "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fvec(f: dict) -> str:
    return "(" + ", ".join(f["values"]) + ")"


def _evec(f: dict) -> str:
    return "(" + ", ".join(f["on_generators"]) + ")"


def format_report_text(doc: dict, show_g_saturated: bool = False) -> str:
    """Aligned text rendering of a report document (same numbers as the JSON)."""
    yes = {True: "yes", False: "no", None: "undetermined"}
    out = [f"group: {doc['group']['name']}"]
    out.append("generators (E): " + "  ".join(_vec(g) for g in doc["generators"]))
    out.append("saturated: " + ("assumed" if doc["saturated"] is None else yes[doc["saturated"]]))
    if show_g_saturated:
        out.append("G-saturated: " + yes[doc["g_saturated"]])
    out.append("free: " + yes[doc["free"]])
    out.append("Pi^p: " + _set(f"a{i}" for i in doc["pi_p"]))
    out.append("lattice basis: " + "  ".join(_vec(b) for b in doc["lattice_basis"]))
    out.append(f"K1: {len(doc['K1'])}")
    rows = [["#", "values", "on E", "coroots"]]
    for i, k in enumerate(doc["K1"], 1):
        rows.append([str(i), _fvec(k), _evec(k), k.get("coroots", "-")])
    if doc["K1"]:
        out += _table(rows)
    out.append(f"Sigma(Gamma): {len(doc['sigma_gamma'])}")
    rows = [["#", "root", "weight", "row", "sigma_bar", "color pair (on E)"]]
    for i, s in enumerate(doc["sigma_gamma"]):
        cp = s["color_pair"]
        pair = "-"
        if cp is not None:
            pair = _set(_evec(cp[k]) for k in ("rho_plus", "rho_minus"))
        mark = ("/2" if s["halved"] else "") + ("*" if s["distinguished"] else "")
        rows.append([str(i), s["root"], _vec(s["weight"]), f"{s['table_row']}{mark}", s["sigma_bar_root"] or _vec(s["sigma_bar"]), pair])
    if doc["sigma_gamma"]:
        out += _table(rows)
    names = [s["root"] for s in doc["sigma_gamma"]]
    obs = doc["admissibility"]["obstructions"]
    if obs:
        out.append("inadmissible pairs:")
        rows = []
        for o in obs:
            rows.append([f"{names[o['simple']]} / {names[o['other']]}", f"<{_evec(o['rho'])}, {names[o['other']]}> = {o['value']}"])
        out += _table(rows)
    comps = doc["components"]
    out.append(f"components: {len(comps)}")
    out.append("dim: " + ", ".join(str(c["dimension"]) for c in comps))
    for i, c in enumerate(comps, 1):
        out.append(f"  {i}: " + _set(c["root_names"]))
    out.append("Dev: " + _set(f"a{a}" for a in doc["dev"]))
    for d in doc["dev_witnesses"]:
        c1, c2 = d["coefficients"]
        out.append(f"  a{d['alpha']}^v = {c1}*{_fvec(d['rho1'])} + {c2}*{_fvec(d['rho2'])}")
    out.append("Phi: " + _set(r or _vec(p) for r, p in zip(doc["phi_roots"], doc["phi"])))
    out.append(f"tangent dimension: {doc['tangent_dimension']}")
    out.append(f"max component dimension: {doc['max_component_dimension']}")
    out.append("irreducible: " + yes[doc["irreducible"]])
    out.append("affine space: " + yes[doc["is_affine_space"]])
    out.append("non-reduced point: " + yes[doc["nonreduced_point"]])
    for n in doc["notes"]:
        out.append("note: " + n)
    return "\n".join(out) + "\n"


def format_sigma_g_text(doc: dict) -> str:
    out = [f"group: {doc['group']['name']}", f"spherical roots: {len(doc['roots'])}"]
    rows = [["root", "weight", "row", "Pi^pp", "closed"]]
    for r in doc["roots"]:
        mark = "/2" if r["halved"] else ""
        rows.append([r["root"], _vec(r["weight"]), f"{r['table_row']}{mark}", _set(f"a{i}" for i in r["pi_pp"]), "yes" if r["spherically_closed"] else "no"])
    out += _table(rows)
    return "\n".join(out) + "\n"


def run_analyze(doc, fmt: str, assume_saturated: bool, check_g: bool) -> tuple[ModuliReport, str]:
    spec, gens, opts = document.parse_input(doc)
    if assume_saturated:
        opts = replace(opts, assume_saturated=True)
    report = analyze(spec, gens, opts)
    out = document.report_to_json(report)
    document.validate(out, "report")
    text = document.dumps(out) if fmt == "json" else format_report_text(out, show_g_saturated=check_g)
    return report, text


def cmd_analyze(args, stdout: TextIO) -> int:
    _, text = run_analyze(_read_json(args.file), args.format, args.assume_saturated, args.check_g_saturated)
    stdout.write(text)
    return EXIT_OK


def cmd_sigma_g(args, stdout: TextIO) -> int:
    spec = GroupSpec.parse(args.group)
    roots = enumerate_sigma_G(rootsys.build(spec))
    doc = document.sigma_g_to_json(spec, roots)
    stdout.write(document.dumps(doc) if args.format == "json" else format_sigma_g_text(doc))
    return EXIT_OK


def cmd_check_saturation(args, stdout: TextIO) -> int:
    spec, gens, _ = document.parse_input(_read_json(args.file))
    rs = rootsys.build(spec)
    for g in gens:
        if len(g) != rs.n_weights:
            raise ValidationError(f"generator {g} has {len(g)} entries; {spec} needs {rs.n_weights}")
        if not rs.is_dominant(g):
            raise ValidationError(f"generator {g} is not dominant")
    lattice = LatticeBasis.from_generators(gens, rs.n_weights)
    witness = saturation_witness(indecomposables(gens, lattice), lattice)
    if witness is None:
        stdout.write("saturated\n")
        return EXIT_OK
    stdout.write(f"not saturated: missing {_vec(witness)}\n")
    return EXIT_SATURATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sphmoduli", description="Invariants of moduli schemes of affine spherical varieties.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on standard error")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for a weight monoid")
    a.add_argument("file", help="input JSON document, or - for standard input")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.add_argument("--assume-saturated", action="store_true", help="skip the saturation check")
    a.add_argument("--check-g-saturated", action="store_true", help="also print the G-saturation verdict in text mode")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sigma-g", help="list the spherical roots of a group")
    s.add_argument("--group", required=True, help='e.g. "A3" or "B2xA1+T1"')
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=cmd_sigma_g)

    c = sub.add_parser("check-saturation", help="test whether the monoid is saturated")
    c.add_argument("file", help="input JSON document, or - for standard input")
    c.set_defaults(func=cmd_check_saturation)
    return p


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr, format="%(name)s: %(message)s")
    try:
        return args.func(args, stdout)
    except SaturationError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_SATURATION
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_VALIDATION
    except InternalError as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - anything else is a bug
        log.debug("unhandled exception", exc_info=True)
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
