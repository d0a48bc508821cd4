"""JSON input and report documents.

Weights are integer arrays, functionals are arrays of exact fraction
strings (``"3/2"``), simple roots are 1-based global Bourbaki indices and
positions in ``sigma_gamma`` are 0-based list indices.  ``dumps`` is the
canonical serialisation: sorted keys, two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Optional, Sequence

import jsonschema

from . import rootsys
from .errors import ValidationError
from .moduli import AnalyzeOptions, ModuliReport
from .rootsys import GroupSpec, RootSystem
from .spherical import GammaContext, SphericalRoot, render_coroot_expression, render_root_combination

SCHEMA_VERSION = "1"


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    text = resources.files("sphmoduli.schemas").joinpath(f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate(doc: Any, name: str) -> None:
    try:
        jsonschema.validate(doc, load_schema(name))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ValidationError(f"{name} document invalid at {where}: {exc.message}") from exc


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def frac(x) -> str:
    return str(Fraction(x))


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


# --------------------------------------------------------------------------
# input


def group_to_json(spec: GroupSpec) -> dict:
    return {
        "factors": [{"series": s, "rank": r} for s, r in spec.factors],
        "torus_rank": spec.torus_rank,
    }


def group_from_json(obj: Any) -> GroupSpec:
    if isinstance(obj, str):
        return GroupSpec.parse(obj)
    return GroupSpec(tuple((f["series"], f["rank"]) for f in obj["factors"]), obj.get("torus_rank", 0))


def parse_input(doc: Any) -> tuple[GroupSpec, list[tuple[int, ...]], AnalyzeOptions]:
    """Validate an input document and unpack it."""
    validate(doc, "input")
    spec = group_from_json(doc["group"])
    gens = [tuple(g) for g in doc["generators"]]
    opts = doc.get("options", {})
    return spec, gens, AnalyzeOptions(assume_saturated=bool(opts.get("assume_saturated", False)))


def make_input(spec: GroupSpec, gens: Sequence[Sequence[int]], assume_saturated: bool = False) -> dict:
    doc = {"group": group_to_json(spec), "generators": [list(g) for g in gens]}
    if assume_saturated:
        doc["options"] = {"assume_saturated": True}
    return doc


# --------------------------------------------------------------------------
# report


def render_weight_as_roots(rs: RootSystem, w: Sequence[int]) -> Optional[str]:
    c = rootsys.root_coords(rs, w)
    return None if c is None else render_root_combination(c)


def functional_json(ctx: GammaContext, f) -> dict:
    out = {
        "values": [frac(x) for x in f],
        "on_generators": [frac(x) for x in ctx.on_generators(f)],
    }
    expr = ctx.coroot_expression(f)
    if expr is not None:
        out["coroots"] = render_coroot_expression(expr, ctx.rs.n_simple)
    return out


def spherical_root_json(root: SphericalRoot) -> dict:
    return {
        "weight": list(root.sigma),
        "root": root.render(),
        "table_row": root.table_row,
        "halved": root.halved,
        "spherically_closed": root.spherically_closed,
        "support": sorted(i + 1 for i in root.support),
        "pi_pp": sorted(i + 1 for i in root.pi_pp),
    }


def report_to_json(report: ModuliReport) -> dict:
    ctx = report.context
    rs = ctx.rs
    sg = []
    for w, dist, sbar in zip(report.sigma_gamma, report.distinguished, report.sigma_bar_gamma):
        entry = spherical_root_json(w.root)
        entry["distinguished"] = dist
        entry["sigma_bar"] = list(sbar)
        entry["sigma_bar_root"] = render_weight_as_roots(rs, sbar)
        if w.color_pair is None:
            entry["color_pair"] = None
        else:
            entry["color_pair"] = {
                "alpha": w.color_pair.alpha + 1,
                "rho_plus": functional_json(ctx, w.color_pair.rho_plus),
                "rho_minus": functional_json(ctx, w.color_pair.rho_minus),
            }
        sg.append(entry)
    names = [w.root.render() for w in report.sigma_gamma]
    return {
        "schema_version": SCHEMA_VERSION,
        "group": group_to_json(report.group) | {"name": str(report.group)},
        "input_generators": [list(g) for g in report.input_generators],
        "generators": [list(g) for g in report.generators],
        "saturated": report.saturated,
        "g_saturated": report.g_saturated,
        "free": report.free,
        "pi_p": [i + 1 for i in report.pi_p],
        "lattice_basis": [list(b) for b in report.lattice_basis],
        "K1": [functional_json(ctx, k) for k in report.K1],
        "sigma_gamma": sg,
        "admissibility": {
            "edges": [list(e) for e in sorted(report.graph.edges)],
            "obstructions": [
                {
                    "simple": o.simple,
                    "other": o.other,
                    "rho": functional_json(ctx, o.rho),
                    "value": frac(o.value),
                }
                for o in report.graph.obstructions
            ],
        },
        "components": [
            {
                "roots": list(c.roots),
                "root_names": [names[i] for i in c.roots],
                "dimension": c.dimension,
                "root_monoid_generators": [list(g) for g in c.root_monoid_generators],
            }
            for c in report.components
        ],
        "dev": [a + 1 for a in report.dev],
        "dev_witnesses": [
            {
                "alpha": d.alpha + 1,
                "rho1": functional_json(ctx, d.rho1),
                "rho2": functional_json(ctx, d.rho2),
                "coefficients": [frac(x) for x in d.coefficients],
            }
            for d in report.dev_witnesses
        ],
        "sigma_bar_gamma": [list(s) for s in report.sigma_bar_gamma],
        "phi": [list(p) for p in report.phi],
        "phi_roots": [render_weight_as_roots(rs, p) for p in report.phi],
        "irreducible": report.irreducible,
        "is_affine_space": report.is_affine_space,
        "nonreduced_point": report.nonreduced_point,
        "tangent_dimension": report.tangent_dimension,
        "max_component_dimension": report.max_component_dimension,
        "notes": list(report.notes),
    }


def sigma_g_to_json(spec: GroupSpec, roots: Sequence[SphericalRoot]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "group": group_to_json(spec) | {"name": str(spec)},
        "roots": [spherical_root_json(r) for r in roots],
    }
