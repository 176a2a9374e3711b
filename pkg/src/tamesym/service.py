"""Service layer: plain functions taking/returning JSON-able dicts.

Both the FastAPI app and the CLI call these; the CLI is a thin client that
can also route the same payloads to a remote instance over HTTP."""

from __future__ import annotations

import csv
import io
import re

from .catalog import (
    CatalogEntry,
    FAMILY_BY_NAME,
    list_families,
    make_entry,
)
from .classify import (
    block_table,
    compare,
    invariants_for,
    morita_fingerprint,
    section7_suite,
)
from .errors import DslSyntaxError, TamesymError
from .fields import Field
from .presentation import Presentation, parse_presentation

SCHEMA_VERSION = 1

TABLE_SECTIONS = (
    "dihedral-1",
    "blocks-dihedral",
    "blocks-semidihedral",
    "blocks-quaternion",
)


def _field_from(char: int, field_order=None, modulus=None) -> Field:
    if char == 0:
        return Field.rationals()
    degree = 1
    if field_order:
        degree = 0
        q = int(field_order)
        while q % char == 0 and q > 1:
            q //= char
            degree += 1
        if q != 1 or degree < 1:
            raise TamesymError(f"order {field_order} is not a power of {char}")
    mod = None
    if modulus:
        from .presentation import _parse_modulus

        mod = _parse_modulus(modulus, char, 1)
    return Field.finite(char, degree, mod)


def parse_params(text) -> dict:
    """'k=2,s=3,c=1' -> {'k': 2, 's': 3, 'c': 1}; non-integers stay strings."""
    if isinstance(text, dict):
        return dict(text)
    out: dict = {}
    text = (text or "").strip()
    if not text:
        return out
    for part in text.split(","):
        if "=" not in part:
            raise TamesymError(f"bad parameter {part!r}; expected name=value")
        name, value = part.split("=", 1)
        name, value = name.strip(), value.strip()
        out[name] = int(value) if re.fullmatch(r"-?\d+", value) else value
    return out


def resolve_entry(spec: dict) -> CatalogEntry:
    """EntrySpec dict -> CatalogEntry.  Either a catalog family + params or a
    raw presentation text (family 'DSL', metadata unknown)."""
    char = int(spec.get("char", 0))
    field = _field_from(char, spec.get("field_order"), spec.get("modulus"))
    text = spec.get("presentation_text")
    if text:
        pres = parse_presentation(text)
        return _custom_entry(pres, spec.get("name") or "DSL")
    family = spec.get("family")
    if not family:
        raise TamesymError("entry spec needs a family or a presentation")
    params = parse_params(spec.get("params", ""))
    return make_entry(family, params, field, strict=bool(spec.get("strict", True)))


def _custom_entry(pres: Presentation, name: str) -> CatalogEntry:
    return CatalogEntry(
        family=name,
        params=(("source", "dsl"),),
        field=pres.field,
        presentation=pres,
        rep_type="unknown",
        n_simples=pres.quiver.vertex_count,
        special_biserial=False,
        expected=(),
    )


def _fp_dict(fp) -> dict:
    return {
        "char": fp.char,
        "degree": fp.degree,
        "dim": fp.dim,
        "loewy_dims": list(fp.loewy_dims),
        "socle_series_dims": list(fp.socle_series_dims),
        "min_generators": fp.min_generators,
        "frobenius_kernel_dims": list(fp.frobenius_kernel_dims),
        "frobenius_image_dims": list(fp.frobenius_image_dims),
    }


def invariants_report(spec: dict) -> dict:
    entry = resolve_entry(spec)
    mf = morita_fingerprint(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "entry": entry.label,
        "family": mf.family,
        "params": {k: v for k, v in mf.params},
        "char": mf.char,
        "field_order": mf.field_order,
        "rep_type": mf.rep_type,
        "n_simples": mf.n_simples,
        "special_biserial": mf.special_biserial,
        "dim_A": mf.dim_A,
        "dim_Z": mf.dim_Z,
        "dim_Zpr": mf.dim_Zpr,
        "dim_Zst": mf.dim_Zst,
        "dim_R": mf.dim_R,
        "cartan": [list(r) for r in mf.cartan],
        "cartan_divisors": list(mf.cartan_divisors),
        "cartan_det_abs": mf.cartan_det_abs,
        "stable_grothendieck": mf.stable_grothendieck,
        "fp_Z_mod_R": _fp_dict(mf.fp_Z_mod_R),
        "fp_Zst": _fp_dict(mf.fp_Zst),
        "loewy_Zst": mf.loewy_Zst,
        "kuelshammer_fps": [
            {"n": n, "fingerprint": _fp_dict(fp)} for n, fp in mf.kuelshammer_fps
        ],
    }


def compare_report(spec_a: dict, spec_b: dict) -> dict:
    a = resolve_entry(spec_a)
    b = resolve_entry(spec_b)
    v = compare(a, b)
    return {
        "schema_version": SCHEMA_VERSION,
        "a": a.label,
        "b": b.label,
        "outcome": v.outcome,
        "invariant": v.invariant,
        "value_a": v.value_a,
        "value_b": v.value_b,
        "known_open": v.known_open,
        "note": v.note,
    }


def families_report() -> dict:
    return {"schema_version": SCHEMA_VERSION, "families": list_families()}


# ---------------------------------------------------------------------------
# tables

_T51_COLUMNS = ("algebra", "dim_Z", "dim_Zpr", "dim_Zst", "cartan", "G0st")


def _dihedral1_rows(char: int):
    field = Field.rationals() if char == 0 else Field.finite(char)
    specs = [("A1", {"m": m, "n": n}) for (m, n) in ((3, 2), (4, 2), (3, 3))]
    specs.append(("C1", {}))
    specs += [("D1A1", {"k": k}) for k in (2, 3)]
    if char == 2:
        specs.append(("B1", {}))
        specs += [("D1A2", {"k": k, "d": d}) for k in (2, 3) for d in (0, 1)]
    rows = []
    for family, params in specs:
        entry = make_entry(family, params, field)
        inv = invariants_for(entry)
        z, _ = inv.centre_pair
        rows.append(
            {
                "algebra": entry.label,
                "dim_Z": z.dim,
                "dim_Zpr": inv.higman.dim,
                "dim_Zst": inv.dim_zst,
                "cartan": "[" + "; ".join(" ".join(str(x) for x in r) for r in inv.cartan.entries) + "]",
                "G0st": str(inv.grothendieck),
            }
        )
    return rows


def _blocks_rows(rep_type: str, defects):
    tb = block_table(rep_type, defects)
    rows = []
    for r in tb["rows"]:
        rows.append(
            {
                "defect": r["defect"],
                "entry": r["entry"],
                "n_simples": r["n_simples"],
                "dim_Zst": r["dim_Zst"],
                "det": r["cartan_det_abs"],
                "G0st": r["stable_grothendieck"],
            }
        )
    return rows, tb["verdicts"]


def render_markdown(columns, rows) -> str:
    lines = ["| " + " | ".join(columns) + " |",
             "| " + " | ".join("---" for _ in columns) + " |"]
    for r in rows:
        lines.append("| " + " | ".join(str(r[c]) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def render_csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([r[c] for c in columns])
    return buf.getvalue()


def parse_defects(text, default=(3, 4, 5)):
    """'4..5' or '4' -> list of defects."""
    if not text:
        return list(default)
    text = str(text)
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def table_report(section: str, char: int = 0, defects=None) -> dict:
    if section not in TABLE_SECTIONS:
        raise TamesymError(
            f"unknown section {section!r}; sections: {', '.join(TABLE_SECTIONS)}"
        )
    if section == "dihedral-1":
        rows = _dihedral1_rows(char)
        columns = list(_T51_COLUMNS)
        verdicts = []
    else:
        rep = section.split("-", 1)[1]
        if char != 2:
            raise TamesymError("block tables are computed in characteristic 2")
        rows, verdicts = _blocks_rows(rep, parse_defects(defects))
        columns = ["defect", "entry", "n_simples", "dim_Zst", "det", "G0st"]
    return {
        "schema_version": SCHEMA_VERSION,
        "section": section,
        "char": char,
        "columns": columns,
        "rows": rows,
        "verdicts": verdicts,
        "markdown": render_markdown(columns, rows),
        "csv": render_csv(columns, rows),
    }


def blocks_report(rep_type: str, defects=None) -> dict:
    tb = block_table(rep_type, parse_defects(defects))
    columns = ["defect", "entry", "n_simples", "dim_Zst", "cartan_det_abs",
               "stable_grothendieck"]
    return {
        "schema_version": SCHEMA_VERSION,
        "rep_type": rep_type,
        "columns": columns,
        "rows": tb["rows"],
        "verdicts": tb["verdicts"],
        "markdown": render_markdown(columns, tb["rows"]),
        "csv": render_csv(columns, tb["rows"]),
    }


def section7_report(chars=(0, 2, 3, 5), max_param: int = 4) -> dict:
    rep = section7_suite(tuple(chars), max_param)
    rep = dict(rep)
    rep["schema_version"] = SCHEMA_VERSION
    rep["ok"] = not rep["failures"]
    return rep


def parse_check_report(text: str) -> dict:
    try:
        pres = parse_presentation(text)
    except DslSyntaxError as exc:
        return {
            "schema_version": SCHEMA_VERSION,
            "ok": False,
            "errors": [{"line": exc.line, "col": exc.col, "message": str(exc)}],
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "ok": True,
        "errors": [],
        "summary": {
            "char": pres.field.char,
            "field_order": pres.field.order,
            "vertices": pres.quiver.vertex_count,
            "arrows": [a.name for a in pres.quiver.arrows],
            "relations": len(pres.relations),
            "commutative": pres.commutative,
        },
    }


def selftest_report(quick: bool = False) -> dict:
    from .acceptance import run_acceptance

    results = run_acceptance(quick=quick)
    return {
        "schema_version": SCHEMA_VERSION,
        "ok": all(r["passed"] for r in results),
        "criteria": results,
    }
