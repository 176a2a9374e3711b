"""Command-line front end: a thin client over the service layer.

By default commands run in-process; with --server-url (or TAMESYM_SERVER)
the same payloads are POSTed to a running service instance.

Exit codes: 0 success / Distinguished; 2 invalid input or constraint
violation; 3 NotDistinguished on a recorded open case;
4 NotDistinguished where unexpected; 1 selftest failure."""

from __future__ import annotations

import json
import sys

import click

from .errors import TamesymError
from . import service


def _emit(data, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(data, indent=2, sort_keys=True))
    elif fmt == "md":
        click.echo(data.get("markdown", json.dumps(data, indent=2, sort_keys=True)), nl=False)
    elif fmt == "csv":
        click.echo(data.get("csv", ""), nl=False)
    else:
        raise click.UsageError(f"unknown format {fmt!r}")


def _call(ctx, path: str, payload: dict, local_fn, *args):
    server = ctx.obj.get("server_url")
    if not server:
        return local_fn(*args)
    import httpx

    r = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
    if r.status_code == 422:
        raise TamesymError(r.json().get("detail", "validation error"))
    r.raise_for_status()
    return r.json()


def _entry_spec(family, params, char, field_order, modulus, presentation_file, strict=True):
    spec = {
        "family": family,
        "params": params or "",
        "char": char,
        "field_order": field_order,
        "modulus": modulus,
        "strict": strict,
    }
    if presentation_file:
        with open(presentation_file, "r", encoding="utf-8") as f:
            spec["presentation_text"] = f.read()
    return spec


@click.group()
@click.option("--server-url", envvar="TAMESYM_SERVER", default=None,
              help="Route commands to a running service instance.")
@click.pass_context
def main(ctx, server_url):
    """Exact stable-Morita invariants of tame symmetric algebras."""
    ctx.ensure_object(dict)
    ctx.obj["server_url"] = server_url


@main.command()
@click.option("--family", default=None, help="Catalog family, e.g. D1A1, SD2B1.")
@click.option("--params", default="", help="Parameters, e.g. k=2,s=3,c=1.")
@click.option("--char", type=int, default=0, help="Field characteristic (0 or prime).")
@click.option("--field-order", type=int, default=None, help="Order p^m of the field.")
@click.option("--modulus", default=None, help="Modulus polynomial in g.")
@click.option("--presentation-file", type=click.Path(exists=True), default=None)
@click.option("--no-strict", is_flag=True, help="Relax catalog normalization constraints.")
@click.option("--format", "fmt", default="json", type=click.Choice(["json"]))
@click.pass_context
def invariants(ctx, family, params, char, field_order, modulus, presentation_file,
               no_strict, fmt):
    """Full invariant profile of one algebra."""
    spec = _entry_spec(family, params, char, field_order, modulus, presentation_file,
                       strict=not no_strict)
    try:
        data = _call(ctx, "/invariants", spec, service.invariants_report, spec)
    except TamesymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit(data, fmt)


@main.command()
@click.option("--family-a", default=None)
@click.option("--params-a", default="")
@click.option("--presentation-file-a", type=click.Path(exists=True), default=None)
@click.option("--family-b", default=None)
@click.option("--params-b", default="")
@click.option("--presentation-file-b", type=click.Path(exists=True), default=None)
@click.option("--char", type=int, default=0)
@click.option("--field-order", type=int, default=None)
@click.option("--modulus", default=None)
@click.option("--no-strict", is_flag=True)
@click.option("--format", "fmt", default="json", type=click.Choice(["json"]))
@click.pass_context
def compare(ctx, family_a, params_a, presentation_file_a, family_b, params_b,
            presentation_file_b, char, field_order, modulus, no_strict, fmt):
    """Compare two entries; exit 0 Distinguished, 3 open, 4 unexpected."""
    a = _entry_spec(family_a, params_a, char, field_order, modulus,
                    presentation_file_a, strict=not no_strict)
    b = _entry_spec(family_b, params_b, char, field_order, modulus,
                    presentation_file_b, strict=not no_strict)
    try:
        data = _call(ctx, "/compare", {"a": a, "b": b}, service.compare_report, a, b)
    except TamesymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit(data, fmt)
    if data["outcome"] == "not_distinguished":
        sys.exit(3 if data["known_open"] else 4)


@main.command()
@click.option("--section", required=True,
              type=click.Choice(list(service.TABLE_SECTIONS)))
@click.option("--char", type=int, default=0)
@click.option("--defect", "defects", default=None, help="Defect range, e.g. 3..5.")
@click.option("--format", "fmt", default="md", type=click.Choice(["json", "md", "csv"]))
@click.pass_context
def table(ctx, section, char, defects, fmt):
    """Named invariant-table sections, recomputed from scratch."""
    payload = {"section": section, "char": char, "defects": defects}
    try:
        data = _call(ctx, "/table", payload, service.table_report, section, char, defects)
    except TamesymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit(data, fmt)


@main.command()
@click.option("--rep-type", required=True,
              type=click.Choice(["dihedral", "semidihedral", "quaternion"]))
@click.option("--defect", "defects", default=None, help="Defect range, e.g. 3..5.")
@click.option("--format", "fmt", default="md", type=click.Choice(["json", "md", "csv"]))
@click.pass_context
def blocks(ctx, rep_type, defects, fmt):
    """Tame-block representatives with dim Z^st and pairwise verdicts."""
    payload = {"rep_type": rep_type, "defects": defects}
    try:
        data = _call(ctx, "/blocks", payload, service.blocks_report, rep_type, defects)
    except TamesymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit(data, fmt)


@main.command()
@click.option("--chars", default="0,2,3,5", help="Comma-separated characteristics.")
@click.option("--max-param", type=int, default=4)
@click.option("--format", "fmt", default="json", type=click.Choice(["json"]))
@click.pass_context
def section7(ctx, chars, max_param, fmt):
    """Cross-simple-count sweep; nonzero exit if any pair is undistinguished."""
    char_list = [int(c) for c in chars.split(",") if c.strip() != ""]
    payload = {"chars": char_list, "max_param": max_param}
    try:
        data = _call(ctx, "/section7", payload, service.section7_report,
                     tuple(char_list), max_param)
    except TamesymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit(data, fmt)
    if not data["ok"]:
        sys.exit(1)


@main.command("parse-check")
@click.option("--presentation-file", type=click.Path(exists=True), required=True)
@click.option("--format", "fmt", default="json", type=click.Choice(["json"]))
@click.pass_context
def parse_check(ctx, presentation_file, fmt):
    """Validate a presentation DSL file; errors carry line and column."""
    with open(presentation_file, "r", encoding="utf-8") as f:
        text = f.read()
    data = _call(ctx, "/parse-check", {"text": text}, service.parse_check_report, text)
    _emit(data, fmt)
    if not data["ok"]:
        sys.exit(2)


@main.command()
@click.option("--quick", is_flag=True, help="Reduced grids (a few seconds).")
@click.option("--format", "fmt", default="json", type=click.Choice(["json"]))
@click.pass_context
def selftest(ctx, quick, fmt):
    """Run the acceptance criteria; nonzero exit on any failure."""
    data = _call(ctx, "/selftest", {"quick": quick}, service.selftest_report, quick)
    for c in data["criteria"]:
        status = "PASS" if c["passed"] else "FAIL"
        click.echo(f"{status}  {c['criterion']}  "
                   f"({c['checks']} checks, {c['seconds']}s)", err=True)
        for f in c["failures"]:
            click.echo(f"      ! {f}", err=True)
    if fmt == "json":
        _emit(data, fmt)
    if not data["ok"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .api import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
