"""Command-line interface: one subcommand per invariant plus the corpus driver.

All commands read JSON files, emit JSON to standard output (or aligned text
tables with ``--pretty``), and exit with 0 on success, 1 when a verification
or structural check fails (witnesses included in the output), and 2 on
malformed input.
"""

from __future__ import annotations

import json
import sys

import click

from .biquandle import Biquandle, enumerate_colorings, verify_biquandle
from .bracket import bracket_from_json, bracket_invariant, bracket_value, verify_bracket
from .cocycle import (
    canonical_cocycle,
    cocycle_from_json,
    verify_cocycle,
    z_invariant_multiset,
)
from .corpus import check_all, default_manifest, load_manifest, report_to_json
from .diagram import DiagramError, parse_diagram
from .homology import (
    bh_multiset,
    check_euler_identity,
    check_theorem,
    khovanov_classical,
)
from .rings import RingError

INPUT_ERROR = 2
CHECK_FAILED = 1


def _load_json(path: str) -> dict:
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise click.exceptions.Exit(_input_error(f"cannot read {path}: {exc}"))


def _input_error(message: str) -> int:
    click.echo(f"error: {message}", err=True)
    return INPUT_ERROR


def _emit(data, pretty_lines=None, pretty: bool = False):
    if pretty and pretty_lines is not None:
        click.echo("\n".join(pretty_lines))
    else:
        click.echo(json.dumps(data, indent=2, default=str))


def _table(headers, rows) -> list:
    cells = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for idx, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return lines


def _homology_rows(table):
    return [
        (e["i"], e["degree"], e["rank"], ",".join(map(str, e["torsion"])) or "-")
        for e in table.to_json()["entries"]
    ]


def _diagram(path: str):
    try:
        return parse_diagram(_load_json(path))
    except (DiagramError, ValueError, KeyError, TypeError) as exc:
        raise click.exceptions.Exit(_input_error(f"bad diagram {path}: {exc}"))


def _bracket(path: str):
    data = _load_json(path)
    try:
        return bracket_from_json(data)
    except (RingError, ValueError, KeyError, TypeError) as exc:
        raise click.exceptions.Exit(_input_error(f"bad bracket {path}: {exc}"))


def _biquandle(path: str) -> Biquandle:
    data = _load_json(path)
    try:
        return Biquandle.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise click.exceptions.Exit(_input_error(f"bad biquandle {path}: {exc}"))


pretty_option = click.option("--pretty", is_flag=True, help="Render aligned tables instead of JSON.")
x0_option = click.option("--x0", type=int, default=1, show_default=True, help="Distinguished biquandle element.")


@click.group()
def main():
    """Biquandle brackets, canonical 2-cocycles, and bracket cohomology."""


@main.command("verify-biquandle")
@click.argument("file", type=click.Path())
@pretty_option
def verify_biquandle_cmd(file, pretty):
    """Check the biquandle axioms for the tables in FILE."""
    data = _load_json(file)
    try:
        report = verify_biquandle(data["under"], data["over"])
    except (ValueError, KeyError, TypeError) as exc:
        raise click.exceptions.Exit(_input_error(f"bad biquandle {file}: {exc}"))
    out = report.to_json()
    rows = [(f["axiom"], f["witness"], f["detail"]) for f in out["failures"]]
    _emit(out, ["ok: %s" % out["ok"]] + (_table(("axiom", "witness", "detail"), rows) if rows else []), pretty)
    if not report.ok:
        raise click.exceptions.Exit(CHECK_FAILED)


@main.command("verify-bracket")
@click.argument("file", type=click.Path())
@click.option(
    "--literal-axioms",
    is_flag=True,
    help="Check the published form of axiom (iii), including its asymmetric fourth equation.",
)
@pretty_option
def verify_bracket_cmd(file, literal_axioms, pretty):
    """Check the bracket axioms for the (ring, biquandle, A, B) data in FILE."""
    data = _load_json(file)
    try:
        beta = bracket_from_json(data, check=False)
    except (RingError, ValueError, KeyError, TypeError) as exc:
        raise click.exceptions.Exit(_input_error(f"bad bracket {file}: {exc}"))
    report = verify_bracket(beta.biquandle, beta.ring, beta.A, beta.B, literal=literal_axioms)
    out = report.to_json()
    if report.ok:
        out["delta"] = beta.ring.element_to_json(beta.delta)
        out["w"] = beta.ring.element_to_json(beta.w)
    rows = [(f["axiom"], f["witness"], f["detail"]) for f in out["failures"]]
    lines = ["ok: %s" % out["ok"]]
    if report.ok:
        lines += [f"delta: {beta.ring.element_str(beta.delta)}", f"w: {beta.ring.element_str(beta.w)}"]
    if rows:
        lines += _table(("axiom", "witness", "detail"), rows)
    _emit(out, lines, pretty)
    if not report.ok:
        raise click.exceptions.Exit(CHECK_FAILED)


@main.command("verify-cocycle")
@click.argument("file", type=click.Path())
@pretty_option
def verify_cocycle_cmd(file, pretty):
    """Check the 2-cocycle conditions for the presentation matrix in FILE."""
    data = _load_json(file)
    try:
        cocycle = cocycle_from_json(data, check=False)
    except (RingError, ValueError, KeyError, TypeError) as exc:
        raise click.exceptions.Exit(_input_error(f"bad cocycle {file}: {exc}"))
    report = verify_cocycle(cocycle)
    out = report.to_json()
    rows = [(f["axiom"], f["witness"], f["detail"]) for f in out["failures"]]
    _emit(out, ["ok: %s" % out["ok"]] + (_table(("axiom", "witness", "detail"), rows) if rows else []), pretty)
    if not report.ok:
        raise click.exceptions.Exit(CHECK_FAILED)


@main.command("colorings")
@click.argument("biquandle_file", type=click.Path())
@click.argument("diagram_file", type=click.Path())
@pretty_option
def colorings_cmd(biquandle_file, diagram_file, pretty):
    """Enumerate X-colorings of a diagram and report the counting invariant."""
    X = _biquandle(biquandle_file)
    D = _diagram(diagram_file)
    colorings = enumerate_colorings(X, D)
    out = {"count": len(colorings), "colorings": [f.to_json() for f in colorings]}
    rows = [(i, json.dumps(f.to_json())) for i, f in enumerate(colorings)]
    _emit(out, [f"count: {len(colorings)}"] + _table(("#", "arc colors"), rows), pretty)


@main.command("bracket-value")
@click.argument("bracket_file", type=click.Path())
@click.argument("diagram_file", type=click.Path())
@pretty_option
def bracket_value_cmd(bracket_file, diagram_file, pretty):
    """Evaluate the bracket state sum for every coloring of a diagram."""
    beta = _bracket(bracket_file)
    D = _diagram(diagram_file)
    ring = beta.ring
    values = [
        {"coloring": f.to_json(), "value": ring.element_to_json(bracket_value(beta, f))}
        for f in enumerate_colorings(beta.biquandle, D)
    ]
    out = {
        "delta": ring.element_to_json(beta.delta),
        "w": ring.element_to_json(beta.w),
        "values": values,
    }
    rows = [(json.dumps(v["coloring"]), v["value"]) for v in values]
    lines = [f"delta: {ring.element_str(beta.delta)}", f"w: {ring.element_str(beta.w)}"]
    _emit(out, lines + _table(("coloring", "value"), rows), pretty)


@main.command("bracket-invariant")
@click.argument("bracket_file", type=click.Path())
@click.argument("diagram_file", type=click.Path())
@pretty_option
def bracket_invariant_cmd(bracket_file, diagram_file, pretty):
    """The multiset of bracket values over all colorings."""
    beta = _bracket(bracket_file)
    D = _diagram(diagram_file)
    ring = beta.ring
    multiset = bracket_invariant(beta, D)
    out = {
        "delta": ring.element_to_json(beta.delta),
        "w": ring.element_to_json(beta.w),
        "multiset": [
            {"value": ring.element_to_json(v), "multiplicity": m} for v, m in multiset
        ],
    }
    rows = [(ring.element_str(v), m) for v, m in multiset]
    lines = [f"delta: {ring.element_str(beta.delta)}", f"w: {ring.element_str(beta.w)}"]
    _emit(out, lines + _table(("value", "multiplicity"), rows), pretty)


@main.command("canonical-cocycle")
@click.argument("bracket_file", type=click.Path())
@x0_option
@pretty_option
def canonical_cocycle_cmd(bracket_file, x0, pretty):
    """The canonical 2-cocycle phi_beta of a bracket, with its group G."""
    beta = _bracket(bracket_file)
    if x0 not in beta.biquandle.elements():
        raise click.exceptions.Exit(_input_error(f"x0 = {x0} is not a biquandle element"))
    G, phi = canonical_cocycle(beta, x0)
    out = {"G": G.to_json(), "order_G": len(G.elements), "cocycle": phi.to_json()}
    rows = [
        (x + 1, y + 1, phi.target.element_str(phi.phi[x][y]))
        for x in range(beta.biquandle.n)
        for y in range(beta.biquandle.n)
    ]
    lines = [
        "G: {%s}" % ", ".join(beta.ring.element_str(g) for g in G.sorted_elements()),
        f"|G|: {len(G.elements)}",
    ]
    _emit(out, lines + _table(("x", "y", "phi(x,y)"), rows), pretty)


@main.command("z-invariant")
@click.argument("bracket_file", type=click.Path())
@click.argument("diagram_file", type=click.Path())
@x0_option
@pretty_option
def z_invariant_cmd(bracket_file, diagram_file, x0, pretty):
    """The multiset of Z_beta cosets over all colorings of a diagram."""
    beta = _bracket(bracket_file)
    D = _diagram(diagram_file)
    G, _ = canonical_cocycle(beta, x0)
    multiset = z_invariant_multiset(beta, D, x0)
    out = {
        "G": G.to_json(),
        "order_G": len(G.elements),
        "multiset": [{"coset": c.to_json(), "multiplicity": m} for c, m in multiset],
    }
    rows = [(beta.ring.element_str(c.canonical) + "*G", m) for c, m in multiset]
    _emit(out, [f"|G|: {len(G.elements)}"] + _table(("coset", "multiplicity"), rows), pretty)


@main.command("khovanov")
@click.argument("diagram_file", type=click.Path())
@pretty_option
def khovanov_cmd(diagram_file, pretty):
    """Classical integer-graded Khovanov homology of a diagram."""
    D = _diagram(diagram_file)
    table = khovanov_classical(D)
    _emit(table.to_json(), _table(("i", "j", "rank", "torsion"), _homology_rows(table)), pretty)


@main.command("bh")
@click.argument("bracket_file", type=click.Path())
@click.argument("diagram_file", type=click.Path())
@x0_option
@pretty_option
def bh_cmd(bracket_file, diagram_file, x0, pretty):
    """Bracket cohomology tables over all colorings of a diagram."""
    beta = _bracket(bracket_file)
    D = _diagram(diagram_file)
    multiset = bh_multiset(beta, D, x0)
    out = {
        "multiset": [
            {"table": table.to_json(), "multiplicity": m} for table, m in multiset
        ]
    }
    lines = []
    for idx, (table, m) in enumerate(multiset):
        lines.append(f"table {idx} (multiplicity {m}):")
        lines += ["  " + l for l in _table(("i", "degree", "rank", "torsion"), _homology_rows(table))]
    _emit(out, lines, pretty)


def _run_checks(bracket_file, diagram_file, x0, pretty, check_fn, label):
    beta = _bracket(bracket_file)
    D = _diagram(diagram_file)
    reports = [
        {"coloring": f.to_json(), **check_fn(beta, f, x0).to_json()}
        for f in enumerate_colorings(beta.biquandle, D)
    ]
    ok = all(r["ok"] for r in reports)
    out = {"ok": ok, "checked": len(reports), "reports": reports}
    rows = [(json.dumps(r["coloring"]), r["ok"]) for r in reports]
    _emit(out, [f"{label}: {'pass' if ok else 'FAIL'} ({len(reports)} colorings)"]
          + _table(("coloring", "ok"), rows), pretty)
    if not ok:
        raise click.exceptions.Exit(CHECK_FAILED)


@main.command("check-theorem")
@click.argument("bracket_file", type=click.Path())
@click.argument("diagram_file", type=click.Path())
@x0_option
@pretty_option
def check_theorem_cmd(bracket_file, diagram_file, x0, pretty):
    """Check Bh(f) = classical Khovanov folded into R^x and shifted by Z_beta(f)."""
    _run_checks(bracket_file, diagram_file, x0, pretty, check_theorem, "theorem")


@main.command("check-euler")
@click.argument("bracket_file", type=click.Path())
@click.argument("diagram_file", type=click.Path())
@x0_option
@pretty_option
def check_euler_cmd(bracket_file, diagram_file, x0, pretty):
    """Check chi(Bh(f)) evaluates to (sum over G) * bracket value."""
    _run_checks(bracket_file, diagram_file, x0, pretty, check_euler_identity, "euler identity")


@main.command("check-all")
@click.option("--manifest", "manifest_path", type=click.Path(), default=None, help="Manifest file (defaults to the bundled corpus).")
@pretty_option
def check_all_cmd(manifest_path, pretty):
    """Run every structural check over the bundled (or given) corpus."""
    try:
        if manifest_path is None:
            manifest = default_manifest()
            base = None
        else:
            manifest = load_manifest(manifest_path)
            base = str(__import__("pathlib").Path(manifest_path).parent)
        results = check_all(manifest, base)
    except (OSError, RingError, DiagramError, ValueError, KeyError, TypeError) as exc:
        raise click.exceptions.Exit(_input_error(f"corpus error: {exc}"))
    out = report_to_json(results)
    rows = [(r.name, "ok" if r.ok else "FAIL", r.detail) for r in results if not r.ok]
    lines = [f"{'pass' if out['ok'] else 'FAIL'}: {out['total'] - len(out['failed'])}/{out['total']} checks"]
    if rows:
        lines += _table(("check", "status", "detail"), rows)
    _emit(out, lines, pretty)
    if not out["ok"]:
        raise click.exceptions.Exit(CHECK_FAILED)


if __name__ == "__main__":
    main()
