"""Thin command-line client; all computation happens behind the HTTP surface.

Without --server the service runs in-process over an ASGI transport, so the
CLI exercises exactly the request path a remote client would.  Exit codes:
0 success, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path

import click
import httpx

from .monomials import monomial_str

_OUTPUT = click.option("--output", type=click.Choice(["json", "table"]),
                       default="table", help="Report format.")
_FIELD = click.option("--field", default="q", metavar="q|f2|f3|fp:<p>",
                      help="Coefficient field.")
_THREADS = click.option("--threads", type=int, default=1,
                        help="Worker processes for the regularity sweep.")


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service; default runs in-process.")
@click.version_option()
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact workbench for edge ideals and monomial ideals."""
    ctx.obj = {"server": server}


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _call(ctx: click.Context, method: str, path: str, payload=None) -> httpx.Response:
    server = ctx.obj["server"]
    try:
        if server:
            with httpx.Client(base_url=server, timeout=None) as client:
                resp = client.request(method, path, json=payload)
        else:
            from .service.app import app

            async def go() -> httpx.Response:
                transport = httpx.ASGITransport(app=app)
                async with httpx.AsyncClient(transport=transport, timeout=None,
                                             base_url="http://idealworks") as client:
                    return await client.request(method, path, json=payload)

            resp = asyncio.run(go())
    except httpx.HTTPError as exc:
        _fail(f"service unreachable: {exc}")
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail")
        except ValueError:
            detail = resp.text
        _fail(f"{detail}")
    return resp


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        _fail(f"{path} is not valid JSON: {exc}")


def _parse_vec(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        _fail(f"exponent vector {text!r} must be comma-separated integers")


def _emit(data: dict | list, output: str, table) -> None:
    if output == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        table(data)


@main.command()
@click.option("--graph", "graph_path", type=click.Path(), default=None,
              help="Graph JSON file (edge ideal input).")
@click.option("--ideal", "ideal_path", type=click.Path(), default=None,
              help="Monomial ideal JSON file.")
@click.option("--power", type=int, default=1, help="Power s of the ideal.")
@click.option("--extra", "extras", multiple=True, metavar="E1,E2,...",
              help="Extra generator exponent vector; repeatable.")
@click.option("--no-prune", is_flag=True, help="Disable the acyclicity skip.")
@_FIELD
@_THREADS
@_OUTPUT
@click.pass_context
def reg(ctx, graph_path, ideal_path, power, extras, no_prune, field, threads,
        output) -> None:
    """Castelnuovo-Mumford regularity with an extremal certificate."""
    if (graph_path is None) == (ideal_path is None):
        _fail("provide exactly one of --graph or --ideal")
    payload = {
        "power": power,
        "extras": [_parse_vec(e) for e in extras],
        "field": field,
        "no_prune": no_prune,
        "threads": threads,
    }
    if graph_path:
        payload["graph"] = _read_json(graph_path)
    else:
        payload["ideal"] = _read_json(ideal_path)
    data = _call(ctx, "POST", "/reg", payload).json()

    def table(d: dict) -> None:
        cert = d["certificate"]
        click.echo(f"reg = {d['reg']}  (field {cert['field']}, {d['wall_time']}s)")
        click.echo(f"certificate: a = {tuple(cert['a'])}, i = {cert['i']}, "
                   f"face = {tuple(cert['face'])}, homology degree {cert['hom_dim']}")

    _emit(data, output, table)


@main.command()
@click.option("--graph", "graph_path", type=click.Path(), required=True,
              help="Graph JSON file.")
@click.option("--power", type=int, default=1, help="Power s of the edge ideal.")
@_OUTPUT
@click.pass_context
def closure(ctx, graph_path, power, output) -> None:
    """Integral closure of I(G)^s with odd-cycle witnesses and normality."""
    payload = {"graph": _read_json(graph_path), "power": power}
    data = _call(ctx, "POST", "/closure", payload).json()

    def table(d: dict) -> None:
        closed = d["closure"]
        click.echo(f"closure of I^{d['power']}: {len(closed['gens'])} generators, "
                   f"{len(d['extras'])} outside the power")
        for w in d["extras"]:
            cyc = " ".join("(" + ",".join(map(str, c)) + ")" for c in w["cycles"])
            click.echo(f"  {monomial_str(tuple(w['gen']))}  cycles {cyc or '-'} "
                       f"+ {len(w['edges'])} edges")
        if d["normal"]:
            click.echo("normal: yes")
        else:
            c1, c2 = d["odd_cycle_pair"]
            click.echo(f"normal: no  (disjoint odd cycles {tuple(c1)} and {tuple(c2)})")

    _emit(data, output, table)


@main.command()
@click.option("--graph", "graph_path", type=click.Path(), required=True,
              help="Graph JSON file.")
@click.option("--power", type=int, default=1, help="Symbolic power s.")
@_OUTPUT
@click.pass_context
def symbolic(ctx, graph_path, power, output) -> None:
    """s-th symbolic power of an edge ideal."""
    payload = {"graph": _read_json(graph_path), "power": power}
    data = _call(ctx, "POST", "/symbolic", payload).json()

    def table(d: dict) -> None:
        gens = d["ideal"]["gens"]
        click.echo(f"symbolic power {d['power']}: {len(gens)} generators")
        for g in gens:
            click.echo(f"  {monomial_str(tuple(g))}")

    _emit(data, output, table)


@main.command()
@click.option("--graph", "graph_path", type=click.Path(), required=True,
              help="Graph JSON file.")
@click.option("--power", type=int, default=1, help="Power s of the edge ideal.")
@click.option("--cap", type=int, default=64,
              help="Largest number of intermediate ideals to list.")
@click.option("--seed", type=int, default=0, help="Sampling seed above the cap.")
@click.option("--field", default=None, metavar="q|f2|f3|fp:<p>",
              help="Also compute reg of each ideal over this field.")
@_THREADS
@_OUTPUT
@click.pass_context
def intermediate(ctx, graph_path, power, cap, seed, field, threads, output) -> None:
    """Ideals between I(G)^s and its integral closure."""
    payload = {"graph": _read_json(graph_path), "power": power, "cap": cap,
               "seed": seed, "field": field, "threads": threads}
    data = _call(ctx, "POST", "/intermediate", payload).json()

    def table(d: dict) -> None:
        click.echo(f"{len(d['items'])} intermediate ideals "
                   f"({d['extras_total']} closure generators outside I^{d['power']})")
        for item in d["items"]:
            line = (f"  extras {tuple(item['extras_index'])}: "
                    f"{len(item['ideal']['gens'])} generators")
            if item["reg"] is not None:
                line += f", reg = {item['reg']}"
            click.echo(line)

    _emit(data, output, table)


@main.command("degree-complex")
@click.option("--ideal", "ideal_path", type=click.Path(), required=True,
              help="Monomial ideal JSON file.")
@click.option("--exponent", required=True, metavar="A1,A2,...",
              help="Exponent vector a.")
@_OUTPUT
@click.pass_context
def degree_complex_cmd(ctx, ideal_path, exponent, output) -> None:
    """Degree complex of an ideal at an exponent vector."""
    payload = {"ideal": _read_json(ideal_path), "exponent": _parse_vec(exponent)}
    data = _call(ctx, "POST", "/degree-complex", payload).json()

    def table(d: dict) -> None:
        cx = d["complex"]
        if cx["state"] == "void":
            click.echo("void complex (x^a lies in the ideal)")
        elif cx["state"] == "empty":
            click.echo("empty complex {()}")
        else:
            click.echo(f"{len(cx['facets'])} facets on {cx['n']} vertices:")
            for f in cx["facets"]:
                click.echo(f"  {tuple(f)}")

    _emit(data, output, table)


@main.command()
@click.option("--complex", "complex_path", type=click.Path(), required=True,
              help="Simplicial complex JSON file.")
@_FIELD
@_OUTPUT
@click.pass_context
def homology(ctx, complex_path, field, output) -> None:
    """Reduced homology dimensions of a simplicial complex."""
    payload = {"complex": _read_json(complex_path), "field": field}
    data = _call(ctx, "POST", "/homology", payload).json()

    def table(d: dict) -> None:
        dims = d["dims"]
        if not dims:
            click.echo("void complex: no reduced homology")
            return
        for deg in sorted(dims, key=int):
            click.echo(f"dim H_{deg} = {dims[deg]}")

    _emit(data, output, table)


@main.command()
@click.argument("scenario")
@click.option("--field", default=None, metavar="q|f2|f3|fp:<p>",
              help="Restrict checks to one field.")
@click.option("--allow-slow", is_flag=True, help="Run long-budget checks too.")
@click.option("--no-prune", is_flag=True, help="Disable the acyclicity skip.")
@_THREADS
@_OUTPUT
@click.pass_context
def verify(ctx, scenario, field, allow_slow, no_prune, threads, output) -> None:
    """Run a named scenario and compare against its frozen expected values."""
    payload = {"scenario": scenario, "field": field, "allow_slow": allow_slow,
               "no_prune": no_prune, "threads": threads}
    data = _call(ctx, "POST", "/verify", payload).json()

    def table(d: dict) -> None:
        click.echo(f"{d['scenario']}: {d['title']}")
        for chk in d["checks"]:
            label = chk["quantity"]
            if chk.get("s") is not None:
                label += f" s={chk['s']}"
            if chk.get("field"):
                label += f" [{chk['field']}]"
            if chk.get("extras"):
                label += " +" + ",".join(chk["extras"])
            if chk["skipped"]:
                click.echo(f"  skip  {label}")
                continue
            mark = "ok" if chk["ok"] else "FAIL"
            expect = chk.get("expect")
            shown = "reported" if expect is None else f"expected {expect}"
            click.echo(f"  {mark:4s}  {label}: computed {chk['computed']} ({shown})")
        click.echo(f"{'PASS' if d['pass'] else 'FAIL'}  ({d['wall_time']}s)")

    _emit(data, output, table)
    if not data["pass"]:
        sys.exit(1)


@main.command("list-scenarios")
@click.argument("scenario", required=False)
@_OUTPUT
@click.pass_context
def list_scenarios(ctx, scenario, output) -> None:
    """List registered scenarios, or print one fixture verbatim."""
    if scenario:
        resp = _call(ctx, "GET", f"/scenarios/{scenario}")
        click.echo(resp.text, nl=False)
        return
    data = _call(ctx, "GET", "/scenarios").json()

    def table(rows: list) -> None:
        width = max(len(r["name"]) for r in rows)
        for r in rows:
            click.echo(f"{r['name']:{width}s}  {r['kind']:5s} "
                       f"{r['checks']:2d} checks +{r['slow_checks']} slow  {r['title']}")

    _emit(data, output, table)


if __name__ == "__main__":
    main()
