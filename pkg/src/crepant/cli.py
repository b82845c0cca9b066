"""Command-line front end.

Exact-only input syntax: a q-point is a comma-separated list of root-of-unity
literals "e:j/k" meaning exp(2 pi i j/k); decimal floats are rejected since
every claim the tool checks is an exact identity.  All JSON output is
deterministic (sorted keys, fixed entry order) and contains no floating
point.

Exit codes: 0 success, 1 verification failure, 2 usage errors and poles.
"""

from __future__ import annotations

import json
import math
import sys

import click

from .corrections import PoleError
from .exactnum import Cyclotomic, root_of_unity
from .isocheck import (conjecture_scan, solve_a1, solve_a2, transport_check)
from .mckay import (LinearMap, ade_resolution_graph, an_mckay, aut_gamma,
                    bgp_map, chtd_map)
from .resolve import resolve_an
from .ringtables import (cr_table, cup_table, qc_eval, qc_table,
                         table_from_json, table_to_json, table_to_latex,
                         table_to_text)

POLE_EXIT = 2


def _parse_qpoint(spec: str, n: int):
    """Parse "e:j/k,e:j/k,..." into exact root-of-unity values."""
    tokens = [t.strip() for t in spec.split(",")]
    if len(tokens) != n:
        raise click.UsageError(f"expected {n} q-values, got {len(tokens)}")
    values = []
    for tok in tokens:
        if not tok.startswith("e:"):
            raise click.UsageError(
                f"bad q literal {tok!r}: use e:j/k for exp(2*pi*i*j/k)")
        body = tok[2:]
        num, _, den = body.partition("/")
        try:
            j, k = int(num), int(den or "1")
        except ValueError:
            raise click.UsageError(f"bad q literal {tok!r}")
        if k < 1:
            raise click.UsageError(f"bad q literal {tok!r}: k must be >= 1")
        values.append(root_of_unity(k, j))
    conductor = math.lcm(4 * (n + 1), *(v.conductor for v in values))
    return [v.lift(conductor) for v in values]


def _dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _emit_pole(exc: PoleError):
    doc = {"error": "pole",
           "mu": exc.index.mu, "nu": exc.index.nu,
           "entry": list(exc.entry) if exc.entry else None,
           "message": str(exc)}
    click.echo(_dump_json(doc))
    sys.exit(POLE_EXIT)


def _approx(value: Cyclotomic) -> str:
    # display helper only; JSON output never contains floats
    z = value.to_complex()
    return f"~{z.real:+.6f}{z.imag:+.6f}i"


@click.group()
def main():
    """Exact rings and ring-isomorphism checks for transversal A_n
    orbifolds and their crepant resolutions."""


@main.command("table")
@click.argument("kind", type=click.Choice(["cr", "cup", "qc"]))
@click.option("--n", "rank", type=int, required=True, help="rank n >= 1")
@click.option("--q", "qspec", default=None,
              help="evaluate the qc table at this exact q-point")
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text", "latex"]))
@click.option("--check-roundtrip", is_flag=True,
              help="re-ingest the emitted JSON and compare")
def cmd_table(kind, rank, qspec, fmt, check_roundtrip):
    """Print one product table (qc is symbolic unless --q is given)."""
    if rank < 1:
        raise click.UsageError("--n must be >= 1")
    if qspec is not None and kind != "qc":
        raise click.UsageError("--q only applies to the qc table")
    if kind == "cr":
        table = cr_table(rank)
    elif kind == "cup":
        table = cup_table(rank)
    else:
        table = qc_table(rank)
        if qspec is not None:
            try:
                table = qc_eval(table, _parse_qpoint(qspec, rank))
            except PoleError as exc:
                _emit_pole(exc)
    if check_roundtrip:
        doc = table_to_json(table)
        if table_from_json(json.loads(_dump_json(doc))) != table:
            click.echo("round-trip mismatch", err=True)
            sys.exit(POLE_EXIT)
    if fmt == "json":
        click.echo(_dump_json(table_to_json(table)))
    elif fmt == "latex":
        click.echo(table_to_latex(table))
    else:
        click.echo(table_to_text(table))


def _load_map(source: str, rank: int) -> LinearMap:
    if source == "chtd":
        return chtd_map(rank)
    if source.startswith("bgp:"):
        try:
            m_root = int(source[4:])
        except ValueError:
            raise click.UsageError(f"bad map spec {source!r}")
        return bgp_map(rank, m_root)
    try:
        with open(source) as fh:
            return LinearMap.from_json(json.load(fh))
    except OSError as exc:
        raise click.UsageError(f"cannot read map file {source!r}: {exc}")


@main.command("verify")
@click.option("--n", "rank", type=int, required=True)
@click.option("--map", "map_source", required=True,
              help="bgp:M, chtd, or a JSON file with a LinearMap")
@click.option("--q", "qspec", required=True)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text"]))
def cmd_verify(rank, map_source, qspec, fmt):
    """Check that the map transports the quantum product at q into the
    orbifold product; exit 0 iff it does."""
    lmap = _load_map(map_source, rank)
    q = _parse_qpoint(qspec, rank)
    try:
        source = qc_eval(qc_table(rank), q)
    except PoleError as exc:
        _emit_pole(exc)
    report = transport_check(lmap, source, cr_table(rank))
    if fmt == "json":
        click.echo(_dump_json(report.to_json()))
    else:
        click.echo(report.summary())
    sys.exit(0 if report.passed else 1)


@main.command("solve")
@click.option("--n", "rank", type=click.Choice(["1", "2"]), required=True)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text"]))
def cmd_solve(rank, fmt):
    """Solve the rank-1 or rank-2 isomorphism system exactly."""
    if rank == "1":
        sols = solve_a1()
        doc = [{"t": s.t.to_json(), "q": s.q.to_json()} for s in sols]
        lines = [f"E -> t*e with t = {s.t} ({_approx(s.t)}) "
                 f"at q = {s.q} ({_approx(s.q)})" for s in sols]
    else:
        sols = solve_a2()
        doc = [{"a": s.a.to_json(), "b": s.b.to_json(),
                "q1": s.q1.to_json(), "q2": s.q2.to_json()} for s in sols]
        lines = [f"E1 -> a*e1 + b*e2, E2 -> b*e1 + a*e2 with "
                 f"a = {s.a} ({_approx(s.a)}), b = {s.b} ({_approx(s.b)}) "
                 f"at q = ({s.q1}, {s.q2})" for s in sols]
    if fmt == "json":
        click.echo(_dump_json(doc))
    else:
        click.echo("\n".join(lines))


@main.command("scan")
@click.option("--n", "rank", type=int, required=True)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text"]))
def cmd_scan(rank, fmt):
    """Probe the conjectured map at every primitive (n+1)-th root."""
    if rank < 1:
        raise click.UsageError("--n must be >= 1")
    results = conjecture_scan(rank)
    if fmt == "json":
        click.echo(_dump_json([r.to_json() for r in results]))
    else:
        for r in results:
            line = f"m_root={r.m_root}: {r.status}"
            if r.status == "fail":
                bad = ",".join(f"({e.i},{e.j})"
                               for e in r.report.failures())
                line += f" at entries {bad}"
            elif r.status == "pole":
                line += f" ({r.pole})"
            click.echo(line)


@main.command("mckay")
@click.option("--n", "rank", type=int, default=None)
@click.option("--group", "label", default=None,
              help="static ADE data, e.g. D_4 or E_7")
@click.option("--full", is_flag=True,
              help="include the trivial representation")
@click.option("--compare-resolution", is_flag=True,
              help="exit nonzero unless the graph matches resolve_an")
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text", "dot"]))
def cmd_mckay(rank, label, full, compare_resolution, fmt):
    """McKay graph from characters (A_n) or classification data (D/E)."""
    if (rank is None) == (label is None):
        raise click.UsageError("give exactly one of --n or --group")
    if rank is not None:
        if rank < 1:
            raise click.UsageError("--n must be >= 1")
        graph = an_mckay(rank, reduced=not full)
    else:
        graph = ade_resolution_graph(label)
    if fmt == "json":
        doc = graph.to_json()
        doc["aut"] = aut_gamma(graph.group_label)
        click.echo(_dump_json(doc))
    elif fmt == "dot":
        click.echo(graph.to_graphviz())
    else:
        click.echo(f"{graph.group_label} "
                   f"({'reduced' if graph.reduced else 'full'}), "
                   f"Aut = {aut_gamma(graph.group_label)}")
        for i, j, mult in graph.edges():
            click.echo(f"  {graph.vertices[i][0]} -- {graph.vertices[j][0]}"
                       + (f" (x{mult})" if mult > 1 else ""))
    if compare_resolution:
        if rank is None or full:
            raise click.UsageError(
                "--compare-resolution needs --n without --full")
        match = resolve_an(rank).adjacency() == graph.adjacency
        click.echo("resolution graph match: " + ("yes" if match else "NO"))
        sys.exit(0 if match else 1)


@main.command("resolve")
@click.option("--n", "rank", type=int, required=True)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text", "dot"]))
def cmd_resolve(rank, fmt):
    """Resolve x y = z^(n+1) by iterated blow-ups of the origin."""
    if rank < 1:
        raise click.UsageError("--n must be >= 1")
    graph = resolve_an(rank)
    if fmt == "json":
        click.echo(_dump_json(graph.to_json()))
    elif fmt == "dot":
        click.echo(graph.to_graphviz())
    else:
        click.echo(f"A_{rank}: {graph.size} exceptional curves in "
                   f"{graph.rounds} blow-up rounds")
        chain = " -- ".join(cid for cid, _ in graph.nodes)
        click.echo(f"  chain: {chain}")


if __name__ == "__main__":
    main()
