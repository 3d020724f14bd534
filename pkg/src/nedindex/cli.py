"""Command-line front end; a thin client of the HTTP service.

Without ``--server`` the commands run the service in process, so no network
or running daemon is needed; with ``--server URL`` they talk to a remote
instance instead.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 internal error.
"""

from __future__ import annotations

import re
import sys
from typing import Sequence

import click
import httpx

__all__ = ["cli", "main", "entry"]


class ParseFailure(Exception):
    """Input file failed to parse (exit code 2)."""


class InternalFailure(Exception):
    """Service-side invariant violation or unreachable service (exit code 3)."""


def _call_in_process(method: str, path: str, payload) -> httpx.Response:
    import asyncio

    from .service import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app, raise_app_exceptions=False)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://nedindex.local"
        ) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _describe_validation(detail) -> str:
    if isinstance(detail, list) and detail:
        first = detail[0]
        loc = ".".join(str(part) for part in first.get("loc", []) if part != "body")
        msg = first.get("msg", "invalid request")
        return f"{loc}: {msg}" if loc else msg
    return str(detail)


def _request(server: str | None, method: str, path: str, payload=None):
    try:
        if server:
            with httpx.Client(base_url=server, timeout=600.0) as client:
                response = client.request(method, path, json=payload)
        else:
            response = _call_in_process(method, path, payload)
    except httpx.HTTPError as exc:
        raise InternalFailure(f"service request failed: {exc}") from exc
    if response.status_code == 200:
        return response.json()
    detail = None
    try:
        detail = response.json().get("detail")
    except Exception:
        pass
    if response.status_code >= 500:
        raise InternalFailure(f"service error {response.status_code}: {detail or response.text}")
    if isinstance(detail, dict):
        message = detail.get("message", str(detail))
        if detail.get("code") == "parse_error":
            raise ParseFailure(message)
        raise click.UsageError(message)
    raise click.UsageError(_describe_validation(detail))


def _read_text(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return fh.read().decode("utf-8")
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _source_options(f):
    f = click.option("--dataset", "dataset_name", metavar="NAME",
                     help="Embedded dataset (see 'nedindex datasets').")(f)
    f = click.option("--generate", "generate_spec", metavar="KIND",
                     help="Generator spec: complete:<n>, wheel:<n>, or figure2.")(f)
    f = click.option("--input", "input_path", metavar="FILE",
                     type=click.Path(exists=True, dir_okay=False),
                     help="Edge-list file (u v per line; # and % comments).")(f)
    return f


def _graph_payload(input_path, generate_spec, dataset_name) -> dict:
    supplied = [x for x in (input_path, generate_spec, dataset_name) if x is not None]
    if len(supplied) != 1:
        raise click.UsageError(
            "supply exactly one graph source: --input, --generate, or --dataset"
        )
    if input_path is not None:
        return {"edge_list": _read_text(input_path)}
    if generate_spec is not None:
        return {"generate": generate_spec}
    return {"dataset": dataset_name}


def _parse_k_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not m:
        raise click.UsageError(f"bad k range {text!r}; use 'a..b' or a single 'k'")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    return lo, hi


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


@click.group()
@click.option("--server", metavar="URL", default=None, envvar="NEDINDEX_SERVER",
              help="Base URL of a running service; default runs in process.")
@click.pass_context
def cli(ctx: click.Context, server: str | None) -> None:
    """Graph clustering quality metrics: reports, sweeps, clustering, generators."""
    ctx.obj = server


@cli.command()
@_source_options
@click.option("--partition", "partition_path", metavar="FILE", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Partition file: 'vertex_label cluster_index' per line.")
@click.option("--reference", "reference_path", metavar="FILE", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Reference partition for NMI.")
@click.option("--out", metavar="FILE", default=None, help="Also write a one-row CSV.")
@click.pass_obj
def metrics(server, input_path, generate_spec, dataset_name, partition_path,
            reference_path, out):
    """Score a fixed partition of a graph with all metrics."""
    payload = {
        "graph": _graph_payload(input_path, generate_spec, dataset_name),
        "partition": {"text": _read_text(partition_path)},
    }
    if reference_path is not None:
        payload["reference"] = {"text": _read_text(reference_path)}
    data = _request(server, "POST", "/metrics", payload)
    click.echo(f"clusters     {data['cluster_count']}")
    for name in ("nedindex", "modularity", "nmi", "conductance"):
        value = data[name]
        shown = "-" if value is None else f"{value:.6f}"
        click.echo(f"{name:<12} {shown}")
    if out is not None:
        _write_or_print(data["csv"], out)


@cli.command()
@_source_options
@click.option("--k", "k_range", metavar="A..B", required=True,
              help="Inclusive cluster-count range, e.g. 1..34 or a single k.")
@click.option("--method", type=click.Choice(["hierarchical", "kmeans"]),
              default="hierarchical", show_default=True)
@click.option("--repeats", type=int, default=5, show_default=True,
              help="Runs per k; repeat r uses seed+r.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--linkage", "linkage_criterion",
              type=click.Choice(["single", "complete", "average"]),
              default="single", show_default=True)
@click.option("--reference", "reference_path", metavar="FILE", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Reference partition; adds an NMI column.")
@click.option("--reference-dataset", is_flag=True, default=False,
              help="Use the embedded reference of the --dataset graph for NMI.")
@click.option("--out", metavar="FILE", required=True, help="CSV output path.")
@click.pass_obj
def sweep(server, input_path, generate_spec, dataset_name, k_range, method,
          repeats, seed, linkage_criterion, reference_path, reference_dataset, out):
    """Sweep cluster counts: cluster, score, repeat, average, write CSV."""
    k_min, k_max = _parse_k_range(k_range)
    payload = {
        "graph": _graph_payload(input_path, generate_spec, dataset_name),
        "k_min": k_min,
        "k_max": k_max,
        "method": method,
        "repeats": repeats,
        "seed": seed,
        "linkage_criterion": linkage_criterion,
        "use_dataset_reference": reference_dataset,
    }
    if reference_path is not None:
        payload["reference"] = {"text": _read_text(reference_path)}
    data = _request(server, "POST", "/sweep", payload)
    _write_or_print(data["csv"], out)
    records = data["records"]
    averaged = sum(1 for r in records if r["repeat"] == -1)
    click.echo(
        f"swept k={k_min}..{k_max} ({method}, {repeats} repeats): "
        f"{len(records) - averaged} repeat rows + {averaged} averaged rows -> {out}"
    )


@cli.command()
@_source_options
@click.option("--k", type=int, required=True, help="Number of clusters.")
@click.option("--method", type=click.Choice(["hierarchical", "kmeans"]),
              default="hierarchical", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--linkage", "linkage_criterion",
              type=click.Choice(["single", "complete", "average"]),
              default="single", show_default=True)
@click.option("--out", metavar="FILE", default=None,
              help="Partition output path (stdout if omitted).")
@click.pass_obj
def cluster(server, input_path, generate_spec, dataset_name, k, method, seed,
            linkage_criterion, out):
    """Cluster a graph and emit the partition file."""
    payload = {
        "graph": _graph_payload(input_path, generate_spec, dataset_name),
        "k": k,
        "method": method,
        "seed": seed,
        "linkage_criterion": linkage_criterion,
    }
    data = _request(server, "POST", "/cluster", payload)
    _write_or_print(data["partition_text"], out)
    if out is not None:
        click.echo(f"{data['cluster_count']} clusters -> {out}")


@cli.command()
@click.argument("kind", metavar="KIND")
@click.option("--out", metavar="FILE", default=None,
              help="Edge-list output path (stdout if omitted).")
@click.pass_obj
def generate(server, kind, out):
    """Write a generated graph (complete:<n>, wheel:<n>, figure2) as an edge list."""
    data = _request(server, "POST", "/generate", {"kind": kind})
    _write_or_print(data["edge_list"], out)
    if out is not None:
        click.echo(
            f"{kind}: {data['vertex_count']} vertices, {data['edge_count']} edges -> {out}"
        )


@cli.command()
@click.pass_obj
def datasets(server):
    """List the embedded datasets."""
    rows = _request(server, "GET", "/datasets")
    click.echo(f"{'name':<10} {'vertices':>8} {'edges':>6}  {'reference':<9} description")
    for row in rows:
        ref = "yes" if row["has_reference"] else "no"
        click.echo(
            f"{row['name']:<10} {row['vertex_count']:>8} {row['edge_count']:>6}  "
            f"{ref:<9} {row['description']}"
        )


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("nedindex.service:app", host=host, port=port)


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point returning the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False, prog_name="nedindex")
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except ParseFailure as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except InternalFailure as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
