"""Command-line entry points: non-interactive solving, min cuts, file canonicalization, serving."""

from __future__ import annotations

import sys

import click

from .cuts import find_min_cut
from .edgelist import EdgelistError, parse_edgelist, serialize_edgelist
from .network import FlowError, Path
from .strategies import parse_strategy, solve


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise click.ClickException(str(err)) from err
    try:
        return parse_edgelist(text)
    except EdgelistError as err:
        raise click.ClickException(f"{path}: " + "; ".join(str(issue) for issue in err.issues)) from err


def _path_line(path: Path, amount: int) -> str:
    nodes = [path[0].tail] + [arc.head for arc in path]
    return f"{' -> '.join(nodes)} : {amount}"


@click.group()
def main() -> None:
    """Max-flow/min-cut toolkit: solve networks, find cuts, canonicalize edgelists, serve sessions."""


@main.command(name="solve")
@click.argument("file", type=click.Path())
@click.option("--strategy", type=click.Choice(["random", "shortest", "widest"]), default="shortest", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for the random strategy.")
def solve_cmd(file: str, strategy: str, seed: int) -> None:
    """Run the augmenting-path loop on FILE and print value, iterations, and history."""
    net = _load(file)
    try:
        result = solve(net, parse_strategy(strategy, seed))
    except FlowError as err:
        raise click.ClickException(str(err)) from err
    click.echo(f"value {result.value}")
    click.echo(f"iterations {result.iterations}")
    for path, amount in result.history:
        click.echo(_path_line(path, amount))


@main.command()
@click.argument("file", type=click.Path())
def mincut(file: str) -> None:
    """Print the smallest minimum-cut s-side of FILE and its capacity."""
    net = _load(file)
    try:
        cut = find_min_cut(net)
    except FlowError as err:
        raise click.ClickException(str(err)) from err
    side = ", ".join(sorted(cut.s_side))
    click.echo(f"S = {{{side}}}, capacity {cut.capacity}")


@main.command()
@click.argument("file", type=click.Path())
def fmt(file: str) -> None:
    """Print FILE as a canonical edgelist (sorted directives, sorted edges)."""
    net = _load(file)
    click.echo(serialize_edgelist(net), nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True, envvar="FLOWTUTOR_HOST")
@click.option("--port", type=int, default=8000, show_default=True, envvar="FLOWTUTOR_PORT")
@click.option(
    "--idle-timeout",
    type=float,
    default=24 * 3600.0,
    show_default=True,
    envvar="FLOWTUTOR_IDLE_TIMEOUT",
    help="Seconds of inactivity after which a session is dropped.",
)
def serve(host: str, port: int, idle_timeout: float) -> None:
    """Run the session gateway."""
    import uvicorn

    from .service import SessionStore, create_app

    app = create_app(SessionStore(idle_timeout=idle_timeout))
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    sys.exit(main())
