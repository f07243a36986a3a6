"""Command-line front end: prove, detect, i18n-lint, serve.

Exit codes: 0 success/proved, 1 not proved (or lint findings), 2 usage or
parse errors, 3 resource and degeneracy errors.
"""
from __future__ import annotations

import pathlib
import sys
from typing import Optional

import click

from . import workflow
from .errors import ParseError
from .i18n import lint as lint_catalogs
from .i18n import load_catalog

EXIT_PROVED = 0
EXIT_NOT_PROVED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_USAGE_ERRORS = workflow.USAGE_ERRORS
_RESOURCE_ERRORS = workflow.RESOURCE_ERRORS


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_source(path: str) -> str:
    try:
        return pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror}", EXIT_USAGE)


@click.group()
@click.version_option(package_name="gddx")
def main() -> None:
    """Geometry prover: deductive database and algebraic backends."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--goal", default=None, help="Goal fact, e.g. 'cyclic D E F G' (default: the file's declared goal).")
@click.option("--lang", default="en", show_default=True, help="Catalog language for proof phrases.")
@click.option("--format", "mode", type=click.Choice(workflow.RENDER_MODES), default="flat", show_default=True)
@click.option("--no-structure", "structure", flag_value=False, default=True, help="Collapse lemma subproofs into a flat list.")
@click.option("--backend", type=click.Choice(workflow.BACKENDS), default="gdd", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Diagram placement seed.")
def prove(file: str, goal: Optional[str], lang: str, mode: str, structure: bool, backend: str, seed: int) -> None:
    """Prove a goal over the construction in FILE."""
    source = _read_source(file)
    try:
        construction = workflow.load_construction(source)
        g = workflow.resolve_goal(construction, goal, seed)
        outcome = workflow.run_prove(
            construction,
            g,
            lang=lang,
            mode=mode,
            structure=structure,
            backend=backend,
            seed=seed,
        )
    except _USAGE_ERRORS as exc:
        _fail(str(exc), EXIT_USAGE)
    except _RESOURCE_ERRORS as exc:
        _fail(str(exc), EXIT_RESOURCE)
    click.echo(outcome.rendering, nl=False)
    sys.exit(outcome.exit_code)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--seed", type=int, default=0, show_default=True)
def detect(file: str, seed: int) -> None:
    """List candidate properties of FILE's diagram, one numbered line each."""
    source = _read_source(file)
    try:
        construction = workflow.load_construction(source)
        lines = workflow.detect_lines(construction, seed)
    except _USAGE_ERRORS as exc:
        _fail(str(exc), EXIT_USAGE)
    except _RESOURCE_ERRORS as exc:
        _fail(str(exc), EXIT_RESOURCE)
    for line in lines:
        click.echo(line)


@main.command("i18n-lint")
@click.argument("directory", type=click.Path())
def i18n_lint(directory: str) -> None:
    """Check every catalog in DIRECTORY against its English baseline."""
    root = pathlib.Path(directory)
    baseline_path = root / "en.csv"
    if not baseline_path.is_file():
        _fail(f"no English baseline: {baseline_path} is missing", EXIT_USAGE)
    try:
        baseline = load_catalog(baseline_path.read_text(encoding="utf-8"), "en")
        catalogs = []
        for path in sorted(root.glob("*.csv")):
            if path.name == "en.csv":
                continue
            catalogs.append(load_catalog(path.read_text(encoding="utf-8"), path.stem))
    except ParseError as exc:
        _fail(str(exc), EXIT_USAGE)
    except OSError as exc:
        _fail(f"cannot read catalog: {exc.strerror}", EXIT_USAGE)
    findings = lint_catalogs(catalogs, baseline)
    for finding in findings:
        click.echo(str(finding))
    sys.exit(EXIT_NOT_PROVED if findings else EXIT_PROVED)


@main.command()
@click.option("--port", type=int, default=8787, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static", "static_dir", type=click.Path(), default=None, help="Directory of built web UI assets to serve at /.")
def serve(port: int, host: str, static_dir: Optional[str]) -> None:
    """Run the local HTTP service used by the web UI."""
    import uvicorn

    from .service import build_app

    app = build_app(static_dir=static_dir)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except OSError as exc:
        _fail(f"cannot bind {host}:{port}: {exc.strerror}", EXIT_RESOURCE)


if __name__ == "__main__":
    main()
