"""Command-line client for the pipeline service.

By default the CLI talks to an in-process instance of the service (no
network, artifacts land on the local filesystem); ``--server`` points it
at a running instance instead, in which case artifacts are written on
the server side.

Exit codes: 0 success, 2 config error, 3 missing upstream artifact,
4 data error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_MISSING_UPSTREAM = 3
EXIT_DATA = 4

_CODE_EXITS = {
    "config_error": EXIT_CONFIG,
    "missing_upstream": EXIT_MISSING_UPSTREAM,
    "data_error": EXIT_DATA,
}


class _InProcessClient:
    """Drives the ASGI app directly, no socket involved."""

    def __init__(self):
        from .service import app

        self._transport = httpx.ASGITransport(app=app)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return None

    def post(self, url: str, json: dict) -> httpx.Response:
        import asyncio

        async def go():
            async with httpx.AsyncClient(
                transport=self._transport, base_url="http://chatternet.local", timeout=600.0
            ) as client:
                return await client.post(url, json=json)

        return asyncio.run(go())


def _client(server: str | None):
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    return _InProcessClient()


def _load_config(config_path: str | None, overrides: dict) -> dict:
    cfg: dict = {}
    if config_path:
        try:
            cfg = json.loads(Path(config_path).read_text(encoding="utf-8"))
        except FileNotFoundError:
            click.echo(f"config error: file not found: {config_path}", err=True)
            sys.exit(EXIT_CONFIG)
        except json.JSONDecodeError as exc:
            click.echo(f"config error: invalid JSON in {config_path}: {exc}", err=True)
            sys.exit(EXIT_CONFIG)
    for key, value in overrides.items():
        if value is not None:
            cfg[key] = value
    return cfg


def _fail_from_response(response: httpx.Response) -> None:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict):
        code = detail.get("code", "")
        message = detail.get("message", response.text)
        click.echo(f"{code or 'error'}: {message}", err=True)
        sys.exit(_CODE_EXITS.get(code, EXIT_DATA))
    # Body-validation failures from the service are config errors.
    if response.status_code == 422:
        click.echo(f"config error: {response.text}", err=True)
        sys.exit(EXIT_CONFIG)
    click.echo(f"error: HTTP {response.status_code}: {response.text}", err=True)
    sys.exit(EXIT_DATA)


def _post(client: httpx.Client, url: str, cfg: dict) -> dict:
    try:
        response = client.post(url, json=cfg)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(EXIT_DATA)
    if response.status_code != 200:
        _fail_from_response(response)
    return response.json()


def _print_result(result: dict) -> None:
    click.echo(f"[{result['stage']}] ok")
    for name, path in result["artifacts"].items():
        click.echo(f"  {name}: {path}")


@click.group()
def main():
    """Temporal interaction-network analytics pipeline."""


@main.command()
@click.argument("stage")
@click.option("--config", "config_path", type=str, help="JSON config file.")
@click.option("--server", type=str, default=None, help="Remote service URL (default: in-process).")
@click.option("--corpus", type=str, help="Corpus file (JSONL or CSV).")
@click.option("--corpus-format", type=click.Choice(["jsonl", "csv"]))
@click.option("--out", "out_dir", type=str, help="Output directory.")
@click.option("--profiles", type=str, help="Profiles JSONL file.")
@click.option("--teams", type=str, help="Teams JSON file (user_id to team).")
@click.option("--keywords", type=str, help="Comma-separated keyword-coding list.")
@click.option("--rule-lexicon", type=str, help="Override rule-analyzer lexicon TSV.")
@click.option("--mean-lexicon", type=str, help="Override mean-analyzer lexicon TSV.")
@click.option("--sentiment-source", type=click.Choice(["rule", "mean"]))
@click.option("--window", type=int, help="Spell window in days (default 4).")
@click.option("--min-degree", type=int, help="Total-degree filter for the animation.")
@click.option("--roots", type=str, help="Comma-separated path root actors.")
@click.option("--start-day", type=int, help="Path traversal start day.")
@click.option("--direction", type=click.Choice(["forward", "backward"]))
@click.option("--mode", type=click.Choice(["undirected", "directed"]))
@click.option("--scheme", type=click.Choice(["sentiment", "keyword", "path"]))
@click.option("--seed", type=int, help="Layout seed.")
@click.option("--size-min", type=float, help="Smallest node size in the animation.")
@click.option("--size-max", type=float, help="Largest node size in the animation.")
def run(stage, config_path, server, keywords, roots, **flags):
    """Run one pipeline STAGE (or "all") against the configured corpus."""
    overrides = {
        "corpus": flags.get("corpus"),
        "corpus_format": flags.get("corpus_format"),
        "out_dir": flags.get("out_dir"),
        "profiles": flags.get("profiles"),
        "teams": flags.get("teams"),
        "rule_lexicon": flags.get("rule_lexicon"),
        "mean_lexicon": flags.get("mean_lexicon"),
        "sentiment_source": flags.get("sentiment_source"),
        "window": flags.get("window"),
        "min_degree": flags.get("min_degree"),
        "path_start_day": flags.get("start_day"),
        "path_direction": flags.get("direction"),
        "path_mode": flags.get("mode"),
        "scheme": flags.get("scheme"),
        "seed": flags.get("seed"),
        "size_min": flags.get("size_min"),
        "size_max": flags.get("size_max"),
    }
    if keywords is not None:
        overrides["keywords"] = [kw for kw in keywords.split(",") if kw]
    if roots is not None:
        overrides["path_roots"] = [r for r in roots.split(",") if r]
    cfg = _load_config(config_path, overrides)

    from .pipeline import STAGE_ORDER

    if stage != "all" and stage not in STAGE_ORDER:
        click.echo(f"config error: unknown stage {stage!r} (expected {STAGE_ORDER} or all)", err=True)
        sys.exit(EXIT_CONFIG)

    with _client(server) as client:
        if stage == "all":
            payload = _post(client, "/pipeline", cfg)
            for result in payload["results"]:
                _print_result(result)
        else:
            _print_result(_post(client, f"/stages/{stage}", cfg))
    sys.exit(EXIT_OK)


@main.command()
@click.option("--config", "config_path", type=str, required=True, help="JSON config file.")
def validate(config_path):
    """Validate a config file without running anything."""
    from pydantic import ValidationError

    from .pipeline import ConfigError, RunConfig, validate_config

    cfg_dict = _load_config(config_path, {})
    try:
        cfg = RunConfig.model_validate(cfg_dict)
        validate_config(cfg)
    except (ValidationError, ConfigError) as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    click.echo("config ok")
    sys.exit(EXIT_OK)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8800, show_default=True, type=int)
def serve(host, port):
    """Start the pipeline service."""
    import uvicorn

    uvicorn.run("chatternet.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
