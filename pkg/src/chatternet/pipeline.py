"""Pipeline orchestration: staged runs over an output directory.

Each stage reads the previous stage's files, writes its own artifacts,
and appends one line to ``manifest.jsonl`` recording the stage, input
hashes, and config hash. Given identical inputs, every stage writes
byte-identical outputs (the manifest timestamp aside), so reruns are
verifiable.
"""

from __future__ import annotations

import hashlib
import json
import re
from datetime import datetime, timezone
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

from . import animate, corpus, network, paths, temporal, textcodes
from .lexicon import LexiconError, load_mean_lexicon, load_rule_lexicon
from .records import Query, QueryError, parse_utc

STAGE_ORDER = [
    "filter",
    "edges",
    "nodes",
    "code",
    "network",
    "daily",
    "slice",
    "paths",
    "timeline",
    "overlap",
    "animate",
]

MANIFEST_NAME = "manifest.jsonl"


class PipelineError(Exception):
    pass


class ConfigError(PipelineError):
    pass


class MissingUpstreamError(PipelineError):
    def __init__(self, message: str, run_first: str):
        super().__init__(message)
        self.run_first = run_first


class DataError(PipelineError):
    pass


class QuerySpec(BaseModel):
    keyword_groups: list[list[str]]
    from_time: str
    to_time: str
    restrict_to_users: Optional[list[str]] = None
    case_sensitive: bool = False

    def to_query(self, restrict: Optional[set[str]] = None) -> Query:
        users = set(self.restrict_to_users) if self.restrict_to_users is not None else None
        if restrict is not None:
            users = restrict if users is None else users & restrict
        try:
            return Query.build(
                keyword_groups=self.keyword_groups,
                from_time=parse_utc(self.from_time),
                to_time=parse_utc(self.to_time),
                restrict_to_users=users,
                case_sensitive=self.case_sensitive,
            )
        except (QueryError, ValueError) as exc:
            raise ConfigError(f"bad query: {exc}") from None


class RunConfig(BaseModel):
    """Everything a pipeline run needs; flags override file values."""

    corpus: str
    out_dir: str
    query: QuerySpec
    corpus_format: Literal["jsonl", "csv"] = "jsonl"
    stage_one_query: Optional[QuerySpec] = None
    profiles: Optional[str] = None
    teams: Optional[str] = None
    keywords: list[str] = Field(default_factory=list)
    rule_lexicon: Optional[str] = None
    mean_lexicon: Optional[str] = None
    sentiment_source: Literal["rule", "mean"] = "rule"
    window: int = Field(default=4, ge=1)
    min_degree: int = Field(default=10, ge=0)  # visualization filter default
    slice_days: Optional[list[int]] = None
    path_roots: list[str] = Field(default_factory=list)
    path_start_day: int = 0
    path_direction: Literal["forward", "backward"] = "forward"
    path_mode: Literal["undirected", "directed"] = "undirected"
    scheme: Literal["sentiment", "keyword", "path"] = "sentiment"
    seed: int = 7
    size_min: float = 0.3
    size_max: float = 1.3

    @field_validator("size_max")
    @classmethod
    def _size_order(cls, v, info):
        if "size_min" in info.data and v <= info.data["size_min"]:
            raise ValueError("size_max must exceed size_min")
        return v


class StageResult(BaseModel):
    stage: str
    artifacts: dict[str, str]
    manifest: dict


def validate_config(cfg: RunConfig) -> None:
    """Referenced paths must exist up front; window/min_degree bounds are
    already enforced by the model."""
    for label, value in (
        ("corpus", cfg.corpus),
        ("profiles", cfg.profiles),
        ("teams", cfg.teams),
        ("rule_lexicon", cfg.rule_lexicon),
        ("mean_lexicon", cfg.mean_lexicon),
    ):
        if value is not None and not Path(value).is_file():
            raise ConfigError(f"{label} path does not exist: {value}")


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _config_hash(cfg: RunConfig) -> str:
    # out_dir is excluded: the hash identifies the analysis configuration,
    # not where its artifacts happen to land.
    payload = json.dumps(cfg.model_dump(exclude={"out_dir"}), sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _require(path: Path, run_first: str) -> Path:
    if not path.is_file():
        raise MissingUpstreamError(
            f"missing upstream artifact {path.name}; run {run_first} first", run_first
        )
    return path


def _load_filtered(out: Path) -> list:
    path = _require(out / "filtered.jsonl", "filter")
    loaded = corpus.load_corpus(path, "jsonl")
    if loaded.rejects:
        raise DataError(f"{path} contains invalid records; rerun filter")
    return loaded.records


def _safe_name(root: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", root)


def run_stage(stage: str, cfg: RunConfig) -> StageResult:
    if stage not in STAGE_ORDER:
        raise ConfigError(f"unknown stage {stage!r}; expected one of {STAGE_ORDER}")
    validate_config(cfg)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    runner = _STAGES[stage]
    inputs, artifacts = runner(cfg, out)
    manifest_line = {
        "stage": stage,
        "inputs": {name: _sha256(Path(p)) for name, p in sorted(inputs.items())},
        "config": _config_hash(cfg),
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    with (out / MANIFEST_NAME).open("a", encoding="utf-8") as fh:
        fh.write(json.dumps(manifest_line) + "\n")
    return StageResult(
        stage=stage,
        artifacts={name: str(p) for name, p in sorted(artifacts.items())},
        manifest=manifest_line,
    )


def run_pipeline(cfg: RunConfig) -> list[StageResult]:
    return [run_stage(stage, cfg) for stage in STAGE_ORDER]


def _stage_filter(cfg: RunConfig, out: Path):
    try:
        loaded = corpus.load_corpus(cfg.corpus, cfg.corpus_format)
    except corpus.CorpusError as exc:
        raise DataError(str(exc)) from None
    artifacts = {}
    restrict = None
    if cfg.stage_one_query is not None:
        stage_one = cfg.stage_one_query.to_query()
        restrict = corpus.stage_one_users(loaded.records, stage_one)
        users_path = out / "stage1_users.json"
        users_path.write_text(json.dumps(sorted(restrict)) + "\n", encoding="utf-8")
        artifacts["stage1_users"] = users_path
    query = cfg.query.to_query(restrict)
    filtered = corpus.filter_corpus(loaded.records, query)
    corpus.write_corpus(filtered, out / "filtered.jsonl")
    corpus.write_rejects(loaded.rejects, out / "rejects.jsonl")
    artifacts["filtered"] = out / "filtered.jsonl"
    artifacts["rejects"] = out / "rejects.jsonl"
    return {"corpus": Path(cfg.corpus)}, artifacts


def _stage_edges(cfg: RunConfig, out: Path):
    records = _load_filtered(out)
    edges = network.build_edgelist(records)
    network.write_edgelist(edges, out / "edgelist.csv")
    return {"filtered": out / "filtered.jsonl"}, {"edgelist": out / "edgelist.csv"}


def _stage_nodes(cfg: RunConfig, out: Path):
    edge_path = _require(out / "edgelist.csv", "edges")
    edges = network.read_edgelist(edge_path)
    profiles = network.read_profiles(cfg.profiles) if cfg.profiles else None
    teams = None
    if cfg.teams:
        teams = json.loads(Path(cfg.teams).read_text(encoding="utf-8"))
    try:
        nodelist = network.build_nodelist(edges, profiles, teams)
    except ValueError as exc:
        raise DataError(str(exc)) from None
    network.write_nodelist(nodelist, out / "nodelist.csv")
    inputs = {"edgelist": edge_path}
    if cfg.profiles:
        inputs["profiles"] = Path(cfg.profiles)
    if cfg.teams:
        inputs["teams"] = Path(cfg.teams)
    return inputs, {"nodelist": out / "nodelist.csv"}


def _stage_code(cfg: RunConfig, out: Path):
    if not cfg.keywords:
        raise ConfigError("keywords must be configured for the code stage")
    records = _load_filtered(out)
    try:
        rule_lex = load_rule_lexicon(cfg.rule_lexicon)
        mean_lex = load_mean_lexicon(cfg.mean_lexicon)
    except LexiconError as exc:
        raise DataError(str(exc)) from None
    codes = textcodes.code_corpus(records, rule_lex, mean_lex, cfg.keywords)
    textcodes.write_codes(codes, out / "codes.csv")
    return {"filtered": out / "filtered.jsonl"}, {"codes": out / "codes.csv"}


def _stage_network(cfg: RunConfig, out: Path):
    edge_path = _require(out / "edgelist.csv", "edges")
    node_path = _require(out / "nodelist.csv", "nodes")
    codes_path = _require(out / "codes.csv", "code")
    edges = network.read_edgelist(edge_path)
    nodelist = network.read_nodelist(node_path)
    codes = textcodes.read_codes(codes_path)
    try:
        net = temporal.build_network(
            edges, nodelist, cfg.window, codes=codes, sentiment_source=cfg.sentiment_source
        )
    except KeyError as exc:
        raise DataError(str(exc)) from None
    temporal.write_network(net, out / "network.json")
    inputs = {"edgelist": edge_path, "nodelist": node_path, "codes": codes_path}
    return inputs, {"network": out / "network.json"}


def _stage_daily(cfg: RunConfig, out: Path):
    records = _load_filtered(out)
    codes_path = _require(out / "codes.csv", "code")
    codes = textcodes.read_codes(codes_path)
    pairs = []
    for r in records:
        code = codes.get(r.tweet_id)
        if code is None:
            raise DataError(f"codes.csv missing tweet {r.tweet_id!r}; rerun code")
        pairs.append((r.created_at, code))
    stats = textcodes.daily_aggregate(pairs)
    textcodes.write_daily(stats, out / "daily.csv")
    return {"filtered": out / "filtered.jsonl", "codes": codes_path}, {"daily": out / "daily.csv"}


def _days_for(cfg: RunConfig, net: temporal.TemporalNetwork) -> list[int]:
    if cfg.slice_days is not None:
        return list(cfg.slice_days)
    return list(range(0, net.horizon + 1))


def _stage_slice(cfg: RunConfig, out: Path):
    net_path = _require(out / "network.json", "network")
    net = temporal.read_network(net_path)
    days = _days_for(cfg, net)
    payload = {
        "days": {str(day): temporal.slice_to_dict(temporal.slice_at(net, day)) for day in days}
    }
    (out / "slices.json").write_text(
        json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    return {"network": net_path}, {"slices": out / "slices.json"}


def _stage_paths(cfg: RunConfig, out: Path):
    if not cfg.path_roots:
        raise ConfigError("path_roots must name at least one root actor")
    net_path = _require(out / "network.json", "network")
    net = temporal.read_network(net_path)
    trees = []
    for root in cfg.path_roots:
        try:
            if cfg.path_direction == "forward":
                tree = paths.forward_path(net, root, cfg.path_start_day, cfg.path_mode)
            else:
                tree = paths.backward_path(net, root, cfg.path_start_day, cfg.path_mode)
        except paths.PathError as exc:
            raise DataError(str(exc)) from None
        trees.append(tree)
    paths.write_trees(trees, out / "paths.json")
    return {"network": net_path}, {"paths": out / "paths.json"}


def _stage_timeline(cfg: RunConfig, out: Path):
    trees_path = _require(out / "paths.json", "paths")
    artifacts = {}
    for tree in paths.read_trees(trees_path):
        rows = paths.timeline_rows(tree)
        stem = _safe_name(tree.root)
        csv_path = out / f"timeline_{stem}.csv"
        svg_path = out / f"timeline_{stem}.svg"
        paths.write_timeline_csv(rows, csv_path)
        svg_path.write_text(paths.timeline_svg(rows), encoding="utf-8")
        artifacts[f"timeline_{stem}_csv"] = csv_path
        artifacts[f"timeline_{stem}_svg"] = svg_path
    return {"paths": trees_path}, artifacts


def _stage_overlap(cfg: RunConfig, out: Path):
    trees_path = _require(out / "paths.json", "paths")
    net_path = _require(out / "network.json", "network")
    trees = paths.read_trees(trees_path)
    if len(trees) < 2:
        raise ConfigError("overlap needs two path roots; configure path_roots with two actors")
    net = temporal.read_network(net_path)
    days = _days_for(cfg, net)
    payload = {
        "root_a": trees[0].root,
        "root_b": trees[1].root,
        "days": {
            str(day): paths.overlap_classes(trees[0], trees[1], day, sorted(net.nodes))
            for day in days
        },
    }
    (out / "overlap.json").write_text(
        json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    return {"paths": trees_path, "network": net_path}, {"overlap": out / "overlap.json"}


def _stage_animate(cfg: RunConfig, out: Path):
    net_path = _require(out / "network.json", "network")
    net = temporal.read_network(net_path)
    net = temporal.filter_by_total_degree(net, cfg.min_degree)
    days = _days_for(cfg, net)
    inputs = {"network": net_path}
    path_trees = None
    if cfg.scheme == "path":
        trees_path = _require(out / "paths.json", "paths")
        trees = paths.read_trees(trees_path)
        if len(trees) < 2:
            raise ConfigError("path scheme needs two path roots")
        path_trees = (trees[0], trees[1])
        inputs["paths"] = trees_path
    doc = animate.build_animation_doc(
        net,
        days,
        seed=cfg.seed,
        scheme=cfg.scheme,
        size_range=(cfg.size_min, cfg.size_max),
        path_trees=path_trees,
    )
    anim_dir = out / "animation"
    written = animate.export_animation(doc, anim_dir)
    artifacts = {p.name: p for p in written}
    return inputs, artifacts


_STAGES = {
    "filter": _stage_filter,
    "edges": _stage_edges,
    "nodes": _stage_nodes,
    "code": _stage_code,
    "network": _stage_network,
    "daily": _stage_daily,
    "slice": _stage_slice,
    "paths": _stage_paths,
    "timeline": _stage_timeline,
    "overlap": _stage_overlap,
    "animate": _stage_animate,
}

STAGE_UPSTREAM = {
    "filter": [],
    "edges": ["filter"],
    "nodes": ["edges"],
    "code": ["filter"],
    "network": ["edges", "nodes", "code"],
    "daily": ["filter", "code"],
    "slice": ["network"],
    "paths": ["network"],
    "timeline": ["paths"],
    "overlap": ["paths", "network"],
    "animate": ["network"],
}
