import json
from datetime import datetime, timedelta, timezone
from pathlib import Path

import pytest

from chatternet.lexicon import load_mean_lexicon, load_rule_lexicon
from chatternet.network import Edge
from chatternet.records import TweetRecord

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"
EPOCH = datetime(2023, 3, 15, tzinfo=timezone.utc)


def at_day(day: int, hour: int = 12, minute: int = 0) -> datetime:
    return EPOCH + timedelta(days=day, hours=hour, minutes=minute)


def mk_edge(day, frm, to, tweet_id, edge_type="reply", hour=12, minute=0, text="hi"):
    return Edge(
        tweet_id=tweet_id,
        created_at=at_day(day, hour, minute),
        from_user=frm,
        to_user=to,
        text=text,
        edge_type=edge_type,
    )


def mk_record(tweet_id, author, day=0, text="hello", reply=None, retweet=None, mentions=(), hour=12):
    return TweetRecord(
        tweet_id=tweet_id,
        author_id=author,
        author_handle=f"user_{author}",
        created_at=at_day(day, hour),
        text=text,
        reply_to_user=reply,
        retweet_of_user=retweet,
        mentioned_users=tuple(mentions),
    )


@pytest.fixture(scope="session")
def rule_lex():
    return load_rule_lexicon()


@pytest.fixture(scope="session")
def mean_lex():
    return load_mean_lexicon()


@pytest.fixture(scope="session")
def fixture_config_dict():
    cfg = json.loads((FIXTURES / "config.json").read_text(encoding="utf-8"))
    for key in ("corpus", "profiles", "teams"):
        cfg[key] = str(REPO / cfg[key])
    return cfg


@pytest.fixture()
def fixture_config(fixture_config_dict, tmp_path):
    from chatternet.pipeline import RunConfig

    cfg = dict(fixture_config_dict)
    cfg["out_dir"] = str(tmp_path / "out")
    return RunConfig.model_validate(cfg)
