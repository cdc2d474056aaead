"""Generate the bundled synthetic corpus fixture.

200 tweets, 30 users, 29 days (2023-03-15 .. 2023-04-12), two tagged
teams and two designated root actors whose forward paths diverge, plus a
pronounced mid-horizon spike of tracked-keyword tweets on day 13. Fully
deterministic; rerunning overwrites fixtures/ with identical bytes.
"""

from __future__ import annotations

import json
import random
from datetime import datetime, timedelta, timezone
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "fixtures"

EPOCH = datetime(2023, 3, 15, tzinfo=timezone.utc)
N_DAYS = 29
SPIKE_DAY = 13

USERS = [f"u{i:02d}" for i in range(1, 31)]
ROOT_A, ROOT_B = "u01", "u02"

TEAMS = {
    "u01": "musk",
    "u03": "musk",
    "u07": "musk",
    "u02": "openai",
    "u04": "openai",
    "u08": "openai",
}

TOPIC = ["ChatGPT", "the LLM", "this chatbot", "ChatGPT plugins", "the new LLM build"]
POSITIVE = [
    "is amazing",
    "keeps improving and I love it",
    "made my day, great work",
    "is so impressive",
    "is a brilliant tool",
    "works perfectly now",
]
NEGATIVE = [
    "is terrible at math",
    "keeps failing on simple prompts",
    "made an awful mistake again",
    "is so disappointing today",
    "produced a horrible answer",
    "is broken and nobody cares",
]
NEUTRAL = [
    "shipped an update",
    "changed the default settings",
    "was mentioned in the meeting",
    "has a new version number",
    "appears in the docs now",
]
KEYWORDY = [
    "poses a real risk to society",
    "is a danger we keep ignoring",
    "could cause lasting harm",
    "brings risk and harm together",
    "is a danger, full stop",
]
OFFTOPIC = [
    "The weather is lovely today",
    "My coffee was terrible this morning",
    "Great match last night",
    "Traffic was awful on the bridge",
    "The garden looks wonderful",
]


def iso(day: int, hour: int, minute: int) -> str:
    return (EPOCH + timedelta(days=day, hours=hour, minutes=minute)).isoformat()


def main() -> None:
    rng = random.Random(7)
    OUT.mkdir(exist_ok=True)

    interactions: list[tuple[int, str, str, str]] = []  # (day, author, target, kind)

    # Root A's cascade starts on day 0 and fans out early.
    chain_a = ["u01", "u05", "u09", "u13", "u17", "u21", "u25"]
    for hop, (src, dst) in enumerate(zip(chain_a, chain_a[1:])):
        interactions.append((hop, dst, src, "reply"))
    # u28 touches root A once on day 0 and never speaks again; that spell
    # expires before root B's side of the network wakes up, leaving u28
    # forward-reachable from A only.
    interactions.append((0, "u28", "u01", "reply"))
    # Root B stays quiet until day 6, then its own cluster picks it up fast.
    chain_b = ["u02", "u06", "u10", "u14", "u18", "u22"]
    for hop, (src, dst) in enumerate(zip(chain_b, chain_b[1:])):
        interactions.append((6 + hop, dst, src, "retweet"))
    # Mid-horizon bridges put most of the cluster into both forward paths.
    interactions += [
        (10, "u09", "u10", "mention"),
        (11, "u14", "u13", "reply"),
        (12, "u21", "u18", "mention"),
    ]
    # u29/u30 interact only with each other: reachable by neither root.
    interactions += [(2, "u29", "u30", "reply"), (16, "u30", "u29", "reply")]

    # The spike day is dominated by retweets of a few influential accounts.
    pool = [u for u in USERS if u not in ("u28", "u29", "u30")]
    for _ in range(15):
        author = rng.choice(pool)
        hub = rng.choice([ROOT_A, ROOT_B, "u03", "u04"])
        while hub == author:
            hub = rng.choice([ROOT_A, ROOT_B, "u03", "u04"])
        interactions.append((SPIKE_DAY, author, hub, "retweet"))

    # Background chatter among the rest, biased toward the two hubs. Root B
    # stays silent (and untargeted) before day 6 so its path starts late.
    for _ in range(158):
        day = rng.randrange(N_DAYS)
        author = rng.choice(pool)
        while author == ROOT_B and day < 6:
            author = rng.choice(pool)
        target = rng.choice([ROOT_A, ROOT_B] + pool)
        while target == author or (target == ROOT_B and day < 6):
            target = rng.choice(pool)
        kind = rng.choice(["reply", "retweet", "mention", "mention"])
        interactions.append((day, author, target, kind))

    interactions.sort(key=lambda item: item[0])
    records = []
    for day, author, target, kind in interactions:
        flavor = rng.random()
        if day == SPIKE_DAY and rng.random() < 0.85:
            tail = rng.choice(KEYWORDY)
        elif flavor < 0.35:
            tail = rng.choice(POSITIVE)
        elif flavor < 0.6:
            tail = rng.choice(NEGATIVE)
        elif flavor < 0.9:
            tail = rng.choice(NEUTRAL)
        else:
            tail = rng.choice(KEYWORDY)
        text = f"{rng.choice(TOPIC)} {tail}"
        if rng.random() < 0.2:
            text += "!"
        record = {
            "author": author,
            "day": day,
            "text": text,
            "reply_to_user": target if kind == "reply" else None,
            "retweet_of_user": target if kind == "retweet" else None,
            "mentioned_users": [target] if kind == "mention" else [],
        }
        # Occasionally mention a bystander on top of the primary target;
        # never from the deliberately isolated users.
        if kind != "mention" and author in pool and rng.random() < 0.15:
            extra = rng.choice(pool)
            if extra not in (author, target):
                record["mentioned_users"] = [extra]
        records.append(record)

    # Ten off-topic tweets that the query filter must drop.
    for _ in range(10):
        day = rng.randrange(N_DAYS)
        author = rng.choice(pool)
        records.append(
            {
                "author": author,
                "day": day,
                "text": rng.choice(OFFTOPIC),
                "reply_to_user": None,
                "retweet_of_user": None,
                "mentioned_users": [],
            }
        )

    records.sort(key=lambda r: r["day"])
    records = records[:200]

    lines = []
    for i, r in enumerate(records, start=1):
        lines.append(
            json.dumps(
                {
                    "tweet_id": f"t{i:03d}",
                    "author_id": r["author"],
                    "author_handle": f"user_{r['author']}",
                    "created_at": iso(r["day"], 8 + i % 12, (i * 7) % 60),
                    "text": r["text"],
                    "reply_to_user": r["reply_to_user"],
                    "retweet_of_user": r["retweet_of_user"],
                    "mentioned_users": r["mentioned_users"],
                    "lang": "en",
                },
                ensure_ascii=False,
            )
        )
    (OUT / "corpus.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")

    descriptions = [
        "Writes about machine learning and society",
        "Tech correspondent",
        "Builds developer tools",
        "Policy researcher",
        "Startup founder",
        "Open source maintainer",
        "Data journalist",
    ]
    locations = ["Lisbon", "Austin", "Berlin", "Nairobi", "Toronto", "Osaka", ""]
    profile_lines = []
    for i, user in enumerate(USERS[:25], start=1):
        profile_lines.append(
            json.dumps(
                {
                    "user_id": user,
                    "handle": f"user_{user}",
                    "display_name": f"User {user[1:]}",
                    "description": descriptions[i % len(descriptions)],
                    "location": locations[i % len(locations)],
                    "verified": i % 3 == 0,
                    "followers_count": 120 * i + (5000 if user in (ROOT_A, ROOT_B) else 0),
                },
                ensure_ascii=False,
            )
        )
    (OUT / "profiles.jsonl").write_text("\n".join(profile_lines) + "\n", encoding="utf-8")
    (OUT / "teams.json").write_text(json.dumps(TEAMS, indent=2) + "\n", encoding="utf-8")

    config = {
        "corpus": "fixtures/corpus.jsonl",
        "out_dir": "out/fixture",
        "corpus_format": "jsonl",
        "query": {
            "keyword_groups": [["chatgpt"], ["llm"], ["chatbot"]],
            "from_time": "2023-03-15T00:00:00+00:00",
            "to_time": "2023-04-13T00:00:00+00:00",
        },
        "profiles": "fixtures/profiles.jsonl",
        "teams": "fixtures/teams.json",
        "keywords": ["risk", "danger", "harm"],
        "window": 4,
        "min_degree": 0,
        "slice_days": list(range(N_DAYS)),
        "path_roots": [ROOT_A, ROOT_B],
        "path_start_day": 0,
        "path_direction": "forward",
        "path_mode": "undirected",
        "scheme": "sentiment",
        "seed": 7,
    }
    (OUT / "config.json").write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(records)} records to {OUT}")


if __name__ == "__main__":
    main()
