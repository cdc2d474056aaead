"""Pin the expected artifact hashes for the bundled fixture pipeline.

Run after any intentional change to the fixture, the lexicons, or an
artifact format (and after rebuilding the player bundle, which is inlined
into index.html). The regression test compares a fresh run against this
file byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "data" / "fixture_hashes.json"


def main() -> None:
    from chatternet.pipeline import RunConfig, run_pipeline

    cfg = json.loads((ROOT / "fixtures" / "config.json").read_text(encoding="utf-8"))
    for key in ("corpus", "profiles", "teams"):
        cfg[key] = str(ROOT / cfg[key])
    with tempfile.TemporaryDirectory() as scratch:
        cfg["out_dir"] = scratch
        run_pipeline(RunConfig.model_validate(cfg))
        hashes = {}
        for path in sorted(Path(scratch).rglob("*")):
            if path.is_file() and path.name != "manifest.jsonl":
                rel = str(path.relative_to(scratch))
                hashes[rel] = hashlib.sha256(path.read_bytes()).hexdigest()
    OUT.write_text(json.dumps(hashes, indent=1) + "\n", encoding="utf-8")
    print(f"froze {len(hashes)} artifact hashes to {OUT}")


if __name__ == "__main__":
    main()
