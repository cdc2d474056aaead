"""Export the fixture pipeline's animation document for frontend tests.

Runs the full pipeline on the bundled corpus into a scratch directory and
copies the resulting animation.json into frontend/test/fixtures/ so the
player is tested against the real producer's output.
"""

from __future__ import annotations

import json
import shutil
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    from chatternet.pipeline import RunConfig, run_pipeline

    cfg = json.loads((ROOT / "fixtures" / "config.json").read_text(encoding="utf-8"))
    for key in ("corpus", "profiles", "teams"):
        cfg[key] = str(ROOT / cfg[key])
    with tempfile.TemporaryDirectory() as scratch:
        cfg["out_dir"] = scratch
        run_pipeline(RunConfig.model_validate(cfg))
        source = Path(scratch) / "animation" / "animation.json"
        target = ROOT / "frontend" / "test" / "fixtures" / "animation.json"
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(source, target)
    doc = json.loads(target.read_text(encoding="utf-8"))
    print(f"exported {len(doc['slices'])} slices to {target}")


if __name__ == "__main__":
    main()
