"""Run manifests: what was run, with which parameters and seed.

The embedded form omits the worker count and timestamp, which do not affect
results, so identical runs produce byte-identical files. The full record is
logged separately.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from . import __version__
from .params import MotionParams, VelocityStart


@dataclass(frozen=True)
class RunManifest:
    params: MotionParams
    start: VelocityStart
    command: str
    args: dict
    seed: int | None = None
    n_paths: int | None = None
    workers: int = 1
    tool_version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))

    def reproducible(self) -> dict:
        """Fields that determine the output; excludes workers and timestamp."""
        p = self.params
        return {
            "command": self.command,
            "args": self.args,
            "params": {"lambda": p.lam, "xi": p.xi, "v1": p.v1, "v2": p.v2},
            "start": self.start.label(),
            "seed": self.seed,
            "n_paths": self.n_paths,
            "tool_version": self.tool_version,
        }

    def full(self) -> dict:
        return {**self.reproducible(), "workers": self.workers, "timestamp": self.timestamp}


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def manifest_hash(record: dict) -> str:
    return hashlib.sha256(canonical_json(record).encode()).hexdigest()


def manifest_line(record: dict) -> str:
    return f"# manifest {manifest_hash(record)} {canonical_json(record)}"


def parse_manifest_line(line: str) -> dict:
    prefix = "# manifest "
    if not line.startswith(prefix):
        raise ValueError("not a manifest line")
    digest, _, body = line[len(prefix):].strip().partition(" ")
    record = json.loads(body)
    if manifest_hash(record) != digest:
        raise ValueError("manifest hash does not match its contents")
    return record
