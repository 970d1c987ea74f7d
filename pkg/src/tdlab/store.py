"""Append-only store of computed results, one JSON record per line.

Records are keyed by a graph certificate (or another query descriptor) plus
the query parameters, so long computations such as the order-6 survey can be
resumed and re-running a cached query does no search.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__

CACHE_ENV = "TDL_CACHE_DIR"


class StoreConflict(RuntimeError):
    pass


@dataclass(frozen=True)
class ResultRecord:
    certificate: str
    query: dict
    value: object
    runtime: float
    tool_version: str = __version__

    def key(self) -> str:
        return record_key(self.certificate, self.query)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> ResultRecord:
        raw = json.loads(line)
        return cls(raw["certificate"], raw["query"], raw["value"], raw["runtime"], raw["tool_version"])


def record_key(certificate: str, query: dict) -> str:
    return certificate + "|" + json.dumps(query, sort_keys=True)


def default_path() -> Path:
    root = os.environ.get(CACHE_ENV) or os.path.join(os.path.expanduser("~"), ".cache", "tdlab")
    return Path(root) / "results.jsonl"


class ResultStore:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_path()
        self._index: dict[str, ResultRecord] = {}
        if self.path.exists():
            with open(self.path) as fh:
                for line in fh:
                    if line.strip():
                        rec = ResultRecord.from_json(line)
                        self._index[rec.key()] = rec

    def __len__(self) -> int:
        return len(self._index)

    def get(self, certificate: str, query: dict) -> ResultRecord | None:
        return self._index.get(record_key(certificate, query))

    def put(self, record: ResultRecord) -> ResultRecord:
        old = self._index.get(record.key())
        if old is not None:
            if old.value != record.value:
                raise StoreConflict(f"conflicting values for {record.key()}: {old.value!r} vs {record.value!r}")
            return old
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a") as fh:
            fh.write(record.to_json() + "\n")
        self._index[record.key()] = record
        return record
