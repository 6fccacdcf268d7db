"""Fetch, cache, parse and diff OEIS b-files.

The cache root comes from ``DYCKNUM_OEIS_CACHE`` (default
``~/.cache/dycknum/oeis``).  Each sequence gets two files there: the raw
response body ``bNNNNNN.txt`` and ``ANNNNNN.json`` with retrieval metadata.
Setting ``DYCKNUM_OFFLINE=1`` (or passing ``offline=True``) forbids network
access so only cached data is used.
"""

from __future__ import annotations

import json
import logging
import os
import re
import tempfile
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

CACHE_ENV = "DYCKNUM_OEIS_CACHE"
OFFLINE_ENV = "DYCKNUM_OFFLINE"
BFILE_URL = "https://oeis.org/{seq_id}/b{digits}.txt"

_SEQ_ID = re.compile(r"^A(\d{6})$")
_locks: dict = {}
_locks_guard = threading.Lock()


class OEISUnavailable(RuntimeError):
    """No network (or offline mode) and nothing cached."""


class BFileParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DisjointRangesError(ValueError):
    """The local and remote index ranges do not overlap."""


@dataclass(frozen=True)
class BFile:
    seq_id: str
    entries: Tuple[Tuple[int, int], ...]

    @property
    def first_index(self) -> Optional[int]:
        return self.entries[0][0] if self.entries else None

    @property
    def values(self) -> List[int]:
        return [v for _, v in self.entries]

    def as_dict(self) -> dict:
        return dict(self.entries)


@dataclass(frozen=True)
class DiffReport:
    seq_id: str
    compared_count: int
    # (index, local value, remote value)
    first_mismatch: Optional[Tuple[int, int, int]] = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def check_seq_id(seq_id: str) -> str:
    m = _SEQ_ID.match(seq_id)
    if not m:
        raise ValueError(f"malformed OEIS id {seq_id!r}; expected A + 6 digits")
    return m.group(1)


def parse_bfile(text: str, seq_id: str = "") -> BFile:
    entries = []
    last = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(lineno, f"expected 'index value', got {line!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(lineno, f"non-integer token in {line!r}") from None
        if last is not None and index <= last:
            raise BFileParseError(lineno, f"index {index} does not increase (previous {last})")
        entries.append((index, value))
        last = index
    return BFile(seq_id, tuple(entries))


def serialize_bfile(bfile: BFile, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [f"{i} {v}" for i, v in bfile.entries]
    return "\n".join(lines) + "\n"


def to_bfile(seq_id: str, values: Iterable[int], start: int = 0) -> BFile:
    return BFile(seq_id, tuple(enumerate(values, start)))


def compare(local: Sequence[int], start: int, remote: BFile) -> DiffReport:
    """Compare ``local`` (indexed from ``start``) with ``remote`` over the overlap."""
    remote_map = remote.as_dict()
    indices = [i for i in range(start, start + len(local)) if i in remote_map]
    if not indices:
        raise DisjointRangesError(
            f"local indices {start}..{start + len(local) - 1} miss {remote.seq_id or 'remote'}"
        )
    for i in indices:
        if local[i - start] != remote_map[i]:
            return DiffReport(remote.seq_id, indices.index(i) + 1, (i, local[i - start], remote_map[i]))
    return DiffReport(remote.seq_id, len(indices))


def cache_root() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "dycknum" / "oeis"


def _offline_default() -> bool:
    return os.environ.get(OFFLINE_ENV, "").lower() in ("1", "true", "yes")


def _lock_for(seq_id: str) -> threading.Lock:
    with _locks_guard:
        return _locks.setdefault(seq_id, threading.Lock())


def _http_get(url: str, timeout: float) -> bytes:
    import requests

    response = requests.get(url, timeout=timeout)
    response.raise_for_status()
    return response.content


def _atomic_write(path: Path, data: bytes) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".part")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def cache_paths(seq_id: str, root: Optional[Path] = None) -> Tuple[Path, Path]:
    digits = check_seq_id(seq_id)
    root = Path(root) if root is not None else cache_root()
    return root / f"b{digits}.txt", root / f"{seq_id}.json"


def fetch_bfile(
    seq_id: str,
    *,
    refresh: bool = False,
    offline: Optional[bool] = None,
    cache_dir: Optional[Path] = None,
    timeout: float = 30.0,
) -> BFile:
    """Return the b-file for ``seq_id``, from cache when possible."""
    digits = check_seq_id(seq_id)
    if offline is None:
        offline = _offline_default()
    raw_path, meta_path = cache_paths(seq_id, cache_dir)
    with _lock_for(seq_id):
        if raw_path.exists() and not refresh:
            return parse_bfile(raw_path.read_text(encoding="utf-8"), seq_id)
        if offline:
            if raw_path.exists():
                return parse_bfile(raw_path.read_text(encoding="utf-8"), seq_id)
            raise OEISUnavailable(f"{seq_id}: offline and not cached in {raw_path.parent}")
        url = BFILE_URL.format(seq_id=seq_id, digits=digits)
        try:
            body = _http_get(url, timeout)
        except Exception as exc:
            if raw_path.exists():
                logger.warning("refresh of %s failed (%s); using cache", seq_id, exc)
                return parse_bfile(raw_path.read_text(encoding="utf-8"), seq_id)
            raise OEISUnavailable(f"{seq_id}: {exc}") from exc
        # parse before caching so a bad body never lands in the cache
        bfile = parse_bfile(body.decode("utf-8"), seq_id)
        raw_path.parent.mkdir(parents=True, exist_ok=True)
        _atomic_write(raw_path, body)
        meta = {"seq_id": seq_id, "url": url, "retrieved": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())}
        _atomic_write(meta_path, json.dumps(meta, indent=2).encode("utf-8"))
        return bfile
