"""On-disk cache for change-of-basis inverses and K-vectors.

Enabled by setting QKZSTRIP_CACHE_DIR; unset means nothing is read or
written.  Entries are keyed by (module, size, engine version) and written
atomically: a temporary file in the same directory, then a rename.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .basischange import BasisMatrix, inverse_matrix
from .linkpat import enumerate_patterns
from .psivec import k_vector
from .serialize import dec_tau, enc_tau

ENV_VAR = "QKZSTRIP_CACHE_DIR"


def cache_dir() -> Path | None:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def entry_path(module: str, size: int, root: Path | None = None) -> Path | None:
    root = root or cache_dir()
    if root is None:
        return None
    return root / f"{module}-{size}-v{__version__}.json"


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def digest(data: Any) -> str:
    return hashlib.sha256(json.dumps(data, sort_keys=True).encode()).hexdigest()


def _cached(module: str, size: int, compute: Callable[[], Any]) -> Any:
    """Encoded payload for (module, size), from disk when present."""
    path = entry_path(module, size)
    if path is not None and path.exists():
        return json.loads(path.read_text(encoding="utf-8"))["data"]
    data = compute()
    if path is not None:
        write_atomic(path, json.dumps({"module": module, "size": size, "data": data}, sort_keys=True))
    return data


# -- encoders for the two cached objects -----------------------------------------

def _enc_matrix(C: BasisMatrix) -> list[list[list[str]]]:
    return [[enc_tau(x) for x in row] for row in C.entries]


def _dec_matrix(n: int, data) -> BasisMatrix:
    index = enumerate_patterns(2 * n)
    return BasisMatrix(n, index, tuple(tuple(dec_tau(x) for x in row) for row in data))


def _fresh(module: str, size: int, jobs: int | None = None):
    if module == "cinv":
        return _enc_matrix(inverse_matrix(size))
    if module == "kvec":
        return [enc_tau(k) for k in k_vector(size, jobs)]
    raise ValueError(f"unknown cache module {module!r}")


def cinv(n: int) -> BasisMatrix:
    return _dec_matrix(n, _cached("cinv", n, lambda: _fresh("cinv", n)))


def kvec(N: int, jobs: int | None = None) -> list:
    return [dec_tau(x) for x in _cached("kvec", N, lambda: _fresh("kvec", N, jobs))]


def audit(root: Path | None = None) -> list[tuple[str, bool]]:
    """Compare every cached entry against a fresh computation by hash."""
    root = root or cache_dir()
    if root is None or not root.is_dir():
        return []
    out = []
    suffix = f"-v{__version__}.json"
    for path in sorted(root.glob(f"*{suffix}")):
        module, size = path.name[: -len(suffix)].rsplit("-", 1)
        stored = json.loads(path.read_text(encoding="utf-8"))["data"]
        out.append((path.name, digest(stored) == digest(_fresh(module, int(size)))))
    return out
