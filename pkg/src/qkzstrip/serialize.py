"""Text serialization of results.

Polynomials travel as arrays of decimal strings (so no precision is lost),
bivariate polynomials as row-major grids indexed [t power][tau power], and
link patterns as 1-based pairing arrays with 0 for the unmatched point.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__
from .exactalg import BiPoly, LaurentScalar, TauPoly
from .linkpat import LinkPattern

SCHEMA_VERSION = 1
KINDS = ("patterns", "psi", "sumrule", "matrix", "verify-report", "oracle")


def enc_tau(p: TauPoly) -> list[str]:
    return [str(c) for c in p.coeffs]


def dec_tau(data: list[str]) -> TauPoly:
    return TauPoly(int(x) for x in data)


def enc_bi(p: BiPoly) -> list[list[str]]:
    return [[str(c) for c in row] for row in p.grid()]


def dec_bi(data: list[list[str]]) -> BiPoly:
    return BiPoly.from_grid([[int(x) for x in row] for row in data])


def enc_laurent(x: LaurentScalar) -> dict[str, Any]:
    terms = x.terms()
    if not terms:
        return {"low": 0, "coeffs": []}
    lo, hi = min(terms), max(terms)
    return {"low": lo, "coeffs": [str(terms.get(k, 0)) for k in range(lo, hi + 1)]}


def dec_laurent(data: dict[str, Any]) -> LaurentScalar:
    return LaurentScalar.from_terms({data["low"] + k: int(c) for k, c in enumerate(data["coeffs"])})


def enc_pattern(p: LinkPattern) -> list[int]:
    return list(p.pair)


def dec_pattern(data: list[int]) -> LinkPattern:
    return LinkPattern(tuple(data))


@dataclass(frozen=True)
class ResultTable:
    kind: str
    params: dict[str, Any]
    payload: dict[str, Any]
    provenance: dict[str, Any] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown result kind {self.kind!r}")

    def dumps(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=1) + "\n"

    @classmethod
    def loads(cls, text: str) -> "ResultTable":
        data = json.loads(text)
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {version}")
        return cls(data["kind"], data["params"], data["payload"], data["provenance"], version)


def provenance(command: list[str]) -> dict[str, Any]:
    return {"command": command, "engine": f"qkzstrip {__version__}"}
